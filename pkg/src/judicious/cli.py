"""Command-line front end.

Exit codes: 0 success, 1 bound not met, 2 input error, 3 budget exceeded.

Settings resolve as defaults < environment (``JP_EXACT_CAP``,
``JP_RESTARTS``) < ``--config`` file (``key=value`` lines) < flags.
"""

from __future__ import annotations

import argparse
import csv
import logging
import os
import sys
from dataclasses import replace
from typing import Optional, Sequence

from .core import Bipartition, Hypergraph3, SpecialMultigraph, Tripartition
from .generators import KINDS, GeneratorSpec, random_hypergraph
from .io import (
    ParseError,
    dumps,
    format_hypergraph,
    format_special_multigraph,
    parse_instance,
    parse_parts,
    partition_dict,
)
from .local_search import SearchConfig
from .oracle import BudgetExceeded, best_bipartition_special, best_tripartition
from .pipeline import THREE_FIFTHS, solve, verify_good
from .rng import child_seed
from .special import certify_bipartition, special_bipartition

log = logging.getLogger("judicious")

EXIT_OK, EXIT_BOUND, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
CSV_COLUMNS = (
    "n", "m", "seed", "min_degree", "threshold_num", "threshold_den",
    "ratio_millis", "method", "restarts_used",
)
CONFIG_KEYS = ("seed", "restarts", "exact_cap", "epsilon", "maximize", "node_budget")


class InputError(Exception):
    pass


def _fraction(text: str) -> tuple[int, int]:
    try:
        p, q = text.split("/")
        return int(p), int(q)
    except ValueError:
        raise InputError(f"expected a fraction p/q, got {text!r}") from None


def _bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise InputError(f"expected a boolean, got {text!r}")


def read_config(path: str) -> dict[str, str]:
    values = {}
    with open(path) as fh:
        for no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if not sep or key not in CONFIG_KEYS:
                raise InputError(f"{path}:{no}: expected one of {CONFIG_KEYS} as key=value")
            values[key] = value.strip()
    return values


def resolve_config(args) -> SearchConfig:
    raw: dict[str, str] = {}
    if "JP_EXACT_CAP" in os.environ:
        raw["exact_cap"] = os.environ["JP_EXACT_CAP"]
    if "JP_RESTARTS" in os.environ:
        raw["restarts"] = os.environ["JP_RESTARTS"]
    if getattr(args, "config", None):
        raw.update(read_config(args.config))
    for key in CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None and value is not False:
            raw[key] = str(value)
    try:
        cfg = SearchConfig(
            max_restarts=int(raw.get("restarts", 8)),
            seed=int(raw.get("seed", 0)),
            exact_cap=int(raw.get("exact_cap", 10**7)),
            epsilon=_fraction(raw.get("epsilon", "1/15")),
            maximize=_bool(raw.get("maximize", "false")),
            node_budget=int(raw.get("node_budget", 2_000_000)),
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return cfg


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _emit(text: str, out: Optional[str]) -> None:
    if out and out != "-":
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def bipartition_dict(M: SpecialMultigraph, P: Bipartition, method: str) -> dict:
    cert = certify_bipartition(M, P, method)
    return {
        "parts": [sorted(v + 1 for v in part) for part in P.parts()],
        "spanned": list(cert.spanned),
        "specials": list(cert.specials),
        "m": M.m,
        "k": M.k,
        "bound": {"num": 2 * M.m + 3 * (M.k + 1), "den": 6},
        "meets_bound": cert.holds,
        "method": method,
    }


def cmd_partition(args) -> int:
    cfg = resolve_config(args)
    inst = parse_instance(_read(args.file))
    if isinstance(inst, SpecialMultigraph):
        P, cert = special_bipartition(inst, cfg)
        _emit(dumps(bipartition_dict(inst, P, cert.method)), args.out)
        return EXIT_OK if cert.holds else EXIT_BOUND
    if inst.m == 0:
        raise InputError("hypergraph has no edges")
    outcome = solve(inst, cfg)
    _emit(dumps(partition_dict(outcome.partition, outcome.certificate)), args.out)
    return EXIT_OK if outcome.certificate.meets_bound else EXIT_BOUND


def cmd_verify(args) -> int:
    inst = parse_instance(_read(args.file))
    text = _read(args.partition)
    if isinstance(inst, SpecialMultigraph):
        P = Bipartition.from_parts(inst.n, parse_parts(text, inst.n, 2))
        data = bipartition_dict(inst, P, "verify")
    else:
        P = Tripartition.from_parts(inst.n, parse_parts(text, inst.n, 3))
        data = partition_dict(P, verify_good(inst, P))
    _emit(dumps(data), args.out)
    return EXIT_OK if data["meets_bound"] else EXIT_BOUND


def cmd_oracle(args) -> int:
    inst = parse_instance(_read(args.file))
    if args.mode == "tri":
        if not isinstance(inst, Hypergraph3):
            raise InputError("tri mode needs a 'p h3' hypergraph file")
        P, value = best_tripartition(inst, args.budget)
        data = {"mode": "tri", "objective": value, "m": inst.m}
    else:
        if not isinstance(inst, SpecialMultigraph):
            raise InputError("bi mode needs a 'p smg' multigraph file")
        P, value = best_bipartition_special(inst, args.budget)
        data = {"mode": "bi", "objective": value, "m": inst.m, "k": inst.k}
    data["parts"] = [sorted(v + 1 for v in part) for part in P.parts()]
    data["instances_checked"] = 1
    data["failures"] = []
    _emit(dumps(data), args.out)
    return EXIT_OK


def experiment_rows(n: int, m: int, count: int, seed: int, cfg: SearchConfig):
    for i in range(count):
        s = child_seed(seed, i)
        G = random_hypergraph(n, m, s)
        icfg = replace(cfg, seed=s, maximize=cfg.maximize or 3**n <= cfg.exact_cap)
        out = solve(G, icfg)
        low = out.certificate.min_degree
        yield {
            "n": n, "m": m, "seed": s, "min_degree": low,
            "threshold_num": THREE_FIFTHS[0], "threshold_den": THREE_FIFTHS[1],
            "ratio_millis": low * 1000 // m, "method": out.method,
            "restarts_used": out.restarts_used,
        }


def cmd_experiment(args) -> int:
    cfg = resolve_config(args)
    if args.n < 3 or args.m < 1 or args.count < 0:
        raise InputError("need n >= 3, m >= 1 and count >= 0")
    try:
        GeneratorSpec("random", n=args.n, m=args.m)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    fh = open(args.out, "w", newline="") if args.out and args.out != "-" else sys.stdout
    try:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in experiment_rows(args.n, args.m, args.count, cfg.seed, cfg):
            writer.writerow(row)
            log.info(
                "n=%d m=%d seed=%d min_degree=%d ratio=%d/1000 method=%s",
                row["n"], row["m"], row["seed"], row["min_degree"], row["ratio_millis"], row["method"],
            )
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_gen(args) -> int:
    names = {"complete": ("n",), "random": ("n", "m", "seed"),
             "random_special": ("n", "m", "k", "maxmult", "seed")}.get(args.kind, ())
    if len(args.params) > len(names):
        raise InputError(f"{args.kind} takes at most {len(names)} parameters: {' '.join(names)}")
    params = dict(zip(names, args.params))
    if args.seed is not None:
        params["seed"] = args.seed
    try:
        inst = GeneratorSpec(args.kind, **params).build()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if isinstance(inst, SpecialMultigraph):
        text = format_special_multigraph(inst)
    else:
        text = format_hypergraph(inst)
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value settings file")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("-v", "--verbose", action="store_true")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--seed", type=int)
    search.add_argument("--restarts", type=int)
    search.add_argument("--exact-cap", dest="exact_cap", type=int)
    search.add_argument("--epsilon", help="engine slack p/q (default 1/15)")
    search.add_argument("--node-budget", dest="node_budget", type=int)
    search.add_argument("--maximize", action="store_true", default=None,
                        help="maximise the smallest class degree on the exact path")

    parser = argparse.ArgumentParser(prog="judicious", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", parents=[common, search], help="solve an instance")
    p.add_argument("file")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("verify", parents=[common], help="check a partition against an instance")
    p.add_argument("file")
    p.add_argument("partition")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="exact brute-force optimum")
    p.add_argument("file")
    p.add_argument("--mode", choices=("tri", "bi"), default="tri")
    p.add_argument("--budget", type=int, default=10**7, help="max assignments to enumerate")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("experiment", parents=[common, search], help="CSV sweep over random instances")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("gen", parents=[common], help="write a generated instance")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (ParseError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
