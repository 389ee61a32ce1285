"""Command-line front end.

Subcommands: enumerate, graph, rmatrix, energy, perfect, gsp, verify.
Output is deterministic byte-for-byte for identical flags.  Exit codes:
0 success, 1 failed verification, 2 usage or input errors, 3 size caps.
"""

from __future__ import annotations

import argparse
import json
import sys

from .energy import global_energy, local_energy, local_energy_oracle
from .errors import KRError, SizeLimitExceeded
from .graph import build_graph
from .patterns import KRParams, enumerate_crystal, pattern_from_dict
from .perfect import DominantWeight, check_perfect, ground_state_path
from .rmatrix import rmatrix
from .tensor import TensorElement, tensor_product_elements
from .verify import SUITES, run_suite


def _parse_triple(text):
    try:
        n, r, s = (int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected n,r,s: {text!r}") from exc
    return KRParams(n, r, s)


def _parse_weight(text):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a0,a1,...,an: {text!r}") from exc


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="krpoly",
        description="Polytope model of affine type-A Kirillov-Reshetikhin crystals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p):
        p.add_argument("--n", type=int, required=True, help="rank of the affine algebra")
        p.add_argument("--r", type=int, required=True, help="classical node index")
        p.add_argument("--s", type=int, required=True, help="level parameter")

    p = sub.add_parser("enumerate", help="list all patterns of one crystal")
    add_params(p)
    p.add_argument("--max-elements", type=int, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("graph", help="export a crystal graph as DOT or JSON")
    p.add_argument("--n", type=int, default=None, help="rank of the affine algebra")
    p.add_argument("--r", type=int, default=None, help="classical node index")
    p.add_argument("--s", type=int, default=None, help="level parameter")
    p.add_argument(
        "--factor",
        action="append",
        type=_parse_triple,
        default=None,
        metavar="N,R,S",
        help="tensor factors left to right (replaces --n/--r/--s)",
    )
    p.add_argument(
        "--tensor",
        action="append",
        type=_parse_triple,
        default=None,
        metavar="N,R,S",
        help="prepend a factor to the left of the base crystal",
    )
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--max-elements", type=int, default=None)
    p.add_argument("--out", default=None)

    p = sub.add_parser("rmatrix", help="apply the combinatorial R-matrix")
    p.add_argument("left", help="JSON file with the first pattern")
    p.add_argument("right", help="JSON file with the second pattern")
    p.add_argument("--out", default=None)

    p = sub.add_parser("energy", help="energy of a list of patterns")
    p.add_argument("patterns", nargs="+", help="two or more pattern JSON files")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--closed-form", action="store_true")
    mode.add_argument("--oracle", action="store_true")
    mode.add_argument("--both", action="store_true")
    p.add_argument("--out", default=None)

    p = sub.add_parser("perfect", help="perfectness report for one crystal")
    add_params(p)
    p.add_argument("--out", default=None)

    p = sub.add_parser("gsp", help="ground-state path")
    p.add_argument("--weight", type=_parse_weight, required=True, metavar="A0,A1,...")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--len", type=int, required=True, dest="length")
    p.add_argument("--out", default=None)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-s", type=int, default=2, dest="max_s")
    return parser


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _json_text(obj):
    return json.dumps(obj, indent=2) + "\n"


def _load_pattern(path):
    with open(path, encoding="utf-8") as handle:
        return pattern_from_dict(json.load(handle))


def _cmd_enumerate(args):
    params = KRParams(args.n, args.r, args.s)
    cap = args.max_elements
    elements = enumerate_crystal(params, cap) if cap else enumerate_crystal(params)
    _emit(_json_text([b.to_dict() for b in elements]), args.out)
    return 0


def _cmd_graph(args):
    if args.factor and args.tensor:
        raise KRError("--factor and --tensor are mutually exclusive")
    has_base = args.n is not None and args.r is not None and args.s is not None
    if args.factor:
        if has_base:
            raise KRError("--factor replaces --n/--r/--s")
        factor_params = list(args.factor)
    elif has_base:
        factor_params = list(args.tensor or []) + [KRParams(args.n, args.r, args.s)]
    else:
        raise KRError("graph needs --n/--r/--s or repeated --factor flags")
    cap = args.max_elements
    crystals = [enumerate_crystal(p, cap) if cap else enumerate_crystal(p) for p in factor_params]
    if len(crystals) == 1:
        elements = crystals[0]
        n = factor_params[0].n
    else:
        elements = tensor_product_elements(crystals)
        n = factor_params[0].n
    graph = build_graph(elements, range(n + 1), max_size=cap)
    if args.format == "dot":
        _emit(graph.to_dot(), args.out)
    else:
        _emit(_json_text(graph.to_json_dict()), args.out)
    return 0


def _cmd_rmatrix(args):
    left = _load_pattern(args.left)
    right = _load_pattern(args.right)
    image = rmatrix(TensorElement((left, right)))
    _emit(_json_text(image.to_dict()), args.out)
    return 0


def _cmd_energy(args):
    patterns = [_load_pattern(path) for path in args.patterns]
    if len(patterns) < 2:
        raise KRError("energy needs at least two patterns")
    x = TensorElement(tuple(patterns))
    mode = "oracle" if args.oracle else ("both" if args.both else "closed-form")
    result = {}
    if mode in ("closed-form", "both"):
        result["closed_form"] = (
            local_energy(x) if len(patterns) == 2 else global_energy(x)
        )
    if mode in ("oracle", "both"):
        result["oracle"] = _oracle_energy(x)
    if mode == "both":
        result["agree"] = result["closed_form"] == result["oracle"]
    _emit(_json_text(result), args.out)
    return 0


def _oracle_energy(x):
    if len(x.factors) == 2:
        table = local_energy_oracle(x.factors[0].params, x.factors[1].params)
        return table[x]
    tables = {}

    def energy(pair):
        key = (pair.factors[0].params, pair.factors[1].params)
        if key not in tables:
            tables[key] = local_energy_oracle(*key)
        return tables[key][pair]

    return global_energy(x, energy=energy)


def _cmd_perfect(args):
    params = KRParams(args.n, args.r, args.s)
    report = check_perfect(params)
    payload = {
        "params": {"n": params.n, "r": params.r, "s": params.s},
        "level": report.level,
        "cardinality": report.cardinality,
        "conditions": {
            "finite": report.finite,
            "tensor_square_connected": report.tensor_square_connected,
            "classical_weights_dominated": report.classical_weights_dominated,
            "top_weight_unique": report.top_weight_unique,
            "profile_level_ok": report.profile_level_ok,
            "eps_profiles_bijective": report.eps_profiles_bijective,
            "phi_profiles_bijective": report.phi_profiles_bijective,
            "formulas_match_search": report.formulas_match_search,
        },
        "min_profile_level": report.min_profile_level,
        "perfect": report.ok,
        "violations": report.violations,
    }
    _emit(_json_text(payload), args.out)
    return 0


def _cmd_gsp(args):
    weight = DominantWeight(args.weight)
    params = KRParams(len(args.weight) - 1, args.r, weight.level)
    path = ground_state_path(weight, params, args.length)
    _emit(_json_text([b.to_dict() for b in path.elements]), args.out)
    return 0


def _cmd_verify(args):
    checks = run_suite(args.suite, args.n, args.max_s)
    failed = 0
    for check in checks:
        mark = "ok" if check.ok else "FAIL"
        detail = f" ({check.detail})" if check.detail and not check.ok else ""
        sys.stdout.write(f"{mark:4s} {check.name}{detail}\n")
        failed += 0 if check.ok else 1
    sys.stdout.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return 0 if failed == 0 else 1


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "graph": _cmd_graph,
    "rmatrix": _cmd_rmatrix,
    "energy": _cmd_energy,
    "perfect": _cmd_perfect,
    "gsp": _cmd_gsp,
    "verify": _cmd_verify,
}


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SizeLimitExceeded as exc:
        sys.stderr.write(f"size cap exceeded: {exc}\n")
        return 3
    except (KRError, OSError, json.JSONDecodeError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
