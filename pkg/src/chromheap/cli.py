"""Command-line front end.

Subcommands mirror the library modules: chromatic, chihat, bivariate,
orientations, heaps, reciprocity, symfunc, selfcheck.  Output is JSON by
default (all big integers as decimal strings) or a loose human-readable
table with --mode table.

Exit codes: 0 success, 1 identity mismatch (both sides are printed),
2 usage or resource error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .chromatic import bivariate_polynomial, chi_hat, chromatic_polynomial
from .config import DEFAULT_BUDGET, Budget
from .errors import ChromheapError
from .graphs import Graph, load_graph
from .orientations import acyclic_orientation_list, source_component_histogram
from .reciprocity import (
    check_bivariate_reciprocity,
    check_clique_quotient_reciprocity,
    check_derivative_reciprocity,
    check_greene_zaslavsky,
    check_shifted_reciprocity,
    check_sink_rooted,
    check_stanley_reciprocity,
)
from .reports import IdentityReport, ReciprocityReport
from .selfcheck import run_selfcheck
from .series import heap_series, pyramid_series, trivial_series, verify_heap_identities
from .symfunc import (
    combined_sides,
    csf_powersum,
    descent_expansion_sides,
    expand_finite,
    omega,
    orientation_lambda_tally,
    specialize_p_to_q,
    split_alphabet_sides,
    superfication_sides,
    verify_combined,
    verify_descent_expansion,
    verify_orientation_expansion,
    verify_split_alphabet,
    verify_superfication,
)

# --check tokens for the reciprocity command: function + flag names, in
# the order the underlying check expects them.
RECIPROCITY_CHECKS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "theorem1": (check_derivative_reciprocity, ("i", "j")),
    "stanley": (check_stanley_reciprocity, ("j",)),
    "greene_zaslavsky": (check_greene_zaslavsky, ("i",)),
    "corollary43": (check_shifted_reciprocity, ("i", "j")),
    "theorem44": (check_clique_quotient_reciprocity, ("d", "i", "j")),
    "theorem45": (check_sink_rooted, ("d", "i")),
    "bivariate": (check_bivariate_reciprocity, ("j", "k")),
}

# --check tokens for the symfunc command: verifier + flag names + the
# matching two-sided computation used to print both sides on mismatch.
SYMFUNC_CHECKS: dict[str, tuple[Callable, tuple[str, ...], Callable | None]] = {
    "prop51": (verify_descent_expansion, ("N",), descent_expansion_sides),
    "prop52": (verify_orientation_expansion, (), None),
    "thm53": (verify_split_alphabet, ("ny", "nz"), split_alphabet_sides),
    "superfication": (verify_superfication, ("ny", "nz"), superfication_sides),
    "combined": (verify_combined, ("ny", "nz", "nw"), combined_sides),
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", metavar="PATH", help="graph file: first line n, then 'u v' per edge")
    common.add_argument("--mode", choices=("json", "table"), default="json")
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        metavar="K",
        help="parallelism degree; output is byte-identical for any value",
    )
    common.add_argument(
        "--budget",
        action="append",
        default=[],
        metavar="KEY=VAL",
        help="override a resource budget knob (repeatable)",
    )

    top = argparse.ArgumentParser(prog="chromheap", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chromatic", parents=[common], help="chromatic polynomial, derivatives, evaluations")
    p.add_argument("-d", type=int, default=0, help="derivative order")
    p.add_argument("-q", type=int, default=None, help="evaluate (the derivative, if -d) at this integer")

    p = sub.add_parser("chihat", parents=[common], help="quotient polynomial after merging the clique 1..d")
    p.add_argument("-d", type=int, required=True, help="clique size to merge")

    sub.add_parser("bivariate", parents=[common], help="two-variable coloring polynomial")

    sub.add_parser("orientations", parents=[common], help="acyclic orientation tallies")

    p = sub.add_parser("heaps", parents=[common], help="trivial/heap/pyramid series and their identities")
    p.add_argument("-D", type=int, default=6, help="truncation degree")

    p = sub.add_parser("reciprocity", parents=[common], help="run one counting-versus-polynomial check")
    p.add_argument("--check", required=True, choices=sorted(RECIPROCITY_CHECKS))
    p.add_argument("-i", type=int, default=None)
    p.add_argument("-j", type=int, default=None)
    p.add_argument("-d", type=int, default=None)
    p.add_argument("-k", type=int, default=None)

    p = sub.add_parser("symfunc", parents=[common], help="power-sum expansion, omega, specializations, identity checks")
    p.add_argument("--check", default=None, choices=sorted(SYMFUNC_CHECKS))
    p.add_argument("-N", type=int, default=2, help="alphabet size for expansion / prop51")
    p.add_argument("--ny", type=int, default=1, help="first alphabet size for two/three-alphabet checks")
    p.add_argument("--nz", type=int, default=1, help="second alphabet size")
    p.add_argument("--nw", type=int, default=1, help="third alphabet size (combined check)")

    sub.add_parser("selfcheck", parents=[common], help="replay every documented worked example")
    return top


def _parse_budget(pairs: list[str]) -> Budget:
    overrides: dict[str, int] = {}
    for pair in pairs:
        key, sep, val = pair.partition("=")
        if not sep:
            raise ValueError(f"--budget expects KEY=VAL, got {pair!r}")
        overrides[key.strip()] = int(val)
    return DEFAULT_BUDGET.with_overrides(**overrides)


def _require_graph(args) -> Graph:
    if not args.graph:
        raise ValueError(f"command {args.command!r} needs --graph PATH")
    return load_graph(args.graph)


def _graph_summary(g: Graph) -> dict:
    return {"n": g.n, "edges": g.num_edges}


def _render_table(payload, indent: int = 0, key: str | None = None) -> list[str]:
    """Loose flat rendering of the JSON payload; not a stability contract."""
    pad = "  " * indent
    label = f"{key}: " if key is not None else ""
    if isinstance(payload, dict):
        lines = [f"{pad}{key}" if key is not None else None]
        for k, v in payload.items():
            lines.extend(_render_table(v, indent + (key is not None), k))
        return [ln for ln in lines if ln is not None]
    if isinstance(payload, list):
        lines = [f"{pad}{key}"] if key is not None else []
        inner = "  " * (indent + (key is not None))
        for item in payload:
            if isinstance(item, dict):
                lines.append(inner + "  ".join(f"{k}={v}" for k, v in item.items()))
            else:
                lines.append(f"{inner}{item}")
        return lines
    return [f"{pad}{label}{payload}"]


def _emit(payload: dict, mode: str) -> None:
    if mode == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(_render_table(payload)))


def _gather(args, flags: tuple[str, ...], check: str) -> list[int]:
    vals = []
    for name in flags:
        v = getattr(args, name)
        if v is None:
            flag = f"-{name}" if len(name) == 1 else f"--{name}"
            raise ValueError(f"--check {check} requires {flag}")
        vals.append(v)
    return vals


def _cmd_chromatic(args, budget: Budget) -> tuple[int, dict]:
    g = _require_graph(args)
    chi = chromatic_polynomial(g, budget=budget)
    payload = {"graph": _graph_summary(g), "polynomial": chi.to_json_dict(), "pretty": chi.pretty()}
    poly = chi
    if args.d:
        poly = chi.derivative(args.d)
        payload["derivative"] = {"order": args.d, **poly.to_json_dict()}
    if args.q is not None:
        payload["evaluation"] = {"at": str(args.q), "value": str(poly.evaluate(args.q))}
    return 0, payload


def _cmd_chihat(args, budget: Budget) -> tuple[int, dict]:
    g = _require_graph(args)
    quot = chi_hat(g, args.d, budget=budget)
    return 0, {
        "graph": _graph_summary(g),
        "d": args.d,
        "polynomial": quot.to_json_dict(),
        "pretty": quot.pretty(),
    }


def _cmd_bivariate(args, budget: Budget) -> tuple[int, dict]:
    g = _require_graph(args)
    poly = bivariate_polynomial(g, budget=budget)
    return 0, {"graph": _graph_summary(g), "terms": poly.to_json_list()}


def _cmd_orientations(args, budget: Budget) -> tuple[int, dict]:
    g = _require_graph(args)
    orientations = acyclic_orientation_list(g)
    hist = source_component_histogram(g)
    return 0, {
        "graph": _graph_summary(g),
        "acyclic_count": str(len(orientations)),
        "by_source_components": {str(i): str(c) for i, c in sorted(hist.items())},
    }


def _cmd_heaps(args, budget: Budget) -> tuple[int, dict]:
    g = _require_graph(args)
    bound = args.D
    report = verify_heap_identities(g, bound, budget)
    payload = {
        "graph": _graph_summary(g),
        "bound": bound,
        "trivial": trivial_series(g, bound, budget).to_json_list(),
        "heap": heap_series(g, bound, budget).to_json_list(),
        "pyramid": pyramid_series(g, bound, budget).to_json_list(),
        "identities": report.to_json_dict(),
    }
    return (0 if report.equal else 1), payload


def _cmd_reciprocity(args, budget: Budget) -> tuple[int, dict]:
    g = _require_graph(args)
    fn, flags = RECIPROCITY_CHECKS[args.check]
    report: ReciprocityReport = fn(g, *_gather(args, flags, args.check), budget=budget)
    payload = {"graph": _graph_summary(g), **report.to_json_dict()}
    return (0 if report.equal else 1), payload


def _cmd_symfunc(args, budget: Budget) -> tuple[int, dict]:
    g = _require_graph(args)
    if args.check is None:
        x = csf_powersum(g, budget)
        payload = {
            "graph": _graph_summary(g),
            "powersum": x.to_json_dict(),
            "omega": omega(x).to_json_dict(),
            "chromatic_from_specialization": specialize_p_to_q(x).to_json_dict(),
        }
        if args.N:
            payload["expansion"] = {
                "variables": args.N,
                "terms": expand_finite(x, args.N).to_json_list(),
            }
        return 0, payload
    fn, flags, sides = SYMFUNC_CHECKS[args.check]
    report: IdentityReport = fn(g, *_gather(args, flags, args.check), budget=budget)
    payload = {"graph": _graph_summary(g), **report.to_json_dict()}
    if not report.equal:
        # mismatch contract: show both sides
        if sides is None:
            lhs = omega(csf_powersum(g, budget))
            rhs = orientation_lambda_tally(g)
            payload["lhs"] = lhs.to_json_dict()
            payload["rhs"] = rhs.to_json_dict()
        else:
            lhs, rhs = sides(g, *_gather(args, flags, args.check), budget)
            payload["lhs"] = lhs.to_json_list()
            payload["rhs"] = rhs.to_json_list()
        return 1, payload
    return 0, payload


def _cmd_selfcheck(args, budget: Budget) -> tuple[int, dict]:
    results = run_selfcheck()
    payload = {
        "results": [r.to_json_dict() for r in results],
        "passed": sum(r.ok for r in results),
        "total": len(results),
    }
    return (0 if all(r.ok for r in results) else 1), payload


_COMMANDS = {
    "chromatic": _cmd_chromatic,
    "chihat": _cmd_chihat,
    "bivariate": _cmd_bivariate,
    "orientations": _cmd_orientations,
    "heaps": _cmd_heaps,
    "reciprocity": _cmd_reciprocity,
    "symfunc": _cmd_symfunc,
    "selfcheck": _cmd_selfcheck,
}


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage error, 0 on -h
        return int(exc.code or 0)
    try:
        if args.threads < 1:
            raise ValueError("--threads must be >= 1")
        budget = _parse_budget(args.budget)
        code, payload = _COMMANDS[args.command](args, budget)
    except (ChromheapError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args.mode)
    if code == 1:
        print("identity mismatch", file=sys.stderr)
    return code


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
