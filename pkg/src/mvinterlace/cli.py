"""Command-line front end.

Verbs::

    compute      B or a specialization of it for one graph
    truncate     the d-truncation of B or a specialization
    specialize   apply a specializing substitution to a polynomial (or to B(G))
    check        run identity suites
    cwx-eval     evaluate a k-expression to a graph
    cwdp         truncated B_I through the clique-width dynamic program
    matroid      bases, activities and Tutte polynomials of a matroid
    reconstruct  recover a graph from rho(B(G)) or from B_{x=y}(G)

Exit status: 0 on success, 1 when the computation itself fails (methods
disagree, width violation, not a matroid, suite failure), 2 on usage or
input-format errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Sequence

from . import checks, cwdp, kexpr
from . import matroid as mt
from .graph import Graph, GraphFormatError, read_graph_text, to_text
from .interlace import (RHO, V, ReconstructionError, brute_force_B, reconstruct_graph,
                        reconstruct_loopfree_from_bxy, recursive_B, specialize_B1)
from .poly import MultiPoly, PolySyntaxError, Substitution, parse_poly
from .specializations import (ETA_PRIME, SIGMA_0, SIGMA_EQ, SIGMA_Q, TAU_Q, TO_I, LoopedGraphError,
                              b_independence, b_xy, b_y0, big_q_poly, independence_poly, q_poly)

BRUTE_LIMIT = 16
POLY_NAMES = ("B", "B1", "By0", "Bxy", "BI", "q", "Q", "I")
METHODS = ("brute", "recursive", "substitution", "both")

V_TO_ONE = Substitution({V: 1})

# Substitutions taking B(G) to each specialization.
SPECIALIZERS: dict[str, Callable[[MultiPoly], MultiPoly]] = {
    "B": lambda p: p,
    "B1": specialize_B1,
    "By0": SIGMA_0.apply,
    "Bxy": SIGMA_EQ.apply,
    "BI": ETA_PRIME.apply,
    "q": SIGMA_Q.apply,
    "Q": TAU_Q.apply,
    "I": TO_I.apply,
}

# Each polynomial's own recursions, by display name.
RECURSIONS: dict[str, dict[str, Callable[[Graph], MultiPoly]]] = {
    "B": {"recursive": recursive_B},
    "B1": {"recursive": lambda g: specialize_B1(recursive_B(g))},
    "By0": {
        "recursive": lambda g: b_y0(g, "recursion", "deletion"),
        "recursive-pivot": lambda g: b_y0(g, "recursion", "pivot"),
    },
    "Bxy": {"recursive": lambda g: b_xy(g, "recursion")},
    "BI": {
        "recursive": lambda g: b_independence(g, "recursion_I14"),
        "recursive-I56": lambda g: b_independence(g, "recursion_I56"),
        "recursive-I567": lambda g: b_independence(g, "recursion_I567"),
        "stable-sets": lambda g: b_independence(g, "direct"),
    },
    "q": {
        "recursive": lambda g: q_poly(g, "recursion_q123"),
        "recursive-q3prime": lambda g: q_poly(g, "recursion_q3prime"),
    },
    "Q": {"recursive": lambda g: big_q_poly(g, "recursion_Q")},
    "I": {
        "recursive": lambda g: independence_poly(g, "recursion"),
        "stable-sets": lambda g: independence_poly(g, "direct"),
    },
}


class UsageError(Exception):
    """Bad arguments or unreadable input (exit 2)."""


class DomainError(Exception):
    """The computation cannot be carried out or its checks fail (exit 1)."""


# -- input ---------------------------------------------------------------------


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _one_source(args, file_attr: str, inline_attr: str, what: str) -> str | None:
    path, inline = getattr(args, file_attr, None), getattr(args, inline_attr, None)
    if path is not None and inline is not None:
        raise UsageError(f"give the {what} either as a file or inline, not both")
    if path is not None:
        return _read(path)
    return inline


def _graph(args) -> Graph:
    text = _one_source(args, "graph", "inline", "graph")
    if text is None:
        raise UsageError("no graph given; use --graph FILE or --inline TEXT")
    try:
        return read_graph_text(text)[0]
    except GraphFormatError as e:
        raise UsageError(f"malformed graph: {e}") from None


def _polynomial(args) -> MultiPoly | None:
    text = _one_source(args, "polynomial_file", "polynomial", "polynomial")
    if text is None:
        return None
    try:
        return parse_poly(text.strip())
    except PolySyntaxError as e:
        raise UsageError(f"malformed polynomial: {e}") from None


def _poly_or_graph(args) -> tuple[MultiPoly | None, Graph | None]:
    p = _polynomial(args)
    has_graph = args.graph is not None or args.inline is not None
    if p is not None and has_graph:
        raise UsageError("give either a polynomial or a graph, not both")
    if p is None:
        return None, _graph(args)
    return p, None


def _kexpr(args):
    text = _one_source(args, "file", "expr", "k-expression")
    if text is None:
        raise UsageError("no k-expression given; use --expr TEXT or --file FILE")
    try:
        return kexpr.parse_kexpr(text)
    except (kexpr.KExprSyntaxError, ValueError) as e:
        raise UsageError(f"malformed k-expression: {e}") from None


# -- computing -----------------------------------------------------------------


def _guard_brute(g: Graph, force: bool) -> None:
    if len(g) > BRUTE_LIMIT and not force:
        raise UsageError(
            f"brute force enumerates 3^{len(g)} pairs; refusing more than {BRUTE_LIMIT} vertices without --force")


def compute_methods(g: Graph, poly: str, method: str, force: bool = False) -> list[tuple[str, MultiPoly]]:
    """Results of the requested method(s), labelled by method name."""
    spec = SPECIALIZERS[poly]
    out: list[tuple[str, MultiPoly]] = []
    if method in ("brute", "both"):
        _guard_brute(g, force)
        out.append(("brute", spec(brute_force_B(g))))
    if method in ("substitution", "both") and poly != "B":
        out.append(("substitution", spec(recursive_B(g))))
    if method == "substitution" and poly == "B":
        out.append(("recursive", recursive_B(g)))
    if method in ("recursive", "both"):
        recs = RECURSIONS[poly]
        names = list(recs) if method == "both" else ["recursive"]
        for name in names:
            if poly == "Q" and g.loops():
                if method == "recursive":
                    raise DomainError("the Q recursion needs a loop-free graph")
                continue
            out.append((name, recs[name](g)))
    return out


def _emit_agreement(results: list[tuple[str, MultiPoly]], out) -> int:
    first = results[0][1]
    print(first.canonical_text(), file=out)
    if len(results) == 1:
        return 0
    if all(p == first for _, p in results):
        print("methods agree", file=out)
        return 0
    print("methods disagree", file=out)
    for name, p in results:
        print(f"  {name}: {p.canonical_text()}", file=out)
    return 1


# -- verbs ---------------------------------------------------------------------


def cmd_compute(args, out) -> int:
    g = _graph(args)
    results = compute_methods(g, args.poly, args.method, args.force)
    if args.truncate is not None:
        results = [(n, p.truncate(args.truncate)) for n, p in results]
    return _emit_agreement(results, out)


def cmd_truncate(args, out) -> int:
    p, g = _poly_or_graph(args)
    if p is None:
        results = compute_methods(g, args.poly, args.method, args.force)
        return _emit_agreement([(n, q.truncate(args.d)) for n, q in results], out)
    print(p.truncate(args.d).canonical_text(), file=out)
    return 0


def cmd_specialize(args, out) -> int:
    p, g = _poly_or_graph(args)
    if p is None:
        p = recursive_B(g)
    print(SPECIALIZERS[args.to](p).canonical_text(), file=out)
    return 0


def cmd_check(args, out) -> int:
    scope = checks.Scope(max_n=args.max_n, n_random=args.random,
                         random_n=(args.random_min_n, args.random_max_n), seed=args.seed)
    try:
        results = checks.run_suite(args.suite, scope)
    finally:
        checks.clear_cache()
    for r in results:
        print(r.report(), file=out)
    failed = [r.name for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} suites passed", file=out)
    return 1 if failed else 0


def cmd_cwx_eval(args, out) -> int:
    e = _kexpr(args)
    lg = kexpr.eval_kexpr(e, args.k, ordered=args.order)
    print(to_text(lg.graph), file=out)
    classes = lg.label_classes()
    print("labels: " + " ".join(f"{i}:{','.join(sorted(classes[i], key=lg.graph.index))}"
                                for i in sorted(classes)), file=out)
    print(f"width: {kexpr.validate_width(e)}", file=out)
    if args.order:
        print("order: " + " ".join(lg.order), file=out)
    return 0


def cmd_cwdp(args, out) -> int:
    e = _kexpr(args)
    width = kexpr.validate_width(e)
    k = args.k if args.k is not None else width
    p = cwdp.dp_bi_truncated(e, k, args.d)
    if args.specialize == "I":
        p = TO_I.apply(p)
    if not args.verify:
        print(p.canonical_text(), file=out)
        return 0
    g = kexpr.eval_kexpr(e, k).graph
    want = b_independence(g, "direct").truncate(args.d)
    if args.specialize == "I":
        want = TO_I.apply(want)
    return _emit_agreement([("dp", p), ("stable-sets", want)], out)


def _fmt(m: mt.Matroid, s) -> str:
    return "{" + " ".join(sorted(s, key=m.key)) + "}"


def cmd_matroid(args, out) -> int:
    text = _one_source(args, "file", "inline", "matroid")
    if text is None:
        raise UsageError("no matroid given; use --file FILE or --inline TEXT")
    base_dir = os.path.dirname(os.path.abspath(args.file)) if args.file else None
    try:
        m = mt.parse_matroid(text, base_dir)
    except OSError as e:
        raise UsageError(f"cannot read graph for matroid: {e}") from None
    except GraphFormatError as e:
        raise UsageError(f"malformed graph: {e}") from None
    print(f"groundset: {' '.join(m.ground)}", file=out)
    print(f"rank: {m.rank}", file=out)
    print(f"bases: {len(m.bases)}", file=out)
    if args.activities:
        for b in m.sorted_bases():
            ia, ea = m.activities(b)
            print(f"  {_fmt(m, b)} IA={_fmt(m, ia)} EA={_fmt(m, ea)}", file=out)
    if args.decompose is not None:
        a = args.decompose.split()
        unknown = [e for e in a if e not in m.ground]
        if unknown:
            raise UsageError(f"elements {unknown} are not in the ground set")
        b, lo, hi = mt.activity_interval_decompose(m, a)
        print(f"decompose {_fmt(m, a)}: basis={_fmt(m, b)} removed={_fmt(m, lo)} added={_fmt(m, hi)}", file=out)
    if args.multivariate:
        print(f"T~ = {mt.multivariate_tutte(m).canonical_text()}", file=out)
    methods = ("rank_shift", "activities") if args.tutte == "both" else (args.tutte,)
    results = [(meth, mt.tutte_polynomial(m, meth)) for meth in methods]
    print("T = ", end="", file=out)
    return _emit_agreement(results, out)


def cmd_reconstruct(args, out) -> int:
    p, g = _poly_or_graph(args)
    if p is None:
        p = b_xy(g) if args.source == "bxy" else recursive_B(g)
    # both maps are idempotent, so B(G) and rho(B(G)) are accepted alike
    if args.source == "bxy":
        h = reconstruct_loopfree_from_bxy(V_TO_ONE.apply(p))
    else:
        h = reconstruct_graph(RHO.apply(p))
    print(to_text(h), file=out)
    if g is None:
        return 0
    if h == g:
        print("round trip ok", file=out)
        return 0
    print("round trip differs from the input graph", file=out)
    return 1


# -- parser --------------------------------------------------------------------


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", metavar="FILE", help="graph file")
    p.add_argument("--inline", metavar="TEXT", help="graph text; ';' separates lines")


def _add_poly_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--polynomial", metavar="TEXT", help="polynomial in canonical text form")
    p.add_argument("--polynomial-file", metavar="FILE", help="file holding one polynomial")


def _add_poly_choice(p: argparse.ArgumentParser, default_method: str = "recursive") -> None:
    p.add_argument("--poly", choices=POLY_NAMES, default="B", help="which polynomial (default B)")
    p.add_argument("--method", choices=METHODS, default=default_method,
                   help=f"how to compute it (default {default_method})")
    p.add_argument("--force", action="store_true", help=f"allow brute force above {BRUTE_LIMIT} vertices")


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mvinterlace", description="Multivariate interlace polynomials.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("compute", help="compute B or a specialization")
    _add_graph_source(p)
    _add_poly_choice(p)
    p.add_argument("--truncate", type=_nonneg, metavar="D", help="keep quasi-degree <= D")
    p.set_defaults(run=cmd_compute)

    p = sub.add_parser("truncate", help="d-truncation of a polynomial or of B(G)")
    _add_graph_source(p)
    _add_poly_source(p)
    _add_poly_choice(p)
    p.add_argument("--d", type=_nonneg, required=True, help="quasi-degree bound")
    p.set_defaults(run=cmd_truncate)

    p = sub.add_parser("specialize", help="apply a specializing substitution to B")
    _add_graph_source(p)
    _add_poly_source(p)
    p.add_argument("--to", choices=POLY_NAMES, required=True, help="target polynomial")
    p.set_defaults(run=cmd_specialize)

    p = sub.add_parser("check", help="run identity suites")
    p.add_argument("--suite", choices=["all", *checks.SUITE_NAMES], default="all")
    p.add_argument("--max-n", type=_nonneg, default=4, help="exhaustive up to this many vertices")
    p.add_argument("--random", type=_nonneg, default=40, help="number of random graphs")
    p.add_argument("--random-min-n", type=_nonneg, default=5)
    p.add_argument("--random-max-n", type=_nonneg, default=7)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("cwx-eval", help="evaluate a k-expression")
    p.add_argument("--expr", metavar="TEXT")
    p.add_argument("--file", metavar="FILE", help=".cwx file")
    p.add_argument("--k", type=_nonneg, help="declared width; checked against the labels used")
    p.add_argument("--order", action="store_true", help="ordered evaluation")
    p.set_defaults(run=cmd_cwx_eval)

    p = sub.add_parser("cwdp", help="truncated B_I by dynamic programming over a k-expression")
    p.add_argument("--expr", metavar="TEXT")
    p.add_argument("--file", metavar="FILE", help=".cwx file")
    p.add_argument("--k", type=_nonneg, help="width (default: labels used)")
    p.add_argument("--d", type=_nonneg, required=True, help="quasi-degree bound")
    p.add_argument("--specialize", choices=("BI", "I"), default="BI",
                   help="report B_I (default) or the univariate I")
    p.add_argument("--verify", action="store_true", help="compare with stable-set enumeration")
    p.set_defaults(run=cmd_cwdp)

    p = sub.add_parser("matroid", help="Tutte polynomials and basis activities")
    p.add_argument("--file", metavar="FILE")
    p.add_argument("--inline", metavar="TEXT")
    p.add_argument("--tutte", choices=("rank_shift", "activities", "both"), default="both")
    p.add_argument("--activities", action="store_true", help="list IA and EA of every basis")
    p.add_argument("--multivariate", action="store_true", help="also print T~")
    p.add_argument("--decompose", metavar="ELEMS", help="activity interval containing this set")
    p.set_defaults(run=cmd_matroid)

    p = sub.add_parser("reconstruct", help="recover a graph from rho(B(G)) or B_{x=y}")
    _add_graph_source(p)
    _add_poly_source(p)
    p.add_argument("--source", choices=("rho", "bxy"), default="rho",
                   help="rho(B(G)) or B(G) (default), or B_{x=y}(G) of a loop-free graph")
    p.set_defaults(run=cmd_reconstruct)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    """Parse ``argv`` and run one verb; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.run(args, out)
    except UsageError as e:
        print(f"mvinterlace {args.verb}: {e}", file=err)
        return 2
    except (DomainError, kexpr.WidthError, mt.MatroidError, LoopedGraphError, ReconstructionError) as e:
        print(f"mvinterlace {args.verb}: {e}", file=err)
        return 1


def main() -> None:
    sys.exit(run())
