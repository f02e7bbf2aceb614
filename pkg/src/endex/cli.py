"""Command line front end.

Subcommands cover the full pipeline (analyze) and the individual stages
and verification oracles.  Structured (JSON) output is the stable
contract; the text format is for human eyes.  Diagnostics go to stderr and
the exit code is zero exactly when no error occurred.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import EndexError, NotFiniteError
from .homology import alexander_polynomials, finiteness_check, homology
from .indexfn import duality_check, index_function
from .inputs import load_input, parse_point
from .linalg import NUMERIC_RANK_RTOL
from .pipeline import analyze, strip_internal
from .spectral import exceptional_weights, find_roots
from .svgplot import plot_data, plot_text, render_svg
from .twisted import WeightedWindow, fredholm_check, l2_hom_dim_analytic, l2_kernel_truncated, twisted_dims, uct_dims
from .cup import cup_product_check
from .errors import UnsupportedInputError

_L2_GRID_POINTS = (Fraction(1, 2), Fraction(1), Fraction(2), 1 + 1j)
_L2_GRID_WEIGHTS = ((1.0, 0.5), (0.5, 1.0), (1.0, -1.0), (-1.0, -2.0))


def _emit(args, payload, text_renderer=None):
    if args.format == "json":
        body = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        body = text_renderer(payload) if text_renderer else json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def _analyze_text(report) -> str:
    lines = [f"input: {report['input_kind']} (n={report['n']}, chi={report['chi']})"]
    if "euler_x" in report:
        lines.append(f"euler characteristic of X: {report['euler_x']}")
    if "homology" in report:
        lines.append("homology:")
        for deg in report["homology"]["degrees"]:
            facs = ", ".join(_poly_text(q) for q in deg["invariant_factors"]) or "-"
            lines.append(
                f"  H{deg['degree']}: free rank {deg['free_rank']}, factors [{facs}]"
            )
    if "finiteness" in report:
        v = report["finiteness"]
        lines.append(
            "finiteness: finite" if v["finite"] else f"finiteness: infinite in degrees {v['infinite_degrees']}"
        )
    if "alexander" in report:
        polys = report["alexander"]["polys"]
        lines.append("characteristic polynomials: " + ", ".join(_poly_text(p) for p in polys))
    for w in report.get("walls", ()):
        label = w["delta_exact"] or f"{w['delta']:.6g}"
        contribs = "; ".join(
            f"k={c['k']} lambda={c['lambda']} mult={c['mult']}" for c in w["contributions"]
        )
        lines.append(f"wall at {label} (delta={w['delta']:.6g}): jump {w['jump']:+d}  [{contribs}]")
    if "values" in report:
        lines.append(f"index values: {report['values']}")
    if "duality" in report:
        lines.append("duality: " + ("ok" if report["duality"]["ok"] else "FAILED"))
    if "cup_check" in report:
        c = report["cup_check"]
        lines.append(
            "cup sequence: " + ("exact" if c["exact"] else f"not exact, defects {c['defects']}")
        )
    for w in report.get("warnings", ()):
        lines.append(f"warning: {w}")
    for n in report.get("notices", ()):
        lines.append(f"note: {n}")
    return "\n".join(lines) + "\n"


def _poly_text(pj) -> str:
    from .laurent import LaurentPoly

    return LaurentPoly.from_json(pj).pretty()


def _cmd_analyze(args):
    parsed = load_input(args.input, args.dim, args.chi)
    report = analyze(parsed)
    f = report.get("_index_function")
    if args.svg and f is not None:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(f))
    _emit(args, strip_internal(report), _analyze_text)


def _cmd_alexander(args):
    parsed = load_input(args.input, args.dim, args.chi)
    if parsed.alexander is not None:
        payload = {"alexander": parsed.alexander.to_json()}
    else:
        h = homology(parsed.complex)
        verdict = finiteness_check(h)
        payload = {"homology": h.to_json(), "finiteness": verdict.to_json()}
        if verdict.finite:
            payload["alexander"] = alexander_polynomials(h, parsed.context.dim).to_json()
    _emit(args, payload)


def _cmd_index(args):
    parsed = load_input(args.input, args.dim, args.chi)
    if parsed.context.chi is None:
        raise EndexError("the index needs --chi (or a manifold block with chi)")
    report = analyze(parsed)
    if "values" not in report:
        raise NotFiniteError(report["finiteness"]["infinite_degrees"])
    payload = {k: report[k] for k in ("n", "chi", "walls", "values", "intervals")}
    _emit(args, payload)


def _cmd_twisted(args):
    parsed = load_input(args.input, args.dim, args.chi)
    if parsed.complex is None:
        raise UnsupportedInputError("twisted dimensions need a chain complex input")
    z = parse_point(args.z)
    fiber = twisted_dims(parsed.complex, z, rtol=args.tol)
    payload = fiber.to_json()
    if fiber.exact:
        h = homology(parsed.complex)
        if finiteness_check(h).finite:
            predicted = uct_dims(h, z)
            payload["uct_dims"] = predicted
            payload["uct_crosscheck"] = list(fiber.dims) == predicted[: len(fiber.dims)] and all(
                d == 0 for d in predicted[len(fiber.dims):]
            )
    _emit(args, payload)


def _cmd_fredholm(args):
    parsed = load_input(args.input, args.dim, args.chi)
    if parsed.complex is None:
        raise UnsupportedInputError("the Fredholm check needs a chain complex input")
    _emit(args, fredholm_check(parsed.complex, args.delta, args.samples, rtol=args.tol))


def _cmd_l2_oracle(args):
    if args.lam is not None:
        lam = parse_point(args.lam)
        lamc = complex(lam)
        window = WeightedWindow(lamc, args.mult, args.delta1, args.delta2, args.window, args.tol)
        payload = {
            "lambda": args.lam,
            "m": args.mult,
            "delta1": args.delta1,
            "delta2": args.delta2,
            "analytic": l2_hom_dim_analytic(lamc, args.mult, args.delta1, args.delta2),
            "truncated": l2_kernel_truncated(window),
        }
        payload["agree"] = payload["analytic"] == payload["truncated"]
    else:
        rows = []
        for lam in _L2_GRID_POINTS:
            for m in (1, 2):
                for d1, d2 in _L2_GRID_WEIGHTS:
                    lamc = complex(lam)
                    analytic = l2_hom_dim_analytic(lamc, m, d1, d2)
                    truncated = l2_kernel_truncated(
                        WeightedWindow(lamc, m, d1, d2, args.window, args.tol)
                    )
                    rows.append(
                        {
                            "lambda": str(lam),
                            "m": m,
                            "delta1": d1,
                            "delta2": d2,
                            "analytic": analytic,
                            "truncated": truncated,
                            "agree": analytic == truncated,
                        }
                    )
        payload = {"grid": rows, "all_agree": all(r["agree"] for r in rows)}
    _emit(args, payload)


def _cmd_cup_check(args):
    parsed = load_input(args.input, args.dim, args.chi)
    if parsed.simplicial is None:
        raise UnsupportedInputError("the cup check needs a simplicial input")
    _emit(args, cup_product_check(parsed.simplicial))


def _cmd_duality(args):
    parsed = load_input(args.input, args.dim, args.chi)
    alex = parsed.alexander
    f = None
    if alex is None:
        h = homology(parsed.complex)
        alex = alexander_polynomials(h, parsed.context.dim)
    n = parsed.context.dim
    if parsed.context.chi is not None:
        roots = [r for k in range(n) for r in find_roots(alex.poly(k), k)]
        walls = exceptional_weights(roots, n)
        f = index_function(alex, parsed.context, walls)
    _emit(args, duality_check(alex, n, f))


def _cmd_plotdata(args):
    parsed = load_input(args.input, args.dim, args.chi)
    report = analyze(parsed)
    f = report.get("_index_function")
    if f is None:
        raise EndexError("plot data needs a computable index (finite homology and chi)")
    data = plot_data(f)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(f))
    _emit(args, data, lambda d: plot_text(d))


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="endex",
        description="Index step functions of weighted complexes on end-periodic manifolds",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="path to a JSON input document")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--output", help="write the report here instead of stdout")
        p.add_argument("--chi", type=int, default=None, help="euler characteristic override")
        p.add_argument("--dim", type=int, default=None, help="manifold dimension override")

    p = sub.add_parser("analyze", help="full pipeline report")
    common(p)
    p.add_argument("--svg", help="also render the step function to this SVG file")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("alexander", help="homology and characteristic polynomials")
    common(p)
    p.set_defaults(func=_cmd_alexander)

    p = sub.add_parser("index", help="walls and index values")
    common(p)
    p.set_defaults(func=_cmd_index)

    p = sub.add_parser("twisted", help="twisted cohomology dimensions at a point")
    common(p)
    p.add_argument("--z", required=True, help="evaluation point, e.g. '1/2', '1+2i', '0.7'")
    p.add_argument("--tol", type=float, default=NUMERIC_RANK_RTOL,
                   help="relative rank tolerance for float points")
    p.set_defaults(func=_cmd_twisted)

    p = sub.add_parser("fredholm", help="Fredholm verdict at a weight")
    common(p)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--samples", type=int, default=16, help="circle sample count")
    p.add_argument("--tol", type=float, default=NUMERIC_RANK_RTOL,
                   help="relative rank tolerance for circle samples")
    p.set_defaults(func=_cmd_fredholm)

    p = sub.add_parser("l2-oracle", help="weighted shift kernel oracle vs analytic count")
    common(p, needs_input=False)
    p.add_argument("--lam", help="eigenvalue; omit to run the standard grid")
    p.add_argument("--mult", type=int, default=1)
    p.add_argument("--delta1", type=float, default=1.0)
    p.add_argument("--delta2", type=float, default=0.5)
    p.add_argument("--window", type=int, default=200, help="truncation half-width")
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=_cmd_l2_oracle)

    p = sub.add_parser("cup-check", help="cup multiplication exactness on cohomology")
    common(p)
    p.set_defaults(func=_cmd_cup_check)

    p = sub.add_parser("duality", help="polynomial reversal symmetry and index parity")
    common(p)
    p.set_defaults(func=_cmd_duality)

    p = sub.add_parser("plotdata", help="step function samples and wall markers")
    common(p)
    p.add_argument("--svg", help="render a self-contained SVG here")
    p.set_defaults(func=_cmd_plotdata)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except EndexError as e:
        print(f"endex: error: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f"endex: error: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
