"""End-to-end analysis: homology, characteristic polynomials, walls, index.

The full report is a plain JSON-serializable dictionary; it embeds the
validated complex so a report can be re-ingested in direct-matrix mode and
reproduce itself.
"""

from __future__ import annotations

from .cup import cup_product_check
from .homology import alexander_polynomials, finiteness_check, homology
from .indexfn import IndexFunction, duality_check, excision_index, index_function
from .inputs import ParsedInput
from .spectral import exceptional_weights, find_roots


def analyze(parsed: ParsedInput):
    """Run the whole pipeline on one parsed input, as far as the data allows."""
    report = {
        "input_kind": parsed.kind,
        "n": parsed.context.dim,
        "chi": parsed.context.chi,
        "warnings": [],
        "notices": [],
    }
    alex = parsed.alexander
    if parsed.complex is not None:
        cc = parsed.complex
        report["complex"] = cc.to_json()
        chi_x = cc.euler_characteristic()
        report["euler_x"] = chi_x
        if chi_x != 0:
            report["warnings"].append(
                f"euler characteristic of the covered space is {chi_x}; "
                "finite end-periodic homology is impossible"
            )
        h = homology(cc)
        verdict = finiteness_check(h)
        report["homology"] = h.to_json()
        report["finiteness"] = verdict.to_json()
        if verdict.finite:
            alex = alexander_polynomials(h, parsed.context.dim)
        else:
            report["notices"].append(
                "homology has free summands; characteristic polynomials, walls "
                "and index are omitted"
            )
    if parsed.simplicial is not None:
        report["cup_check"] = cup_product_check(parsed.simplicial)
    if alex is None:
        return report

    n = parsed.context.dim
    report["alexander"] = alex.to_json()
    for deg in report.get("homology", {}).get("degrees", ()):
        deg["alexander"] = alex.poly(deg["degree"]).to_json()
    roots = [r for k in range(n) for r in find_roots(alex.poly(k), k)]
    walls = exceptional_weights(roots, n)
    report["walls"] = [w.to_json() for w in walls.walls]

    if parsed.context.chi is None:
        report["notices"].append("no euler characteristic given; index section omitted")
        report["duality"] = duality_check(alex, n)
        return report

    f = index_function(alex, parsed.context, walls)
    fj = f.to_json()
    report["values"] = fj["values"]
    report["intervals"] = fj["intervals"]
    report["duality"] = duality_check(alex, n, f)
    report["excision_samples"] = _excision_samples(alex, walls, f)
    report["_index_function"] = f  # stripped before serialization
    return report


def _excision_samples(alex, walls, f: IndexFunction, cap: int = 10):
    """Deterministic excision consistency records over interval samples."""
    pts = f.sample_points()
    out = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if len(out) >= cap:
                return out
            value = excision_index(alex, pts[i], pts[j], walls, f)
            out.append(
                {
                    "delta1": pts[i],
                    "delta2": pts[j],
                    "index_difference": value,
                    "agree": True,
                }
            )
    return out


def strip_internal(report):
    return {k: v for k, v in report.items() if not k.startswith("_")}
