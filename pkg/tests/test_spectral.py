import math
import random
from fractions import Fraction

import pytest

from endex import AmbiguousWallError, exceptional_weights, find_roots
from endex.laurent import LaurentPoly, poly
from endex.spectral import RESIDUAL_RTOL

from conftest import random_alexander


def all_roots(alex, n=None):
    n = n if n is not None else alex.n
    return [r for k in range(n) for r in find_roots(alex.poly(k), k)]


def test_single_rational_root():
    (r,) = find_roots(poly("t - 2"), 1)
    assert r.exact == 2 and r.multiplicity == 1 and r.radius == 0.0
    assert r.modulus == 2.0 and r.delta == math.log(2)


def test_double_root_multiplicity_exact():
    (r,) = find_roots(poly("t - 1") ** 2, 0)
    assert r.exact == 1 and r.multiplicity == 2


def test_unitary_conjugate_pair():
    roots = find_roots(poly("t^2 + 1"), 0)
    assert len(roots) == 2
    assert all(r.exact_modulus_sq == 1 for r in roots)
    assert sorted(round(r.approx.imag, 9) for r in roots) == [-1.0, 1.0]


def test_constant_has_no_roots():
    assert find_roots(poly("5"), 0) == []
    assert find_roots(poly("1"), 3) == []


def test_multiplicity_sums_to_degree():
    rng = random.Random(91)
    for _ in range(30):
        alex, _ = random_alexander(rng)
        for k in range(alex.n):
            roots = find_roots(alex.poly(k), k)
            assert sum(r.multiplicity for r in roots) == alex.dim(k)


def test_residuals_below_bound():
    for p in (poly("t^2 + 1"), poly("t^3 - t + 3"), poly("t^4 + t + 2")):
        height = float(max(abs(c) for c in p.coeffs))
        for r in find_roots(p, 0):
            assert abs(p.evaluate(r.approx)) <= RESIDUAL_RTOL * height * (1 + r.multiplicity)


def test_fox_walls(fox_alexander):
    ws = exceptional_weights(all_roots(fox_alexander, 4), 4)
    assert [w.exact_modulus for w in ws.walls] == [Fraction(1, 2), Fraction(1), Fraction(2)]
    assert [w.delta_exact for w in ws.walls] == ["ln(1/2)", "ln(1)", "ln(2)"]
    assert [w.jump for w in ws.walls] == [-1, 0, 1]
    assert ws.walls[1].delta == 0.0
    assert abs(ws.walls[2].delta - math.log(2)) < 1e-15
    contribs = {(c.degree_k, c.multiplicity) for c in ws.walls[1].contributions}
    assert contribs == {(0, 1), (3, 1)}


def test_product_end_single_wall():
    alex_polys = [poly("t - 1") ** b for b in (2, 1, 3)]
    from endex import AlexanderData

    alex = AlexanderData(3, alex_polys)
    ws = exceptional_weights(all_roots(alex), 3)
    assert len(ws.walls) == 1
    w = ws.walls[0]
    assert w.delta == 0.0 and w.exact_modulus == 1
    assert w.jump == (-1) ** 1 * 2 + (-1) ** 2 * 1 + (-1) ** 3 * 3


def test_no_walls_for_constant_data():
    from endex import AlexanderData

    alex = AlexanderData(3, [poly("1"), poly("1"), poly("1")])
    ws = exceptional_weights(all_roots(alex), 3)
    assert ws.walls == ()


def test_total_multiplicity_conservation():
    rng = random.Random(17)
    for _ in range(20):
        alex, _ = random_alexander(rng)
        ws = exceptional_weights(all_roots(alex), alex.n)
        assert ws.total_multiplicity() == sum(alex.dim(k) for k in range(alex.n))


def test_degree_filter_excludes_top():
    from endex import AlexanderData

    alex = AlexanderData(2, [poly("t - 2"), poly("1"), poly("t - 3")])
    roots = [r for k in range(3) for r in find_roots(alex.poly(k), k)]
    ws = exceptional_weights(roots, 2)
    assert len(ws.walls) == 1 and ws.walls[0].exact_modulus == 2


def test_conjugation_insensitivity():
    """Walls from real-coefficient data are stable under conjugating the
    numeric roots, since only moduli enter."""
    p = poly("t^2 + 1") * poly("t - 2") * poly("t^2 - t + 1")
    roots = find_roots(p, 0)
    conjugated = [
        r.__class__(
            approx=r.approx.conjugate(),
            multiplicity=r.multiplicity,
            degree_k=r.degree_k,
            squarefree_factor=r.squarefree_factor,
            radius=r.radius,
            exact=r.exact,
            exact_modulus_sq=r.exact_modulus_sq,
            residual=r.residual,
        )
        for r in roots
    ]
    a = exceptional_weights(roots, 1)
    b = exceptional_weights(conjugated, 1)
    assert [w.delta for w in a.walls] == [w.delta for w in b.walls]
    assert [w.jump for w in a.walls] == [w.jump for w in b.walls]
    # Non-real roots appear in conjugate pairs on the same wall.
    for w in a.walls:
        imags = sorted(round(c.root.approx.imag, 6) for c in w.contributions)
        assert imags == sorted(-v for v in imags)


def test_conjugate_pair_merges_with_rational_wall():
    from endex import AlexanderData

    alex = AlexanderData(2, [poly("t - 1"), poly("t^2 + 1")])
    ws = exceptional_weights(all_roots(alex), 2)
    assert len(ws.walls) == 1
    assert ws.walls[0].exact_modulus == 1
    assert len(ws.walls[0].contributions) == 3


def test_ambiguous_wall_raises():
    quartic = find_roots(poly("t^4 - 2*t^2 + 4"), 0)  # all moduli sqrt(2), no exact form
    sq2 = find_roots(poly("t^2 - 2"), 1)  # real roots +-sqrt(2), no exact form
    with pytest.raises(AmbiguousWallError):
        exceptional_weights(quartic + sq2, 2)


def test_same_factor_cluster_merges_without_error():
    roots = find_roots(poly("t^2 - 2"), 0)
    ws = exceptional_weights(roots, 1)
    assert len(ws.walls) == 1
    assert ws.walls[0].jump == -2


def test_wall_json_shape(fox_alexander):
    ws = exceptional_weights(all_roots(fox_alexander, 4), 4)
    j = ws.to_json()
    assert j["walls"][2]["delta_exact"] == "ln(2)"
    assert j["walls"][2]["contributions"] == [{"k": 1, "lambda": "2", "mult": 1}]
