"""Shared builders for the test suite: small matrices, random polynomials,
random chain complexes with known (planted) homology."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from endex import AlexanderData, ChainComplexOverLambda, LaurentMatrix, LaurentPoly
from endex.laurent import poly


def mat(rows):
    return LaurentMatrix.from_rows([[poly(e) for e in r] for r in rows])


@pytest.fixture
def fox_alexander():
    return AlexanderData(4, [poly("t - 1"), poly("t - 2"), poly("t - 1/2"), poly("t - 1")])


@pytest.fixture
def s1s2_complex():
    return ChainComplexOverLambda(
        [1, 1, 1, 1], [mat([["t - 1"]]), mat([["0"]]), mat([["t - 1"]])]
    )


@pytest.fixture
def circle_complex():
    return ChainComplexOverLambda([1, 1], [mat([["t - 1"]])])


def random_laurent(rng: random.Random, max_span: int = 3, max_coeff: int = 3,
                   low_range: tuple = (-2, 1), zero_chance: float = 0.25) -> LaurentPoly:
    if rng.random() < zero_chance:
        return LaurentPoly.zero()
    span = rng.randint(0, max_span)
    coeffs = [Fraction(rng.randint(-max_coeff, max_coeff)) for _ in range(span + 1)]
    coeffs[0] = coeffs[0] or Fraction(rng.choice([1, -1]))
    coeffs[-1] = coeffs[-1] or Fraction(rng.choice([1, -1]))
    return LaurentPoly(rng.randint(*low_range), coeffs)


def random_matrix(rng: random.Random, max_size: int = 5, max_span: int = 3) -> LaurentMatrix:
    r, c = rng.randint(0, max_size), rng.randint(0, max_size)
    return LaurentMatrix(r, c, [random_laurent(rng, max_span) for _ in range(r * c)])


# Nonzero rational roots whose moduli are pairwise distinct or exactly equal,
# so wall merging stays certifiable on random data.
ROOT_POOL = [
    Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2),
    Fraction(-1, 2), Fraction(3), Fraction(2, 3), Fraction(-3, 2),
]

# Irreducible quadratics with conjugate root pairs (exact modulus squares).
QUADRATIC_POOL = ["t^2 + 1", "t^2 - t + 1", "t^2 + 2"]


def random_alexander(rng: random.Random, max_n: int = 5, max_deg: int = 4,
                     quadratics: bool = True):
    """Random characteristic data with certifiable walls, plus a random chi."""
    n = rng.randint(1, max_n)
    polys = []
    for _ in range(n):
        p = LaurentPoly.one()
        deg = 0
        target = rng.randint(0, max_deg)
        # At most one distinct quadratic per polynomial: rational roots are
        # deflated exactly, so the leftover conjugate pair keeps an exact
        # modulus square and every wall stays certifiable.
        quad = rng.choice(QUADRATIC_POOL) if quadratics and rng.random() < 0.3 else None
        while deg < target:
            if quad is not None and deg + 2 <= target:
                p = p * poly(quad)
                deg += 2
                if rng.random() < 0.7:
                    quad = None
            else:
                p = p * LaurentPoly.from_roots([rng.choice(ROOT_POOL)])
                deg += 1
        polys.append(p)
    chi = rng.randint(-3, 3)
    return AlexanderData(n, polys), chi


def off_wall_delta(rng: random.Random, walls, lo: float = -2.5, hi: float = 2.5,
                   margin: float = 0.02) -> float:
    while True:
        d = rng.uniform(lo, hi)
        if all(abs(d - w.delta) > margin for w in walls.walls):
            return d


def _random_unimodular(rng: random.Random, n: int, ops: int = 8):
    """A unimodular matrix and its exact inverse, as elementary products."""
    m = [[LaurentPoly.one() if i == j else LaurentPoly.zero() for j in range(n)] for i in range(n)]
    minv = [[LaurentPoly.one() if i == j else LaurentPoly.zero() for j in range(n)] for i in range(n)]
    for _ in range(ops if n > 1 else 0):
        kind = rng.choice(["add", "swap", "unit"])
        if kind == "add":
            i, j = rng.sample(range(n), 2)
            q = LaurentPoly(rng.randint(-1, 1), [Fraction(rng.randint(-2, 2))])
            if q.is_zero():
                continue
            m[i] = [x + q * y for x, y in zip(m[i], m[j])]
            for row in minv:
                row[j] = row[j] - q * row[i]
        elif kind == "swap":
            i, j = rng.sample(range(n), 2)
            m[i], m[j] = m[j], m[i]
            for row in minv:
                row[i], row[j] = row[j], row[i]
        else:
            i = rng.randrange(n)
            u = LaurentPoly(rng.randint(-1, 1), [Fraction(rng.choice([1, -1, 2, -2]))])
            uinv = LaurentPoly(-u.low, [1 / u.coeffs[0]])
            m[i] = [u * x for x in m[i]]
            for row in minv:
                row[i] = row[i] * uinv
    eye = LaurentMatrix.identity(n)
    mm = LaurentMatrix.from_rows(m) if n else LaurentMatrix(0, 0, [])
    mi = LaurentMatrix.from_rows(minv) if n else LaurentMatrix(0, 0, [])
    assert mm * mi == eye
    return mm, mi


def planted_complex(rng: random.Random, n: int | None = None, allow_free: bool = False):
    """A disguised direct sum of elementary complexes with known homology.

    Returns (complex, expected) where expected maps degree -> (free_rank,
    [invariant factors]).  Invariant factors are planted as divisibility
    chains so the computed ones match them literally.
    """
    if n is None:
        n = rng.choice([2, 3])
    torsion: dict[int, list[LaurentPoly]] = {}
    frees: dict[int, int] = {}
    for k in range(n + 1):
        frees[k] = rng.choice([0, 0, 1]) if allow_free else 0
        if k == n:
            torsion[k] = []
            continue
        count = rng.choice([0, 1, 1, 2])
        chain = []
        q = LaurentPoly.one()
        for _ in range(count):
            q = q * LaurentPoly.from_roots([rng.choice(ROOT_POOL)])
            chain.append(q)
        torsion[k] = chain
    ranks = []
    for k in range(n + 1):
        sources = len(torsion[k - 1]) if k >= 1 else 0
        ranks.append(len(torsion[k]) + sources + frees[k])
    boundaries = []
    for k in range(1, n + 1):
        rows, cols = ranks[k - 1], ranks[k]
        grid = [[LaurentPoly.zero() for _ in range(cols)] for _ in range(rows)]
        for i, q in enumerate(torsion[k - 1]):
            grid[i][len(torsion[k]) + i] = q
        boundaries.append(
            LaurentMatrix.from_rows(grid) if rows else LaurentMatrix.zero(0, cols)
        )
    transforms = [_random_unimodular(rng, r) for r in ranks]
    disguised = []
    for k in range(1, n + 1):
        u_prev, _ = transforms[k - 1]
        _, u_inv = transforms[k]
        disguised.append(u_prev * boundaries[k - 1] * u_inv)
    cc = ChainComplexOverLambda(ranks, disguised)
    expected = {k: (frees[k], list(torsion[k])) for k in range(n + 1)}
    return cc, expected


def planted_roots(expected) -> set:
    out = set()
    for _, chain in expected.values():
        for q in chain:
            for r in ROOT_POOL:
                if q.evaluate(r) == 0:
                    out.add(r)
    return out
