"""Roots of the characteristic polynomials and the exceptional weight set.

Multiplicities are always exact, coming from the square-free decomposition;
floating point enters only to locate the roots of each square-free factor.
Rational roots are pulled out exactly first (they are what the worked
examples produce), the rest go to a simultaneous Aberth-Ehrlich iteration
with a deterministic start, and every approximate root carries an
a-posteriori error radius.

Weights are walls at ln|root|.  Two moduli are merged into one wall only
when their equality is certain: equal exact modulus squares, or roots of
one and the same square-free factor.  Overlapping-but-uncertifiable moduli
raise AmbiguousWallError instead of being merged silently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import AmbiguousWallError
from .laurent import LaurentPoly, canonicalize, poly, squarefree_decomposition
from .rationals import format_rational

RESIDUAL_RTOL = 1e-12


@dataclass(frozen=True)
class RootDatum:
    """One root of a characteristic polynomial, with provenance."""

    approx: complex
    multiplicity: int
    degree_k: int
    squarefree_factor: LaurentPoly
    radius: float = 0.0
    exact: Fraction | None = None
    exact_modulus_sq: Fraction | None = None
    residual: float = 0.0

    @property
    def modulus(self) -> float:
        if self.exact_modulus_sq is not None:
            return math.sqrt(float(self.exact_modulus_sq))
        return abs(self.approx)

    @property
    def delta(self) -> float:
        return math.log(self.modulus)

    def lambda_json(self):
        if self.exact is not None:
            return format_rational(self.exact)
        return [self.approx.real, self.approx.imag]


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_roots(f: LaurentPoly):
    """Exact rational roots of a square-free canonical factor, with the
    deflated remainder (which then has no rational roots)."""
    g = f.primitive_part()
    roots = []
    while g.span >= 1:
        a0 = g.coeffs[0]
        ad = g.coeffs[-1]
        if abs(a0.numerator) > 10**12 or abs(ad.numerator) > 10**12:
            break
        found = None
        for p in _divisors(int(a0)):
            for q in _divisors(int(ad)):
                if math.gcd(p, q) != 1:
                    continue
                for r in (Fraction(p, q), Fraction(-p, q)):
                    if g.evaluate(r) == 0:
                        found = r
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
        g = g.exact_div(LaurentPoly(0, (-found, Fraction(1)))).primitive_part()
    return roots, g


def _horner(coeffs, z):
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _aberth(coeffs, max_iter: int = 500):
    """All complex roots of a square-free polynomial (ascending float
    coefficients).  Deterministic start: circle of Cauchy-bound radius with
    a fixed angular offset."""
    d = len(coeffs) - 1
    lead = coeffs[-1]
    scale = max(abs(c) for c in coeffs)
    target = RESIDUAL_RTOL * scale * 0.1
    if d == 1:
        return [-coeffs[0] / coeffs[1]]
    radius = 1.0 + max(abs(c / lead) for c in coeffs[:-1])
    roots = [radius * cmath.exp(2j * math.pi * (k + 0.25) / d) for k in range(d)]
    deriv = [coeffs[i] * i for i in range(1, d + 1)]
    for _ in range(max_iter):
        worst = 0.0
        for i in range(d):
            z = roots[i]
            pv = _horner(coeffs, z)
            worst = max(worst, abs(pv))
            if pv == 0:
                continue
            dv = _horner(deriv, z)
            ratio = pv / dv if dv != 0 else pv
            s = sum(1.0 / (z - roots[j]) for j in range(d) if j != i)
            denom = 1.0 - ratio * s
            step = ratio / denom if denom != 0 else ratio
            roots[i] = z - step
        if worst <= target:
            break
    return roots


def find_roots(a: LaurentPoly, degree_k: int) -> list[RootDatum]:
    """All roots of a characteristic polynomial, with exact multiplicities.

    Returns one datum per distinct root; the sum of multiplicities equals
    the degree span.  Constant polynomials give [].
    """
    a = canonicalize(poly(a))
    out: list[RootDatum] = []
    for factor, mult in squarefree_decomposition(a):
        rational, rest = _rational_roots(factor)
        for r in rational:
            out.append(
                RootDatum(
                    approx=complex(float(r), 0.0),
                    multiplicity=mult,
                    degree_k=degree_k,
                    squarefree_factor=factor,
                    radius=0.0,
                    exact=r,
                    exact_modulus_sq=r * r,
                    residual=0.0,
                )
            )
        if rest.span >= 1:
            coeffs = [float(c) for c in rest.coeffs]
            scale = max(abs(c) for c in coeffs)
            deriv = [coeffs[i] * i for i in range(1, len(coeffs))]
            exact_sq = None
            if rest.span == 2:
                disc = rest.coeffs[1] ** 2 - 4 * rest.coeffs[0] * rest.coeffs[2]
                if disc < 0:
                    # Conjugate pair: the modulus square is the root product.
                    exact_sq = rest.coeffs[0] / rest.coeffs[2]
            for z in _aberth(coeffs):
                res = abs(_horner(coeffs, z))
                dv = abs(_horner(deriv, z))
                radius = rest.span * res / dv if dv > 0 else math.inf
                out.append(
                    RootDatum(
                        approx=z,
                        multiplicity=mult,
                        degree_k=degree_k,
                        squarefree_factor=factor,
                        radius=radius,
                        exact=None,
                        exact_modulus_sq=exact_sq,
                        residual=res / scale if scale else res,
                    )
                )
    assert sum(r.multiplicity for r in out) == a.span
    return out


@dataclass(frozen=True)
class WallContribution:
    degree_k: int
    root: RootDatum

    @property
    def multiplicity(self) -> int:
        return self.root.multiplicity

    @property
    def jump_term(self) -> int:
        return (-1) ** (self.degree_k + 1) * self.root.multiplicity

    def to_json(self):
        return {
            "k": self.degree_k,
            "lambda": self.root.lambda_json(),
            "mult": self.root.multiplicity,
        }


@dataclass(frozen=True)
class Wall:
    """One exceptional weight: delta = ln|root| with its signed jump."""

    delta: float
    delta_radius: float
    exact_modulus: Fraction | None
    contributions: tuple
    jump: int

    @property
    def delta_exact(self) -> str | None:
        if self.exact_modulus is None:
            return None
        return f"ln({format_rational(self.exact_modulus)})"

    def to_json(self):
        return {
            "delta": self.delta,
            "delta_exact": self.delta_exact,
            "jump": self.jump,
            "contributions": [c.to_json() for c in self.contributions],
        }


@dataclass(frozen=True)
class ExceptionalSet:
    """All candidate walls for degrees 0..n-1, sorted by weight."""

    n: int
    walls: tuple

    def to_json(self):
        return {"walls": [w.to_json() for w in self.walls]}

    def total_multiplicity(self) -> int:
        return sum(c.multiplicity for w in self.walls for c in w.contributions)


def _sqrt_fraction(x: Fraction) -> Fraction | None:
    ns = math.isqrt(x.numerator)
    ds = math.isqrt(x.denominator)
    if ns * ns == x.numerator and ds * ds == x.denominator:
        return Fraction(ns, ds)
    return None


def _modulus_interval(r: RootDatum):
    if r.exact_modulus_sq is not None:
        m = math.sqrt(float(r.exact_modulus_sq))
        return (m, m)
    m = abs(r.approx)
    return (m - r.radius, m + r.radius)


def _possibly_equal(a: RootDatum, b: RootDatum) -> bool:
    if a.exact_modulus_sq is not None and b.exact_modulus_sq is not None:
        return a.exact_modulus_sq == b.exact_modulus_sq
    lo_a, hi_a = _modulus_interval(a)
    lo_b, hi_b = _modulus_interval(b)
    pad = 1e-12 * max(hi_a, hi_b, 1.0)
    return lo_a <= hi_b + pad and lo_b <= hi_a + pad


def _certified_equal(a: RootDatum, b: RootDatum) -> bool:
    if a.exact_modulus_sq is not None and b.exact_modulus_sq is not None:
        return a.exact_modulus_sq == b.exact_modulus_sq
    return a.squarefree_factor == b.squarefree_factor


def exceptional_weights(roots, n: int) -> ExceptionalSet:
    """Group roots of the degree 0..n-1 polynomials into walls.

    Raises AmbiguousWallError when two moduli overlap within certified
    error but cannot be proved equal (distinct square-free factors without
    exact moduli).
    """
    relevant = [r for r in roots if 0 <= r.degree_k <= n - 1]
    relevant.sort(key=lambda r: (_modulus_interval(r)[0], r.degree_k))
    clusters: list[list[RootDatum]] = []
    for r in relevant:
        if clusters and any(_possibly_equal(r, other) for other in clusters[-1]):
            clusters[-1].append(r)
        else:
            clusters.append([r])
    walls = []
    for members in clusters:
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                a, b = members[i], members[j]
                if not _certified_equal(a, b):
                    raise AmbiguousWallError(
                        f"moduli of {a.approx} (degree {a.degree_k}, factor {a.squarefree_factor})"
                        f" and {b.approx} (degree {b.degree_k}, factor {b.squarefree_factor})"
                        " overlap but cannot be certified equal"
                    )
        exact_sqs = [m.exact_modulus_sq for m in members if m.exact_modulus_sq is not None]
        if len(set(exact_sqs)) > 1:
            raise AmbiguousWallError(
                f"cluster mixes distinct exact modulus squares {sorted(set(exact_sqs))}"
            )
        exact_modulus = None
        if exact_sqs:
            exact_modulus = _sqrt_fraction(exact_sqs[0])
        if exact_modulus is not None:
            delta = math.log(float(exact_modulus))
            delta_radius = 0.0
        elif exact_sqs:
            delta = 0.5 * math.log(float(exact_sqs[0]))
            delta_radius = 0.0
        else:
            deltas = [math.log(abs(m.approx)) for m in members]
            delta = sum(deltas) / len(deltas)
            delta_radius = max(
                max(delta - math.log(max(lo, 1e-300)), math.log(hi) - delta)
                for lo, hi in (_modulus_interval(m) for m in members)
            )
        contribs = tuple(
            WallContribution(m.degree_k, m)
            for m in sorted(members, key=lambda m: (m.degree_k, m.approx.real, m.approx.imag))
        )
        jump = sum(c.jump_term for c in contribs)
        walls.append(Wall(delta, delta_radius, exact_modulus, contribs, jump))
    walls.sort(key=lambda w: w.delta)
    return ExceptionalSet(n=n, walls=tuple(walls))
