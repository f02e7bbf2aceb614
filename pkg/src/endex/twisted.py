"""Verification oracles: twisted fibers, coefficient splittings, weighted
shift kernels.

Everything here recomputes quantities the main pipeline derives
symbolically, by an independent route: evaluating the complex at points of
the punctured plane, splitting cohomology through the homology module, and
brute-forcing kernels of truncated weighted shift operators.  Agreement of
these routes is what the test suite leans on.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

import numpy as np

from .complexes import ChainComplexOverLambda
from .errors import NotFiniteError, OnWallError, WindowTooSmallError
from .homology import HomologyModule, alexander_polynomials, finiteness_check, homology
from .linalg import NUMERIC_RANK_RTOL
from .rationals import GaussianRational
from .spectral import find_roots

_CIRCLE_PAD = 1e-9
# Kernel vectors must hold all but this fraction of their mass away from
# the outer tenth of the window to count as decaying.
_BOUNDARY_MASS = 1e-3


@dataclass(frozen=True)
class TwistedFiber:
    """Cohomology dimensions of the complex evaluated at one point."""

    z: object
    dims: tuple
    exact: bool

    def to_json(self):
        if isinstance(self.z, GaussianRational):
            zj = [str(self.z.re), str(self.z.im)]
        elif isinstance(self.z, Fraction):
            zj = str(self.z)
        else:
            zc = complex(self.z)
            zj = [zc.real, zc.imag]
        return {"z": zj, "dims": list(self.dims), "exact": self.exact}


def twisted_dims(cc: ChainComplexOverLambda, z, rtol: float = NUMERIC_RANK_RTOL) -> TwistedFiber:
    """Dimensions of the evaluated cochain complex in each degree.

    Exact over the Gaussian rationals; floating (SVD ranks) otherwise.
    The alternating sum always equals the Euler characteristic of the
    complex, which is asserted on the exact path.
    """
    exact = isinstance(z, (GaussianRational, _RationalABC))
    ranks = [cc.boundary(k).rank_at(z, rtol) for k in range(1, cc.n + 2)]
    dims = []
    for k in range(cc.n + 1):
        into = ranks[k - 1] if k >= 1 else 0
        out = ranks[k] if k <= cc.n else 0
        dims.append(cc.ranks[k] - into - out)
    if exact:
        alt = sum((-1) ** k * d for k, d in enumerate(dims))
        if alt != cc.euler_characteristic():
            raise RuntimeError("twisted dimensions violate the Euler characteristic")
    return TwistedFiber(z=z, dims=tuple(dims), exact=exact)


def uct_dims(h: HomologyModule, z) -> list:
    """Cohomology dimensions predicted by the coefficient splitting.

    Degree k receives one dimension for every invariant factor of the
    degree-k module vanishing at z, plus one for every invariant factor of
    the degree-(k-1) module vanishing at z.  Returns degrees 0..n+1.
    Requires finite homology and an exact z.
    """
    verdict = finiteness_check(h)
    if not verdict.finite:
        raise NotFiniteError(verdict.infinite_degrees)
    if not isinstance(z, (GaussianRational, _RationalABC)):
        raise TypeError("coefficient splitting is an exact oracle; z must be exact")
    if isinstance(z, _RationalABC):
        z = Fraction(z)
        if z == 0:
            raise ZeroDivisionError("z must be nonzero")
    elif z.is_zero():
        raise ZeroDivisionError("z must be nonzero")
    vanish = [
        sum(1 for q in h.invariant_factors(k) if q.evaluate(z) == 0) for k in range(h.n + 1)
    ]
    dims = []
    for k in range(h.n + 2):
        hom = vanish[k] if k <= h.n else 0
        ext = vanish[k - 1] if k >= 1 else 0
        dims.append(hom + ext)
    return dims


def fredholm_check(cc: ChainComplexOverLambda, delta: float, samples: int = 16,
                   rtol: float = NUMERIC_RANK_RTOL):
    """Is the weighted complex Fredholm at this weight?

    Two verdicts: the symbolic one (no root of any invariant factor has
    modulus e^delta; authoritative) and a numeric one (the evaluated
    complex is exact at sample points of the circle of radius e^delta).
    """
    h = homology(cc)
    verdict = finiteness_check(h)
    if not verdict.finite:
        symbolic = False
        reason = f"homology has free summands in degrees {list(verdict.infinite_degrees)}"
    else:
        alex = alexander_polynomials(h)
        symbolic = True
        reason = "no exceptional weight at delta"
        for k in range(h.n + 1):
            for r in find_roots(alex.poly(k), k):
                if abs(r.delta - delta) <= r.radius / max(r.modulus, 1e-300) + 1e-12:
                    symbolic = False
                    reason = f"root of the degree-{k} polynomial has modulus e^delta"
                    break
            if not symbolic:
                break
    radius = math.exp(delta)
    numeric = True
    for j in range(samples):
        z = radius * cmath.exp(2j * math.pi * j / samples)
        fiber = twisted_dims(cc, z, rtol)
        if any(d != 0 for d in fiber.dims):
            numeric = False
            break
    return {
        "delta": delta,
        "fredholm": symbolic,
        "symbolic_fredholm": symbolic,
        "numeric_fredholm": numeric,
        "agree": symbolic == numeric,
        "samples": samples,
        "reason": reason,
    }


@dataclass(frozen=True)
class WeightedWindow:
    """Truncation window for the weighted shift-kernel oracle."""

    lam: complex
    m: int
    delta1: float
    delta2: float
    n_window: int
    tol: float = 1e-6

    def __post_init__(self):
        if self.n_window < 1:
            raise ValueError("window half-width must be at least 1")
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")
        if self.m < 1:
            raise ValueError("multiplicity must be at least 1")
        if complex(self.lam) == 0:
            raise ValueError("lambda must be nonzero")


def l2_hom_dim_analytic(lam, m: int, delta1: float, delta2: float) -> int:
    """Dimension of the weighted homomorphism space for one Jordan block.

    The value is m when delta2 < delta1 and the modulus of lambda lies
    strictly between e^delta2 and e^delta1, and zero otherwise (for
    delta2 >= delta1 the annulus is empty, so the answer is zero).
    A modulus on either weight circle is rejected.
    """
    lam = complex(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    ln_mod = math.log(abs(lam))
    for d in (delta1, delta2):
        if abs(ln_mod - d) <= _CIRCLE_PAD:
            raise OnWallError(ln_mod, d)
    if delta2 < delta1 and delta2 < ln_mod < delta1:
        return int(m)
    return 0


def l2_kernel_truncated(w: WeightedWindow) -> int:
    """Brute-force kernel count of the truncated weighted shift operator.

    Builds the band matrix of (shift - lambda)^m on window indices
    -N..N (the shift moves a sequence one step to the right), conjugates by
    the two-sided exponential weight, and counts the kernel directions
    whose mass decays at the window boundary.  Converges to the analytic
    dimension as N grows.
    """
    lam = complex(w.lam)
    n, m = w.n_window, w.m
    ln_mod = math.log(abs(lam))
    gap = min(abs(ln_mod - w.delta1), abs(ln_mod - w.delta2))
    if gap <= _CIRCLE_PAD:
        raise OnWallError(ln_mod, w.delta1 if abs(ln_mod - w.delta1) < abs(ln_mod - w.delta2) else w.delta2)
    if math.exp(-n * gap) >= w.tol:
        needed = math.ceil(math.log(1.0 / w.tol) / gap) + 1
        raise WindowTooSmallError(
            needed,
            f"window {n} too small for gap {gap:.3g}; need about {needed}",
        )
    size = 2 * n + 1
    rows = size - m
    # Stencil of (shift - lambda)^m: coefficient of x_{k-i} is C(m,i)(-lam)^(m-i).
    stencil = [math.comb(m, i) * (-lam) ** (m - i) for i in range(m + 1)]
    a = np.zeros((rows, size), dtype=complex)
    for r in range(rows):
        k = -n + m + r
        for i in range(m + 1):
            a[r, (k - i) + n] = stencil[i]
    # Column scaling by the inverse weight maps weighted-norm kernel
    # vectors to plain-norm ones; row balancing then keeps the singular
    # spectrum readable without touching the kernel.
    idx = np.arange(-n, n + 1, dtype=float)
    delta_of = np.where(idx < 0, w.delta1, np.where(idx > 0, w.delta2, 0.0))
    a *= np.exp(-delta_of * idx)[None, :]
    a /= np.max(np.abs(a), axis=1)[:, None]
    u, s, vh = np.linalg.svd(a, full_matrices=True)
    kernel_rows = [vh[i] for i in range(len(s), size)]
    kernel_rows += [vh[i] for i in range(len(s)) if s[i] < w.tol * s[0]]
    outer = int(math.floor(0.9 * n))
    boundary = np.abs(idx) > outer
    count = 0
    for v in kernel_rows:
        mass = np.abs(v) ** 2
        frac = mass[boundary].sum() / mass.sum()
        if frac < _BOUNDARY_MASS:
            count += 1
    return count
