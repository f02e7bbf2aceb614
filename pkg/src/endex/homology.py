"""Homology of Laurent-ring chain complexes as finitely generated modules.

Each degree decomposes as a free part plus a torsion part described by a
divisibility chain of invariant factors.  A kernel basis in degree k is
read off the Smith normal form of the boundary (the columns of the right
transform past the rank), the incoming boundary is rewritten in that basis
through the exact inverse transform, and a second Smith normal form gives
the invariant factors.

The characteristic polynomial of the covering translation in degree k is
the canonicalized product of that degree's invariant factors; it exists
only when every free rank vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import ChainComplexOverLambda
from .errors import NotFiniteError
from .laurent import LaurentPoly, canonicalize
from .polymatrix import LaurentMatrix, smith_normal_form


@dataclass(frozen=True)
class FinitenessVerdict:
    finite: bool
    infinite_degrees: tuple

    def to_json(self):
        return {"finite": self.finite, "infinite_degrees": list(self.infinite_degrees)}


class HomologyModule:
    """Per-degree free ranks and invariant factor chains."""

    __slots__ = ("n", "free_ranks", "factors")

    def __init__(self, n: int, free_ranks, factors):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "free_ranks", tuple(free_ranks))
        object.__setattr__(self, "factors", tuple(tuple(f) for f in factors))
        for chain in self.factors:
            for i in range(len(chain) - 1):
                if not chain[i].divides(chain[i + 1]):
                    raise ValueError("invariant factors do not form a divisibility chain")
            for q in chain:
                if q.span == 0 or not q.is_canonical:
                    raise ValueError(f"invariant factor {q!r} is not canonical nonconstant")

    def __setattr__(self, name, value):
        raise AttributeError("HomologyModule is immutable")

    def free_rank(self, k: int) -> int:
        return self.free_ranks[k] if 0 <= k <= self.n else 0

    def invariant_factors(self, k: int):
        return list(self.factors[k]) if 0 <= k <= self.n else []

    def torsion_dim(self, k: int) -> int:
        """Dimension of the degree-k torsion part as a rational vector space."""
        return sum(q.span for q in self.invariant_factors(k))

    def to_json(self):
        return {
            "n": self.n,
            "degrees": [
                {
                    "degree": k,
                    "free_rank": self.free_ranks[k],
                    "invariant_factors": [q.to_json() for q in self.factors[k]],
                    "dim": self.torsion_dim(k) if self.free_ranks[k] == 0 else None,
                }
                for k in range(self.n + 1)
            ],
        }

    def __repr__(self):
        parts = []
        for k in range(self.n + 1):
            desc = []
            if self.free_ranks[k]:
                desc.append(f"free^{self.free_ranks[k]}")
            desc.extend(q.pretty() for q in self.factors[k])
            parts.append(f"H{k}=({' , '.join(desc) or '0'})")
        return f"HomologyModule({'; '.join(parts)})"


def homology(cc: ChainComplexOverLambda) -> HomologyModule:
    """Compute every homology module of the complex."""
    n = cc.n
    snfs = {k: smith_normal_form(cc.boundary(k)) for k in range(1, n + 2)}
    free_ranks = []
    factors = []
    for k in range(n + 1):
        rank_in = snfs[k + 1].rank
        if k == 0:
            nullity = cc.ranks[0]
            incoming_in_kernel = cc.boundary(1)
        else:
            s = snfs[k]
            nullity = cc.ranks[k] - s.rank
            rewritten = s.right_inv * cc.boundary(k + 1)
            # Rows up to the rank must vanish since the composite is zero.
            for i in range(s.rank):
                for j in range(rewritten.cols):
                    if not rewritten[i, j].is_zero():
                        raise RuntimeError("incoming boundary leaves the kernel")
            rows = [rewritten.row(i) for i in range(s.rank, cc.ranks[k])]
            incoming_in_kernel = (
                LaurentMatrix.from_rows(rows) if rows else LaurentMatrix.zero(0, rewritten.cols)
            )
        sub = smith_normal_form(incoming_in_kernel)
        if sub.rank != rank_in:
            raise RuntimeError("rank of the incoming boundary changed under base change")
        free_ranks.append(nullity - rank_in)
        factors.append(sub.invariant_factors())
    # Alternating free ranks must reproduce the Euler characteristic.
    chi = cc.euler_characteristic()
    if sum((-1) ** k * f for k, f in enumerate(free_ranks)) != chi:
        raise RuntimeError("free ranks are inconsistent with the Euler characteristic")
    return HomologyModule(n, free_ranks, factors)


def finiteness_check(h: HomologyModule) -> FinitenessVerdict:
    """Finite iff no degree carries a free summand."""
    bad = tuple(k for k in range(h.n + 1) if h.free_ranks[k] > 0)
    return FinitenessVerdict(finite=not bad, infinite_degrees=bad)


class AlexanderData:
    """Characteristic polynomials of the covering translation, one per
    degree 0..n, plus their product over degrees 0..n-1."""

    __slots__ = ("n", "polys", "product")

    def __init__(self, n: int, polys):
        polys = [canonicalize(p) for p in polys]
        if len(polys) == n:
            polys.append(LaurentPoly.one())
        if len(polys) != n + 1:
            raise ValueError(f"need polynomials for degrees 0..{n} (or 0..{n - 1}), got {len(polys)}")
        for p in polys:
            if p.coefficient(0) == 0:
                raise ValueError(f"characteristic polynomial {p!r} vanishes at 0")
        prod = LaurentPoly.one()
        for p in polys[:n]:
            prod = prod * p
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "polys", tuple(polys))
        object.__setattr__(self, "product", canonicalize(prod) if not prod.is_zero() else prod)

    def __setattr__(self, name, value):
        raise AttributeError("AlexanderData is immutable")

    def poly(self, k: int) -> LaurentPoly:
        return self.polys[k] if 0 <= k <= self.n else LaurentPoly.one()

    def dim(self, k: int) -> int:
        return self.poly(k).span

    def to_json(self):
        return {"n": self.n, "polys": [p.to_json() for p in self.polys]}

    def __repr__(self):
        inner = ", ".join(p.pretty() for p in self.polys)
        return f"AlexanderData(n={self.n}: {inner})"


def alexander_polynomials(h: HomologyModule, n: int | None = None) -> AlexanderData:
    """Per-degree products of invariant factors, canonicalized monic.

    Raises NotFiniteError when any free rank is positive; the polynomials
    only exist for torsion homology.
    """
    verdict = finiteness_check(h)
    if not verdict.finite:
        raise NotFiniteError(verdict.infinite_degrees)
    if n is None:
        n = h.n
    polys = []
    for k in range(n + 1):
        p = LaurentPoly.one()
        for q in h.invariant_factors(k):
            p = p * q
        polys.append(canonicalize(p))
    return AlexanderData(n, polys)
