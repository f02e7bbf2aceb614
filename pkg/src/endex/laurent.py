"""Exact Laurent polynomials over the rationals (and Gaussian rationals).

A Laurent polynomial is stored as a lowest exponent plus a dense coefficient
run whose first and last entries are nonzero; the zero polynomial is the
empty run.  This representation is unique, so ``==`` is mathematical
equality.  Units of the ring are exactly the monomials c*t^k with c a
nonzero rational; ``canonicalize`` picks the associate with lowest exponent
zero, nonzero constant term and monic leading coefficient, which is the
representative used for invariant factors and characteristic polynomials
throughout the package.

>>> poly("t^2 - 1") == poly("t - 1") * poly("t + 1")
True
>>> divmod(poly("t - 2"), poly("t - 1"))
(poly('1'), poly('-1'))
>>> canonicalize(poly("2*t^2 - 2*t"))
poly('t - 1')
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

from .rationals import GaussianRational, format_rational, parse_rational


def _norm_coeff(c):
    """Coerce to Fraction or GaussianRational; real Gaussians demote."""
    if isinstance(c, GaussianRational):
        return Fraction(c.re) if c.im == 0 else c
    if isinstance(c, _RationalABC):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient {c!r}")


class LaurentPoly:
    """An element of the Laurent polynomial ring Q[t, 1/t] (or Q(i)[t, 1/t])."""

    __slots__ = ("low", "coeffs")

    def __init__(self, low: int = 0, coeffs=()):
        coeffs = [_norm_coeff(c) for c in coeffs]
        start, end = 0, len(coeffs)
        while start < end and coeffs[start] == 0:
            start += 1
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        if start == end:
            object.__setattr__(self, "low", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "low", low + start)
            object.__setattr__(self, "coeffs", tuple(coeffs[start:end]))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly(0, ())

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly(0, (Fraction(1),))

    @staticmethod
    def constant(c) -> "LaurentPoly":
        return LaurentPoly(0, (c,))

    @staticmethod
    def t_power(k: int, c=Fraction(1)) -> "LaurentPoly":
        return LaurentPoly(k, (c,))

    @staticmethod
    def from_roots(roots) -> "LaurentPoly":
        """Monic product of (t - r) over the given exact roots."""
        out = LaurentPoly.one()
        for r in roots:
            out = out * LaurentPoly(0, (-Fraction(r), Fraction(1)))
        return out

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        """True for c*t^k with c nonzero."""
        return len(self.coeffs) == 1

    def is_one(self) -> bool:
        return self.low == 0 and self.coeffs == (Fraction(1),)

    @property
    def high(self) -> int:
        """Largest exponent with nonzero coefficient (0 for the zero poly)."""
        return self.low + len(self.coeffs) - 1 if self.coeffs else 0

    @property
    def span(self) -> int:
        """Degree span: high - low.  The zero polynomial has span -1."""
        return len(self.coeffs) - 1

    @property
    def is_canonical(self) -> bool:
        return (
            bool(self.coeffs)
            and self.low == 0
            and self.coeffs[-1] == 1
            and self.coeffs[0] != 0
        )

    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    def coefficient(self, k: int):
        """Coefficient of t^k."""
        i = k - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def height(self) -> int:
        """Max of |numerator| and denominator over all coefficient parts."""
        h = 0
        for c in self.coeffs:
            parts = (c,) if isinstance(c, Fraction) else (c.re, c.im)
            for x in parts:
                h = max(h, abs(x.numerator), x.denominator)
        return h

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [Fraction(0)] * (high - low + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - low + i] = out[self.low - low + i] + c
        for i, c in enumerate(other.coeffs):
            out[other.low - low + i] = out[other.low - low + i] + c
        return LaurentPoly(low, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return LaurentPoly(self.low + other.low, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            c = self.coeffs[0]
            inv = c.inverse() if isinstance(c, GaussianRational) else 1 / c
            return LaurentPoly(self.low * n, (inv ** (-n),))
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "LaurentPoly":
        c = _norm_coeff(c)
        if c == 0:
            return LaurentPoly.zero()
        return LaurentPoly(self.low, tuple(a * c for a in self.coeffs))

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return LaurentPoly(self.low + k, self.coeffs)

    def __divmod__(self, other):
        """Division with remainder, after aligning t-powers.

        Writes self = other * quot + rem with rem = 0 or
        span(rem) < span(other).  Exact in the Laurent ring.
        """
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly.zero(), LaurentPoly.zero()
        # Strip t-powers: both operands become polynomials with nonzero
        # constant term; the stripped powers are units and are restored below.
        rem = list(self.coeffs)
        div = other.coeffs
        dn = len(div)
        lead = div[-1]
        lead_inv = 1 / lead if isinstance(lead, Fraction) else lead.inverse()
        quot = [Fraction(0)] * max(len(rem) - dn + 1, 0)
        for top in range(len(rem) - 1, dn - 2, -1):
            c = rem[top]
            if c == 0:
                continue
            q = c * lead_inv
            quot[top - dn + 1] = q
            rem[top] = Fraction(0)
            for j in range(dn - 1):
                rem[top - dn + 1 + j] = rem[top - dn + 1 + j] - q * div[j]
        return (
            LaurentPoly(self.low - other.low, quot),
            LaurentPoly(self.low, rem),
        )

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "LaurentPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{self!r} is not divisible by {other!r}")
        return q

    def divides(self, other) -> bool:
        if self.is_zero():
            return other.is_zero() if isinstance(other, LaurentPoly) else other == 0
        return (other % self).is_zero()

    # -- calculus and substitution --------------------------------------

    def derivative(self) -> "LaurentPoly":
        if self.is_zero():
            return self
        return LaurentPoly(
            self.low - 1,
            tuple(c * (self.low + i) for i, c in enumerate(self.coeffs)),
        )

    def __call__(self, z):
        return self.evaluate(z)

    def evaluate(self, z):
        """Evaluate at z.  Exact for Fraction/GaussianRational, float otherwise.

        z must be nonzero when the polynomial has negative exponents.
        """
        if self.is_zero():
            return Fraction(0) if not isinstance(z, (complex, float)) else 0j
        exact = isinstance(z, (_RationalABC, GaussianRational))
        if exact:
            z = Fraction(z) if isinstance(z, _RationalABC) else z
            acc = Fraction(0)
        else:
            z = complex(z)
            acc = 0j
        for c in reversed(self.coeffs):
            cv = c if exact else (complex(c) if isinstance(c, GaussianRational) else float(c))
            acc = acc * z + cv
        if self.low:
            if self.low < 0 and exact and (z.is_zero() if isinstance(z, GaussianRational) else z == 0):
                raise ZeroDivisionError("evaluation at 0 with negative exponents")
            acc = acc * z ** self.low
        return acc

    def reversed_variable(self) -> "LaurentPoly":
        """Substitute t -> 1/t."""
        if self.is_zero():
            return self
        return LaurentPoly(-self.high, tuple(reversed(self.coeffs)))

    # -- unit normalization ---------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self = c * (primitive integer poly).

        Only defined for rational coefficients.
        """
        if self.is_zero():
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = math.gcd(num, abs(c.numerator))
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive_part(self) -> "LaurentPoly":
        """self divided by its unit content: integer coprime coefficients,
        lowest exponent zero.  Falls back to monic for Gaussian coefficients.
        """
        if self.is_zero():
            return self
        if self.is_rational():
            c = self.content()
            return LaurentPoly(0, tuple(a / c for a in self.coeffs))
        lead = self.coeffs[-1]
        inv = lead.inverse() if isinstance(lead, GaussianRational) else 1 / lead
        return LaurentPoly(0, tuple(a * inv for a in self.coeffs))

    def to_json(self):
        if not self.is_rational():
            raise ValueError("only rational-coefficient polynomials serialize")
        return {"lowest": self.low, "coeffs": [format_rational(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj) -> "LaurentPoly":
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise ValueError(f"not a Laurent polynomial object: {obj!r}")
        return LaurentPoly(int(obj.get("lowest", 0)), [parse_rational(c) for c in obj["coeffs"]])

    # -- comparison and display -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.low == other.low and self.coeffs == other.coeffs
        if isinstance(other, (_RationalABC, GaussianRational)):
            return self == LaurentPoly.constant(other) if other != 0 else self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def pretty(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            e = self.low + i
            if isinstance(c, GaussianRational):
                cs = f"({format_rational(c.re)}{'+' if c.im >= 0 else '-'}{format_rational(abs(c.im))}i)"
                sign = " + " if parts else ""
            else:
                neg = c < 0
                mag = -c if neg else c
                sign = (" - " if neg else " + ") if parts else ("-" if neg else "")
                cs = format_rational(mag)
            if e == 0:
                term = cs
            else:
                var = "t" if e == 1 else f"t^{e}"
                term = var if cs == "1" else f"{cs}*{var}"
            parts.append(sign + term)
        return "".join(parts)

    def __repr__(self):
        return f"poly({self.pretty()!r})"

    __str__ = pretty


def _as_poly(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (_RationalABC, GaussianRational)):
        return LaurentPoly.constant(value)
    return None


_TERM_RE = re.compile(
    r"""(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>\d+(?:/\d+)?)\s*(?:\*\s*)?(?P<var1>t(?:\^(?P<exp1>-?\d+))?)?
          | (?P<var2>t(?:\^(?P<exp2>-?\d+))?)
        )\s*""",
    re.VERBOSE,
)


def poly(text) -> LaurentPoly:
    """Parse a human-readable Laurent polynomial, e.g. ``"t^-1 - 2*t + 1/2"``.

    Accepts LaurentPoly and exact scalars unchanged, so call sites can be
    permissive about argument types.
    """
    if isinstance(text, LaurentPoly):
        return text
    if isinstance(text, (_RationalABC, GaussianRational)):
        return LaurentPoly.constant(text)
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial string")
    out = LaurentPoly.zero()
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        var = m.group("var1") or m.group("var2")
        exp = 0
        if var:
            es = m.group("exp1") or m.group("exp2")
            exp = int(es) if es else 1
        out = out + LaurentPoly.t_power(exp, sign * coeff)
        pos = m.end()
    return out


def canonicalize(p: LaurentPoly) -> LaurentPoly:
    """The canonical associate: lowest exponent 0, monic, nonzero constant.

    Associates (polynomials differing by a unit c*t^k) map to equal outputs;
    the map is idempotent.  Rejects the zero polynomial.
    """
    p = poly(p)
    if p.is_zero():
        raise ValueError("the zero polynomial has no canonical associate")
    lead = p.coeffs[-1]
    inv = lead.inverse() if isinstance(lead, GaussianRational) else 1 / lead
    return LaurentPoly(0, tuple(c * inv for c in p.coeffs))


def laurent_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor in the Laurent ring, in canonical form.

    Euclidean remainder chain on the polynomial parts; the unit content of
    each remainder is stripped to keep intermediate coefficients small.
    """
    a, b = poly(p), poly(q)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a = a.primitive_part() if not a.is_zero() else a
    b = b.primitive_part() if not b.is_zero() else b
    while not b.is_zero():
        r = a % b
        a, b = b, (r.primitive_part() if not r.is_zero() else r)
    return canonicalize(a)


def squarefree_decomposition(p: LaurentPoly):
    """Split p into pairwise-coprime square-free factors with multiplicities.

    Returns [(factor, multiplicity), ...] with multiplicities strictly
    increasing and each factor canonical of positive span; the product of
    factor^multiplicity equals canonicalize(p).  Units give [].
    Uses the gcd(p, p') chain, so multiplicities are exact.
    """
    p = poly(p)
    if p.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    f = canonicalize(p)
    if f.span == 0:
        return []
    fp = f.derivative()
    g = laurent_gcd(f, fp)
    c = f.exact_div(g)
    d = fp.exact_div(g) - c.derivative()
    out = []
    mult = 1
    while c.span > 0:
        a = laurent_gcd(c, d)
        if a.span > 0:
            out.append((a, mult))
        c = c.exact_div(a)
        d = d.exact_div(a) - c.derivative()
        mult += 1
    return out
