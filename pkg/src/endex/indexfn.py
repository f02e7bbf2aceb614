"""The index of the weighted complex as a step function of the weight.

Values are computed twice and must agree: by the closed count (signed
number of roots of each characteristic polynomial outside the weight
circle, plus the signed Euler characteristic) and by accumulating wall
jumps leftward from the large-weight endpoint, where the index is
(-1)^n chi.  Weights on a wall have no index; querying one raises
OnWallError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import ManifoldContext
from .errors import OnWallError
from .homology import AlexanderData
from .laurent import canonicalize
from .spectral import ExceptionalSet, Wall

_WALL_PAD = 1e-12


@dataclass(frozen=True)
class IndexFunction:
    """Piecewise constant index: values[i] on the open interval between
    wall i-1 and wall i (values[0] leftmost, values[-1] rightmost)."""

    n: int
    chi: int
    walls: ExceptionalSet
    values: tuple

    @property
    def wall_deltas(self):
        return [w.delta for w in self.walls.walls]

    def interval_of(self, delta: float) -> int:
        """Index of the open interval containing delta; OnWallError if the
        weight sits within certified radius of a wall."""
        for w in self.walls.walls:
            if abs(delta - w.delta) <= w.delta_radius + _WALL_PAD:
                raise OnWallError(delta, w.delta)
        count = 0
        for w in self.walls.walls:
            if w.delta < delta:
                count += 1
        return count

    def sample_points(self):
        """One representative weight per interval: midpoints inside, one
        past the outermost wall outside."""
        ws = self.wall_deltas
        if not ws:
            return [0.0]
        pts = [ws[0] - 1.0]
        for a, b in zip(ws, ws[1:]):
            pts.append((a + b) / 2.0)
        pts.append(ws[-1] + 1.0)
        return pts

    def to_json(self):
        ws = self.wall_deltas
        intervals = []
        for i, v in enumerate(self.values):
            intervals.append(
                {
                    "lo": ws[i - 1] if i > 0 else None,
                    "hi": ws[i] if i < len(ws) else None,
                    "value": v,
                }
            )
        return {
            "n": self.n,
            "chi": self.chi,
            "walls": [w.to_json() for w in self.walls.walls],
            "values": list(self.values),
            "intervals": intervals,
        }


def _closed_values(n: int, chi: int, walls: ExceptionalSet):
    """Index on each interval by the closed root count.

    On the interval left of wall i the roots with |root| above the weight
    circle are exactly those sitting on walls i, i+1, ...; counting by wall
    membership keeps the comparison exact.
    """
    nw = len(walls.walls)
    end = (-1) ** n * chi
    out = []
    for i in range(nw + 1):
        acc = end
        for w in walls.walls[i:]:
            for c in w.contributions:
                acc += (-1) ** c.degree_k * c.multiplicity
        out.append(acc)
    return out


def _accumulated_values(n: int, chi: int, walls: ExceptionalSet):
    """Index on each interval by wall-jump accumulation from the right."""
    vals = [(-1) ** n * chi]
    for w in reversed(walls.walls):
        vals.append(vals[-1] - w.jump)
    return list(reversed(vals))


def index_function(alex: AlexanderData, ctx: ManifoldContext, walls: ExceptionalSet) -> IndexFunction:
    """Assemble the step function; the closed count and the jump
    accumulation are both evaluated and must agree on every interval."""
    if ctx.chi is None:
        raise ValueError("index function needs the Euler characteristic")
    n = ctx.dim
    closed = _closed_values(n, ctx.chi, walls)
    accumulated = _accumulated_values(n, ctx.chi, walls)
    if closed != accumulated:
        raise RuntimeError(
            f"index construction mismatch: closed count {closed} vs jump accumulation {accumulated}"
        )
    return IndexFunction(n=n, chi=ctx.chi, walls=walls, values=tuple(closed))


def index_at(f: IndexFunction, delta: float) -> int:
    """Value of the step function at an off-wall weight."""
    return f.values[f.interval_of(delta)]


def jump_at(f: IndexFunction, wall_index: int):
    """Signed jump across one wall with its per-degree breakdown.

    Returns (jump, breakdown) where breakdown lists (degree, multiplicity,
    signed term); the jump equals the value difference across the wall.
    """
    w: Wall = f.walls.walls[wall_index]
    breakdown = [(c.degree_k, c.multiplicity, c.jump_term) for c in w.contributions]
    jump = sum(term for _, _, term in breakdown)
    if jump != w.jump or jump != f.values[wall_index + 1] - f.values[wall_index]:
        raise RuntimeError("wall jump inconsistent with interval values")
    return jump, breakdown


def excision_index(
    alex: AlexanderData,
    delta1: float,
    delta2: float,
    walls: ExceptionalSet,
    f: IndexFunction | None = None,
) -> int:
    """Index of the doubly weighted complex on the cover, two ways.

    Path one takes the difference of the step function at the two weights
    (the Euler term cancels, so a chi of zero is used when no assembled
    function is supplied).  Path two counts root multiplicities in the open
    annulus between the two weight circles with degree signs.  The paths
    must agree; the common value is returned.
    """
    if f is None:
        f = index_function(alex, ManifoldContext(dim=walls.n, chi=0), walls)
    i1 = f.interval_of(delta1)
    i2 = f.interval_of(delta2)
    path_a = f.values[i2] - f.values[i1]

    lo, hi = min(delta1, delta2), max(delta1, delta2)
    count = 0
    for w in walls.walls:
        if lo < w.delta < hi:
            for c in w.contributions:
                count += (-1) ** c.degree_k * c.multiplicity
    path_b = count if delta2 < delta1 else -count

    if path_a != path_b:
        raise RuntimeError(
            f"excision paths disagree at ({delta1}, {delta2}): {path_a} vs {path_b}"
        )
    return path_a


def mirrored_sample_points(f: IndexFunction, count: int = 10):
    """Deterministic positive weights with both +d and -d off every wall."""
    ws = f.wall_deltas
    reach = max((abs(d) for d in ws), default=0.0) + 1.0
    pts = []
    j = 1
    while len(pts) < count and j < 1000:
        d = reach * j / (count + 3)
        j += 1
        try:
            f.interval_of(d)
            f.interval_of(-d)
        except OnWallError:
            continue
        pts.append(d)
    return pts


def duality_check(alex: AlexanderData, n: int | None = None, f: IndexFunction | None = None):
    """Root-reversal symmetry of the polynomials and parity of the index.

    Degree k pairs with n-1-k: the reversed partner polynomial must be the
    canonical associate of the degree-k one.  When a step function is
    supplied, ind(-d) == (-1)^n ind(d) is checked at mirrored samples.
    Failures are reported, not raised: inputs need not come from manifolds.
    """
    if n is None:
        n = alex.n
    pairs = []
    all_ok = True
    for k in range((n + 1) // 2):
        partner = n - 1 - k
        reversed_partner = canonicalize(alex.poly(partner).reversed_variable())
        ok = reversed_partner == alex.poly(k)
        if k != partner:
            back = canonicalize(alex.poly(k).reversed_variable()) == alex.poly(partner)
            ok = ok and back
        pairs.append({"k": k, "partner": partner, "ok": ok})
        all_ok = all_ok and ok
    report = {"pairs": pairs, "ok": all_ok}
    if f is not None:
        sign = (-1) ** n
        samples = []
        parity_ok = True
        for d in mirrored_sample_points(f):
            left = index_at(f, -d)
            right = index_at(f, d)
            ok = left == sign * right
            parity_ok = parity_ok and ok
            samples.append({"delta": d, "ind_neg": left, "ind_pos": right, "ok": ok})
        report["parity"] = {"n_parity": "even" if n % 2 == 0 else "odd", "ok": parity_ok, "samples": samples}
        report["ok"] = all_ok and parity_ok
    return report
