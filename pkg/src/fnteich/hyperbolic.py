"""Upper-half-plane geometry, right-angled hexagons and collar quantities.

Conventions: points live in the upper half-plane model {y > 0} with the
metric |dz|/y.  A hyperbolic pair of pants with geodesic boundary lengths
(l1, l2, l3) splits along its three seams into two congruent right-angled
hexagons whose alternating side lengths are a_i = l_i / 2; the remaining
three sides b_i are the seams (b_i opposite a_i), and h_i is the shortest
arc joining side a_i to side b_i.

All functions here are pure; every value object is immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, UsageError
from .reports import VerificationReport

COLLAR_SLACK_TOL = 1e-12


def arcosh(x: float) -> float:
    """Inverse hyperbolic cosine as log(x + sqrt((x-1)(x+1))).

    The factored radicand keeps full accuracy for x near 1.
    """
    if x < 1.0:
        if x > 1.0 - 1e-12:
            return 0.0
        raise DomainError(f"arcosh argument must be >= 1, got {x}")
    if math.isinf(x):
        return math.inf
    return math.log(x + math.sqrt((x - 1.0) * (x + 1.0)))


@dataclass(frozen=True)
class HalfPlanePoint:
    """A point x + iy of the upper half-plane (y strictly positive)."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"point coordinates must be finite, got "
                              f"({self.x}, {self.y})")
        if self.y <= 0.0:
            raise DomainError(f"point must satisfy y > 0, got y = {self.y}")

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    def scaled(self, factor: float) -> "HalfPlanePoint":
        return HalfPlanePoint(self.x * factor, self.y * factor)

    @property
    def arg(self) -> float:
        """Argument in (0, pi)."""
        return math.atan2(self.y, self.x)


def hp(x: float, y: float) -> HalfPlanePoint:
    return HalfPlanePoint(float(x), float(y))


def hyp_distance(z: HalfPlanePoint, w: HalfPlanePoint) -> float:
    """Hyperbolic distance, via cosh d = 1 + |z-w|^2 / (2 Im z Im w).

    This route has no cancellation near z = w; see
    hyp_distance_crossratio for the independent geodesic-endpoint route.
    """
    dx = z.x - w.x
    dy = z.y - w.y
    u = (dx * dx + dy * dy) / (2.0 * z.y * w.y)
    # arcosh(1 + u) written to stay accurate for small u
    return math.log1p(u + math.sqrt(u * (u + 2.0)))


def geodesic_endpoints(z: HalfPlanePoint, w: HalfPlanePoint):
    """Ideal endpoints (zstar, wstar) of the geodesic through z then w,
    ordered so that zstar, z, w, wstar follow each other along it.
    wstar is math.inf for a vertical geodesic traversed upward, and
    zstar is -math.inf never (vertical downward gives zstar = inf swapped).

    A horizontal separation so small that the semicircle's center
    overflows the double range is treated as the vertical limit.
    """
    if z.x == w.x:
        if z.y == w.y:
            raise UsageError("geodesic through a single point is undefined")
        if w.y > z.y:
            return z.x, math.inf
        return math.inf, z.x
    c = (w.x * w.x + w.y * w.y - z.x * z.x - z.y * z.y) / (2.0 * (w.x - z.x))
    r = math.hypot(z.x - c, z.y)
    if not (math.isfinite(c) and math.isfinite(r)):
        if w.y > z.y:
            return z.x, math.inf
        return math.inf, z.x
    # the endpoints are the roots of x^2 - 2cx + (2c z.x - |z|^2); taking
    # the far root as c +- r and the near one from the root product keeps
    # the near endpoint accurate when the center is far away
    product = 2.0 * c * z.x - (z.x * z.x + z.y * z.y)
    if c >= 0.0:
        hi = c + r
        lo = product / hi
    else:
        lo = c - r
        hi = product / lo
    if z.x < w.x:
        return lo, hi
    return hi, lo


def hyp_distance_crossratio(z: HalfPlanePoint, w: HalfPlanePoint) -> float:
    """Hyperbolic distance via the ideal-endpoint cross ratio
    log[(z - w*)(w - z*) / ((w - w*)(z - z*))].

    Retained as an independent cross-check of hyp_distance.
    """
    if z.x == w.x and z.y == w.y:
        return 0.0
    zstar, wstar = geodesic_endpoints(z, w)
    if math.isinf(wstar):
        return math.log(w.y / z.y)
    if math.isinf(zstar):
        return math.log(z.y / w.y)
    zc, wc = z.z, w.z
    # grouped as two well-scaled quotients: when one endpoint is far out,
    # the large magnitudes cancel inside the first factor instead of
    # overflowing a product of differences
    q1 = (zc - wstar) / (wc - wstar)
    q2 = (wc - zstar) / (zc - zstar)
    val = abs(q1) * abs(q2)
    if 0.0 < val < math.inf:
        # the cross ratio is real and >= 1 for this ordering
        return math.log(val)
    return (math.log(abs(zc - wstar)) + math.log(abs(wc - zstar))
            - math.log(abs(wc - wstar)) - math.log(abs(zc - zstar)))


def angle_of_distance(d: float) -> float:
    """Euclidean angle theta(d) = 2 arctan((e^d - 1)/(e^d + 1)) subtended
    at the origin by the locus at hyperbolic distance d from the
    imaginary axis.  Strictly increasing from 0 onto (0, pi/2)."""
    if not d > 0.0:
        raise DomainError(f"angle_of_distance requires d > 0, got {d}")
    return 2.0 * math.atan(math.tanh(d / 2.0))


def collar_margin(l: float) -> float:
    """Collar margin B(l) = (1/2) log(1 + 2/(e^l - 1)).

    Tubes of this width around boundary geodesics of a pair of pants are
    disjoint annuli (see verify_pants_collar).  Strictly decreasing,
    blowing up as l -> 0 and vanishing as l -> infinity.
    """
    if not l > 0.0:
        raise DomainError(f"collar_margin requires l > 0, got {l} "
                          "(cusps are handled by callers)")
    if l > 700.0:   # e^l overflows; B(l) ~ e^-l there
        return math.exp(-l)
    return 0.5 * math.log1p(2.0 / math.expm1(l))


def collar_halfwidth(l: float) -> float:
    """Half-width omega of the standard collar around a closed geodesic of
    length l, defined by sinh(omega) sinh(l/2) = 1."""
    if not l > 0.0:
        raise DomainError(f"collar_halfwidth requires l > 0, got {l}")
    return math.asinh(1.0 / math.sinh(l / 2.0))


@dataclass(frozen=True)
class CollarData:
    """Collar quantities of a closed geodesic: margin B(l), halfwidth
    omega, and the angular halfwidth of the lifted collar in the
    half-plane."""

    margin: float
    halfwidth: float
    angle: float

    def __post_init__(self):
        if not (self.margin > 0.0 and self.halfwidth > 0.0):
            raise DomainError("collar margin and halfwidth must be positive")
        if not 0.0 < self.angle < math.pi / 2.0:
            raise DomainError("collar angle must lie in (0, pi/2)")


def collar_data(l: float) -> CollarData:
    w = collar_halfwidth(l)
    return CollarData(margin=collar_margin(l), halfwidth=w,
                      angle=angle_of_distance(w))


@dataclass(frozen=True)
class HexagonAlternatingSides:
    """Lengths of three pairwise non-consecutive sides of a right-angled
    hexagon; these determine the hexagon up to isometry."""

    a1: float
    a2: float
    a3: float

    def __post_init__(self):
        for v in (self.a1, self.a2, self.a3):
            if not (math.isfinite(v) and v > 0.0):
                raise DomainError(
                    f"hexagon side lengths must be finite and > 0, got "
                    f"({self.a1}, {self.a2}, {self.a3})")

    def as_tuple(self):
        return (self.a1, self.a2, self.a3)


def _seam_excesses(a1: float, a2: float, a3: float):
    """cosh(b_i) - 1 for the three seams.  The defining law
    cosh a1 = -cosh a2 cosh a3 + sinh a2 sinh a3 cosh b1 is solved as
    cosh b1 - 1 = (cosh a1 + cosh(a2 - a3)) / (sinh a2 sinh a3),
    a sum of positive terms, so nearly-degenerate seams keep full
    relative accuracy.  Tolerates zero side lengths (cusp limit,
    cosh 0 = 1): a seam meeting a degenerate side comes out infinite."""
    sides = (a1, a2, a3)
    sh = tuple(math.sinh(v) for v in sides)
    out = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        denom = sh[j] * sh[k]
        if denom == 0.0:
            out.append(math.inf)
        else:
            out.append((math.cosh(sides[i])
                        + math.cosh(sides[j] - sides[k])) / denom)
    return tuple(out)


def _length_from_excess(u: float) -> float:
    """arcosh(1 + u) for u >= 0, accurate down to tiny u."""
    if math.isinf(u):
        return math.inf
    return math.log1p(u + math.sqrt(u * (u + 2.0)))


def hexagon_sides(a: HexagonAlternatingSides):
    """The other three alternating sides (b1, b2, b3) of the hexagon,
    b_i opposite a_i.  The same formula applied to (b1, b2, b3) recovers
    (a1, a2, a3): the two triples cut out the same hexagon."""
    return tuple(_length_from_excess(u)
                 for u in _seam_excesses(*a.as_tuple()))


def _altitude_cosh_sq_numerator(ch):
    return (-1.0 + ch[0] * ch[0] + ch[1] * ch[1] + ch[2] * ch[2]
            + 2.0 * ch[0] * ch[1] * ch[2])


def hexagon_altitude(a: HexagonAlternatingSides, i: int) -> float:
    """Length h_i of the shortest arc joining side a_i to the opposite
    side b_i, from cosh^2 h_i = (-1 + sum cosh^2 a_j
    + 2 prod cosh a_j) / sinh^2 a_i."""
    if i not in (1, 2, 3):
        raise UsageError(f"altitude index must be 1, 2 or 3, got {i}")
    sides = a.as_tuple()
    ch = tuple(math.cosh(v) for v in sides)
    num = _altitude_cosh_sq_numerator(ch)
    s = math.sinh(sides[i - 1])
    return arcosh(math.sqrt(num) / s)


@dataclass(frozen=True)
class PantsBoundaryLengths:
    """Geodesic boundary lengths of a hyperbolic pair of pants;
    a zero entry encodes a cusp."""

    l1: float
    l2: float
    l3: float

    def __post_init__(self):
        for v in (self.l1, self.l2, self.l3):
            if not (math.isfinite(v) and v >= 0.0):
                raise DomainError(
                    f"boundary lengths must be finite and >= 0, got "
                    f"({self.l1}, {self.l2}, {self.l3})")

    def as_tuple(self):
        return (self.l1, self.l2, self.l3)


def verify_pants_collar(l: PantsBoundaryLengths) -> VerificationReport:
    """Check the nine collar-disjointness inequalities of a pair of pants.

    For each boundary i with l_i > 0, the two seams not opposite it
    satisfy b_j / 2 >= B(l_i), and the altitude satisfies h_i >= B(l_i),
    where the hexagon has half-length sides a_i = l_i / 2.  Boundaries
    with l_i = 0 (cusps) have infinite collars; their three inequalities
    are recorded as skipped.
    """
    lengths = l.as_tuple()
    halves = tuple(v / 2.0 for v in lengths)
    ch = tuple(math.cosh(v) for v in halves)
    sh = tuple(math.sinh(v) for v in halves)
    b = tuple(_length_from_excess(u) for u in _seam_excesses(*halves))
    num = _altitude_cosh_sq_numerator(ch)
    h = tuple(arcosh(math.sqrt(num) / sh[i]) if sh[i] > 0.0 else math.inf
              for i in range(3))

    report = VerificationReport("pants collar inequalities")
    for i in range(3):
        if lengths[i] == 0.0:
            for j in range(3):
                if j != i:
                    report.add(f"seam_b{j + 1}/2>=B(l{i + 1})", lengths,
                               math.nan, math.nan, skipped=True,
                               note="cusp boundary: collar is infinite")
            report.add(f"altitude_h{i + 1}>=B(l{i + 1})", lengths,
                       math.nan, math.nan, skipped=True,
                       note="cusp boundary: collar is infinite")
            continue
        margin = collar_margin(lengths[i])
        for j in range(3):
            if j != i:
                report.add(f"seam_b{j + 1}/2>=B(l{i + 1})", lengths,
                           b[j] / 2.0, margin, tol=COLLAR_SLACK_TOL)
        report.add(f"altitude_h{i + 1}>=B(l{i + 1})", lengths,
                   h[i], margin, tol=COLLAR_SLACK_TOL)
    return report


def halfseam_intermediate_bound(l: float) -> tuple[float, float]:
    """The chained estimate behind verify_pants_collar: half a seam
    adjacent to a boundary of length l is at least
    (1/2) arcosh(coth(l/2)), which in turn is at least B(l).
    Returns (intermediate, margin) so callers can confirm the middle
    step separately from the end-to-end inequality."""
    if not l > 0.0:
        raise DomainError(f"requires l > 0, got {l}")
    intermediate = 0.5 * arcosh(1.0 / math.tanh(l / 2.0))
    return intermediate, collar_margin(l)
