"""Newton polygons over GF(q)((1/t)) for the valuation v = -deg_t.

Convention: a hull segment of slope s and width w accounts for exactly w
roots (with multiplicity, in an algebraic closure) of valuation -s.  The
absolute value of such a root is q**s.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import StripMismatchError, ZeroPolynomialError
from .funcfield import bipoly_shift
from .gfq import FFPoly


@dataclass(frozen=True)
class NewtonPolygon:
    points: tuple          # (i, -deg c_i) for every nonzero c_i
    hull: tuple            # lower convex hull vertices, left to right
    segments: tuple        # (slope: Fraction, width: int)

    def to_json(self):
        return {
            "points": [list(pt) for pt in self.points],
            "hull": [list(pt) for pt in self.hull],
            "segments": [{"slope": str(s), "width": w} for s, w in self.segments],
        }


@dataclass(frozen=True)
class ValuationSpectrum:
    entries: tuple         # (valuation: Fraction, multiplicity: int)
    zero_roots: int

    def multiset(self):
        out = []
        for v, w in self.entries:
            out.extend([v] * w)
        return out


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(chi):
    """Lower convex hull of {(i, -deg_t c_i)} for a nonzero BiPoly."""
    if not chi:
        raise ZeroPolynomialError("Newton polygon of zero")
    points = tuple((i, -c.degree) for i, c in enumerate(chi.coeffs) if c)
    hull = []
    for pt in points:
        # drop vertices that are on or above the chord (strictly convex hull)
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    segments = tuple(
        (Fraction(b[1] - a[1], b[0] - a[0]), b[0] - a[0])
        for a, b in zip(hull, hull[1:])
    )
    return NewtonPolygon(points, tuple(hull), segments)


def root_valuations(polygon):
    entries = tuple((-s, w) for s, w in polygon.segments)
    return ValuationSpectrum(entries, polygon.points[0][0])


def residual_polynomial(chi):
    """Reduction of the slope-0 segment: its roots are residues of unit roots.

    Returns the constant 1 when there is no slope-0 segment.
    """
    poly = newton_polygon(chi)
    hull = poly.hull
    for a, b in zip(hull, hull[1:]):
        if a[1] == b[1]:
            level = -a[1]
            return FFPoly(chi.field, [chi[i][level] for i in range(a[0], b[0] + 1)])
    return FFPoly.one(chi.field)


def unit_residue_valuations(chi, zeta, known_eigen_multiplicity=0):
    """Valuations v(eta - zeta) > 0 over roots eta != zeta with residue zeta.

    ``chi`` is shifted to chi(X + zeta) over the field of ``zeta``; the
    declared number of roots equal to zeta is stripped as a power of X and
    must match exactly.  The result is a sorted list of Fractions, one
    entry per root.
    """
    if not zeta:
        raise ValueError("zeta must be nonzero")
    shifted = bipoly_shift(chi, zeta)
    m = shifted.x_multiplicity()
    if m != known_eigen_multiplicity:
        raise StripMismatchError(
            f"chi(X+zeta) vanishes to order {m} at X=0, declared {known_eigen_multiplicity}")
    stripped = shifted.strip_x(m)
    spec = root_valuations(newton_polygon(stripped))
    return sorted(v for v in spec.multiset() if v > 0)
