"""The field Q(p^(1/s)) with power basis 1, theta, ..., theta^(s-1).

theta^s = p and x^s - p is Eisenstein at p, so the basis is a Q-basis.
With s = 1 this is just Q.
"""

import cmath
import math
from fractions import Fraction

from .._intmath import lcm
from . import linalg


class RadicalField:
    __slots__ = ("p", "s")

    def __init__(self, p, s=1):
        if s < 1:
            raise ValueError("s must be >= 1")
        self.p = p
        self.s = s

    def __eq__(self, other):
        if not isinstance(other, RadicalField):
            return NotImplemented
        if self.s == 1 and other.s == 1:
            return True
        return (self.p, self.s) == (other.p, other.s)

    def __hash__(self):
        return hash(("Q",) if self.s == 1 else (self.p, self.s))

    def __repr__(self):
        return "QQ" if self.s == 1 else f"Q({self.p}^(1/{self.s}))"

    def __call__(self, coords):
        """Element from a rational or a coordinate sequence."""
        if isinstance(coords, RadicalElement):
            return coords
        if isinstance(coords, (int, Fraction)):
            coords = [coords]
        c = [Fraction(x) for x in coords]
        if len(c) > self.s:
            raise ValueError(f"too many coordinates for {self!r}")
        return RadicalElement(self, tuple(c + [Fraction(0)] * (self.s - len(c))))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def theta_power(self, j):
        """theta**j for any integer j."""
        qt, r = divmod(j, self.s)
        coords = [Fraction(0)] * self.s
        coords[r] = Fraction(self.p) ** qt
        return RadicalElement(self, tuple(coords))

    def p_power(self, x):
        """p**x for a rational x with denominator dividing s."""
        x = Fraction(x)
        j = x * self.s
        if j.denominator != 1:
            raise ValueError(f"p^{x} is not in {self!r}")
        return self.theta_power(int(j))


class RadicalElement:
    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, RadicalElement):
            if other.field != self.field:
                raise ValueError("elements of different radical fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RadicalElement(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return RadicalElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RadicalElement(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        s, p = self.field.s, self.field.p
        if s == 1:
            return RadicalElement(self.field, (self.coords[0] * o.coords[0],))
        out = [Fraction(0)] * s
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(o.coords):
                if b:
                    k = i + j
                    if k >= s:
                        out[k - s] += a * b * p
                    else:
                        out[k] += a * b
        return RadicalElement(self.field, tuple(out))

    __rmul__ = __mul__

    def mult_matrix(self):
        """Matrix of y -> self*y in the power basis (columns are images of theta^j)."""
        s = self.field.s
        cols = [(self * self.field.theta_power(j)).coords for j in range(s)]
        return [[cols[j][i] for j in range(s)] for i in range(s)]

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero")
        if self.field.s == 1:
            return RadicalElement(self.field, (1 / self.coords[0],))
        e0 = [Fraction(1)] + [Fraction(0)] * (self.field.s - 1)
        x = linalg.solve(self.mult_matrix(), e0)
        return RadicalElement(self.field, tuple(x))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        if self.field.s == 1:
            return str(self.coords[0])
        terms = [f"{c}*{self.field.p}^({j}/{self.field.s})" if j else str(c)
                 for j, c in enumerate(self.coords) if c]
        return " + ".join(terms) or "0"

    def is_rational(self):
        return not any(self.coords[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coords[0]

    def embeddings(self):
        """Complex images under theta -> omega^k * p^(1/s)."""
        s, p = self.field.s, self.field.p
        root = p ** (1.0 / s)
        out = []
        for k in range(s):
            th = root * cmath.exp(2j * math.pi * k / s)
            out.append(sum(float(c) * th ** j for j, c in enumerate(self.coords)))
        return out

    def magnitude(self):
        """Largest absolute value over all complex embeddings."""
        return max(abs(z) for z in self.embeddings())

    def to_json(self):
        if self.field.s == 1:
            return str(self.coords[0])
        return {"coords": [str(c) for c in self.coords], "s": self.field.s, "p": self.field.p}


def field_norm(x):
    """N_{K/Q}(x) as the determinant of multiplication by x."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return linalg.det(x.mult_matrix())


def denominator(x):
    """Coordinate-wise denominator in the order Z[p^(1/s)].

    Exact for rational multiples of powers of p^(1/s), which is every value
    produced by the zeta pipeline.  For general elements Z[p^(1/s)] may be
    smaller than the maximal order, so this can overestimate.
    """
    if isinstance(x, (int, Fraction)):
        return Fraction(x).denominator
    return lcm(*(c.denominator for c in x.coords))
