from dataclasses import dataclass
from fractions import Fraction

from .radical import RadicalElement, RadicalField

QQ = RadicalField(2, 1)


@dataclass(frozen=True)
class SeriesWindow:
    """Coefficients a_0..a_T of a power series, exact in a radical field."""

    field: RadicalField
    coeffs: tuple

    @classmethod
    def rational(cls, values):
        return cls(QQ, tuple(QQ(v) for v in values))

    @classmethod
    def of(cls, field, values):
        return cls(field, tuple(field(v) for v in values))

    @property
    def T(self):
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    @property
    def is_rational(self):
        return all(c.is_rational() for c in self.coeffs)

    def rational_values(self):
        return [c.to_rational() for c in self.coeffs]

    def to_json(self):
        return [c.to_json() for c in self.coeffs]
