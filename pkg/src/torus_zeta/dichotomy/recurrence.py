"""Polynomial-exponential sequences: minimal recurrences and rank bookkeeping."""

from dataclasses import dataclass
from fractions import Fraction

from ..errors import PreconditionViolated
from . import linalg, qpoly
from .window import SeriesWindow


@dataclass(frozen=True)
class RecurrenceFit:
    r: int
    s_roots: int
    charpoly: tuple     # monic, little-endian Fractions, degree r
    proper: bool

    @property
    def genuine(self):
        """True when 0 is not a characteristic root."""
        return self.r == 0 or self.charpoly[0] != 0

    def extend(self, initial, n):
        """Regenerate n terms from the first r values."""
        u = list(initial[: self.r])
        c = self.charpoly
        while len(u) < n:
            u.append(-sum(c[i] * u[len(u) - self.r + i] for i in range(self.r)))
        return u[:n]


def _values(w):
    if isinstance(w, SeriesWindow):
        return w.rational_values()
    return [Fraction(x) for x in w]


def fit_polyexp(w):
    """Minimal constant-coefficient linear recurrence reproducing the window."""
    u = _values(w)
    n = len(u)
    if n == 0:
        raise ValueError("empty window")
    if not any(u):
        return RecurrenceFit(0, 0, (Fraction(1),), True)
    for r in range(1, n + 1):
        # u_{k+r} = sum_i c_i u_{k+i} for k = 0..n-r-1
        rows = [u[k: k + r] for k in range(n - r)]
        rhs = [u[k + r] for k in range(n - r)]
        c = linalg.solve(rows, rhs) if rows else [Fraction(0)] * r
        if c is not None:
            charpoly = tuple([-x for x in c] + [Fraction(1)])
            return RecurrenceFit(r, qpoly.squarefree_degree(charpoly), charpoly, 2 * r <= n)
    raise AssertionError("unreachable: r = length always fits")


def multiply_window_by_poly(w, q, start_index=0):
    """b_n = Q(start_index + n) * a_n."""
    q = qpoly.qp(q)
    return SeriesWindow(w.field, tuple(
        a * qpoly.evaluate(q, start_index + n) for n, a in enumerate(w.coeffs)))


@dataclass(frozen=True)
class RationalWindow:
    window: SeriesWindow
    start: int
    expected_rank: int


def rational_window(p, q, m, n):
    """Maclaurin coefficients u_M..u_N of P/Q."""
    p, q = qpoly.qp(p), qpoly.qp(q)
    failed = []
    if not q or q[0] == 0:
        failed.append("Q(0) != 0")
    if q and qpoly.deg(qpoly.gcd(p, q)) > 0:
        failed.append("gcd(P, Q) = 1")
    if qpoly.deg(p) > m - 1:
        failed.append("deg P <= M-1")
    if qpoly.deg(q) > m:
        failed.append("deg Q <= M")
    if n < m:
        failed.append("N >= M")
    if failed:
        raise PreconditionViolated(failed)
    u = qpoly.series(p, q, n + 1)
    return RationalWindow(SeriesWindow.rational(u[m:]), m, qpoly.deg(q))
