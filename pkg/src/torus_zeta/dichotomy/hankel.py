"""Hankel determinants, Kronecker rationality detection and Polya decay."""

from fractions import Fraction

from ..errors import WindowTooShortError
from . import linalg, qpoly


def _det(field, rows):
    if field.s == 1:
        return field(linalg.det([[x.coords[0] for x in r] for r in rows]))
    return linalg.det(rows, field.zero, field.one)


def hankel_det(w, l, m):
    """Delta_{l,m}: det of the (m+1)x(m+1) matrix (a_{l+i+j})."""
    if l < 0 or m < 0:
        raise ValueError("l and m must be nonnegative")
    if l + 2 * m > w.T:
        raise WindowTooShortError(f"need a_{l + 2 * m}, window ends at a_{w.T}")
    rows = [[w[l + i + j] for j in range(m + 1)] for i in range(m + 1)]
    return _det(w.field, rows)


def _order_system(a, lo, hi, m):
    """Rows expressing [z^n](Q f) for lo <= n <= hi in the unknowns q_0..q_m."""
    return [[a[n - j] if 0 <= n - j < len(a) else Fraction(0) for j in range(m + 1)]
            for n in range(lo, hi + 1)]


def pade_solvable(w, l, m):
    """Is there a nonzero Q, deg Q <= m, with P - Q f = O(z^(l+2m+1)), deg P <= l+m-1?"""
    if l + 2 * m > w.T:
        raise WindowTooShortError(f"need a_{l + 2 * m}, window ends at a_{w.T}")
    a = w.rational_values()
    rows = _order_system(a, l + m, l + 2 * m, m)
    return bool(linalg.nullspace(rows, m + 1))


def _approximant(a, mp, top):
    """(P, Q) with Q(0) = 1, deg Q <= mp, deg P < mp, Qf - P = O(z^(top+1))."""
    if mp == 0:
        return ((), (Fraction(1),)) if not any(a[: top + 1]) else None
    rows = _order_system(a, mp, top, mp)
    # q_0 = 1: move its column to the right-hand side
    sol = linalg.solve([r[1:] for r in rows], [-r[0] for r in rows])
    if sol is None:
        return None
    q = qpoly.qp([Fraction(1)] + sol)
    p = qpoly.qp(qpoly.mul(q, qpoly.qp(a[:mp]))[:mp])
    return p, q


def kronecker_detect(w, m, d):
    """Rational approximant (P, Q) when Delta_m..Delta_{m+d} all vanish.

    Scans m' = 0..m and returns the first (P, Q) with Q(0) = 1,
    deg P <= m'-1, deg Q <= m' and f - P/Q = O(z^(m+d+1)).  A common factor
    would give a solution at smaller m', so the result is coprime.  A pair
    that reproduces the entire window is preferred, since the order-(m+d)
    system alone can be underdetermined.
    Returns None if the Hankel run does not vanish.
    """
    if m < 0 or d < 0:
        raise ValueError("m and d must be nonnegative")
    if 2 * (m + d) > w.T:
        raise WindowTooShortError(f"need a_{2 * (m + d)}, window ends at a_{w.T}")
    for i in range(d + 1):
        if hankel_det(w, 0, m + i):
            return None
    a = w.rational_values()
    # prefer an approximant that reproduces the whole window, then fall back
    # to the contracted order m+d
    for top in (w.T, m + d):
        for mp in range(m + 1):
            res = _approximant(a, mp, top)
            if res is not None:
                return res
    raise AssertionError("vanishing Hankel run without a Pade solution")


def polya_decay_report(w, n_max):
    """[(n, |Delta_n|, |Delta_n|^(1/(n(n+1))))] for n = 1..n_max, as floats."""
    if 2 * n_max > w.T:
        raise WindowTooShortError(f"need a_{2 * n_max}, window ends at a_{w.T}")
    out = []
    for n in range(1, n_max + 1):
        mag = hankel_det(w, 0, n).magnitude()
        out.append((n, mag, mag ** (1.0 / (n * (n + 1)))))
    return out
