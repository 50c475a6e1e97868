"""Denominator growth, exceptional sets and binomial-basis bounds."""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, log

from .._intmath import ilog_ceil, ilog_floor, is_prime, lcm
from ..errors import NonPrimeError, WindowTooShortError
from . import qpoly
from .radical import denominator


@dataclass(frozen=True)
class ExceptionalSet:
    p: int
    bound: int
    members: tuple
    c5: float = field(compare=False)

    def __contains__(self, k):
        return k in self._set

    @property
    def _set(self):
        return frozenset(self.members)

    def count_upto(self, n):
        return sum(1 for k in self.members if k <= n)

    def density_bound(self, n):
        return (ilog_ceil(n, self.p) + 1) ** 2

    def density_report(self, samples=None):
        if samples is None:
            samples = sorted({min(self.p ** j, self.bound) for j in range(ilog_ceil(max(self.bound, 1), self.p) + 1)})
        return [(n, self.count_upto(n), self.density_bound(n)) for n in samples if n >= 1]

    def to_json(self):
        return {"p": self.p, "bound": self.bound, "members": list(self.members)}


def build_exceptional_set(p, bound):
    """S = union of S_l, S_l = {k in (p^(l-1), p^l] : p^(l - floor(log_p l)) | k}."""
    if not is_prime(p):
        raise NonPrimeError(f"p={p} is not prime")
    members = []
    l = 1
    while p ** (l - 1) < bound:
        lo, hi = p ** (l - 1), min(p ** l, bound)
        mod = p ** (l - ilog_floor(l, p))
        k = (lo // mod + 1) * mod
        while k <= hi:
            members.append(k)
            k += mod
        l += 1
    return ExceptionalSet(p, bound, tuple(members), 1 / log(p))


@dataclass(frozen=True)
class GrowthReport:
    n: int
    L_n: int
    sequence: tuple     # L_1..L_n
    exponents: tuple    # log(L_k)/k

    def to_json(self):
        return {"n": self.n, "L_n": str(self.L_n),
                "sequence": [str(x) for x in self.sequence],
                "exponents": [round(x, 12) for x in self.exponents]}


def lcm_den_growth(w, s, n):
    """L_n = lcm{den(a_k) : 1 <= k <= n, k not in S}."""
    if n > w.T:
        raise WindowTooShortError(f"need a_{n}, window ends at a_{w.T}")
    skip = frozenset(s.members) if s is not None else frozenset()
    cur = 1
    seq = []
    for k in range(1, n + 1):
        if k not in skip:
            cur = lcm(cur, denominator(w[k]))
        seq.append(cur)
    return GrowthReport(n, cur, tuple(seq), tuple(log(x) / k for k, x in enumerate(seq, 1)))


@dataclass(frozen=True)
class BinomialBasis:
    alphas: tuple
    M: Fraction
    bound_ok: bool


def binomial_basis(p):
    """alpha_i with P(z) = sum alpha_i binom(z, i), via forward differences."""
    p = qpoly.qp(p)
    d = max(qpoly.deg(p), 0)
    vals = [qpoly.evaluate(p, i) for i in range(d + 1)]
    M = max(abs(v) for v in vals)
    alphas = []
    cur = vals
    for _ in range(d + 1):
        alphas.append(cur[0])
        cur = [b - a for a, b in zip(cur, cur[1:])]
    ok = all(abs(a) <= M * 2 ** i * factorial(i) for i, a in enumerate(alphas))
    return BinomialBasis(tuple(alphas), M, ok)


def vanishing_poly(s, bound):
    """prod (z - k) over k in S, k <= bound, as little-endian ints."""
    roots = [k for k in s.members if k <= bound] if s is not None else []
    return tuple(int(c) for c in qpoly.from_roots(roots))
