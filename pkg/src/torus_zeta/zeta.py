"""Fixed-point counts, spectral data and the zeta dichotomy for A on T^d.

N_k(A) = |det(A^k - I)| counts fixed points of A^k on (F((1/t))/F[t])^d.
The spectral route reads the same numbers off the eigenvalues of A, and
the classifier decides between an algebraic closed form and a natural
boundary on |z| = 1/r(A).
"""

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from ._intmath import lcm, vp
from .dichotomy import RadicalField, SeriesWindow
from .errors import InsufficientTermsError, InternalInconsistency, NonIntegerExponentError
from .funcfield import BiPoly, PolyMatrix, charpoly, mat_det, mat_pow
from .gfq import FFPoly, ff_factor, order_of_root, poly_gcd, root_field
from .newton import newton_polygon, residual_polynomial, root_valuations, unit_residue_valuations


@dataclass(frozen=True)
class Nk:
    """N_k stored as an exponent of q (None means N_k = 0)."""

    q: int
    exponent: object

    @property
    def value(self):
        return 0 if self.exponent is None else self.q ** self.exponent

    def __int__(self):
        return self.value

    def __str__(self):
        return "0" if self.exponent is None else f"q^{self.exponent}"


@dataclass(frozen=True)
class NkSequence:
    q: int
    exponents: tuple    # exponent of N_k for k = 1..kmax, None for zero

    @property
    def kmax(self):
        return len(self.exponents)

    def __getitem__(self, k):
        """N_k as an integer (1-based)."""
        if not 1 <= k <= self.kmax:
            raise IndexError(k)
        e = self.exponents[k - 1]
        return 0 if e is None else self.q ** e

    def nk(self, k):
        return Nk(self.q, self.exponents[k - 1])

    def values(self):
        return [self[k] for k in range(1, self.kmax + 1)]

    def to_json(self):
        return [{"k": k, "value": str(self.nk(k))} for k in range(1, self.kmax + 1)]


@dataclass(frozen=True)
class SpectralData:
    q: int
    p: int
    d: int
    r_exponent: int
    rou: tuple              # (m, multiplicity), sorted by m
    unit_nonrou: tuple      # (n, eta1_exponent: Fraction, multiplicity)
    zero_eigen_multiplicity: int
    big_count: int          # eigenvalues with |lambda| > 1
    small_count: int        # eigenvalues with 0 < |lambda| < 1

    @property
    def R(self):
        return self.r_exponent

    def to_json(self):
        return {
            "R": self.r_exponent,
            "rou": [{"m": m, "mult": k} for m, k in self.rou],
            "unit_nonrou": [{"n": n, "eta1_exp": str(v), "mult": w} for n, v, w in self.unit_nonrou],
            "zero_eigen_multiplicity": self.zero_eigen_multiplicity,
        }


@dataclass(frozen=True)
class ClosedForm:
    """(1 - q^R z)^-1 times prod over subsets of (1 - (q^R z)^L)^((-1)^(l+1)/L)."""

    q: int
    r_exponent: int
    subset_factors: tuple   # (indices, L, exponent)
    combined: tuple         # (L, exponent), leading factor merged in, zeros dropped

    @property
    def is_rational(self):
        return all(e.denominator == 1 for _, e in self.combined)

    def to_json(self):
        return {
            "leading": f"(1-q^{self.r_exponent} z)^(-1)",
            "factors": [{"L": L, "exp": str(e)} for L, e in self.combined],
        }


@dataclass(frozen=True)
class Algebraic:
    closed_form: ClosedForm
    rational: bool

    kind = "algebraic"

    def to_json(self):
        return {"kind": "algebraic", "closed_form": self.closed_form.to_json(),
                "rational": self.rational}


@dataclass(frozen=True)
class Transcendental:
    boundary_radius: Fraction
    witness_j: int          # 1-based index into unit_nonrou
    witness_n: int

    kind = "transcendental"

    def to_json(self):
        return {"kind": "transcendental", "boundary_radius": str(self.boundary_radius),
                "witness": {"j": self.witness_j, "n": self.witness_n}}


@dataclass(frozen=True)
class ZetaSeries:
    coeffs: tuple           # Fractions, z^0 first

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def to_json(self):
        return [str(c) for c in self.coeffs]


# -- N_k by determinant ----------------------------------------------------------


def _nk_from_det(q, det):
    return Nk(q, det.degree if det else None)


def nk_oracle(a, k):
    """N_k = |det(A^k - I)|."""
    if k < 1:
        raise ValueError("k must be >= 1")
    b = mat_pow(a, k) - PolyMatrix.identity(a.field, a.d)
    return _nk_from_det(a.field.q, mat_det(b))


def _thread_count():
    env = os.environ.get("TORUS_ZETA_THREADS")
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def nk_sequence(a, kmax, threads=None):
    """N_1..N_kmax; powers are built incrementally, determinants fan out."""
    ident = PolyMatrix.identity(a.field, a.d)
    mats = []
    cur = ident
    for _ in range(kmax):
        cur = cur * a
        mats.append(cur - ident)
    workers = threads or _thread_count()
    if workers > 1 and kmax > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            dets = list(pool.map(mat_det, mats))
    else:
        dets = [mat_det(m) for m in mats]
    return NkSequence(a.field.q, tuple(_nk_from_det(a.field.q, d).exponent for d in dets))


# -- spectral data -----------------------------------------------------------------


def _multiplicity(chi, h):
    """Largest k with h^k | chi, for h in GF(q)[X] monic."""
    hb = BiPoly.from_ffpoly(h)
    k = 0
    while True:
        quo, rem = chi.divmod(hb)
        if rem:
            return k
        chi = quo
        k += 1


def _slice_gcd(chi):
    top = max(c.degree for c in chi.coeffs if c)
    g = None
    for m in range(top + 1):
        s = chi.t_slice(m)
        if s:
            g = s if g is None else poly_gcd(g, s)
    return g


def spectral_data(a):
    f = a.field
    chi = charpoly(a)
    polygon = newton_polygon(chi)
    spec = root_valuations(polygon)
    big = sum(w for v, w in spec.entries if v < 0)
    small = sum(w for v, w in spec.entries if v > 0)
    slope0 = sum(w for v, w in spec.entries if v == 0)
    r_exp = sum(-v * w for v, w in spec.entries if v < 0)
    if r_exp.denominator != 1:
        raise InternalInconsistency(f"r-exponent {r_exp} is not an integer")
    r_exp = int(r_exp)

    # eigenvalues in GF(q)-bar: common roots of every t-slice
    g = _slice_gcd(chi)
    g = FFPoly(f, g.coeffs[g.trailing_zeros():])
    rou_mult = {}
    rou_part = FFPoly.one(f)
    if g.degree > 0:
        for h, _ in ff_factor(g):
            k = _multiplicity(chi, h)
            if k == 0:
                raise InternalInconsistency(f"slice-gcd factor {h!r} does not divide chi")
            rou_mult[h] = k
            rou_part = rou_part * h ** k
    rou = {}
    for h, k in rou_mult.items():
        m = order_of_root(h)
        rou[m] = rou.get(m, 0) + k * h.degree

    # remaining unit eigenvalues, grouped by residue
    res = residual_polynomial(chi).monic()
    rest, rem = divmod(res, rou_part)
    if rem:
        raise InternalInconsistency("root-of-unity part does not divide the residual polynomial")
    nonrou = {}
    if rest.degree > 0:
        for h, e in ff_factor(rest):
            _, zeta = root_field(h)
            vals = unit_residue_valuations(chi, zeta, rou_mult.get(h, 0))
            if len(vals) != e:
                raise InternalInconsistency(
                    f"residue class of {h!r}: {len(vals)} valuations, expected {e}")
            n = order_of_root(h)
            for v in vals:
                nonrou[(n, v)] = nonrou.get((n, v), 0) + h.degree

    n_rou = sum(rou.values())
    n_nonrou = sum(nonrou.values())
    if slope0 != n_rou + n_nonrou:
        raise InternalInconsistency(
            f"slope-0 width {slope0} != {n_rou} roots of unity + {n_nonrou} other units")
    if big + small + slope0 + spec.zero_roots != a.d:
        raise InternalInconsistency("eigenvalue count does not match the dimension")
    return SpectralData(
        q=f.q, p=f.p, d=a.d, r_exponent=r_exp,
        rou=tuple(sorted(rou.items())),
        unit_nonrou=tuple((n, v, w) for (n, v), w in sorted(nonrou.items())),
        zero_eigen_multiplicity=spec.zero_roots, big_count=big, small_count=small,
    )


# -- the spectral formula for N_k --------------------------------------------------


def nk_exponent(s, k):
    """q-exponent of N_k from spectral data, or None when N_k = 0."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if any(k % m == 0 for m, _ in s.rou):
        return None
    loss = sum(v * w for n, v, w in s.unit_nonrou if k % n == 0)
    e = s.r_exponent * k - s.p ** vp(k, s.p) * loss
    e = Fraction(e)
    if e.denominator != 1:
        raise NonIntegerExponentError(f"N_{k} exponent {e} is not an integer")
    if e < 0:
        raise NonIntegerExponentError(f"N_{k} exponent {e} is negative")
    return int(e)


def nk_formula(s, k):
    return Nk(s.q, nk_exponent(s, k))


# -- classification ----------------------------------------------------------------


def closed_form(s):
    orders = [m for m, mult in s.rou for _ in range(mult)]
    subset = []
    combined = {1: Fraction(-1)}
    for size in range(1, len(orders) + 1):
        sign = 1 if size % 2 else -1
        for idx in itertools.combinations(range(len(orders)), size):
            L = lcm(*(orders[i] for i in idx))
            e = Fraction(sign, L)
            subset.append((idx, L, e))
            combined[L] = combined.get(L, 0) + e
    merged = tuple((L, e) for L, e in sorted(combined.items()) if e)
    return ClosedForm(s.q, s.r_exponent, tuple(subset), merged)


def classify(s):
    for j, (n, _, _) in enumerate(s.unit_nonrou, 1):
        if not any(n % m == 0 for m, _ in s.rou):
            return Transcendental(Fraction(1, s.q ** s.r_exponent), j, n)
    c = closed_form(s)
    return Algebraic(c, c.is_rational)


# -- series ------------------------------------------------------------------------


def zeta_series(n, terms):
    """exp(sum N_k z^k / k) to ``terms`` coefficients, via n Z_n = sum N_k Z_{n-k}."""
    if terms < 1:
        return ZetaSeries(())
    if terms - 1 > n.kmax:
        raise InsufficientTermsError(f"{terms} terms need N_1..N_{terms - 1}, have {n.kmax}")
    z = [Fraction(1)]
    vals = n.values()
    for i in range(1, terms):
        z.append(sum((vals[k - 1] * z[i - k] for k in range(1, i + 1)), Fraction(0)) / i)
    return ZetaSeries(tuple(z))


def _mul_trunc(a, b, terms):
    out = [Fraction(0)] * terms
    for i, x in enumerate(a):
        if x:
            for j in range(min(len(b), terms - i)):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def closed_form_series(c, terms):
    """Expand prod (1 - (q^R z)^L)^alpha with c_{n+1} = c_n (n - alpha)/(n + 1)."""
    base = c.q ** c.r_exponent
    total = [Fraction(1)] + [Fraction(0)] * (terms - 1)
    for L, alpha in c.combined:
        fac = [Fraction(0)] * terms
        coef = Fraction(1)
        n = 0
        while n * L < terms:
            # coefficient of w^n in (1 - w)^alpha is (-1)^n binom(alpha, n)
            fac[n * L] = coef * base ** (n * L)
            coef = coef * (n - alpha) / (n + 1)
            n += 1
        total = _mul_trunc(total, fac, terms)
    return ZetaSeries(tuple(total[:terms]))


# -- the c_k window ----------------------------------------------------------------


def ck_exponents(s, kmax):
    """p-exponents x_k with c_k = N_k / r^k = p^(x_k), or None when c_k = 0."""
    e = _field_degree(s)
    out = []
    for k in range(1, kmax + 1):
        if any(k % m == 0 for m, _ in s.rou):
            out.append(None)
            continue
        loss = sum((v * w for n, v, w in s.unit_nonrou if k % n == 0), Fraction(0))
        out.append(-Fraction(e) * s.p ** vp(k, s.p) * loss)
    return out


def _field_degree(s):
    e, q = 0, 1
    while q < s.q:
        q *= s.p
        e += 1
    return e


def dichotomy_coefficients(s, kmax):
    """Window (c_0 = 0, c_1, ..., c_kmax) in Q(p^(1/s)), index k holding c_k."""
    xs = ck_exponents(s, kmax)
    rad = lcm(1, *(x.denominator for x in xs if x is not None))
    fld = RadicalField(s.p, rad)
    coeffs = [fld.zero] + [fld.zero if x is None else fld.p_power(x) for x in xs]
    return SeriesWindow(fld, tuple(coeffs))
