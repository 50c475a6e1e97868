"""Polynomials in t over GF(q), matrices over GF(q)[t], and GF(q)[t][X].

The absolute value on GF(q)((1/t)) is |x| = q^deg(x) on polynomials; it is
stored through its exponent only (see :class:`AbsVal`).
"""

from dataclasses import dataclass

from .errors import FieldMismatchError, SingularMatrixError
from .gfq import FFElem, FFPoly


class TPoly(FFPoly):
    """Element of GF(q)[t]."""

    __slots__ = ()
    var = "t"


@dataclass(frozen=True, order=False)
class AbsVal:
    """|x| = q**exponent, or 0 when ``zero`` is set."""

    zero: bool
    exponent: int = 0

    def __mul__(self, other):
        if self.zero or other.zero:
            return AbsVal(True)
        return AbsVal(False, self.exponent + other.exponent)

    def __le__(self, other):
        if self.zero:
            return True
        if other.zero:
            return False
        return self.exponent <= other.exponent

    def value(self, q):
        return 0 if self.zero else q ** self.exponent


def abs_value(x):
    if not x:
        return AbsVal(True)
    return AbsVal(False, x.degree)


def _max_abs(a, b):
    return a if b <= a else b


# -- fraction-free elimination ---------------------------------------------


def _bareiss_det(rows, zero, one):
    """Determinant over an integral domain with exact division.

    Entries must support ``*``, ``-``, unary ``-``, truthiness and
    ``exact_div``.
    """
    n = len(rows)
    m = [list(r) for r in rows]
    negate = False
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    negate = not negate
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]).exact_div(prev)
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if negate else det


class PolyMatrix:
    """Square matrix over GF(q)[t] (immutable)."""

    __slots__ = ("field", "d", "entries")

    def __init__(self, field, entries):
        rows = []
        for r in entries:
            row = []
            for x in r:
                if isinstance(x, FFPoly):
                    if x.field != field:
                        raise FieldMismatchError(f"entry over {x.field!r}, matrix over {field!r}")
                    row.append(x if isinstance(x, TPoly) else TPoly._raw(field, x.coeffs))
                elif isinstance(x, (int, FFElem)):
                    row.append(TPoly(field, [x]))
                else:
                    row.append(TPoly(field, x))
            rows.append(tuple(row))
        d = len(rows)
        if any(len(r) != d for r in rows):
            raise ValueError("matrix must be square")
        self.field = field
        self.d = d
        self.entries = tuple(rows)

    @classmethod
    def identity(cls, field, d):
        return cls(field, [[1 if i == j else 0 for j in range(d)] for i in range(d)])

    @classmethod
    def zero(cls, field, d):
        return cls(field, [[0] * d for _ in range(d)])

    @classmethod
    def diag(cls, field, values):
        d = len(values)
        return cls(field, [[values[i] if i == j else 0 for j in range(d)] for i in range(d)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.field == other.field
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        return f"PolyMatrix({self.field!r}, {[list(r) for r in self.entries]})"

    def to_lists(self):
        return [[list(x.coeffs) for x in r] for r in self.entries]

    def _check(self, other):
        if not isinstance(other, PolyMatrix):
            raise TypeError("expected PolyMatrix")
        if other.field != self.field or other.d != self.d:
            raise FieldMismatchError("matrices over different fields or sizes")

    def __add__(self, other):
        self._check(other)
        return PolyMatrix(self.field, [[a + b for a, b in zip(r, s)]
                                       for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._check(other)
        return PolyMatrix(self.field, [[a - b for a, b in zip(r, s)]
                                       for r, s in zip(self.entries, other.entries)])

    def __neg__(self):
        return PolyMatrix(self.field, [[-a for a in r] for r in self.entries])

    def __mul__(self, other):
        if isinstance(other, FFPoly):
            return PolyMatrix(self.field, [[a * other for a in r] for r in self.entries])
        self._check(other)
        ar = self.field.arith
        d = self.d
        a = [[x.coeffs for x in r] for r in self.entries]
        b = [[x.coeffs for x in r] for r in other.entries]
        out = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = []
                for k in range(d):
                    if a[i][k] and b[k][j]:
                        acc = ar.add(acc, ar.mul(a[i][k], b[k][j]))
                row.append(TPoly._raw(self.field, acc))
            out.append(row)
        return PolyMatrix(self.field, out)

    def det(self):
        return mat_det(self)

    def lift(self, field):
        return PolyMatrix(field, [[x.lift(field) for x in r] for r in self.entries])


def mat_det(m):
    """Exact determinant in GF(q)[t] by Bareiss elimination."""
    f = m.field
    return _bareiss_det(m.entries, TPoly(f), TPoly.one(f))


def mat_pow(m, k):
    if k < 1:
        raise ValueError("k must be >= 1")
    result = None
    base = m
    while k:
        if k & 1:
            result = base if result is None else result * base
        k >>= 1
        if k:
            base = base * base
    return result


# -- GF(q)[t][X] ----------------------------------------------------------------


class BiPoly:
    """Polynomial in X with coefficients in GF(q)[t], little-endian in X."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        out = []
        for c in coeffs:
            if isinstance(c, TPoly):
                if c.field != field:
                    raise FieldMismatchError(f"coefficient over {c.field!r}, expected {field!r}")
                out.append(c)
            elif isinstance(c, FFPoly):
                out.append(TPoly._raw(field, c.lift(field).coeffs))
            elif isinstance(c, (int, FFElem)):
                out.append(TPoly(field, [c]))
            else:
                out.append(TPoly(field, c))
        while out and not out[-1]:
            out.pop()
        self.field = field
        self.coeffs = tuple(out)

    @classmethod
    def from_ffpoly(cls, h):
        """Embed h(X) in GF(q)[X] as an element with constant t-coefficients."""
        return cls(h.field, [TPoly._raw(h.field, (c,) if c else ()) for c in h.coeffs])

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @classmethod
    def one(cls, field):
        return cls(field, [1])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else TPoly(self.field)

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else TPoly(self.field)

    def __eq__(self, other):
        return (isinstance(other, BiPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = repr(c)
            if len(c.coeffs) > 1 and i > 0:
                cs = f"({cs})"
            if i == 0:
                terms.append(cs)
            else:
                xs = "X" if i == 1 else f"X^{i}"
                terms.append(xs if c.is_one() else f"{cs}*{xs}")
        return " + ".join(terms)

    def lift(self, field):
        return BiPoly(field, [c.lift(field) for c in self.coeffs])

    def _zero_t(self):
        return TPoly(self.field)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return BiPoly(self.field, [self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return BiPoly(self.field, [self[i] - other[i] for i in range(n)])

    def __neg__(self):
        return BiPoly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, TPoly):
            return BiPoly(self.field, [c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return BiPoly(self.field)
        out = [self._zero_t()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return BiPoly(self.field, out)

    def divmod(self, other):
        """Division by a divisor whose leading X-coefficient is a unit of GF(q)."""
        lc = other.lc
        if lc.degree != 0:
            raise ValueError("divisor must have a constant leading coefficient")
        inv = self.field.inv(lc.coeffs[0])
        r = list(self.coeffs)
        db = other.degree
        if len(r) - 1 < db:
            return BiPoly(self.field), self
        q = [self._zero_t()] * (len(r) - db)
        for i in range(len(r) - 1 - db, -1, -1):
            c = r[i + db]
            if not c:
                continue
            c = c.scale(inv)
            q[i] = c
            for j, b in enumerate(other.coeffs):
                if b:
                    r[i + j] = r[i + j] - c * b
        return BiPoly(self.field, q), BiPoly(self.field, r[:db])

    def exact_div(self, other):
        """Exact quotient in the integral domain GF(q)[t][X]."""
        if not other:
            raise ZeroDivisionError("division by zero BiPoly")
        r = list(self.coeffs)
        db = other.degree
        lc = other.lc
        if not r:
            return BiPoly(self.field)
        if len(r) - 1 < db:
            raise ArithmeticError("inexact BiPoly division")
        q = [self._zero_t()] * (len(r) - db)
        for i in range(len(r) - 1 - db, -1, -1):
            c = r[i + db]
            if not c:
                continue
            c = c.exact_div(lc)
            q[i] = c
            for j, b in enumerate(other.coeffs):
                if b:
                    r[i + j] = r[i + j] - c * b
        if any(r[:db]):
            raise ArithmeticError("inexact BiPoly division")
        return BiPoly(self.field, q)

    def x_multiplicity(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def strip_x(self, m):
        return BiPoly(self.field, self.coeffs[m:])

    def t_slice(self, m):
        """The polynomial sum_j [t^m](c_j) X^j over GF(q)."""
        return FFPoly(self.field, [c[m] for c in self.coeffs])

    def eval_matrix(self, m):
        """chi(M) = sum_j c_j(t) M^j, by Horner."""
        f = m.field
        acc = PolyMatrix.zero(f, m.d)
        ident = PolyMatrix.identity(f, m.d)
        for c in reversed(self.coeffs):
            acc = acc * m + ident * c
        return acc


def charpoly(m):
    """det(X*I - M) as a monic element of GF(q)[t][X] (division-free by integers)."""
    f = m.field
    x = BiPoly.x(f)
    rows = []
    for i in range(m.d):
        row = []
        for j in range(m.d):
            e = BiPoly(f, [-m[i, j]])
            row.append(x + e if i == j else e)
        rows.append(row)
    return _bareiss_det(rows, BiPoly(f), BiPoly.one(f))


def bipoly_shift(chi, zeta):
    """chi(X + zeta) over the field of ``zeta``."""
    if not isinstance(zeta, FFElem):
        raise TypeError("zeta must be an FFElem")
    fld = zeta.field
    if not chi.field.is_subfield_of(fld):
        raise FieldMismatchError(f"{zeta!r} does not lie over {chi.field!r}")
    chi = chi.lift(fld) if chi.field != fld else chi
    z = zeta.code
    res = []
    for c in reversed(chi.coeffs):
        # res <- res * (X + zeta) + c
        new = [TPoly(fld)] * (len(res) + 1)
        for i, a in enumerate(res):
            new[i + 1] = new[i + 1] + a
            if z:
                new[i] = new[i] + a.scale(z)
        new[0] = new[0] + c
        res = new
    return BiPoly(fld, res)


# -- Smith normal form --------------------------------------------------------------


def _pick_pivot(a, k, d):
    best = None
    for i in range(k, d):
        for j in range(k, d):
            x = a[i][j]
            if x and (best is None or x.degree < best[0]):
                best = (x.degree, i, j)
    return best


def smith_normal_form(m):
    """(U, D, V, invariant_factors) with U*M*V = D over GF(q)[t].

    Pivots are smallest-degree entries (row-major tie break); invariant
    factors are monic and satisfy b_1 | b_2 | ... | b_d.
    """
    f = m.field
    d = m.d
    zero, one = TPoly(f), TPoly.one(f)
    a = [list(r) for r in m.entries]
    u = [[one if i == j else zero for j in range(d)] for i in range(d)]
    v = [[one if i == j else zero for j in range(d)] for i in range(d)]

    def row_axpy(mat, dst, src, c):  # row dst -= c * row src
        mat[dst] = [x - c * y for x, y in zip(mat[dst], mat[src])]

    def col_axpy(mat, dst, src, c):
        for r in mat:
            r[dst] = r[dst] - c * r[src]

    for k in range(d):
        while True:
            best = _pick_pivot(a, k, d)
            if best is None:
                raise SingularMatrixError("Smith normal form needs det(M) != 0")
            _, pi, pj = best
            a[k], a[pi] = a[pi], a[k]
            u[k], u[pi] = u[pi], u[k]
            for mat in (a, v):
                for r in mat:
                    r[k], r[pj] = r[pj], r[k]
            pivot = a[k][k]
            clean = True
            for i in range(k + 1, d):
                if a[i][k]:
                    q, r = divmod(a[i][k], pivot)
                    row_axpy(a, i, k, q)
                    row_axpy(u, i, k, q)
                    clean = clean and not r
            for j in range(k + 1, d):
                if a[k][j]:
                    q, r = divmod(a[k][j], pivot)
                    col_axpy(a, j, k, q)
                    col_axpy(v, j, k, q)
                    clean = clean and not r
            if not clean:
                continue
            bad = next((i for i in range(k + 1, d)
                        if any(a[i][j] % pivot for j in range(k + 1, d))), None)
            if bad is None:
                break
            a[k] = [x + y for x, y in zip(a[k], a[bad])]
            u[k] = [x + y for x, y in zip(u[k], u[bad])]
        inv = f.inv(a[k][k].lc)
        if inv != 1:
            a[k] = [x.scale(inv) for x in a[k]]
            u[k] = [x.scale(inv) for x in u[k]]
    factors = [a[i][i] for i in range(d)]
    return PolyMatrix(f, u), PolyMatrix(f, a), PolyMatrix(f, v), factors


def fixed_point_count_snf(b):
    """Number of fixed points of multiplication by B on the torus, via SNF of B - I."""
    bi = b - PolyMatrix.identity(b.field, b.d)
    if not mat_det(bi):
        return 0
    _, _, _, factors = smith_normal_form(bi)
    return b.field.q ** sum(x.degree for x in factors)
