# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled polynomial kernels over small finite fields.

Same interface as :mod:`torus_zeta._pykernels` (``PrimeArith`` for p < 2**31,
``TableArith`` for tabulated extension fields).
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64
ctypedef unsigned long long u64

# above this operand length, pack into one integer and let CPython multiply
cdef Py_ssize_t _PACK_THRESHOLD = 48


def _packed_mul(a, b, p):
    n = min(len(a), len(b))
    nbytes = (2 * p.bit_length() + n.bit_length() + 8) // 8
    ia = int.from_bytes(b"".join(x.to_bytes(nbytes, "little") for x in a), "little")
    ib = int.from_bytes(b"".join(x.to_bytes(nbytes, "little") for x in b), "little")
    m = len(a) + len(b) - 1
    raw = (ia * ib).to_bytes(m * nbytes, "little")
    return _trim([int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") % p
                  for i in range(m)])


cdef list _trim(list c):
    cdef Py_ssize_t n = len(c)
    while n and not c[n - 1]:
        c.pop()
        n -= 1
    return c


cdef class _Base:
    cdef i64 _add(self, i64 a, i64 b) noexcept:
        return 0

    cdef i64 _neg(self, i64 a) noexcept:
        return 0

    cdef i64 _mul(self, i64 a, i64 b) noexcept:
        return 0

    cdef i64 _inv(self, i64 a) except -1:
        return 0

    def eadd(self, a, b):
        return self._add(a, b)

    def eneg(self, a):
        return self._neg(a)

    def esub(self, a, b):
        return self._add(a, self._neg(b))

    def emul(self, a, b):
        return self._mul(a, b)

    def einv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return self._inv(a)

    def add(self, a, b):
        cdef Py_ssize_t i, na = len(a), nb = len(b)
        cdef list out
        if na < nb:
            a, b = b, a
            na, nb = nb, na
        out = list(a)
        for i in range(nb):
            out[i] = self._add(out[i], b[i])
        return _trim(out)

    def neg(self, a):
        return [self._neg(x) for x in a]

    def sub(self, a, b):
        cdef Py_ssize_t i, na = len(a), nb = len(b)
        cdef list out = list(a)
        if nb > na:
            out.extend([0] * (nb - na))
        for i in range(nb):
            out[i] = self._add(out[i], self._neg(b[i]))
        return _trim(out)

    def scale(self, a, c):
        if not c:
            return []
        return _trim([self._mul(x, c) for x in a])

    def mul(self, a, b):
        cdef Py_ssize_t na = len(a), nb = len(b), i, j, n
        if na == 0 or nb == 0:
            return []
        n = na + nb - 1
        cdef i64* ca = <i64*> malloc(na * sizeof(i64))
        cdef i64* cb = <i64*> malloc(nb * sizeof(i64))
        cdef i64* co = <i64*> malloc(n * sizeof(i64))
        try:
            for i in range(na):
                ca[i] = a[i]
            for j in range(nb):
                cb[j] = b[j]
            self._mul_raw(ca, na, cb, nb, co)
            return _trim([co[i] for i in range(n)])
        finally:
            free(ca)
            free(cb)
            free(co)

    cdef void _mul_raw(self, i64* a, Py_ssize_t na, i64* b, Py_ssize_t nb, i64* out) noexcept:
        cdef Py_ssize_t i, j
        for i in range(na + nb - 1):
            out[i] = 0
        for i in range(na):
            if a[i] == 0:
                continue
            for j in range(nb):
                if b[j] != 0:
                    out[i + j] = self._add(out[i + j], self._mul(a[i], b[j]))

    def divmod(self, a, b):
        cdef Py_ssize_t na = len(a), nb = len(b), i, j, db
        cdef i64 inv, c, nc
        if nb == 0:
            raise ZeroDivisionError("polynomial division by zero")
        db = nb - 1
        if na - 1 < db:
            return [], _trim(list(a))
        cdef i64* r = <i64*> malloc(na * sizeof(i64))
        cdef i64* cb = <i64*> malloc(nb * sizeof(i64))
        cdef i64* q = <i64*> malloc((na - db) * sizeof(i64))
        try:
            for i in range(na):
                r[i] = a[i]
            for j in range(nb):
                cb[j] = b[j]
            inv = self._inv(cb[db])
            for i in range(na - 1 - db, -1, -1):
                c = r[i + db]
                if c == 0:
                    q[i] = 0
                    continue
                c = self._mul(c, inv)
                q[i] = c
                nc = self._neg(c)
                for j in range(db + 1):
                    if cb[j] != 0:
                        r[i + j] = self._add(r[i + j], self._mul(nc, cb[j]))
            return (_trim([q[i] for i in range(na - db)]),
                    _trim([r[i] for i in range(db)]))
        finally:
            free(r)
            free(cb)
            free(q)


cdef class PrimeArith(_Base):
    cdef readonly i64 p
    cdef readonly str kind

    def __cinit__(self, p):
        if p >= 2**31:
            raise OverflowError("compiled prime kernel needs p < 2**31")
        self.p = p
        self.kind = "prime"

    cdef i64 _add(self, i64 a, i64 b) noexcept:
        cdef i64 s = a + b
        if s >= self.p:
            s -= self.p
        return s

    cdef i64 _neg(self, i64 a) noexcept:
        return 0 if a == 0 else self.p - a

    cdef i64 _mul(self, i64 a, i64 b) noexcept:
        return a * b % self.p

    cdef i64 _inv(self, i64 a) except -1:
        cdef i64 t = 0, nt = 1, r = self.p, nr = a % self.p, qq, tmp
        while nr != 0:
            qq = r // nr
            tmp = t - qq * nt
            t = nt
            nt = tmp
            tmp = r - qq * nr
            r = nr
            nr = tmp
        if t < 0:
            t += self.p
        return t

    def eadd(self, a, b):
        return (a + b) % self.p

    def emul(self, a, b):
        return a * b % self.p

    def mul(self, a, b):
        if min(len(a), len(b)) >= _PACK_THRESHOLD:
            return _packed_mul(a, b, self.p)
        return _Base.mul(self, a, b)

    cdef void _mul_raw(self, i64* a, Py_ssize_t na, i64* b, Py_ssize_t nb, i64* out) noexcept:
        # products accumulate unreduced; reduce once every `batch` terms
        cdef Py_ssize_t i, j, n = na + nb - 1, k, lo, hi
        cdef u64 p = self.p, acc, pm = self.p - 1
        cdef Py_ssize_t batch = <Py_ssize_t> ((<u64> 0xFFFFFFFFFFFFFFFF - pm) // (pm * pm)) if pm > 1 else n + 1
        cdef Py_ssize_t cnt
        for k in range(n):
            lo = k - nb + 1 if k >= nb else 0
            hi = k if k < na - 1 else na - 1
            acc = 0
            cnt = 0
            for i in range(lo, hi + 1):
                acc += <u64> a[i] * <u64> b[k - i]
                cnt += 1
                if cnt == batch:
                    acc %= p
                    cnt = 0
            out[k] = <i64> (acc % p)


cdef class TableArith(_Base):
    cdef readonly i64 p, q, qm1, lneg1
    cdef readonly str kind
    cdef i64* exp_t
    cdef i64* log_t
    cdef i64* zech_t

    def __cinit__(self, p, q, exp_table, log_table, zech_table):
        cdef Py_ssize_t i
        self.p = p
        self.q = q
        self.qm1 = q - 1
        self.lneg1 = 0 if p == 2 else self.qm1 // 2
        self.kind = "table"
        self.exp_t = <i64*> malloc(self.qm1 * sizeof(i64))
        self.log_t = <i64*> malloc(q * sizeof(i64))
        self.zech_t = <i64*> malloc(self.qm1 * sizeof(i64))
        for i in range(self.qm1):
            self.exp_t[i] = exp_table[i]
            self.zech_t[i] = zech_table[i]
        for i in range(q):
            self.log_t[i] = log_table[i]

    def __dealloc__(self):
        free(self.exp_t)
        free(self.log_t)
        free(self.zech_t)

    cdef i64 _add(self, i64 a, i64 b) noexcept:
        cdef i64 la, d, z
        if a == 0:
            return b
        if b == 0:
            return a
        la = self.log_t[a]
        d = self.log_t[b] - la
        if d < 0:
            d += self.qm1
        z = self.zech_t[d]
        if z < 0:
            return 0
        z += la
        if z >= self.qm1:
            z -= self.qm1
        return self.exp_t[z]

    cdef i64 _neg(self, i64 a) noexcept:
        cdef i64 l
        if a == 0 or self.lneg1 == 0:
            return a
        l = self.log_t[a] + self.lneg1
        if l >= self.qm1:
            l -= self.qm1
        return self.exp_t[l]

    cdef i64 _mul(self, i64 a, i64 b) noexcept:
        cdef i64 l
        if a == 0 or b == 0:
            return 0
        l = self.log_t[a] + self.log_t[b]
        if l >= self.qm1:
            l -= self.qm1
        return self.exp_t[l]

    cdef i64 _inv(self, i64 a) except -1:
        cdef i64 l = self.log_t[a]
        return self.exp_t[0 if l == 0 else self.qm1 - l]
