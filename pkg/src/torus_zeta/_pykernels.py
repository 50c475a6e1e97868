"""Pure-Python polynomial kernels over small finite fields.

Field elements are integer codes.  Three arithmetic flavours share one
interface:

* ``PrimeArith``: GF(p), codes are residues.
* ``TableArith``: GF(q) with exp/log/Zech-log tables, codes arbitrary.
* ``GenericArith``: delegates element operations to callables; used for
  fields too large to tabulate.

Polynomials are little-endian sequences of codes; every returned list is
trimmed (no trailing zeros, ``[]`` is the zero polynomial).
"""


def _trim(c):
    while c and not c[-1]:
        c.pop()
    return c


class _PolyOps:
    """Generic polynomial routines written against the element operations."""

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        ea = self.eadd
        for i, y in enumerate(b):
            out[i] = ea(out[i], y)
        return _trim(out)

    def neg(self, a):
        en = self.eneg
        return [en(x) for x in a]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def scale(self, a, c):
        if not c:
            return []
        em = self.emul
        return _trim([em(x, c) for x in a])

    def mul(self, a, b):
        if not a or not b:
            return []
        ea, em = self.eadd, self.emul
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = ea(out[i + j], em(x, y))
        return _trim(out)

    def divmod(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(a)
        db = len(b) - 1
        if len(r) - 1 < db:
            return [], _trim(r)
        inv = self.einv(b[-1])
        ea, em, en = self.eadd, self.emul, self.eneg
        q = [0] * (len(r) - db)
        for i in range(len(r) - 1 - db, -1, -1):
            c = r[i + db]
            if not c:
                continue
            c = em(c, inv)
            q[i] = c
            nc = en(c)
            for j in range(db + 1):
                if b[j]:
                    r[i + j] = ea(r[i + j], em(nc, b[j]))
        return _trim(q), _trim(r[:db])


class PrimeArith(_PolyOps):
    kind = "prime"

    def __init__(self, p):
        self.p = p
        # bytes per slot for Kronecker substitution is chosen per call
        self._pbits = p.bit_length()

    def eadd(self, a, b):
        return (a + b) % self.p

    def esub(self, a, b):
        return (a - b) % self.p

    def eneg(self, a):
        return -a % self.p

    def emul(self, a, b):
        return a * b % self.p

    def einv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def add(self, a, b):
        p = self.p
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = (out[i] + y) % p
        return _trim(out)

    def sub(self, a, b):
        p = self.p
        n = max(len(a), len(b))
        a = list(a) + [0] * (n - len(a))
        for i, y in enumerate(b):
            a[i] = (a[i] - y) % p
        return _trim(a)

    def neg(self, a):
        p = self.p
        return [-x % p for x in a]

    def scale(self, a, c):
        p = self.p
        c %= p
        if not c:
            return []
        return [x * c % p for x in a]

    def mul(self, a, b):
        if not a or not b:
            return []
        n = min(len(a), len(b))
        if n < 8:
            return _PolyOps.mul(self, a, b)
        # Kronecker substitution: pack into one big integer per operand.
        bits = 2 * self._pbits + n.bit_length() + 1
        nbytes = (bits + 7) // 8
        ia = int.from_bytes(b"".join(x.to_bytes(nbytes, "little") for x in a), "little")
        ib = int.from_bytes(b"".join(x.to_bytes(nbytes, "little") for x in b), "little")
        m = len(a) + len(b) - 1
        raw = (ia * ib).to_bytes(m * nbytes, "little")
        p = self.p
        return _trim([int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") % p
                      for i in range(m)])


class TableArith(_PolyOps):
    """GF(q) via discrete-log tables; ``exp[i]`` is the code of g**i."""

    kind = "table"

    def __init__(self, p, q, exp_table, log_table, zech_table):
        self.p = p
        self.q = q
        self.qm1 = q - 1
        self.exp = list(exp_table)
        self.log = list(log_table)
        self.zech = list(zech_table)
        self.lneg1 = 0 if p == 2 else self.qm1 // 2

    def eadd(self, a, b):
        if not a:
            return b
        if not b:
            return a
        la = self.log[a]
        z = self.zech[(self.log[b] - la) % self.qm1]
        if z < 0:
            return 0
        return self.exp[(la + z) % self.qm1]

    def eneg(self, a):
        if not a or not self.lneg1:
            return a
        return self.exp[(self.log[a] + self.lneg1) % self.qm1]

    def esub(self, a, b):
        return self.eadd(a, self.eneg(b))

    def emul(self, a, b):
        if not a or not b:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % self.qm1]

    def einv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[-self.log[a] % self.qm1]

    def mul(self, a, b):
        if not a or not b:
            return []
        exp, log, zech, qm1 = self.exp, self.log, self.zech, self.qm1
        la = [log[x] if x else -1 for x in a]
        lb = [log[y] if y else -1 for y in b]
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(la):
            if x < 0:
                continue
            for j, y in enumerate(lb):
                if y < 0:
                    continue
                lp = x + y
                if lp >= qm1:
                    lp -= qm1
                k = i + j
                c = out[k]
                if not c:
                    out[k] = exp[lp]
                    continue
                lc = log[c]
                d = lp - lc
                if d < 0:
                    d += qm1
                z = zech[d]
                if z < 0:
                    out[k] = 0
                else:
                    z += lc
                    if z >= qm1:
                        z -= qm1
                    out[k] = exp[z]
        return _trim(out)


class GenericArith(_PolyOps):
    kind = "generic"

    def __init__(self, eadd, eneg, emul, einv):
        self.eadd = eadd
        self.eneg = eneg
        self.emul = emul
        self.einv = einv

    def esub(self, a, b):
        return self.eadd(a, self.eneg(b))
