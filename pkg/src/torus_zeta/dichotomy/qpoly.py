"""Dense polynomials over Q as little-endian tuples of Fractions."""

from fractions import Fraction


def qp(coeffs):
    out = [Fraction(c) for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return tuple(out)


def deg(a):
    return len(a) - 1


def add(a, b):
    n = max(len(a), len(b))
    return qp([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a, b):
    n = max(len(a), len(b))
    return qp([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return qp(out)


def divmod_(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return (), qp(r)
    q = [Fraction(0)] * (len(r) - db)
    for i in range(len(r) - 1 - db, -1, -1):
        c = r[i + db] / b[-1]
        q[i] = c
        if c:
            for j in range(db + 1):
                r[i + j] -= c * b[j]
    return qp(q), qp(r[:db])


def monic(a):
    if not a:
        return a
    return tuple(x / a[-1] for x in a)


def gcd(a, b):
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def derivative(a):
    return qp([i * c for i, c in enumerate(a)][1:])


def evaluate(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def squarefree_degree(a):
    """Number of distinct complex roots of a nonzero polynomial."""
    g = gcd(a, derivative(a))
    return deg(a) - deg(g)


def series(p, q, n):
    """First n Maclaurin coefficients of p/q (q(0) != 0)."""
    q0 = q[0]
    out = []
    for k in range(n):
        s = p[k] if k < len(p) else Fraction(0)
        for j in range(1, min(k, len(q) - 1) + 1):
            s -= q[j] * out[k - j]
        out.append(s / q0)
    return out


def from_roots(roots):
    out = (Fraction(1),)
    for r in roots:
        out = mul(out, (Fraction(-r), Fraction(1)))
    return out
