"""Exact Gaussian elimination over any field whose elements support the
usual operators (Fraction, RadicalElement)."""

from fractions import Fraction


def det(rows, zero=Fraction(0), one=Fraction(1)):
    m = [list(r) for r in rows]
    n = len(m)
    result = one
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return zero
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            result = -result
        pk = m[k][k]
        result = result * pk
        inv = one / pk
        for i in range(k + 1, n):
            if m[i][k]:
                f = m[i][k] * inv
                row_i, row_k = m[i], m[k]
                for j in range(k + 1, n):
                    row_i[j] = row_i[j] - f * row_k[j]
    return result


def rref(rows, zero=Fraction(0), one=Fraction(1)):
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def solve(a, b, zero=Fraction(0), one=Fraction(1)):
    """One solution of a x = b (free variables set to 0), or None."""
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    if not aug:
        return [zero] * ncols
    m, pivots = rref(aug, zero, one)
    if ncols in pivots:
        return None
    x = [zero] * ncols
    for row, c in zip(m, pivots):
        x[c] = row[-1]
    return x


def nullspace(a, ncols, zero=Fraction(0), one=Fraction(1)):
    """Basis of {x : a x = 0}."""
    if not a:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(a, zero, one)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [zero] * ncols
        v[fcol] = one
        for row, c in zip(m, pivots):
            v[c] = -row[fcol]
        basis.append(v)
    return basis
