import itertools
import random

import pytest
from hypothesis import given, strategies as st

from torus_zeta.errors import FieldMismatchError, SingularMatrixError
from torus_zeta.funcfield import (AbsVal, BiPoly, PolyMatrix, TPoly, abs_value, bipoly_shift,
                                  charpoly, fixed_point_count_snf, mat_det, mat_pow,
                                  smith_normal_form)
from torus_zeta.gfq import FFElem, make_field

from .corpus import F2, F3, F4, F7, companion_gf2, random_matrix


def T(f, coeffs):
    return TPoly(f, coeffs)


def _perm_sign(perm):
    sign = 1
    for i, j in itertools.combinations(range(len(perm)), 2):
        if perm[i] > perm[j]:
            sign = -sign
    return sign


def leibniz_det(m):
    """Independent oracle: sum over permutations."""
    f, d = m.field, m.d
    acc = T(f, [])
    for perm in itertools.permutations(range(d)):
        term = T(f, [1])
        for i in range(d):
            term = term * m[i, perm[i]]
        acc = acc + term if _perm_sign(perm) > 0 else acc - term
    return acc


tpolys = st.builds(lambda c: T(F3, c), st.lists(st.integers(0, 2), max_size=8))


# -- absolute value ----------------------------------------------------------


def test_abs_value_examples():
    assert abs_value(T(F2, [1, 0, 0, 1])) == AbsVal(False, 3)
    assert abs_value(T(F2, [])).zero
    assert abs_value(T(F7, [5])) == AbsVal(False, 0)
    assert abs_value(T(F2, [0, 1, 1])).value(2) == 4


@given(tpolys, tpolys)
def test_abs_value_multiplicative_and_ultrametric(x, y):
    assert abs_value(x * y) == abs_value(x) * abs_value(y)
    s = abs_value(x + y)
    assert s <= abs_value(x) or s <= abs_value(y)


# -- determinants and powers -------------------------------------------------


def test_mat_det_examples():
    assert mat_det(PolyMatrix(F2, [[[1], [0, 1]], [[1], [1, 1]]])) == T(F2, [1])
    assert mat_det(PolyMatrix.identity(F7, 3)) == T(F7, [1])
    assert mat_det(companion_gf2()) == T(F2, [0, 1])


def test_mat_det_matches_leibniz():
    rng = random.Random(11)
    for _ in range(60):
        m = random_matrix(rng, d=rng.randint(1, 4), max_deg=3)
        assert mat_det(m) == leibniz_det(m)


def test_mat_det_multiplicative():
    rng = random.Random(12)
    for _ in range(50):
        q = rng.choice([2, 3, 4, 7])
        d = rng.randint(1, 4)
        a = random_matrix(rng, q=q, d=d)
        b = random_matrix(rng, q=q, d=d)
        assert mat_det(a * b) == mat_det(a) * mat_det(b)


def test_mat_pow_examples():
    a = companion_gf2()
    assert mat_pow(a, 2) == PolyMatrix(F2, [[[0, 1], [0, 0, 1]], [[0, 1], [0, 1, 1]]])
    assert mat_pow(PolyMatrix.identity(F7, 2), 9) == PolyMatrix.identity(F7, 2)
    assert mat_pow(a, 1) == a


def test_mat_pow_matches_repeated_product():
    rng = random.Random(13)
    for _ in range(20):
        a = random_matrix(rng)
        acc = a
        for k in range(2, 10):
            acc = acc * a
            assert mat_pow(a, k) == acc


# -- characteristic polynomial -----------------------------------------------


def test_charpoly_examples():
    assert charpoly(companion_gf2()) == BiPoly(F2, [[0, 1], [0, 1], [1]])
    assert charpoly(PolyMatrix.diag(F7, [6, 2])) == BiPoly(F7, [[5], [6], [1]])
    assert charpoly(PolyMatrix.zero(F2, 2)) == BiPoly(F2, [[], [], [1]])


def test_charpoly_cayley_hamilton():
    rng = random.Random(14)
    for _ in range(30):
        m = random_matrix(rng)
        chi = charpoly(m)
        assert chi.degree == m.d and chi.lc == T(m.field, [1])
        assert chi.eval_matrix(m) == PolyMatrix.zero(m.field, m.d)


def test_charpoly_at_constants_matches_det():
    rng = random.Random(15)
    for _ in range(20):
        m = random_matrix(rng)
        chi = charpoly(m)
        for c in range(m.field.q):
            ct = T(m.field, [c])
            at_c = T(m.field, [])
            for coef in reversed(chi.coeffs):
                at_c = at_c * ct + coef
            assert at_c == mat_det(PolyMatrix.identity(m.field, m.d) * ct - m)


# -- Smith normal form -------------------------------------------------------


def _snf_factors(m):
    return [tuple(b.coeffs) for b in smith_normal_form(m)[3]]


def test_snf_examples():
    assert _snf_factors(PolyMatrix.diag(F2, [[0, 1], [0, 1, 1]])) == [(0, 1), (0, 1, 1)]
    assert _snf_factors(PolyMatrix.diag(F2, [[1, 1], [0, 1]])) == [(1,), (0, 1, 1)]
    assert _snf_factors(PolyMatrix(F2, [[[1], [0, 1]], [[1], [1, 1]]])) == [(1,), (1,)]


def test_snf_singular():
    with pytest.raises(SingularMatrixError):
        smith_normal_form(PolyMatrix.identity(F7, 2) - PolyMatrix.identity(F7, 2))


def test_snf_properties():
    rng = random.Random(16)
    checked = 0
    while checked < 40:
        m = random_matrix(rng, d=rng.randint(1, 4), max_deg=3)
        if not mat_det(m):
            continue
        u, dmat, v, fac = smith_normal_form(m)
        assert u * m * v == dmat
        assert mat_det(u).degree == 0 and mat_det(v).degree == 0
        for i in range(m.d):
            for j in range(m.d):
                if i != j:
                    assert not dmat[i, j]
        for a, b in zip(fac, fac[1:]):
            assert not (b % a)
        assert all(b.lc == 1 for b in fac)
        assert sum(b.degree for b in fac) == mat_det(m).degree
        checked += 1


def test_fixed_point_count_examples():
    assert fixed_point_count_snf(PolyMatrix.diag(F2, [[0, 1], [1, 1]])) == 4
    assert fixed_point_count_snf(PolyMatrix.identity(F2, 2)) == 0
    assert fixed_point_count_snf(PolyMatrix.zero(F2, 2)) == 1


def test_fixed_point_count_matches_det_degree():
    rng = random.Random(17)
    for _ in range(40):
        b = random_matrix(rng)
        det = mat_det(b - PolyMatrix.identity(b.field, b.d))
        expect = b.field.q ** det.degree if det else 0
        assert fixed_point_count_snf(b) == expect


# -- shifts ------------------------------------------------------------------


def test_bipoly_shift_examples():
    chi = BiPoly(F2, [[0, 1], [0, 1], [1]])
    assert bipoly_shift(chi, FFElem(F2, 1)) == BiPoly(F2, [[1], [0, 1], [1]])
    assert bipoly_shift(chi, FFElem(F2, 0)) == chi
    z = F4.gen
    lin = BiPoly(F4, [[F4.neg(z.code)], [1]])
    assert bipoly_shift(lin, z) == BiPoly.x(F4)


def test_bipoly_shift_roundtrip_and_field_check():
    rng = random.Random(18)
    for _ in range(20):
        m = random_matrix(rng, q=4)
        chi = charpoly(m)
        z = FFElem(F4, rng.randrange(4))
        assert bipoly_shift(bipoly_shift(chi, z), -z) == chi
    with pytest.raises(FieldMismatchError):
        bipoly_shift(BiPoly.x(F7), FFElem(F4, 1))
