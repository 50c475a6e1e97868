import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from torus_zeta.dichotomy import (QQ, RadicalField, SeriesWindow, binomial_basis,
                                  build_exceptional_set, denominator, field_norm,
                                  fit_polyexp, hankel_det, kronecker_detect, lcm_den_growth,
                                  multiply_window_by_poly, pade_solvable, polya_decay_report,
                                  rational_window, vanishing_poly)
from torus_zeta.dichotomy import linalg, qpoly
from torus_zeta.errors import PreconditionViolated, WindowTooShortError
from torus_zeta.zeta import dichotomy_coefficients, spectral_data

from .corpus import companion_gf2

W = SeriesWindow.rational


# -- independent oracles --------------------------------------------------------


def leibniz(rows):
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        term = 1
        for i in range(n):
            term = term * rows[i][perm[i]]
        total = total + term if inv % 2 == 0 else total - term
    return total


def berlekamp_massey(u):
    """Shortest connection polynomial C (C[0] = 1) with sum C[i] u[n-i] = 0."""
    c, b = [Fraction(1)], [Fraction(1)]
    length, m, bb = 0, 1, Fraction(1)
    for n in range(len(u)):
        d = u[n] + sum(c[i] * u[n - i] for i in range(1, length + 1))
        if d == 0:
            m += 1
            continue
        coef = d / bb
        t = c[:]
        c = c + [Fraction(0)] * (len(b) + m - len(c))
        for i, x in enumerate(b):
            c[i + m] -= coef * x
        if 2 * length <= n:
            length, b, bb, m = n + 1 - length, t, d, 1
        else:
            m += 1
    return length, (c + [Fraction(0)] * (length + 1))[: length + 1]


def random_rational(rng, max_deg=4):
    while True:
        dq = rng.randint(0, max_deg)
        q = qpoly.qp([1] + [rng.randint(-3, 3) for _ in range(dq)])
        dp = rng.randint(0, max(qpoly.deg(q), 1) + 1)
        p = qpoly.qp([rng.randint(-3, 3) for _ in range(dp)])
        g = qpoly.gcd(p, q) if p else q
        if p and qpoly.deg(g) == 0:
            return p, q


# -- Hankel ------------------------------------------------------------------------


def test_hankel_det_examples():
    ones = W([1] * 6)
    assert hankel_det(ones, 0, 1) == 0
    assert hankel_det(ones, 0, 0) == 1
    assert hankel_det(W([2**n for n in range(6)]), 0, 1) == 0
    with pytest.raises(WindowTooShortError):
        hankel_det(ones, 2, 2)


def test_hankel_det_matches_leibniz():
    rng = random.Random(41)
    for _ in range(40):
        a = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(12)]
        l, m = rng.randint(0, 3), rng.randint(0, 3)
        rows = [[a[l + i + j] for j in range(m + 1)] for i in range(m + 1)]
        assert hankel_det(W(a), l, m) == leibniz(rows)


def test_hankel_det_radical_field():
    k = RadicalField(3, 2)
    rng = random.Random(42)
    for _ in range(10):
        a = [k([rng.randint(-3, 3), rng.randint(-3, 3)]) for _ in range(7)]
        w = SeriesWindow(k, tuple(a))
        rows = [[a[i + j] for j in range(3)] for i in range(3)]
        assert hankel_det(w, 0, 2) == leibniz(rows)


def test_pade_equivalence():
    rng = random.Random(43)
    agree = 0
    for _ in range(50):
        p, q = random_rational(rng)
        w = W(qpoly.series(p, q, 20))
        for l in range(0, 4):
            for m in range(0, 5):
                if l + 2 * m > w.T:
                    continue
                assert (hankel_det(w, l, m) == 0) == pade_solvable(w, l, m)
                agree += 1
    assert agree > 500


# -- Kronecker -----------------------------------------------------------------------


def test_kronecker_examples():
    assert kronecker_detect(W([1] * 12), 1, 4) == ((1,), (1, -1))
    fib = W(qpoly.series(qpoly.qp([1, 1]), qpoly.qp([1, -1, -1]), 14))
    assert kronecker_detect(fib, 2, 4) == ((1, 1), (1, -1, -1))
    assert kronecker_detect(fib, 1, 4) is None
    with pytest.raises(WindowTooShortError):
        kronecker_detect(W([1] * 9), 1, 4)


def test_kronecker_none_on_transcendental_window():
    w = dichotomy_coefficients(spectral_data(companion_gf2()), 48)
    for m in range(11):
        assert kronecker_detect(w, m, 4) is None


def test_kronecker_recovers_rational_windows():
    rng = random.Random(44)
    for _ in range(50):
        p, q = random_rational(rng)
        rho = max(qpoly.deg(q), qpoly.deg(p) + 1)
        w = W(qpoly.series(p, q, 2 * (rho + 4) + 1))
        for n in range(rho, rho + 5):
            assert hankel_det(w, 0, n) == 0
        if rho > 0:
            assert hankel_det(w, 0, rho - 1) != 0
        got = kronecker_detect(w, rho, 4)
        assert got == (p, q) or got == (tuple(x / q[0] for x in p), tuple(x / q[0] for x in q))


def test_kronecker_idempotent_with_rational_window():
    rng = random.Random(45)
    for _ in range(20):
        p, q = random_rational(rng)
        m = max(qpoly.deg(q), qpoly.deg(p) + 1)
        rw = rational_window(p, q, m, m + 30)
        # reconstruct the full window from index 0 and detect again
        full = W(qpoly.series(p, q, m + 31))
        assert list(full.coeffs[m:]) == list(rw.window.coeffs)
        assert kronecker_detect(full, m, 4) == (p, q)


# -- norms and denominators -----------------------------------------------------------


def test_field_norm_examples():
    k = RadicalField(2, 2)
    assert field_norm(k.theta_power(1)) == -2
    assert field_norm(k(1)) == 1
    assert field_norm(QQ(Fraction(1, 2))) == Fraction(1, 2)
    assert field_norm(Fraction(1, 2)) == Fraction(1, 2)


radical_pairs = st.tuples(
    st.sampled_from([(2, 2), (3, 2), (2, 3), (5, 3), (3, 1)]),
    st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=3, max_size=3),
    st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=3, max_size=3))


@given(radical_pairs)
def test_field_norm_multiplicative(args):
    (p, s), xc, yc = args
    k = RadicalField(p, s)
    x, y = k(xc[:s]), k(yc[:s])
    assert field_norm(x * y) == field_norm(x) * field_norm(y)
    # the norm is the product of all complex embeddings
    emb = 1
    for z in x.embeddings():
        emb *= z
    assert abs(emb - float(field_norm(x))) < 1e-6 * (1 + abs(emb))
    if x:
        assert x * x.inverse() == k(1)


def test_denominator_examples():
    assert denominator(Fraction(1, 2)) == 2
    assert denominator(QQ(Fraction(1, 16))) == 16
    assert denominator(RadicalField(2, 2)([0, Fraction(1, 3)])) == 3


@given(st.sampled_from([(2, 2), (3, 3), (7, 1)]),
       st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=30), min_size=3, max_size=3))
def test_denominator_minimal(ps, coords):
    p, s = ps
    x = RadicalField(p, s)(coords[:s])
    den = denominator(x)
    assert all((den * c).denominator == 1 for c in x.coords)
    assert not any(all((d * c).denominator == 1 for c in x.coords) for d in range(1, den))


# -- growth ------------------------------------------------------------------------------


def test_lcm_den_growth_examples():
    w = W([0] + [Fraction(1, k) for k in range(1, 11)])
    rep = lcm_den_growth(w, None, 10)
    assert rep.L_n == 2520 and rep.sequence[:4] == (1, 2, 6, 12)
    ints = W(list(range(12)))
    assert lcm_den_growth(ints, build_exceptional_set(2, 11), 11).L_n == 1
    with pytest.raises(WindowTooShortError):
        lcm_den_growth(ints, None, 12)


def test_lcm_den_growth_transcendental_window():
    w = dichotomy_coefficients(spectral_data(companion_gf2()), 64)
    s = build_exceptional_set(2, 64)
    rep = lcm_den_growth(w, s, 64)
    for v in range(7):
        k = 2**v
        assert denominator(w[k]) == 2 ** (2**v)
    # removing S caps v_2(k), so the lcm grows far slower than without it
    assert rep.L_n == max(denominator(w[k]) for k in range(1, 65) if k not in s)
    full = lcm_den_growth(w, None, 64)
    assert full.L_n == 2**64
    assert rep.L_n < full.L_n


def test_binomial_basis_examples():
    assert binomial_basis([0, 0, 1]).alphas == (0, 1, 2)
    assert binomial_basis([1]).alphas == (1,)
    assert binomial_basis([0, 0, 0, 1]).alphas == (0, 1, 6, 6)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=7))
def test_binomial_basis_bound_and_reconstruction(coeffs):
    p = qpoly.qp(coeffs)
    if not p:
        return
    bb = binomial_basis(p)
    assert bb.bound_ok
    for z in range(-3, 10):
        val = sum(a * math.comb(z, i) if z >= 0 else a * _gbinom(z, i) for i, a in enumerate(bb.alphas))
        assert val == qpoly.evaluate(p, z)


def _gbinom(z, i):
    num = 1
    for j in range(i):
        num *= z - j
    return Fraction(num, math.factorial(i))


def test_vanishing_poly_examples():
    s = build_exceptional_set(2, 10)
    assert s.members == (2, 4, 8)
    assert vanishing_poly(s, 10) == tuple(qpoly.from_roots([2, 4, 8]))
    assert vanishing_poly(s, 10) == (-64, 56, -14, 1)
    assert vanishing_poly(build_exceptional_set(2, 1), 10) == (1,)
    assert vanishing_poly(s, 0) == (1,)


# -- recurrences -------------------------------------------------------------------------


def test_fit_polyexp_examples():
    fit = fit_polyexp(W([2**n + 3**n for n in range(10)]))
    assert (fit.r, fit.s_roots, fit.charpoly, fit.proper) == (2, 2, (6, -5, 1), True)
    fit = fit_polyexp(W([n * 2**n for n in range(10)]))
    assert (fit.r, fit.s_roots, fit.charpoly) == (2, 1, (4, -4, 1))
    fit = fit_polyexp(W([0] * 7))
    assert (fit.r, fit.s_roots) == (0, 0)


def test_fit_polyexp_improper_fallback():
    u = [1, 0, 0, 0, 0, 0, 1]
    fit = fit_polyexp(W(u))
    assert not fit.proper
    assert fit.extend(u, len(u)) == u


def _random_lrs(rng, n):
    r = rng.randint(1, 4)
    roots = [rng.randint(-3, 4) for _ in range(r)]
    char = qpoly.from_roots(roots)
    u = [Fraction(rng.randint(-5, 5)) for _ in range(r)]
    while len(u) < n:
        u.append(-sum(char[i] * u[len(u) - r + i] for i in range(r)))
    return u


def test_fit_polyexp_matches_berlekamp_massey():
    rng = random.Random(46)
    for _ in range(40):
        u = _random_lrs(rng, 14)
        fit = fit_polyexp(W(u))
        length, conn = berlekamp_massey(u)
        assert fit.r == length
        if fit.proper:
            # reversed connection polynomial is the characteristic polynomial
            assert fit.charpoly == qpoly.qp(list(reversed(conn)))


def test_fit_polyexp_minimal_and_stable():
    rng = random.Random(47)
    for _ in range(30):
        u = _random_lrs(rng, 12)
        fit = fit_polyexp(W(u))
        assert fit.extend(u, len(u)) == u
        r = fit.r
        if r:
            rows = [u[k: k + r - 1] for k in range(len(u) - r + 1)]
            assert linalg.solve(rows, [u[k + r - 1] for k in range(len(u) - r + 1)]) is None
        regen = fit.extend(u, 20)
        again = fit_polyexp(W(regen))
        if fit.proper:
            assert (again.r, again.charpoly) == (fit.r, fit.charpoly)
            # two proper fits of the same window agree, whatever the window order
            rev = fit_polyexp(W(list(reversed(u))))
            if rev.genuine and fit.genuine:
                assert rev.r == fit.r


def test_multiply_window_by_poly_examples():
    w = W([2**n + 3**n for n in range(12)])
    assert fit_polyexp(multiply_window_by_poly(w, [0, 1])).r == 4
    assert multiply_window_by_poly(w, [1]) == w
    assert multiply_window_by_poly(W([1, 1, 1]), [-5, 1], 5)[0] == 0


def test_rank_law():
    rng = random.Random(48)
    checked = 0
    while checked < 20:
        u = _random_lrs(rng, 24)
        w = W(u)
        fit = fit_polyexp(w)
        q = qpoly.qp([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))] + [1])
        prod = fit_polyexp(multiply_window_by_poly(w, q, 0))
        expect = fit.r + qpoly.deg(q) * fit.s_roots
        if not (fit.proper and fit.genuine and 2 * expect <= len(u)):
            continue
        # Q may vanish at an index and cancel a term; skip windows where it does
        if any(qpoly.evaluate(q, n) == 0 for n in range(len(u))):
            continue
        assert prod.r == expect
        checked += 1


def test_rational_window_examples():
    rw = rational_window([1], [1, -1], 1, 8)
    assert list(rw.window.coeffs) == [1] * 8 and rw.expected_rank == 1
    rw = rational_window([1], qpoly.mul(qpoly.qp([1, -2]), qpoly.qp([1, -3])), 2, 11)
    assert fit_polyexp(rw.window).r == 2 == rw.expected_rank
    rw = rational_window([0, 1], [1], 2, 8)
    assert not any(rw.window.coeffs) and rw.expected_rank == 0 == fit_polyexp(rw.window).r


def test_rational_window_preconditions():
    with pytest.raises(PreconditionViolated) as ex:
        rational_window([1, 0, 1], [0, 1], 1, 0)
    assert set(ex.value.failed) == {"Q(0) != 0", "deg P <= M-1", "N >= M"}
    with pytest.raises(PreconditionViolated) as ex:
        rational_window([1, -1], [1, -1], 3, 8)
    assert ex.value.failed == ["gcd(P, Q) = 1"]


def test_rational_window_rank_equals_deg_q():
    rng = random.Random(49)
    for _ in range(20):
        p, q = random_rational(rng)
        m = max(qpoly.deg(q), qpoly.deg(p) + 1)
        rw = rational_window(p, q, m, m + 2 * qpoly.deg(q) + 5)
        assert fit_polyexp(rw.window).r == rw.expected_rank == qpoly.deg(q)


# -- exceptional set -------------------------------------------------------------------------


def _member(k, p):
    l = 1
    while p**l < k:
        l += 1
    j = 0
    while p ** (j + 1) <= l:
        j += 1
    return k > 1 and k % p ** (l - j) == 0


def test_build_exceptional_set_examples():
    assert build_exceptional_set(2, 16).members == (2, 4, 8, 12, 16)
    assert build_exceptional_set(3, 3).members == (3,)
    assert build_exceptional_set(2, 1).members == ()
    s = build_exceptional_set(2, 16)
    assert math.isclose(s.c5, 1 / math.log(2))
    assert 12 in s and 10 not in s


@pytest.mark.parametrize("p", [2, 3, 7])
def test_exceptional_set_membership_and_density(p):
    s = build_exceptional_set(p, 4096)
    assert set(s.members) == {k for k in range(1, 4097) if _member(k, p)}
    count = 0
    members = set(s.members)
    for n in range(1, 4097):
        count += n in members
        assert count <= s.density_bound(n)
    assert all(c <= b for _, c, b in s.density_report())


# -- Polya decay -------------------------------------------------------------------------------


def test_polya_decay_report():
    rep = polya_decay_report(W([Fraction(1, math.factorial(n)) for n in range(13)]), 6)
    roots = [r for _, _, r in rep]
    assert all(a > b for a, b in zip(roots, roots[1:]))
    rep = polya_decay_report(W([Fraction(1, 2**n) for n in range(9)]), 4)
    assert all(a == 0 for _, a, _ in rep)
    rep = polya_decay_report(W(qpoly.series(qpoly.qp([1]), qpoly.qp([1, -1, -1]), 13)), 6)
    assert [a for _, a, _ in rep][2:] == [0.0] * 4
    with pytest.raises(WindowTooShortError):
        polya_decay_report(W([1] * 5), 3)
