"""Both polynomial backends agree with a naive reference and with each other."""

import random

import pytest
from hypothesis import given, strategies as st

from torus_zeta import _pykernels, kernels
from torus_zeta.gfq import make_field

try:
    from torus_zeta import _kernels as _compiled
except ImportError:  # pragma: no cover - extension not built
    _compiled = None

IMPLS = [pytest.param(_pykernels, id="python"),
         pytest.param(_compiled, id="cython",
                      marks=pytest.mark.skipif(_compiled is None, reason="extension not built"))]


def _trim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return c


def ref_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def ref_add(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x + y) % p for x, y in zip(a, b)])


polys = st.lists(st.integers(0, 6), max_size=40).map(_trim)


@pytest.mark.parametrize("impl", IMPLS)
@given(a=polys, b=polys)
def test_prime_arith_matches_reference(impl, a, b):
    ar = impl.PrimeArith(7)
    assert list(ar.mul(a, b)) == ref_mul(a, b, 7)
    assert list(ar.add(a, b)) == ref_add(a, b, 7)
    assert list(ar.add(ar.sub(a, b), b)) == a
    if b:
        q, r = ar.divmod(a, b)
        assert list(ar.add(ar.mul(q, b), r)) == a
        assert len(r) < len(b)


@pytest.mark.parametrize("impl", IMPLS)
def test_prime_arith_large_prime(impl):
    p = 2**31 - 1
    ar = impl.PrimeArith(p)
    rng = random.Random(3)
    for _ in range(20):
        a = _trim([rng.randrange(p) for _ in range(rng.randrange(1, 30))])
        b = _trim([rng.randrange(p) for _ in range(rng.randrange(1, 30))])
        assert list(ar.mul(a, b)) == ref_mul(a, b, p)
        x = rng.randrange(1, p)
        assert ar.emul(x, ar.einv(x)) == 1


@pytest.mark.parametrize("impl", IMPLS)
@pytest.mark.parametrize("pe", [(2, 2), (2, 3), (3, 2), (5, 2)])
def test_table_arith_matches_coordinate_arithmetic(impl, pe):
    f = make_field(*pe)
    # rebuild the tables through the chosen backend
    py_ar = f.arith
    exp, log, zech = _tables(f)
    ar = impl.TableArith(f.p, f.q, exp, log, zech)
    for a in range(f.q):
        assert ar.eneg(a) == f._slow_neg(a)
        for b in range(f.q):
            assert ar.eadd(a, b) == f._slow_add(a, b)
            assert ar.emul(a, b) == f._slow_mul(a, b)
            assert ar.esub(a, b) == f._slow_add(a, f._slow_neg(b))
        if a:
            assert ar.einv(a) == f._slow_inv(a)
    rng = random.Random(100 * pe[0] + pe[1])
    for _ in range(30):
        a = _trim([rng.randrange(f.q) for _ in range(rng.randrange(0, 25))])
        b = _trim([rng.randrange(f.q) for _ in range(rng.randrange(0, 25))])
        assert list(ar.mul(a, b)) == list(py_ar.mul(a, b))
        if b:
            q, r = ar.divmod(a, b)
            assert list(ar.add(ar.mul(q, b), r)) == a


def _tables(f):
    qm1 = f.q - 1
    gen = next(g for g in range(2, f.q)
               if len({f._slow_pow(g, i) for i in range(qm1)}) == qm1)
    exp, log = [0] * qm1, [-1] * f.q
    x = 1
    for i in range(qm1):
        exp[i], log[x] = x, i
        x = f._slow_mul(x, gen)
    zech = [log[s] if s else -1 for s in (f._slow_add(1, exp[k]) for k in range(qm1))]
    return exp, log, zech


def test_backend_flag():
    assert kernels.BACKEND in ("cython", "python")
    if _compiled is not None:
        assert kernels.BACKEND == "cython" or __import__("os").environ.get("TORUS_ZETA_PURE")
