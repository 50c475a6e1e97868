"""Exact arithmetic in GF(p), GF(p^e) and towers GF(q^delta) over GF(q).

Elements are carried around as integer *codes*.  An element of a field
built over a base field B of order b with coordinates (c_0, ..., c_{e-1})
in the power basis of the modulus root has code ``sum(c_i * b**i)``.
Two consequences are used throughout the package:

* the embedding of a base-field element into an extension is the identity
  on codes, so lifting a polynomial to an extension costs nothing;
* the integer ``k`` (mod p) has code ``k % p`` in every field.

Small fields (order up to ``TABLE_LIMIT``) get exp/log/Zech-log tables and
the compiled kernels; larger ones fall back to coordinate arithmetic.
"""

import random
from functools import lru_cache

from . import kernels
from ._intmath import factorint, is_prime
from .errors import (
    BothZeroError,
    DegreeMismatchError,
    FieldMismatchError,
    NonPrimeError,
    NotIrreducibleError,
    ReducibleModulusError,
    ZeroPolynomialError,
    ZeroRootError,
)

TABLE_LIMIT = 1 << 16


class FieldDesc:
    """A finite field, either GF(p) or base[X]/(modulus).

    Build instances with :func:`make_field` or :func:`extend_field`; the
    constructor does not validate.
    """

    def __init__(self, p, e, modulus, base=None):
        self.p = p
        self.e = e
        self.base = base
        self.modulus = tuple(modulus)
        self.q = p if base is None else base.q ** e
        self.degree = 1 if base is None else base.degree * e
        self._key = (p, e, self.modulus, None if base is None else base._key)
        if base is None:
            self.arith = kernels.prime_arith(p)
        elif self.q <= TABLE_LIMIT:
            self.arith = self._build_tables()
        else:
            self.arith = kernels.generic_arith(
                self._slow_add, self._slow_neg, self._slow_mul, self._slow_inv)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, FieldDesc) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.base is None:
            return f"GF({self.p})"
        if self.base.base is None:
            return f"GF({self.p}^{self.e})"
        return f"GF({self.base!r}^{self.e})"

    @property
    def order(self):
        return self.q

    @property
    def prime_field(self):
        f = self
        while f.base is not None:
            f = f.base
        return f

    def is_subfield_of(self, other):
        f = other
        while f is not None:
            if f == self:
                return True
            f = f.base
        return False

    def to_json(self):
        d = {"p": self.p, "e": self.e, "modulus": list(self.modulus)}
        if self.base is not None and self.base.base is not None:
            d["base"] = self.base.to_json()
        return d

    # -- coordinate arithmetic (slow path, also used to build tables) -----

    def coords(self, code):
        if self.base is None:
            return (code,)
        b = self.base.q
        out = []
        for _ in range(self.e):
            code, r = divmod(code, b)
            out.append(r)
        return tuple(out)

    def from_coords(self, coords):
        if self.base is None:
            (c,) = coords
            return c % self.p
        if len(coords) != self.e:
            raise DegreeMismatchError(f"expected {self.e} coordinates, got {len(coords)}")
        b = self.base.q
        code = 0
        for c in reversed(coords):
            if not 0 <= c < b:
                raise ValueError(f"coordinate {c} out of range for {self.base!r}")
            code = code * b + c
        return code

    def _slow_add(self, a, b):
        ba = self.base.arith
        return self.from_coords(tuple(ba.eadd(x, y) for x, y in zip(self.coords(a), self.coords(b))))

    def _slow_neg(self, a):
        ba = self.base.arith
        return self.from_coords(tuple(ba.eneg(x) for x in self.coords(a)))

    def _slow_mul(self, a, b):
        ba = self.base.arith
        prod = ba.mul(list(self.coords(a)), list(self.coords(b)))
        _, r = ba.divmod(prod, list(self.modulus))
        r = r + [0] * (self.e - len(r))
        return self.from_coords(tuple(r))

    def _slow_pow(self, a, n):
        result = 1
        while n:
            if n & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            n >>= 1
        return result

    def _slow_inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return self._slow_pow(a, self.q - 2)

    def _build_tables(self):
        qm1 = self.q - 1
        primes = [ell for ell, _ in factorint(qm1)]
        for g in range(2, self.q):
            if all(self._slow_pow(g, qm1 // ell) != 1 for ell in primes):
                break
        else:  # pragma: no cover - a cyclic group always has a generator
            raise RuntimeError("no primitive element found")
        exp = [0] * qm1
        log = [-1] * self.q
        x = 1
        for i in range(qm1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        zech = [0] * qm1
        for k in range(qm1):
            s = self._slow_add(1, exp[k])
            zech[k] = log[s] if s else -1
        return kernels.table_arith(self.p, self.q, exp, log, zech)

    # -- element operations on codes -------------------------------------------

    def add(self, a, b):
        return self.arith.eadd(a, b)

    def sub(self, a, b):
        return self.arith.esub(a, b)

    def neg(self, a):
        return self.arith.eneg(a)

    def mul(self, a, b):
        return self.arith.emul(a, b)

    def inv(self, a):
        return self.arith.einv(a)

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        result = 1
        mul = self.arith.emul
        while n:
            if n & 1:
                result = mul(result, a)
            a = mul(a, a)
            n >>= 1
        return result

    def pth_root(self, a):
        # Frobenius is a bijection; its inverse is x -> x^(q/p).
        return self.pow(a, self.q // self.p)

    def elem(self, x):
        """Coerce an int code, coordinate sequence or FFElem to an FFElem."""
        if isinstance(x, FFElem):
            if not x.field.is_subfield_of(self):
                raise FieldMismatchError(f"{x.field!r} is not a subfield of {self!r}")
            return FFElem(self, x.code)
        if isinstance(x, int):
            if self.base is None:
                return FFElem(self, x % self.p)
            if not 0 <= x < self.q:
                raise ValueError(f"code {x} out of range for {self!r}")
            return FFElem(self, x)
        return FFElem(self, self.from_coords(tuple(x)))

    def elements(self):
        return [FFElem(self, c) for c in range(self.q)]

    @property
    def gen(self):
        """The class of X in base[X]/(modulus)."""
        if self.base is None:
            return FFElem(self, (-self.modulus[0]) % self.p)
        return FFElem(self, self.base.q if self.e > 1 else self.base.neg(self.modulus[0]))


class FFElem:
    """An element of a finite field (immutable)."""

    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = code

    @property
    def coords(self):
        return self.field.coords(self.code)

    def _other(self, other):
        if isinstance(other, FFElem):
            if other.field != self.field:
                raise FieldMismatchError(f"{other.field!r} vs {self.field!r}")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FFElem(self.field, self.field.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FFElem(self.field, self.field.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FFElem(self.field, self.field.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FFElem(self.field, self.field.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return FFElem(self.field, self.field.mul(self.code, self.field.inv(o)))

    def __neg__(self):
        return FFElem(self.field, self.field.neg(self.code))

    def __pow__(self, n):
        return FFElem(self.field, self.field.pow(self.code, n))

    def inverse(self):
        return FFElem(self.field, self.field.inv(self.code))

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FFElem):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p and self.code < self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __repr__(self):
        if self.field.base is None:
            return str(self.code)
        return f"{self.field!r}{list(self.coords)}"

    def multiplicative_order(self):
        if not self.code:
            raise ZeroRootError("zero has no multiplicative order")
        return _order_in_group(lambda n: self.field.pow(self.code, n) == 1, self.field.q - 1)


def _order_in_group(is_identity_power, group_order):
    order = group_order
    for ell, k in factorint(group_order):
        for _ in range(k):
            if order % ell == 0 and is_identity_power(order // ell):
                order //= ell
            else:
                break
    return order


class FFPoly:
    """Univariate polynomial over a :class:`FieldDesc`, little-endian codes.

    The zero polynomial has empty ``coeffs`` and degree -1.
    """

    __slots__ = ("field", "coeffs")
    var = "X"

    def __init__(self, field, coeffs=()):
        out = []
        for c in coeffs:
            if isinstance(c, FFElem):
                out.append(field.elem(c).code)
            elif field.base is None:
                out.append(c % field.p)
            else:
                if not 0 <= c < field.q:
                    raise ValueError(f"code {c} out of range for {field!r}")
                out.append(c)
        while out and not out[-1]:
            out.pop()
        self.field = field
        self.coeffs = tuple(out)

    @classmethod
    def _raw(cls, field, coeffs):
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def x(cls, field):
        return cls._raw(field, (0, 1))

    @classmethod
    def one(cls, field):
        return cls._raw(field, (1,))

    @classmethod
    def constant(cls, field, c):
        return cls(field, [c])

    def lift(self, field):
        """The same polynomial viewed over an extension ``field``."""
        if not self.field.is_subfield_of(field):
            raise FieldMismatchError(f"{self.field!r} is not a subfield of {field!r}")
        return type(self)._raw(field, self.coeffs)

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def is_one(self):
        return self.coeffs == (1,)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, FFPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == FFPoly(self.field, [other]).coeffs
        return NotImplemented

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
            cs = repr(FFElem(self.field, c))
            v = self.var
            if i == 0:
                terms.append(cs)
            elif c == 1:
                terms.append(v if i == 1 else f"{v}^{i}")
            else:
                terms.append(f"{cs}*{v}" if i == 1 else f"{cs}*{v}^{i}")
        return " + ".join(terms)

    # -- ring operations -----------------------------------------------------

    def _check(self, other):
        if not isinstance(other, FFPoly):
            return False
        if other.field != self.field:
            raise FieldMismatchError(f"{other.field!r} vs {self.field!r}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return type(self)._raw(self.field, self.field.arith.add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return type(self)._raw(self.field, self.field.arith.sub(self.coeffs, other.coeffs))

    def __neg__(self):
        return type(self)._raw(self.field, self.field.arith.neg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, FFElem)):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        return type(self)._raw(self.field, self.field.arith.mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def scale(self, c):
        c = self.field.elem(c).code
        return type(self)._raw(self.field, self.field.arith.scale(self.coeffs, c))

    def __divmod__(self, other):
        if not self._check(other):
            return NotImplemented
        q, r = self.field.arith.divmod(self.coeffs, other.coeffs)
        cls = type(self)
        return cls._raw(self.field, q), cls._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other!r} does not divide {self!r}")
        return q

    def divides(self, other):
        return not (other % self)

    def __pow__(self, n):
        result = type(self).one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def powmod(self, n, modulus):
        result = type(self).one(self.field) % modulus
        base = self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            n >>= 1
        return result

    def monic(self):
        if not self.coeffs or self.lc == 1:
            return self
        return self.scale(self.field.inv(self.lc))

    def derivative(self):
        f = self.field
        return type(self)(f, [f.mul(c, i % f.p) for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Evaluate at an element (code or FFElem of a field containing ours)."""
        if isinstance(x, FFElem):
            fld, code = x.field, x.code
            if not self.field.is_subfield_of(fld):
                raise FieldMismatchError(f"{self.field!r} not a subfield of {fld!r}")
        else:
            fld, code = self.field, x
        acc = 0
        for c in reversed(self.coeffs):
            acc = fld.add(fld.mul(acc, code), c)
        return FFElem(fld, acc) if isinstance(x, FFElem) else acc

    def trailing_zeros(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def elements(self):
        return [FFElem(self.field, c) for c in self.coeffs]


# -- fields ---------------------------------------------------------------


def _rabin_irreducible(f):
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    q = f.field.q
    x = FFPoly.x(f.field)
    for ell, _ in factorint(n):
        h = x.powmod(q ** (n // ell), f) - x
        if not poly_gcd(f, h).is_one():
            return False
    return (x.powmod(q ** n, f) - x) % f == FFPoly(f.field)


def is_irreducible(f):
    """Rabin's test over the coefficient field of ``f``."""
    return _rabin_irreducible(f.monic()) if f else False


@lru_cache(maxsize=None)
def _prime_field(p):
    return FieldDesc(p, 1, (0, 1))


def _smallest_irreducible(base, e):
    b = base.q
    for c in range(b ** e):
        coeffs = []
        for _ in range(e):
            c, r = divmod(c, b)
            coeffs.append(r)
        f = FFPoly._raw(base, tuple(coeffs) + (1,))
        if coeffs[0] and _rabin_irreducible(f):
            return f
        if e == 1:
            return f
    raise RuntimeError("no irreducible polynomial found")  # pragma: no cover


@lru_cache(maxsize=None)
def _cached_extension(base, e, modulus):
    return FieldDesc(base.p, e, modulus, base)


def make_field(p, e=1, modulus=None):
    """GF(p^e) with the given (or the canonical) modulus over GF(p).

    Without a modulus the smallest monic irreducible of degree e is taken,
    scanning candidates in increasing order of ``sum(a_i * p**i)`` over the
    non-leading coefficients.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NonPrimeError(f"p={p!r} is not prime")
    if e < 1:
        raise DegreeMismatchError(f"extension degree must be >= 1, got {e}")
    gf = _prime_field(p)
    if modulus is None:
        if e == 1:
            return gf
        modulus = _smallest_irreducible(gf, e)
    return extend_field(gf, modulus, e)


def extend_field(base, modulus, degree=None):
    """The extension base[X]/(modulus) for a monic irreducible modulus."""
    if not isinstance(modulus, FFPoly):
        modulus = FFPoly(base, modulus)
    if modulus.field != base:
        raise FieldMismatchError(f"modulus lives over {modulus.field!r}, not {base!r}")
    if degree is not None and modulus.degree != degree:
        raise DegreeMismatchError(f"modulus has degree {modulus.degree}, expected {degree}")
    if modulus.degree < 1:
        raise DegreeMismatchError("modulus must have degree >= 1")
    if modulus.lc != 1:
        raise ValueError("modulus must be monic")
    if not _rabin_irreducible(modulus):
        raise ReducibleModulusError(f"{modulus!r} is reducible over {base!r}")
    if modulus.degree == 1:
        return base
    return _cached_extension(base, modulus.degree, modulus.coeffs)


# -- polynomial algorithms --------------------------------------------------


def poly_gcd(f, g):
    """Monic gcd of two polynomials, not both zero."""
    if not f and not g:
        raise BothZeroError("gcd(0, 0) is undefined")
    while g:
        f, g = g, f % g
    return f.monic()


def _pth_root_poly(f):
    fld = f.field
    p = fld.p
    return type(f)(fld, [fld.pth_root(f.coeffs[i]) for i in range(0, len(f.coeffs), p)])


def squarefree_decomposition(f):
    """Monic squarefree factors with multiplicities: f = lc * prod(g_i^m_i).

    The g_i are pairwise coprime but not necessarily irreducible.
    """
    if not f:
        raise ZeroPolynomialError("cannot decompose the zero polynomial")
    f = f.monic()
    p = f.field.p
    out = {}

    def rec(f, mult):
        if f.degree < 1:
            return
        d = f.derivative()
        if not d:
            rec(_pth_root_poly(f), mult * p)
            return
        c = poly_gcd(f, d)
        w = f.exact_div(c)
        i = 1
        while w.degree > 0:
            y = poly_gcd(w, c)
            fac = w.exact_div(y)
            if fac.degree > 0:
                out[fac] = out.get(fac, 0) + i * mult
            i += 1
            w = y
            c = c.exact_div(y)
        if c.degree > 0:
            rec(_pth_root_poly(c), mult * p)

    rec(f, 1)
    return sorted(out.items(), key=lambda t: (t[1], t[0].degree, t[0].coeffs))


def squarefree_part(f):
    """Monic polynomial with the same roots as ``f``, each simple."""
    if not f:
        raise ZeroPolynomialError("squarefree part of zero")
    out = type(f).one(f.field)
    for g, _ in squarefree_decomposition(f):
        out = out * g
    return out


def distinct_degree_factor(f):
    """Split a monic squarefree f into products of same-degree irreducibles."""
    q = f.field.q
    x = type(f).x(f.field)
    out = []
    h = x
    i = 1
    while f.degree >= 2 * i:
        h = h.powmod(q, f)
        g = poly_gcd(f, h - x)
        if not g.is_one():
            out.append((g, i))
            f = f.exact_div(g)
            h = h % f
        i += 1
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def equal_degree_factor(f, d, rng=None):
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    if f.degree == d:
        return [f]
    fld = f.field
    if rng is None:
        rng = random.Random(repr((fld._key, f.coeffs)))
    n = f.degree
    q = fld.q
    cls = type(f)
    while True:
        a = cls(fld, [rng.randrange(q) for _ in range(n)])
        if a.degree < 1:
            continue
        if fld.p == 2:
            # absolute trace GF(2^(k d)) -> GF(2), computed mod f
            b = a % f
            t = b
            for _ in range(fld.degree * d - 1):
                b = (b * b) % f
                t = t + b
        else:
            t = a.powmod((q ** d - 1) // 2, f) - cls.one(fld)
        g = poly_gcd(f, t) if t else f
        if 0 < g.degree < n:
            h = f.exact_div(g)
            return equal_degree_factor(g, d, rng) + equal_degree_factor(h, d, rng)


def ff_factor(f):
    """Irreducible factorization: list of (monic irreducible, multiplicity)."""
    if not f:
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    out = []
    for g, m in squarefree_decomposition(f):
        for part, d in distinct_degree_factor(g):
            for h in equal_degree_factor(part, d):
                out.append((h.monic(), m))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs, t[1]))
    return out


def order_of_root(h):
    """Multiplicative order of the class of X in GF(q)[X]/(h)."""
    if not h or h.degree < 1:
        raise NotIrreducibleError("need a polynomial of degree >= 1")
    if h.lc != 1:
        raise ValueError("h must be monic")
    if h.coeffs[0] == 0:
        raise ZeroRootError("h(0) = 0: X is not a unit modulo h")
    if not _rabin_irreducible(h):
        raise NotIrreducibleError(f"{h!r} is not irreducible")
    x = type(h).x(h.field)
    one = type(h).one(h.field)
    return _order_in_group(lambda n: x.powmod(n, h) == one, h.field.q ** h.degree - 1)


def root_field(h):
    """(E, zeta): a field E containing a root zeta of the irreducible h."""
    if h.degree == 1:
        h = h.monic()
        return h.field, FFElem(h.field, h.field.neg(h.coeffs[0]))
    ext = extend_field(h.field, h.monic())
    return ext, ext.gen
