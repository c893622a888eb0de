"""Exact arithmetic in the cyclotomic field Q(zeta) with zeta a primitive 2p-th root of unity.

Elements are stored as residues modulo the 2p-th cyclotomic polynomial, so two
elements are equal exactly when their coefficient vectors agree.  Internally a
``CycNum`` keeps a tuple of integer numerators over one positive common
denominator, normalised so the gcd of all of them is 1.  This is much cheaper
than a vector of ``Fraction`` objects and still canonical.

The generator ``zeta`` plays the role of ``q = exp(pi i / p)``.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC

__all__ = [
    "Rational",
    "CycNum",
    "CyclotomicField",
    "RationalPoly",
    "ParameterError",
    "cyclotomic_polynomial",
    "cyc_mul",
    "cyc_inv",
    "field",
    "q_int",
    "q_power",
]

# Coefficient domain: exact rationals in lowest terms with positive denominator.
Rational = Fraction


class ParameterError(ValueError):
    """Raised on out-of-range or mismatched parameters."""


# ---------------------------------------------------------------------------
# polynomials with Fraction coefficients (lists, lowest degree first)
# ---------------------------------------------------------------------------

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _qpoly_divmod(a, b):
    a = [Fraction(x) for x in a]
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        factor = a[-1] / lead
        quot[shift] = factor
        for i, bc in enumerate(b):
            a[shift + i] -= factor * bc
    return _trim(quot), a


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, y in enumerate(b):
        a[i] -= y
    return _trim(a)


_phi_lock = threading.Lock()
_phi_cache: dict[int, tuple[int, ...]] = {}


def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    with _phi_lock:
        hit = _phi_cache.get(n)
    if hit is not None:
        return hit
    # x^n - 1 divided by the product of Phi_d over proper divisors d of n
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    den = [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            den = _qpoly_mul(den, [Fraction(c) for c in _cyclotomic_coeffs(d)])
    quot, rem = _qpoly_divmod(num, den)
    assert not rem and all(c.denominator == 1 for c in quot)
    result = tuple(int(c) for c in quot)
    with _phi_lock:
        _phi_cache[n] = result
    return result


# ---------------------------------------------------------------------------
# the field
# ---------------------------------------------------------------------------

class CyclotomicField:
    """Q(zeta_{2p}) presented as Q[x] / Phi_{2p}(x).

    Use :func:`field` to obtain the shared instance for a given ``p``; all
    tables are filled in the constructor and never mutated afterwards.
    """

    def __init__(self, p: int):
        if p < 2:
            raise ParameterError(f"p must be >= 2, got {p}")
        self.p = p
        self.order = 2 * p
        self.modulus = _cyclotomic_coeffs(2 * p)
        self.degree = len(self.modulus) - 1
        d = self.degree
        # reduction of x^k for d <= k <= 2d - 2 (integer vectors, Phi is monic)
        self._reduce = {}
        # x^d = -(lower part of Phi)
        cur = [-c for c in self.modulus[:d]]
        for k in range(d, 2 * d - 1):
            self._reduce[k] = tuple(cur)
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * self.modulus[i]
        self._zeta_pows = []
        for k in range(self.order):
            self._zeta_pows.append(CycNum._raw(self, self._reduce_ints(self._xpow(k)), 1))
        self.zero = CycNum._raw(self, (0,) * d, 1)
        self.one = self._zeta_pows[0]

    def _xpow(self, k):
        v = [0] * (k + 1)
        v[k] = 1
        return v

    def _reduce_ints(self, v):
        """Reduce an integer coefficient list of any length modulo Phi."""
        d = self.degree
        v = list(v)
        mod = self.modulus
        for k in range(len(v) - 1, d - 1, -1):
            c = v[k]
            if c:
                v[k] = 0
                for i in range(d):
                    v[k - d + i] -= c * mod[i]
        v = v[:d] + [0] * (d - len(v))
        return tuple(v)

    # constructors -----------------------------------------------------------
    def zeta(self, k: int = 1) -> CycNum:
        """zeta**k for any integer k."""
        return self._zeta_pows[k % self.order]

    def __call__(self, value) -> CycNum:
        return self.coerce(value)

    def coerce(self, value) -> CycNum:
        if isinstance(value, CycNum):
            if value.field is not self:
                raise ParameterError(f"field mismatch: p={value.p} vs p={self.p}")
            return value
        if isinstance(value, (int, _RationalABC)):
            value = Fraction(value)
            nums = (value.numerator,) + (0,) * (self.degree - 1)
            return CycNum._raw(self, nums, value.denominator)
        raise TypeError(f"cannot coerce {type(value).__name__} into Q(zeta_{self.order})")

    def from_int_vector(self, nums, den: int) -> CycNum:
        """Element (sum nums[k] x^k) / den for an integer list of any length."""
        return CycNum._make(self, self._reduce_ints(nums), den)

    def from_coeffs(self, coeffs) -> CycNum:
        """Element from a rational coefficient list (lowest degree first), reduced mod Phi."""
        fr = [Fraction(c) for c in coeffs]
        if not fr:
            return self.zero
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [int(c * den) for c in fr]
        return CycNum._make(self, self._reduce_ints(nums), den)

    def __repr__(self):
        return f"CyclotomicField(p={self.p})"


@lru_cache(maxsize=None)
def field(p: int) -> CyclotomicField:
    """The shared ``CyclotomicField`` for parameter ``p`` (zeta of order 2p)."""
    return CyclotomicField(p)


class CycNum:
    """An element of Q(zeta_{2p}); immutable.

    ``coeffs`` gives the canonical residue as Fractions, lowest degree first.
    Arithmetic accepts ints and Fractions on either side.
    """

    __slots__ = ("field", "nums", "den", "_hash")

    @classmethod
    def _raw(cls, fld, nums, den):
        obj = object.__new__(cls)
        obj.field = fld
        obj.nums = nums
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, fld, nums, den):
        g = gcd(den, *nums)
        if g != 1:
            nums = tuple(n // g for n in nums)
            den //= g
        return cls._raw(fld, nums, den)

    def __init__(self, p: int, coeffs):
        # unreduced input is accepted; the stored form is always the residue
        made = field(p).from_coeffs(coeffs)
        self.field = made.field
        self.nums = made.nums
        self.den = made.den
        self._hash = None

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(n, self.den) for n in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def __bool__(self):
        return any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    # arithmetic -------------------------------------------------------------
    def _other(self, other):
        if isinstance(other, CycNum):
            if other.field is not self.field:
                raise ParameterError(f"mismatched p: {self.p} vs {other.p}")
            return other
        if isinstance(other, (int, _RationalABC)):
            return self.field.coerce(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return CycNum._make(self.field, tuple(a + b for a, b in zip(self.nums, o.nums)), self.den)
        da, db = self.den, o.den
        return CycNum._make(self.field, tuple(a * db + b * da for a, b in zip(self.nums, o.nums)), da * db)

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self.field, tuple(-a for a in self.nums), self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return cyc_mul(self, o)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        return cyc_inv(self)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return cyc_mul(self, cyc_inv(o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return cyc_mul(o, cyc_inv(self))

    def __pow__(self, n: int):
        if n < 0:
            return cyc_inv(self) ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = cyc_mul(result, base)
            base = cyc_mul(base, base)
            n >>= 1
        return result

    # comparison / hashing ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.field is other.field and self.den == other.den and self.nums == other.nums
        if isinstance(other, (int, _RationalABC)):
            return self == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.p, self.nums, self.den))
        return self._hash

    # display ----------------------------------------------------------------
    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            elif mono:
                parts.append(f"{_frac_str(c)}*{mono}")
            else:
                parts.append(_frac_str(c))
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"CycNum(p={self.p}, {list(map(str, self.coeffs))})"

    def to_json(self) -> list[str]:
        """Serialization: one "num/den" string per coefficient, lowest degree first."""
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, p: int, data) -> CycNum:
        return field(p).from_coeffs([Fraction(s) for s in data])


def _frac_str(c: Fraction) -> str:
    return str(c) if c.denominator == 1 else f"({c})"


def cyclotomic_polynomial(n: int) -> RationalPoly:
    """Phi_n as a polynomial with integer (Fraction) coefficients."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    return RationalPoly([Fraction(c) for c in _cyclotomic_coeffs(n)])


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    fld = a.field
    if b.field is not fld:
        raise ParameterError(f"mismatched p: {a.p} vs {b.p}")
    an, bn = a.nums, b.nums
    d = fld.degree
    conv = [0] * (2 * d - 1)
    for i, x in enumerate(an):
        if x:
            for j, y in enumerate(bn):
                if y:
                    conv[i + j] += x * y
    out = conv[:d]
    red = fld._reduce
    for k in range(d, 2 * d - 1):
        c = conv[k]
        if c:
            r = red[k]
            for i in range(d):
                if r[i]:
                    out[i] += c * r[i]
    return CycNum._make(fld, tuple(out), a.den * b.den)


def cyc_inv(a: CycNum) -> CycNum:
    """Inverse via the extended Euclidean algorithm against Phi_{2p} over Q."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero in cyclotomic field")
    fld = a.field
    r0 = [Fraction(c) for c in fld.modulus]
    r1 = _trim([Fraction(n) for n in a.nums])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        quot, rem = _qpoly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(quot, s1))
        if not r1:
            raise ArithmeticError("non-invertible element; modulus not irreducible?")
    # now r1 is a nonzero constant: s1 * a == r1 (mod Phi)
    c = r1[0]
    inv = [x / c for x in s1]
    # a.nums are scaled by a.den
    return fld.from_coeffs([x * a.den for x in inv])


def q_power(k: int, p: int) -> CycNum:
    """q**k with q = zeta_{2p}."""
    return field(p).zeta(k)


@lru_cache(maxsize=None)
def q_int(n: int, p: int) -> CycNum:
    """The quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{-(n-1)}."""
    if p < 2:
        raise ParameterError(f"p must be >= 2, got {p}")
    fld = field(p)
    if n == 0:
        return fld.zero
    if n < 0:
        return -q_int(-n, p)
    total = fld.zero
    for j in range(n):
        total = total + fld.zeta(n - 1 - 2 * j)
    return total


# ---------------------------------------------------------------------------
# polynomials over the field (or over Q)
# ---------------------------------------------------------------------------

class RationalPoly:
    """Univariate polynomial, coefficients lowest degree first.

    Coefficients are either all Fractions or all ``CycNum`` of one field.
    The zero polynomial has an empty coefficient list.
    """

    __slots__ = ("coeffs", "_zero", "_one")

    def __init__(self, coeffs, zero=None, one=None):
        coeffs = list(coeffs)
        if zero is None:
            sample = next((c for c in coeffs if isinstance(c, CycNum)), None)
            if sample is not None:
                zero, one = sample.field.zero, sample.field.one
                coeffs = [sample.field.coerce(c) for c in coeffs]
            else:
                zero, one = Fraction(0), Fraction(1)
                coeffs = [Fraction(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self._zero = zero
        self._one = one

    def _new(self, coeffs):
        return RationalPoly(coeffs, self._zero, self._one)

    @classmethod
    def over(cls, p: int, coeffs) -> RationalPoly:
        fld = field(p)
        return cls([fld.coerce(c) for c in coeffs], fld.zero, fld.one)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self):
        return self.coeffs[-1] if self.coeffs else self._zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> RationalPoly:
        lead = self.leading()
        return self._new([c / lead for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return len(self.coeffs) == len(other.coeffs) and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [self._zero] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] = a[i] + c
        return self._new(a)

    def __neg__(self):
        return self._new([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RationalPoly):
            return self._new([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return self._new([])
        out = [self._zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + x * y
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = self._new([self._one])
        for _ in range(n):
            result = result * self
        return result

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [self._zero] * max(len(rem) - len(other.coeffs) + 1, 1)
        lead_inv = self._one / other.leading()
        while len(rem) >= len(other.coeffs) and rem:
            shift = len(rem) - len(other.coeffs)
            f = rem[-1] * lead_inv
            quot[shift] = f
            for i, c in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - f * c
            while rem and not rem[-1]:
                rem.pop()
        return self._new(quot), self._new(rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def xgcd(self, other):
        """(g, s, t) with s*self + t*other = g, g monic."""
        r0, r1 = self, other
        s0, s1 = self._new([self._one]), self._new([])
        t0, t1 = self._new([]), self._new([self._one])
        while not r1.is_zero():
            quot, rem = divmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - quot * s1
            t0, t1 = t1, t0 - quot * t1
        lead_inv = self._one / r0.leading()
        return r0 * lead_inv, s0 * lead_inv, t0 * lead_inv

    def __call__(self, x):
        """Horner evaluation at a scalar."""
        acc = self._zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            cs = str(c)
            wrapped = f"({cs})" if " " in cs else cs
            if mono and cs == "1":
                terms.append(mono)
            elif mono and cs == "-1":
                terms.append("-" + mono)
            elif mono:
                terms.append(f"{wrapped}*{mono}")
            else:
                terms.append(wrapped)
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return f"RationalPoly({[str(c) for c in self.coeffs]})"
