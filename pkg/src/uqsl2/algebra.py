"""The restricted quantum group at q = exp(pi i / p) in PBW normal form.

Every element is a sparse combination of monomials E^a F^b K^c with
0 <= a, b <= p-1 and 0 <= c <= 2p-1, coefficients in Q(zeta_{2p}).

Multiplying two monomials E^a1 F^b1 K^c1 * E^a2 F^b2 K^c2:

1. K^c1 is moved right past E^a2 F^b2, picking up q^(2 c1 (a2 - b2));
2. F^b1 E^a2 is put in normal form by the recursion
   F^b E^a = E (F^b E^(a-1)) - [b]/(q - q^-1) F^(b-1) (q^-(b-1) K - q^(b-1) K^-1) E^(a-1),
   which strictly lowers a, so it terminates;
3. terms with an E or F exponent >= p vanish and K exponents are reduced mod 2p.

Normal forms of F^b E^a and of monomial products are memoised per ``p``.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from math import gcd
from numbers import Rational

from .cyclotomic import CycNum, ParameterError, field, q_int

__all__ = [
    "UqAlgebra",
    "AlgebraElement",
    "algebra",
    "monomial",
    "normal_product",
    "commutator",
    "element_to_row",
    "row_to_element",
    "power_sequence",
]


class UqAlgebra:
    """Per-``p`` context: structure constants, generator elements and caches."""

    def __init__(self, p: int):
        if p < 2:
            raise ParameterError(f"p must be >= 2, got {p}")
        self.p = p
        self.field = fld = field(p)
        self.q = fld.zeta(1)
        self.qinv = fld.zeta(-1)
        self.inv_q_diff = (self.q - self.qinv).inverse()
        self.dim = 2 * p ** 3
        self.monomials = [(a, b, c) for a in range(p) for b in range(p) for c in range(2 * p)]
        self.index = {m: i for i, m in enumerate(self.monomials)}
        self._lock = threading.Lock()
        self._fe_cache: dict[tuple[int, int], dict] = {}
        self._mono_cache: dict[tuple, dict] = {}
        self._terms_cache: dict[tuple, list] = {}

    def __repr__(self):
        return f"UqAlgebra(p={self.p})"

    # elements ---------------------------------------------------------------
    def element(self, terms=None) -> AlgebraElement:
        return AlgebraElement(self, terms or {})

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, {})

    def one(self) -> AlgebraElement:
        return self.monomial(0, 0, 0)

    def scalar(self, c) -> AlgebraElement:
        return AlgebraElement(self, {(0, 0, 0): self.field.coerce(c)})

    def monomial(self, a: int, b: int, c: int = 0, coeff=1) -> AlgebraElement:
        p = self.p
        if not (0 <= a < p and 0 <= b < p):
            raise ParameterError(f"E/F exponents must lie in [0, {p - 1}], got ({a}, {b})")
        return AlgebraElement(self, {(a, b, c % (2 * p)): self.field.coerce(coeff)})

    @property
    def E(self) -> AlgebraElement:
        return self.monomial(1, 0, 0)

    @property
    def F(self) -> AlgebraElement:
        return self.monomial(0, 1, 0)

    @property
    def K(self) -> AlgebraElement:
        return self.monomial(0, 0, 1)

    @property
    def Kinv(self) -> AlgebraElement:
        return self.monomial(0, 0, -1)

    def k_poly(self, coeffs: dict) -> AlgebraElement:
        """sum c_j K^j from {j: c_j}."""
        out = {}
        fld = self.field
        for j, c in coeffs.items():
            key = (0, 0, j % (2 * self.p))
            out[key] = out.get(key, fld.zero) + fld.coerce(c)
        return AlgebraElement(self, out)

    # rewriting --------------------------------------------------------------
    def fe_normal(self, b: int, a: int) -> dict:
        """Normal form of F^b E^a as {(i, j, k): coeff}."""
        key = (b, a)
        hit = self._fe_cache.get(key)
        if hit is not None:
            return hit
        fld = self.field
        p = self.p
        if a == 0 or b == 0:
            res = {(a, b, 0): fld.one}
        else:
            res = {}
            # E * (F^b E^(a-1)): raise E exponent
            for (i, j, k), c in self.fe_normal(b, a - 1).items():
                if i + 1 < p:
                    _acc(res, (i + 1, j, k), c, fld)
            # -[b]/(q - q^-1) * F^(b-1) (q^-(b-1) K - q^(b-1) K^-1) E^(a-1)
            # with K E^(a-1) = q^(2(a-1)) E^(a-1) K
            scale = -q_int(b, p) * self.inv_q_diff
            c_plus = scale * fld.zeta(-(b - 1) + 2 * (a - 1))
            c_minus = -scale * fld.zeta((b - 1) - 2 * (a - 1))
            for (i, j, k), c in self.fe_normal(b - 1, a - 1).items():
                _acc(res, (i, j, (k + 1) % (2 * p)), c * c_plus, fld)
                _acc(res, (i, j, (k - 1) % (2 * p)), c * c_minus, fld)
            res = {m: c for m, c in res.items() if c}
        with self._lock:
            self._fe_cache[key] = res
        return res

    def mono_product(self, m1, m2) -> dict:
        """Normal form of the product of two PBW monomials."""
        key = (m1, m2)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        a1, b1, c1 = m1
        a2, b2, c2 = m2
        p = self.p
        two_p = 2 * p
        fld = self.field
        phase = 2 * c1 * (a2 - b2)
        res = {}
        for (i, j, k), c in self.fe_normal(b1, a2).items():
            ii = a1 + i
            jj = j + b2
            if ii >= p or jj >= p:
                continue
            # K^k F^b2 = q^(-2 k b2) F^b2 K^k
            coeff = c * fld.zeta(phase - 2 * k * b2)
            _acc(res, (ii, jj, (k + c1 + c2) % two_p), coeff, fld)
        res = {m: c for m, c in res.items() if c}
        with self._lock:
            self._mono_cache[key] = res
        return res

    def mono_terms(self, m1, m2) -> list:
        """mono_product as [(monomial, denominator, [(k, numerator) nonzero])] for the product kernel."""
        key = (m1, m2)
        hit = self._terms_cache.get(key)
        if hit is not None:
            return hit
        res = [
            (m, c.den, [(j, w) for j, w in enumerate(c.nums) if w])
            for m, c in self.mono_product(m1, m2).items()
        ]
        with self._lock:
            self._terms_cache[key] = res
        return res


def _acc(d, key, c, fld):
    prev = d.get(key)
    d[key] = c if prev is None else prev + c


@lru_cache(maxsize=None)
def algebra(p: int) -> UqAlgebra:
    """Shared algebra context for ``p``."""
    return UqAlgebra(p)


class AlgebraElement:
    """Sparse element {(a, b, c): CycNum} of the algebra; zero coefficients are never stored."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: UqAlgebra, terms: dict):
        self.alg = alg
        self.terms = {m: c for m, c in terms.items() if c}

    @property
    def p(self) -> int:
        return self.alg.p

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, a: int, b: int, c: int) -> CycNum:
        return self.terms.get((a, b, c % (2 * self.p)), self.alg.field.zero)

    def _check(self, other):
        if other.alg is not self.alg:
            raise ParameterError(f"mismatched p: {self.p} vs {other.p}")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            other = self.alg.scalar(other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            out[m] = c if prev is None else prev + c
        return AlgebraElement(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            other = self.alg.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.alg.scalar(other) - self

    def scale(self, c) -> AlgebraElement:
        c = self.alg.field.coerce(c)
        if not c:
            return self.alg.zero()
        return AlgebraElement(self.alg, {m: c * x for m, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return normal_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(self.alg.field.coerce(other).inverse())

    def __pow__(self, n: int):
        result = self.alg.one()
        for _ in range(n):
            result = normal_product(result, self)
        return result

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.alg is other.alg and self.terms == other.terms
        if isinstance(other, (int, CycNum, Rational)):
            return self == self.alg.scalar(other)
        return NotImplemented

    __hash__ = None

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b, c), coeff in self.sorted_terms():
            mono = "".join(
                s for s in (
                    "" if a == 0 else ("E" if a == 1 else f"E^{a}"),
                    "" if b == 0 else ("F" if b == 1 else f"F^{b}"),
                    "" if c == 0 else ("K" if c == 1 else f"K^{c}"),
                )
            )
            cs = str(coeff)
            if not mono:
                parts.append(f"({cs})" if " " in cs else cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"({cs})*{mono}" if " " in cs else f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def factored_str(self) -> str:
        """Like str(), but pulls out the leading coefficient when every coefficient is an integer multiple of it."""
        if len(self.terms) < 2:
            return str(self)
        lead = self.sorted_terms()[0][1]
        inv = lead.inverse()
        ratios = {m: c * inv for m, c in self.terms.items()}
        if not all(r.is_rational() and r.to_fraction().denominator == 1 for r in ratios.values()):
            return str(self)
        inner = str(AlgebraElement(self.alg, ratios))
        ls = str(lead)
        if ls == "1":
            return inner
        wrapped = ls if ls.startswith("(") and ls.endswith(")") else f"({ls})"
        return f"{wrapped}*({inner})"

    def __repr__(self):
        return f"AlgebraElement(p={self.p}, {len(self.terms)} terms)"

    def to_json(self):
        """[{"e": a, "f": b, "k": c, "coeff": ["num/den", ...]}, ...] in monomial order."""
        return [
            {"e": a, "f": b, "k": c, "coeff": coeff.to_json()}
            for (a, b, c), coeff in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, p: int, data) -> AlgebraElement:
        alg = algebra(p)
        terms = {}
        for t in data:
            terms[(t["e"], t["f"], t["k"] % (2 * p))] = CycNum.from_json(p, t["coeff"])
        return cls(alg, terms)


def monomial(a: int, b: int, c: int, p: int) -> AlgebraElement:
    """E^a F^b K^c with coefficient 1 (c taken mod 2p)."""
    return algebra(p).monomial(a, b, c)


def normal_product(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    if x.alg is not y.alg:
        raise ParameterError(f"mismatched p: {x.p} vs {y.p}")
    alg = x.alg
    fld = alg.field
    width = 2 * fld.degree - 1
    compiled = alg.mono_terms
    # per output monomial: unreduced integer convolution over one denominator
    acc = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            terms = compiled(m1, m2)
            if not terms:
                continue
            c12 = c1 * c2
            a_nz = [(i, v) for i, v in enumerate(c12.nums) if v]
            a_den = c12.den
            for m, c_den, b_nz in terms:
                den = a_den * c_den
                entry = acc.get(m)
                if entry is None:
                    vec = [0] * width
                    acc[m] = [vec, den]
                    scale = 1
                else:
                    vec, e_den = entry
                    if e_den == den:
                        scale = 1
                    else:
                        g = gcd(e_den, den)
                        lcm = e_den // g * den
                        grow = lcm // e_den
                        if grow != 1:
                            for k in range(width):
                                vec[k] *= grow
                            entry[1] = lcm
                        scale = lcm // den
                for i, v in a_nz:
                    vs = v * scale
                    for j, w in b_nz:
                        vec[i + j] += vs * w
    out = {}
    for m, (vec, den) in acc.items():
        c = fld.from_int_vector(vec, den)
        if c:
            out[m] = c
    return AlgebraElement(alg, out)


def commutator(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """xy - yx."""
    return normal_product(x, y) - normal_product(y, x)


def element_to_row(x: AlgebraElement) -> list[CycNum]:
    """Coefficient vector of length 2p^3, monomials ordered lexicographically in (a, b, c)."""
    alg = x.alg
    row = [alg.field.zero] * alg.dim
    for m, c in x.terms.items():
        row[alg.index[m]] = c
    return row


def element_to_sparse(x: AlgebraElement) -> dict[int, CycNum]:
    idx = x.alg.index
    return {idx[m]: c for m, c in x.terms.items()}


def row_to_element(row, p: int) -> AlgebraElement:
    alg = algebra(p)
    return AlgebraElement(alg, {alg.monomials[i]: c for i, c in enumerate(row) if c})


def power_sequence(x: AlgebraElement, max_power: int) -> list[AlgebraElement]:
    """[1, x, x^2, ..., x^max_power]."""
    if max_power < 0:
        raise ParameterError("max_power must be >= 0")
    out = [x.alg.one()]
    for _ in range(max_power):
        out.append(normal_product(out[-1], x))
    return out
