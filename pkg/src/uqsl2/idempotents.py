"""Primitive idempotents of the restricted quantum group and the vectors they are built from.

Conventions: ``sign`` is a :class:`Sign`; ``sigma`` below is +1 or -1.  For
1 <= s <= p:

* ``v_s``      = sum_l (sigma q^-(s-1))^l K^l   (a K-eigenprojector, weight sigma q^(s-1))
* ``a_n(s)``   = F^n E^(p-1) F^(p-1) v_s
* ``b_0(s)``   = sum_{n=1}^{p-s} alpha_n E^(p-1-n) F^(p-1-n) v_s      (s < p)
* ``x_k(s)``   = E^(p-s-k) b_0 / prod_{l=k+1}^{p-s-1} (-sigma [l][p-s-l])
* ``y_k(s)``   = F^(s+k) b_0

and the idempotents are e_s = (b_0 - (delta/gamma) a_0) / gamma for s < p,
e_p = a_0(p) / (2p prod_{i=1}^{p-1} sigma [i][p-i]).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgebraElement, algebra, element_to_sparse, normal_product
from .cyclotomic import CycNum, ParameterError, field, q_int
from .linalg import RankAccumulator

__all__ = [
    "Sign",
    "GammaDelta",
    "IdempotentSet",
    "NotIdempotent",
    "vs_element",
    "a_vector",
    "a_vector_closed_form",
    "alpha",
    "b0",
    "b_vector",
    "x_vector",
    "y_vector",
    "gamma_delta",
    "primitive_idempotent",
    "basic_set",
    "left_ideal_basis",
    "left_ideal_dimension",
]


class Sign(enum.Enum):
    PLUS = 1
    MINUS = -1

    @classmethod
    def parse(cls, s) -> Sign:
        if isinstance(s, Sign):
            return s
        if s in ("+", "plus", 1, "1", "+1"):
            return cls.PLUS
        if s in ("-", "minus", -1, "-1"):
            return cls.MINUS
        raise ParameterError(f"sign must be '+' or '-', got {s!r}")

    @property
    def symbol(self) -> str:
        return "+" if self is Sign.PLUS else "-"

    @property
    def word(self) -> str:
        return "plus" if self is Sign.PLUS else "minus"

    def __neg__(self) -> Sign:
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    def __str__(self):
        return self.symbol


class NotIdempotent(ArithmeticError):
    """A constructed element failed its x*x == x certification."""


@dataclass(frozen=True)
class GammaDelta:
    gamma: CycNum
    delta: CycNum


def _check_s(s, p, upper):
    if not (1 <= s <= upper):
        raise ParameterError(f"s must lie in [1, {upper}], got {s} (p={p})")


def _bracket_pair(i: int, j: int, p: int) -> CycNum:
    return q_int(i, p) * q_int(j, p)


def _signed_chain(sigma: int, s: int, p: int, lo: int, hi: int, skip: int | None = None) -> CycNum:
    """prod_{i=lo}^{hi} sigma [i][s-i], optionally leaving out i = skip."""
    acc = field(p).one
    for i in range(lo, hi + 1):
        if i != skip:
            acc = acc * _bracket_pair(i, s - i, p)
            if sigma < 0:
                acc = -acc
    return acc


@lru_cache(maxsize=None)
def vs_element(s: int, sign, p: int) -> AlgebraElement:
    sign = Sign.parse(sign)
    _check_s(s, p, p)
    alg = algebra(p)
    base = alg.field.zeta(-(s - 1))
    if sign is Sign.MINUS:
        base = -base
    coeffs = {}
    c = alg.field.one
    for ell in range(2 * p):
        coeffs[ell] = c
        c = c * base
    return alg.k_poly(coeffs)


def _ef(a: int, b: int, p: int) -> AlgebraElement:
    return algebra(p).monomial(a, b, 0)


@lru_cache(maxsize=None)
def a_vector(s: int, n: int, sign, p: int) -> AlgebraElement:
    """F^n E^(p-1) F^(p-1) v_s, computed by repeated multiplication."""
    sign = Sign.parse(sign)
    _check_s(s, p, p)
    if n < 0:
        raise ParameterError("n must be >= 0")
    alg = algebra(p)
    if n == 0:
        return normal_product(_ef(p - 1, p - 1, p), vs_element(s, sign, p))
    return normal_product(alg.F, a_vector(s, n - 1, sign, p))


def a_vector_closed_form(s: int, n: int, sign, p: int) -> AlgebraElement:
    """prod_{i=1}^n (sigma [i][s-i]) E^(p-1-n) F^(p-1) v_s for n < s, zero for n >= s."""
    sign = Sign.parse(sign)
    _check_s(s, p, p)
    alg = algebra(p)
    if n >= s:
        return alg.zero()
    c = _signed_chain(sign.value, s, p, 1, n)
    return normal_product(_ef(p - 1 - n, p - 1, p), vs_element(s, sign, p)).scale(c)


@lru_cache(maxsize=None)
def alpha(s: int, n: int, sign, p: int) -> CycNum:
    """alpha_1 = 1, alpha_n = -sigma [n-1][p-s-(n-1)] alpha_(n-1)."""
    sign = Sign.parse(sign)
    _check_s(s, p, p - 1)
    if not (1 <= n <= p - s):
        raise ParameterError(f"n must lie in [1, {p - s}], got {n}")
    if n == 1:
        return field(p).one
    step = _bracket_pair(n - 1, p - s - (n - 1), p)
    if sign is Sign.PLUS:
        step = -step
    return step * alpha(s, n - 1, sign, p)


@lru_cache(maxsize=None)
def b0(s: int, sign, p: int) -> AlgebraElement:
    sign = Sign.parse(sign)
    _check_s(s, p, p - 1)
    alg = algebra(p)
    poly = alg.zero()
    for n in range(1, p - s + 1):
        poly = poly + _ef(p - 1 - n, p - 1 - n, p).scale(alpha(s, n, sign, p))
    return normal_product(poly, vs_element(s, sign, p))


def b_vector(s: int, n: int, sign, p: int) -> AlgebraElement:
    """F^n b_0(s)."""
    return normal_product(_ef(0, n, p), b0(s, sign, p)) if n < p else algebra(p).zero()


def _x_normalizer(s: int, k: int, sign: Sign, p: int) -> CycNum:
    # prod_{l=k+1}^{p-s-1} (-sigma [l][p-s-l])
    return _signed_chain(-sign.value, p - s, p, k + 1, p - s - 1)


def x_vector(s: int, k: int, sign, p: int) -> AlgebraElement:
    """E^(p-s-k) b_0(s) over prod_{l=k+1}^{p-s-1} (-sigma [l][p-s-l]), 0 <= k <= p-s-1."""
    sign = Sign.parse(sign)
    _check_s(s, p, p - 1)
    if not (0 <= k <= p - s - 1):
        raise ParameterError(f"k must lie in [0, {p - s - 1}], got {k}")
    raw = normal_product(_ef(p - s - k, 0, p), b0(s, sign, p))
    return raw / _x_normalizer(s, k, sign, p)


def y_vector(s: int, k: int, sign, p: int) -> AlgebraElement:
    """F^(s+k) b_0(s)."""
    sign = Sign.parse(sign)
    _check_s(s, p, p - 1)
    if s + k >= p:
        return algebra(p).zero()
    return normal_product(_ef(0, s + k, p), b0(s, sign, p))


@lru_cache(maxsize=None)
def gamma_delta(s: int, sign, p: int) -> GammaDelta:
    sign = Sign.parse(sign)
    _check_s(s, p, p - 1)
    sigma = sign.value
    t = p - s
    upper = _signed_chain(-sigma, t, p, 1, t - 1)    # prod_{m=1}^{p-s-1} (-sigma [m][p-s-m])
    lower = _signed_chain(sigma, s, p, 1, s - 1)     # prod_{i=1}^{s-1} (sigma [i][s-i])
    two_p = field(p).coerce(2 * p)
    gamma = two_p * upper * lower
    sum_lower = field(p).zero
    for j in range(1, s):
        sum_lower = sum_lower + _signed_chain(sigma, s, p, 1, s - 1, skip=j)
    sum_upper = field(p).zero
    for n in range(1, t):
        sum_upper = sum_upper + _signed_chain(-sigma, t, p, 1, t - 1, skip=n)
    delta = two_p * upper * sum_lower + two_p * lower * sum_upper
    if not gamma:
        raise ArithmeticError(f"gamma vanished for s={s}, p={p}")
    return GammaDelta(gamma, delta)


def _certify(e: AlgebraElement, label: str) -> AlgebraElement:
    if normal_product(e, e) != e:
        raise NotIdempotent(f"{label} is not idempotent")
    return e


@lru_cache(maxsize=None)
def primitive_idempotent(s: int, sign, p: int) -> AlgebraElement:
    """e_s with the given sign; certified idempotent before being returned."""
    sign = Sign.parse(sign)
    _check_s(s, p, p)
    if s == p:
        norm = field(p).coerce(2 * p) * _signed_chain(sign.value, p, p, 1, p - 1)
        e = a_vector(p, 0, sign, p) / norm
    else:
        gd = gamma_delta(s, sign, p)
        e = (b0(s, sign, p) - a_vector(s, 0, sign, p).scale(gd.delta / gd.gamma)) / gd.gamma
    return _certify(e, f"e_{s}^{sign.symbol} (p={p})")


@dataclass
class IdempotentSet:
    """One idempotent e_s^sign for every 1 <= s <= p and both signs."""

    p: int
    elements: dict

    def __getitem__(self, key) -> AlgebraElement:
        s, sign = key
        return self.elements[(s, Sign.parse(sign))]


def basic_set(p: int) -> IdempotentSet:
    elems = {}
    for s in range(1, p + 1):
        for sign in Sign:
            elems[(s, sign)] = primitive_idempotent(s, sign, p)
    return IdempotentSet(p, elems)


def _left_ideal_accumulator(e: AlgebraElement) -> RankAccumulator:
    alg = e.alg
    acc = RankAccumulator()
    for m in alg.monomials:
        acc.add(element_to_sparse(normal_product(alg.monomial(*m), e)))
    return acc


def left_ideal_basis(e: AlgebraElement) -> list[AlgebraElement]:
    """A basis of the left ideal A e (echelon rows turned back into elements)."""
    if normal_product(e, e) != e:
        raise ParameterError("left_ideal_basis needs an idempotent")
    acc = _left_ideal_accumulator(e)
    alg = e.alg
    return [
        AlgebraElement(alg, {alg.monomials[i]: c for i, c in acc.rows[piv].items()})
        for piv in sorted(acc.rows)
    ]


def left_ideal_dimension(e: AlgebraElement) -> int:
    if normal_product(e, e) != e:
        raise ParameterError("left_ideal_dimension needs an idempotent")
    return _left_ideal_accumulator(e).rank
