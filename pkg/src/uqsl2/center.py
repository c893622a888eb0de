"""Casimir element, its minimal polynomial, and the central block projectors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    AlgebraElement,
    algebra,
    element_to_row,
    element_to_sparse,
    normal_product,
    power_sequence,
)
from .cyclotomic import CycNum, ParameterError, RationalPoly, field
from .linalg import Coordinatizer, NotInSpan, RankAccumulator

__all__ = [
    "BlockProjectors",
    "casimir",
    "casimir_alt",
    "beta",
    "expected_casimir_polynomial",
    "minimal_polynomial",
    "evaluate_polynomial",
    "block_projectors",
    "block_dimension",
]


def _qdiff_sq_inv(p: int) -> CycNum:
    fld = field(p)
    d = fld.zeta(1) - fld.zeta(-1)
    return (d * d).inverse()


@lru_cache(maxsize=None)
def casimir(p: int) -> AlgebraElement:
    """C = EF + (q^-1 K + q K^-1)/(q - q^-1)^2."""
    alg = algebra(p)
    fld = alg.field
    c = _qdiff_sq_inv(p)
    return alg.monomial(1, 1, 0) + alg.k_poly({1: fld.zeta(-1) * c, -1: fld.zeta(1) * c})


def casimir_alt(p: int) -> AlgebraElement:
    """The same element written as FE + (q K + q^-1 K^-1)/(q - q^-1)^2."""
    alg = algebra(p)
    fld = alg.field
    c = _qdiff_sq_inv(p)
    return normal_product(alg.F, alg.E) + alg.k_poly({1: fld.zeta(1) * c, -1: fld.zeta(-1) * c})


def beta(j: int, p: int) -> CycNum:
    """(q^j + q^-j)/(q - q^-1)^2."""
    fld = field(p)
    return (fld.zeta(j) + fld.zeta(-j)) * _qdiff_sq_inv(p)


def _multiplicity(j: int, p: int) -> int:
    return 1 if j in (0, p) else 2


def expected_casimir_polynomial(p: int) -> RationalPoly:
    """(t - beta_0)(t - beta_p) prod_{j=1}^{p-1} (t - beta_j)^2, expanded."""
    fld = field(p)
    out = RationalPoly.over(p, [1])
    for j in range(p + 1):
        lin = RationalPoly.over(p, [-beta(j, p), fld.one])
        out = out * (lin ** _multiplicity(j, p))
    return out


def minimal_polynomial(x: AlgebraElement) -> RationalPoly:
    """Monic polynomial of least degree annihilating x, from the first dependence among 1, x, x^2, ..."""
    fld = x.alg.field
    powers = [x.alg.one()]
    rows = [element_to_row(powers[0])]
    while True:
        nxt = normal_product(powers[-1], x)
        row = element_to_row(nxt)
        try:
            coords = Coordinatizer(rows).solve(row)
        except NotInSpan:
            powers.append(nxt)
            rows.append(row)
            continue
        # x^k = sum c_i x^i  =>  t^k - sum c_i t^i
        return RationalPoly([-c for c in coords] + [fld.one], fld.zero, fld.one)


def evaluate_polynomial(f: RationalPoly, x: AlgebraElement) -> AlgebraElement:
    """f(x) in the algebra."""
    if f.is_zero():
        return x.alg.zero()
    pows = power_sequence(x, f.degree)
    out = x.alg.zero()
    for c, xp in zip(f.coeffs, pows):
        if c:
            out = out + xp.scale(c)
    return out


@dataclass
class BlockProjectors:
    """Central idempotents pi_0..pi_p; pi_s cuts out the block where C has generalized eigenvalue beta_s."""

    p: int
    projectors: list
    eigenvalues: list
    multiplicities: list
    interpolants: list

    def __getitem__(self, s: int) -> AlgebraElement:
        return self.projectors[s]


@lru_cache(maxsize=None)
def block_projectors(p: int) -> BlockProjectors:
    if p < 2:
        raise ParameterError(f"p must be >= 2, got {p}")
    fld = field(p)
    betas = [beta(j, p) for j in range(p + 1)]
    mults = [_multiplicity(j, p) for j in range(p + 1)]
    factors = [RationalPoly.over(p, [-b, fld.one]) ** m for b, m in zip(betas, mults)]
    psi = RationalPoly.over(p, [1])
    for fac in factors:
        psi = psi * fac
    C = casimir(p)
    pows = power_sequence(C, psi.degree - 1)
    projectors, interps = [], []
    for s in range(p + 1):
        cofactor = psi // factors[s]
        g, u, _ = cofactor.xgcd(factors[s])
        if g.degree != 0:
            raise ArithmeticError("Casimir eigenvalues are not pairwise distinct")
        f_s = (u * cofactor) % psi
        interps.append(f_s)
        pi = algebra(p).zero()
        for c, cp in zip(f_s.coeffs, pows):
            if c:
                pi = pi + cp.scale(c)
        projectors.append(pi)
    return BlockProjectors(p, projectors, betas, mults, interps)


def block_dimension(p: int, s: int) -> int:
    """dim Q_s = rank of {pi_s m : m a PBW monomial}."""
    if not (0 <= s <= p):
        raise ParameterError(f"s must lie in [0, {p}], got {s}")
    pi = block_projectors(p)[s]
    alg = algebra(p)
    acc = RankAccumulator()
    for m in alg.monomials:
        acc.add(element_to_sparse(normal_product(pi, alg.monomial(*m))))
    return acc.rank
