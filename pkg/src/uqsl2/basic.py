"""The basic algebra e A e, its blocks B_s, their multiplication tables and trace spaces.

For 1 <= s <= p-1 the block B_s has the eight-element basis

    e+ = e_s^+,  X0+ = E^(p-s) e+ / prod_{l=1}^{p-s-1} (-[l][p-s-l]),  Y0+ = F^s e+,  A0+ = F E e+,
    e- = e_{p-s}^-,  X0- = E^s e- / prod_{l=1}^{s-1} [l][s-l],        Y0- = F^(p-s) e-, A0- = F E e-,

and every product of two basis elements is 0 or a single basis element.
The symmetric-linear-function dimension of an algebra A is dim A/[A, A].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgebraElement, algebra, element_to_row, element_to_sparse, normal_product
from .cyclotomic import ParameterError, field
from .idempotents import (
    Sign,
    _x_normalizer,
    gamma_delta,
    left_ideal_basis,
    primitive_idempotent,
)
from .linalg import Coordinatizer, NotInSpan, RankAccumulator

__all__ = [
    "LABELS",
    "SLUGS",
    "NON_A_LABELS",
    "REFERENCE_PRODUCTS",
    "REFERENCE_COMMUTATORS",
    "BasicBasis",
    "MultTable",
    "ConstructionError",
    "basic_idempotent",
    "corner_dimension",
    "basic_basis",
    "ideal_vectors",
    "mult_table",
    "commutator_table",
    "slf_dimension",
    "slf_blocks",
    "slf_total",
    "full_algebra_slf",
]

LABELS = ("e+", "X0+", "Y0+", "A0+", "e-", "X0-", "Y0-", "A0-")
NON_A_LABELS = ("e+", "X0+", "Y0+", "e-", "X0-", "Y0-")
SLUGS = {lab: lab.replace("+", "p").replace("-", "m") for lab in LABELS}


class ConstructionError(ArithmeticError):
    """A product or commutator left the span it must lie in."""


def _t(*rows):
    return {(x, y): v for x, row in zip(LABELS, rows) for y, v in zip(LABELS, row)}


# product row * column; None means 0
REFERENCE_PRODUCTS = _t(
    ("e+", None, None, "A0+", None, "X0-", "Y0-", None),
    ("X0+", None, None, None, None, None, "A0-", None),
    ("Y0+", None, None, None, None, "A0-", None, None),
    ("A0+", None, None, None, None, None, None, None),
    (None, "X0+", "Y0+", None, "e-", None, None, "A0-"),
    (None, None, "A0+", None, "X0-", None, None, None),
    (None, "A0+", None, None, "Y0-", None, None, None),
    (None, None, None, None, "A0-", None, None, None),
)


def _c(*terms):
    return dict(terms)


_P, _M = "A0+", "A0-"
# [row, column] on the six non-A labels, written out cell by cell
REFERENCE_COMMUTATORS = {
    (x, y): v
    for x, row in zip(NON_A_LABELS, (
        ({}, _c(("X0+", -1)), _c(("Y0+", -1)), {}, _c(("X0-", 1)), _c(("Y0-", 1))),
        (_c(("X0+", 1)), {}, {}, _c(("X0+", -1)), {}, _c((_M, 1), (_P, -1))),
        (_c(("Y0+", 1)), {}, {}, _c(("Y0+", -1)), _c((_M, 1), (_P, -1)), {}),
        ({}, _c(("X0+", 1)), _c(("Y0+", 1)), {}, _c(("X0-", -1)), _c(("Y0-", -1))),
        (_c(("X0-", -1)), {}, _c((_P, 1), (_M, -1)), _c(("X0-", 1)), {}, {}),
        (_c(("Y0-", -1)), _c((_P, 1), (_M, -1)), {}, _c(("Y0-", 1)), {}, {}),
    ))
    for y, v in zip(NON_A_LABELS, row)
}


def _certify_idempotent(e, what):
    if normal_product(e, e) != e:
        raise ConstructionError(f"{what} is not idempotent")
    return e


@lru_cache(maxsize=None)
def basic_idempotent(p: int) -> AlgebraElement:
    """e = sum_{s=1}^{p-1} (e_s^+ + e_{p-s}^-) + e_p^+ + e_p^-."""
    if p < 2:
        raise ParameterError(f"p must be >= 2, got {p}")
    e = algebra(p).zero()
    for s in range(1, p):
        e = e + primitive_idempotent(s, Sign.PLUS, p) + primitive_idempotent(p - s, Sign.MINUS, p)
    e = e + primitive_idempotent(p, Sign.PLUS, p) + primitive_idempotent(p, Sign.MINUS, p)
    return _certify_idempotent(e, f"basic idempotent (p={p})")


def corner_dimension(f: AlgebraElement) -> int:
    """dim f A f for an idempotent f, computed as the rank of f times a basis of A f."""
    acc = RankAccumulator()
    for v in left_ideal_basis(f):
        acc.add(element_to_sparse(normal_product(f, v)))
    return acc.rank


@dataclass
class BasicBasis:
    p: int
    s: int
    e_plus: AlgebraElement
    X_plus: AlgebraElement
    Y_plus: AlgebraElement
    A_plus: AlgebraElement
    e_minus: AlgebraElement
    X_minus: AlgebraElement
    Y_minus: AlgebraElement
    A_minus: AlgebraElement

    @property
    def elements(self) -> list[AlgebraElement]:
        return [
            self.e_plus, self.X_plus, self.Y_plus, self.A_plus,
            self.e_minus, self.X_minus, self.Y_minus, self.A_minus,
        ]

    def labeled(self) -> dict[str, AlgebraElement]:
        return dict(zip(LABELS, self.elements))

    @property
    def unit(self) -> AlgebraElement:
        return self.e_plus + self.e_minus


def _family_params(p, s, sign):
    # P_s^+ for the plus family, P_{p-s}^- for the minus family
    return (s, Sign.PLUS) if sign is Sign.PLUS else (p - s, Sign.MINUS)


def ideal_vectors(p: int, s: int, sign) -> dict:
    """Basis of the left ideal A e generated by e_s^+ (sign +) or e_{p-s}^- (sign -).

    Keys are ("B", n), ("X", k), ("Y", k), ("A", n) with n < s', k < p - s',
    where s' = s for the plus family and p - s for the minus family.
    """
    sign = Sign.parse(sign)
    if not (1 <= s <= p - 1):
        raise ParameterError(f"s must lie in [1, {p - 1}], got {s}")
    sp, sg = _family_params(p, s, sign)
    alg = algebra(p)
    e = primitive_idempotent(sp, sg, p)
    out = {}
    for n in range(sp):
        out[("B", n)] = normal_product(alg.monomial(0, n), e)
        out[("A", n)] = normal_product(alg.monomial(0, n + 1), normal_product(alg.E, e)) if n + 1 < p \
            else alg.zero()
    for k in range(p - sp):
        out[("Y", k)] = normal_product(alg.monomial(0, sp + k), e)
        out[("X", k)] = normal_product(alg.monomial(p - sp - k, 0), e) / _x_normalizer(sp, k, sg, p)
    return out


@lru_cache(maxsize=None)
def basic_basis(p: int, s: int) -> BasicBasis:
    if not (1 <= s <= p - 1):
        raise ParameterError(f"s must lie in [1, {p - 1}], got {s}")
    plus = ideal_vectors(p, s, Sign.PLUS)
    minus = ideal_vectors(p, s, Sign.MINUS)
    bb = BasicBasis(
        p, s,
        plus[("B", 0)], plus[("X", 0)], plus[("Y", 0)], plus[("A", 0)],
        minus[("B", 0)], minus[("X", 0)], minus[("Y", 0)], minus[("A", 0)],
    )
    try:
        Coordinatizer([element_to_row(z) for z in bb.elements])
    except ParameterError as exc:
        raise ConstructionError(f"basic basis for p={p}, s={s} is dependent") from exc
    f = bb.unit
    for lab, z in bb.labeled().items():
        if normal_product(normal_product(f, z), f) != z:
            raise ConstructionError(f"{lab} does not lie in the corner algebra (p={p}, s={s})")
    return bb


@dataclass
class MultTable:
    """entries[(x, y)] is the product (or commutator) of row x and column y as {label: coeff}."""

    p: int
    s: int
    labels: tuple
    entries: dict

    def entry(self, x: str, y: str) -> dict:
        return self.entries[(x, y)]

    def restrict(self, labels) -> MultTable:
        labels = tuple(labels)
        return MultTable(self.p, self.s, labels, {(x, y): self.entries[(x, y)] for x in labels for y in labels})

    def as_labels(self) -> dict:
        """Entries in the reference-table shape: None, a label (coefficient 1), or a {label: coeff} dict."""
        out = {}
        for key, combo in self.entries.items():
            if not combo:
                out[key] = None
            elif len(combo) == 1 and next(iter(combo.values())) == 1:
                out[key] = next(iter(combo))
            else:
                out[key] = combo
        return out

    def to_json(self):
        """{"labels": [...], "entries": [[cell]]}; cell is "0", a label, or a list of {"label", "coeff"}."""
        rows = []
        for x in self.labels:
            row = []
            for y in self.labels:
                combo = self.entries[(x, y)]
                if not combo:
                    row.append("0")
                elif len(combo) == 1 and next(iter(combo.values())) == 1:
                    row.append(next(iter(combo)))
                else:
                    row.append([{"label": lab, "coeff": _coeff_json(c)} for lab, c in combo.items()])
            rows.append(row)
        return {"labels": list(self.labels), "entries": rows}


def _coeff_json(c):
    if hasattr(c, "to_json"):
        return c.to_json()
    return str(c)


def _combo(coords):
    out = {}
    for lab, c in zip(LABELS, coords):
        if c:
            out[lab] = c.to_fraction() if c.is_rational() else c
    return out


def _table(p, s, op):
    bb = basic_basis(p, s)
    solver = Coordinatizer([element_to_row(z) for z in bb.elements])
    named = bb.labeled()
    entries = {}
    for x in LABELS:
        for y in LABELS:
            try:
                coords = solver.solve(element_to_row(op(named[x], named[y])))
            except NotInSpan as exc:
                raise ConstructionError(f"({x}, {y}) leaves the block (p={p}, s={s})") from exc
            entries[(x, y)] = _combo(coords)
    return MultTable(p, s, LABELS, entries)


@lru_cache(maxsize=None)
def mult_table(p: int, s: int) -> MultTable:
    """All 64 products row * column expressed in the basic basis."""
    return _table(p, s, normal_product)


@lru_cache(maxsize=None)
def commutator_table(p: int, s: int) -> MultTable:
    """All 64 commutators [row, column] in the basic basis (restrict to NON_A_LABELS for the 6x6 view)."""
    return _table(p, s, lambda x, y: normal_product(x, y) - normal_product(y, x))


def slf_dimension(basis) -> int:
    """dim B/[B, B] for the subalgebra B spanned by the given independent elements."""
    basis = list(basis)
    if not basis:
        return 0
    try:
        solver = Coordinatizer([element_to_row(z) for z in basis])
    except ParameterError as exc:
        raise ParameterError("slf_dimension needs linearly independent elements") from exc
    n = len(basis)
    coords = {}
    for i in range(n):
        for j in range(n):
            try:
                coords[(i, j)] = solver.solve(element_to_row(normal_product(basis[i], basis[j])))
            except NotInSpan as exc:
                raise ConstructionError(f"span is not closed under multiplication (pair {i}, {j})") from exc
    acc = RankAccumulator()
    for i in range(n):
        for j in range(i + 1, n):
            acc.add([a - b for a, b in zip(coords[(i, j)], coords[(j, i)])])
    return n - acc.rank


def slf_blocks(p: int) -> dict[int, int]:
    """{s: dim B_s/[B_s, B_s]} for s = 0..p."""
    out = {0: slf_dimension([primitive_idempotent(p, Sign.MINUS, p)])}
    for s in range(1, p):
        out[s] = slf_dimension(basic_basis(p, s).elements)
    out[p] = slf_dimension([primitive_idempotent(p, Sign.PLUS, p)])
    return dict(sorted(out.items()))


def slf_total(p: int) -> int:
    """Symmetric-linear-function dimension of the whole algebra, summed over the basic blocks."""
    if p < 2:
        raise ParameterError(f"p must be >= 2, got {p}")
    return sum(slf_blocks(p).values())


def full_algebra_slf(p: int, allow_large: bool = False) -> int:
    """dim A/[A, A] by brute force over all unordered pairs of PBW monomials.

    Commutators are streamed into a sparse rank accumulator.  Refuses p > 4
    unless ``allow_large`` is set.
    """
    if p < 2:
        raise ParameterError(f"p must be >= 2, got {p}")
    if p > 4 and not allow_large:
        raise ParameterError(f"brute force at p={p} is slow; pass allow_large=True")
    alg = algebra(p)
    mons = alg.monomials
    idx = alg.index
    acc = RankAccumulator()
    zero = field(p).zero
    for i, mi in enumerate(mons):
        for j in range(i + 1, len(mons)):
            mj = mons[j]
            v = {}
            for m, c in alg.mono_product(mi, mj).items():
                v[idx[m]] = c
            for m, c in alg.mono_product(mj, mi).items():
                k = idx[m]
                v[k] = v.get(k, zero) - c
            acc.add(v)
    return alg.dim - acc.rank
