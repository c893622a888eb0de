import pytest

from uqsl2.algebra import algebra
from uqsl2.basic import (
    LABELS,
    NON_A_LABELS,
    REFERENCE_COMMUTATORS,
    REFERENCE_PRODUCTS,
    basic_basis,
    basic_idempotent,
    commutator_table,
    corner_dimension,
    full_algebra_slf,
    ideal_vectors,
    mult_table,
    slf_blocks,
    slf_dimension,
    slf_total,
)
from uqsl2.cyclotomic import ParameterError
from uqsl2.idempotents import Sign, primitive_idempotent
from uqsl2.verify import annihilation_identities

BLOCKS = [(p, s) for p in (2, 3, 4) for s in range(1, p)]


def test_basic_idempotent_p2():
    e = basic_idempotent(2)
    parts = [primitive_idempotent(s, sg, 2) for s in (1, 2) for sg in Sign]
    assert e == parts[0] + parts[1] + parts[2] + parts[3]
    assert e * e == e


@pytest.mark.parametrize("p", [2, 3, 4])
def test_basic_algebra_dimension(p):
    assert corner_dimension(basic_idempotent(p)) == 8 * (p - 1) + 2


@pytest.mark.parametrize("p, s", BLOCKS)
def test_corner_of_each_block_is_eight_dimensional(p, s):
    assert corner_dimension(basic_basis(p, s).unit) == 8


@pytest.mark.parametrize("p, s", BLOCKS)
def test_fixed_vectors(p, s):
    z = basic_basis(p, s).labeled()
    assert z["e+"] * z["Y0-"] == z["Y0-"]
    assert z["e+"] * z["X0-"] == z["X0-"]
    assert z["e+"] * z["A0+"] == z["A0+"]
    assert z["e-"] * z["X0+"] == z["X0+"]
    assert z["e-"] * z["Y0+"] == z["Y0+"]
    assert z["e-"] * z["A0-"] == z["A0-"]


@pytest.mark.parametrize("p, s", BLOCKS)
def test_higher_vectors_die(p, s):
    plus = ideal_vectors(p, s, "+")
    e = primitive_idempotent(s, "+", p)
    for n in range(1, s):
        assert (e * plus[("B", n)]).is_zero()
    for name, lhs, rhs in annihilation_identities(p, s):
        assert lhs == rhs, name


def test_ideal_vectors_span_the_left_ideal():
    from uqsl2.linalg import span_rank
    from uqsl2.algebra import element_to_row
    p, s = 3, 1
    for sign in Sign:
        vecs = ideal_vectors(p, s, sign)
        assert len(vecs) == 2 * p
        assert span_rank([element_to_row(v) for v in vecs.values()]) == 2 * p


@pytest.mark.parametrize("p, s", BLOCKS)
def test_table1(p, s):
    mt = mult_table(p, s)
    assert mt.as_labels() == REFERENCE_PRODUCTS
    assert mt.entry("X0+", "Y0-") == {"A0-": 1}
    assert mt.entry("A0+", "A0+") == {}
    assert mt.entry("e+", "e+") == {"e+": 1}


@pytest.mark.parametrize("p, s", BLOCKS)
def test_table2(p, s):
    ct = commutator_table(p, s)
    assert ct.restrict(NON_A_LABELS).entries == REFERENCE_COMMUTATORS
    assert ct.entry("e+", "X0+") == {"X0+": -1}
    assert ct.entry("Y0+", "X0-") == {"A0-": 1, "A0+": -1}
    for x in LABELS:
        assert ct.entry(x, x) == {}
        assert ct.entry(x, "A0+") == {} and ct.entry(x, "A0-") == {}


def test_reference_tables_are_consistent():
    # the commutator table follows from the product table
    for x in NON_A_LABELS:
        for y in NON_A_LABELS:
            combo = {}
            for lab, sgn in ((REFERENCE_PRODUCTS[(x, y)], 1), (REFERENCE_PRODUCTS[(y, x)], -1)):
                if lab is not None:
                    combo[lab] = combo.get(lab, 0) + sgn
            assert {k: v for k, v in combo.items() if v} == REFERENCE_COMMUTATORS[(x, y)], (x, y)


def test_table_json_schema():
    data = mult_table(3, 1).to_json()
    assert data["labels"] == list(LABELS)
    assert len(data["entries"]) == 8 and all(len(r) == 8 for r in data["entries"])
    flat = {c for row in data["entries"] for c in row}
    assert flat <= set(LABELS) | {"0"}
    assert data["entries"][LABELS.index("X0+")][LABELS.index("Y0-")] == "A0-"


def test_commutator_json_uses_coefficient_objects():
    data = commutator_table(2, 1).restrict(NON_A_LABELS).to_json()
    cell = data["entries"][NON_A_LABELS.index("Y0+")][NON_A_LABELS.index("X0-")]
    assert sorted(c["label"] for c in cell) == ["A0+", "A0-"]


class TestSlf:
    @pytest.mark.parametrize("p", [2, 3, 4, 5])
    def test_blocks(self, p):
        assert slf_blocks(p) == {s: (1 if s in (0, p) else 3) for s in range(p + 1)}

    @pytest.mark.parametrize("p, expected", [(2, 5), (3, 8), (4, 11)])
    def test_total(self, p, expected):
        assert slf_total(p) == expected

    def test_single_idempotent(self):
        assert slf_dimension([primitive_idempotent(2, "+", 2)]) == 1

    def test_full_monomial_basis_p2(self):
        alg = algebra(2)
        assert slf_dimension([alg.monomial(*m) for m in alg.monomials]) == 5

    @pytest.mark.parametrize("p", [2, 3])
    def test_brute_force_matches_blocks(self, p):
        assert full_algebra_slf(p) == slf_total(p)

    def test_brute_force_gated(self):
        with pytest.raises(ParameterError):
            full_algebra_slf(5)

    def test_empty_and_dependent(self):
        assert slf_dimension([]) == 0
        e = primitive_idempotent(1, "+", 2)
        with pytest.raises(ParameterError):
            slf_dimension([e, e])


def test_basic_basis_rejects_bad_s():
    with pytest.raises(ParameterError):
        basic_basis(3, 3)


def test_tables_do_not_depend_on_block_or_p():
    first = mult_table(*BLOCKS[0]).entries
    first_c = commutator_table(*BLOCKS[0]).entries
    for p, s in BLOCKS[1:]:
        assert mult_table(p, s).entries == first
        assert commutator_table(p, s).entries == first_c


@pytest.mark.parametrize("p, s", BLOCKS)
def test_left_ideal_of_block_unit(p, s):
    from uqsl2.idempotents import left_ideal_dimension
    assert left_ideal_dimension(basic_basis(p, s).unit) == 4 * p
