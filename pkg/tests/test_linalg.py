from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from uqsl2.algebra import algebra, element_to_row, normal_product
from uqsl2.basic import basic_basis
from uqsl2.cyclotomic import ParameterError, field
from uqsl2.linalg import Coordinatizer, Matrix, NotInSpan, RankAccumulator, coordinates, rank, rref, span_rank

from conftest import cycnums


def mat(p, rows):
    fld = field(p)
    return Matrix.from_rows(p, [[fld.coerce(x) for x in r] for r in rows])


class TestRref:
    def test_identity(self):
        m, r, piv = rref(Matrix.identity(3, 3))
        assert (r, piv) == (3, [0, 1, 2])
        assert m == Matrix.identity(3, 3)

    def test_zero(self):
        _, r, piv = rref(Matrix.zeros(2, 3, 4))
        assert (r, piv) == (0, [])

    def test_rational_example(self):
        m, r, piv = rref(mat(2, [[1, 2, 3], [2, 4, 6], [1, 0, 1]]))
        assert r == 2 and piv == [0, 1]
        assert m.row(0) == [field(2).coerce(x) for x in (1, 0, 1)]
        assert m.row(1) == [field(2).coerce(x) for x in (0, 1, 1)]

    def test_ef_and_fe_rows_independent(self):
        alg = algebra(2)
        rows = [element_to_row(normal_product(alg.E, alg.F)), element_to_row(normal_product(alg.F, alg.E))]
        assert rank(Matrix.from_rows(2, rows)) == 2

    def test_rank_with_irrational_entries(self):
        fld = field(3)
        q = fld.zeta(1)
        # second row is q times the first
        m = Matrix.from_rows(3, [[fld.one, q], [q, q * q]])
        assert rank(m) == 1


class TestSpanRank:
    def test_empty(self):
        assert span_rank([]) == 0

    def test_multiple(self):
        fld = field(3)
        v = [fld.one, fld.zeta(1), fld.zero]
        assert span_rank([v, [2 * x for x in v]]) == 1

    def test_commutator_span_in_basic_block(self):
        bb = basic_basis(3, 1)
        vecs = [bb.X_plus, bb.Y_plus, bb.X_minus, bb.Y_minus, bb.A_plus - bb.A_minus]
        assert span_rank([element_to_row(v) for v in vecs]) == 5


class TestCoordinates:
    def test_basis_vector(self):
        fld = field(2)
        basis = [[fld.one, fld.one], [fld.zero, fld.one]]
        assert coordinates(basis[0], basis) == [fld.one, fld.zero]

    def test_zero_vector(self):
        fld = field(2)
        basis = [[fld.one, fld.one], [fld.zero, fld.one]]
        assert coordinates([fld.zero, fld.zero], basis) == [fld.zero, fld.zero]

    def test_not_in_span(self):
        fld = field(2)
        basis = [[fld.one, fld.zero, fld.zero]]
        assert coordinates([fld.zero, fld.one, fld.zero], basis) is None
        with pytest.raises(NotInSpan):
            Coordinatizer(basis).solve([fld.zero, fld.one, fld.zero])

    def test_dependent_basis_rejected(self):
        fld = field(2)
        v = [fld.one, fld.one]
        with pytest.raises(ParameterError):
            Coordinatizer([v, v])

    def test_table_cell_x0p_y0m(self):
        bb = basic_basis(2, 1)
        coords = coordinates(element_to_row(bb.X_plus * bb.Y_minus), [element_to_row(z) for z in bb.elements])
        fld = field(2)
        assert coords == [fld.zero] * 7 + [fld.one]


class TestMatrix:
    def test_product_and_power(self):
        m = mat(2, [[1, 1], [0, 1]])
        assert m ** 3 == mat(2, [[1, 3], [0, 1]])
        assert m @ Matrix.identity(2, 2) == m

    def test_transpose(self):
        m = mat(3, [[1, 2, 3]])
        assert m.transpose().rows == 3
        assert m.transpose().transpose() == m

    def test_json_shape(self):
        m = mat(2, [[1, Fraction(1, 2)]])
        assert m.to_json() == [[["1/1", "0/1"], ["1/2", "0/1"]]]


@st.composite
def matrices(draw, p, max_rows=4, max_cols=4):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return Matrix.from_rows(p, [[draw(cycnums(p)) for _ in range(c)] for _ in range(r)], c)


@pytest.mark.parametrize("p", [2, 3])
class TestRankProperties:
    @given(data=st.data())
    def test_rank_invariants(self, p, data):
        m = data.draw(matrices(p))
        r = rank(m)
        assert r <= min(m.rows, m.cols)
        assert rank(m.transpose()) == r
        # appending a combination of existing rows does not change rank
        c = data.draw(cycnums(p))
        extra = [a * c + b for a, b in zip(m.row(0), m.row(m.rows - 1))]
        assert rank(Matrix.from_rows(p, m.to_rows() + [extra], m.cols)) == r

    @given(data=st.data())
    def test_accumulator_matches_rref(self, p, data):
        m = data.draw(matrices(p))
        acc = RankAccumulator()
        for row in m.to_rows():
            acc.add(row)
        assert acc.rank == rank(m)

    @given(data=st.data())
    def test_coordinate_roundtrip(self, p, data):
        m = data.draw(matrices(p))
        _, r, _ = rref(m)
        # use an echelon basis of the row space, then rebuild a random combination
        red, _, _ = rref(m)
        basis = [red.row(i) for i in range(r)]
        if not basis:
            return
        cs = [data.draw(cycnums(p)) for _ in basis]
        v = [sum((c * b[j] for c, b in zip(cs, basis)), field(p).zero) for j in range(m.cols)]
        assert coordinates(v, basis) == cs
