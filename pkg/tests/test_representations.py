import pytest

from uqsl2.center import beta
from uqsl2.cyclotomic import ParameterError, field
from uqsl2.idempotents import Sign
from uqsl2.linalg import Matrix
from uqsl2.representations import (
    Representation,
    casimir_matrix,
    check_relations,
    highest_weight_dimension,
    projective_module,
    simple_module,
)


def test_one_dimensional_trivial_module(p):
    r = simple_module(1, "+", p)
    fld = field(p)
    assert r.dim == 1
    assert r.mat_K[0, 0] == fld.one
    assert r.mat_E.is_zero() and r.mat_F.is_zero()


def test_two_dimensional_module_at_p2():
    r = simple_module(2, "+", 2)
    fld = field(2)
    q = fld.zeta(1)
    assert r.mat_K == Matrix.from_rows(2, [[q, fld.zero], [fld.zero, fld.zeta(-1)]])
    assert r.mat_E == Matrix.from_rows(2, [[fld.zero, fld.one], [fld.zero, fld.zero]])
    assert r.mat_F == Matrix.from_rows(2, [[fld.zero, fld.zero], [fld.one, fld.zero]])


def test_minus_sign_flips_k(p):
    for s in range(1, p + 1):
        assert simple_module(s, "-", p).mat_K == -simple_module(s, "+", p).mat_K


def test_projective_weights_p2():
    r = projective_module(1, "+", 2)
    fld = field(2)
    assert r.dim == 4
    assert r.labels == ["b_0", "x_0", "y_0", "a_0"]
    diag = [r.mat_K[i, i] for i in range(4)]
    assert diag == [fld.one, -fld.one, -fld.one, fld.one]
    # E b_0 = x_{p-s-1} = x_0
    col = r.mat_E.column(r.index("b_0"))
    assert col == [fld.zero, fld.one, fld.zero, fld.zero]


def test_simple_modules_satisfy_relations(p):
    for s in range(1, p + 1):
        for sign in Sign:
            assert check_relations(simple_module(s, sign, p))


def test_projective_modules_satisfy_relations(p):
    for s in range(1, p):
        for sign in Sign:
            rel = check_relations(projective_module(s, sign, p))
            assert rel, str(rel)


def test_swapped_generators_detected():
    r = simple_module(2, "+", 2)
    broken = Representation(2, 2, r.mat_F, r.mat_E, r.mat_K, r.labels)
    rel = check_relations(broken)
    assert not rel
    assert rel.relation.startswith("[E, F]")


def test_projective_rejects_s_equal_p():
    with pytest.raises(ParameterError):
        projective_module(3, "+", 3)


def test_bad_sign():
    with pytest.raises(ParameterError):
        simple_module(1, "x", 2)


def test_casimir_scalar_on_simples(p):
    for s in range(1, p + 1):
        for sign in Sign:
            c = beta(s, p) if sign is Sign.PLUS else -beta(s, p)
            assert casimir_matrix(simple_module(s, sign, p)) == Matrix.identity(p, s).scale(c)


def test_unique_highest_weight_in_projective(p):
    fld = field(p)
    for s in range(1, p):
        for sign in Sign:
            w = fld.zeta(s - 1) if sign is Sign.PLUS else -fld.zeta(s - 1)
            assert highest_weight_dimension(projective_module(s, sign, p), w) == 1


def test_a_span_is_a_copy_of_the_simple(p):
    for s in range(1, p):
        for sign in Sign:
            r = projective_module(s, sign, p)
            idx = [r.index(f"a_{n}") for n in range(s)]
            rest = [i for i in range(r.dim) if i not in idx]
            x = simple_module(s, sign, p)
            for big, small in ((r.mat_E, x.mat_E), (r.mat_F, x.mat_F), (r.mat_K, x.mat_K)):
                # invariant subspace, with the same action as X_s
                assert all(big[i, j].is_zero() for i in rest for j in idx)
                assert Matrix.from_rows(p, [[big[i, j] for j in idx] for i in idx]) == small


def test_b_block_reproduces_simple_modulo_the_rest(p):
    # the top of P_s: action on b_n projected back to the b coordinates is X_s
    for s in range(1, p):
        for sign in Sign:
            r = projective_module(s, sign, p)
            x = simple_module(s, sign, p)
            idx = [r.index(f"b_{n}") for n in range(s)]
            for big, small in ((r.mat_E, x.mat_E), (r.mat_F, x.mat_F), (r.mat_K, x.mat_K)):
                assert Matrix.from_rows(p, [[big[i, j] for j in idx] for i in idx]) == small


def test_json_shape():
    data = simple_module(2, "+", 2).to_json()
    assert data["dim"] == 2 and len(data["E"]) == 2 and len(data["E"][0][0]) == 2
