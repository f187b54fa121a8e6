import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfq.dual import REPS, SLICES, IntegralDual, RepresentedFunctional, assumption_check, dual_axiom_suite
from hopfq.errors import RepresentationMismatch, SingularEvaluationMatrix
from hopfq.linalg import QQ, Tensor2

from conftest import algebra, dual, loop

values = st.lists(st.integers(-4, 4), min_size=8, max_size=8)


def pointwise(D, a, b):
    """Oracle for k(G): functionals multiply pointwise on group elements."""
    return D.element([x * y for x, y in zip(a.coeffs, b.coeffs)])


@settings(max_examples=20, deadline=None)
@given(values, values)
def test_product_is_pointwise_on_q8(a, b):
    D = dual("Q8")
    wa, wb = D.element(a), D.element(b)
    assert D.product(wa, wb) == pointwise(D, wa, wb)
    for rep, value in D.product_closed_forms(wa, wb).items():
        assert value == pointwise(D, wa, wb), rep


@pytest.mark.parametrize("name", ["S3", "O16"])
def test_closed_forms_agree_with_pairing(name, field):
    D = dual(name, field)
    rng = random.Random(3)
    for _ in range(2):
        a, b = D.random(rng), D.random(rng)
        ref = D.product_by_pairing(a, b)
        assert all(v == ref for v in D.product_closed_forms(a, b).values())
        for kind in SLICES:
            assert D.slice_closed_form(a, b, kind) == D.slice_by_pairing(a, b, kind)


def test_full_coproduct_evaluates_products():
    D = dual("S3")
    Q = loop("S3")
    f = D.basis(2)
    T = D.full_coproduct(f)
    for x in range(Q.order):
        for y in range(Q.order):
            assert T.coeffs.get((x, y), 0) == (1 if Q.mul(x, y) == 2 else 0)


def test_counit_antipode_and_unit_on_group_duals():
    D = dual("O16")
    Q = loop("O16")
    rng = random.Random(5)
    w = D.random(rng)
    assert D.counit(w) == w.coeffs[Q.identity]
    assert D.antipode(w).coeffs == tuple(w.coeffs[Q.inv(u)] for u in range(Q.order))
    assert D.antipode_inverse(D.antipode(w)) == w


@pytest.mark.parametrize("rep", REPS)
def test_representation_round_trip(rep):
    D = dual("Q8")
    w = D.element([1, -2, 0, 3, 0, 0, 5, 1])
    f = D.represent(w, rep)
    assert D.evaluate(f) == w
    for target in REPS:
        assert D.evaluate(D.rep_convert(f, target)) == w
    with pytest.raises(ValueError):
        D.rep_convert(f, "nowhere")


def test_carriers_for_group_duals():
    # phi(. u) = delta_{u^-1}, so the phiRight carrier of delta_v is the basis element v^-1
    D = dual("Q8")
    Q = loop("Q8")
    for v in range(Q.order):
        assert D.represent(D.basis(v), "phiRight").carrier == {Q.inv(v): QQ.one}


def test_non_faithful_functional_is_rejected():
    H = algebra("Z6")
    with pytest.raises(SingularEvaluationMatrix):
        IntegralDual(H, list(H.counit))


def test_closed_form_mismatch_is_reported():
    D = IntegralDual(algebra("Z6"))
    # break one stored evaluation matrix so the phiLeft closed form disagrees
    E = D._E["phiLeft"]
    rows = E.to_rows()
    rows[0], rows[1] = rows[1], rows[0]
    from hopfq.linalg import Matrix, inverse
    D._E["phiLeft"] = Matrix.from_rows(rows, D.dim)
    D._Einv["phiLeft"] = inverse(D._E["phiLeft"], D.field)
    a, b = D.basis(1), D.basis(1)
    with pytest.raises(RepresentationMismatch):
        D.product(a, b)


@pytest.mark.parametrize("name", ["Z6", "Q8", "O16"])
def test_dual_suite_passes(name, field):
    D = dual(name, field)
    assert assumption_check(D).passed
    rep = dual_axiom_suite(D, random_cases=2)
    assert rep.passed, [e.name for e in rep.failures]
    probe = rep["coassociativity"]
    assert probe.holds == (name != "O16") and probe.ok


def test_tensor_product_matches_full_coproduct_multiplicativity():
    D = dual("Q8")
    rng = random.Random(11)
    a, b = D.random(rng), D.random(rng)
    lhs = D.full_coproduct(D.product(a, b))
    rhs = D.tensor_product(D.full_coproduct(a), D.full_coproduct(b))
    assert lhs == rhs


def test_pair2():
    D = dual("Z6")
    T = Tensor2(6, {(1, 2): QQ(3)})
    assert D.pair2(T, {(1, 2): QQ(2), (0, 0): QQ(5)}) == 6
    assert isinstance(RepresentedFunctional("phiLeft", {}), RepresentedFunctional)
