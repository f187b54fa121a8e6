import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfq.errors import IncompatibleActions, NotIPLoop
from hopfq.linalg import QQ
from hopfq.loops import build_from_table, free_group, integers
from hopfq.multiplier import (TMAPS, CoproductMultiplier, FunctionAlgebra, MultiplierPair, certify_no_finite_unit,
                              check_compatible,
                              check_variety_dual, coassociative, embedding_injective, multiplier_embed,
                              tmap_table, unit_counterexample, unital_bridges, verify_multiplier_axioms,
                              window_property)

from conftest import GF101, loop

Z = integers()
F2 = free_group(2)


def tmap_oracle(G, which, x, y, W):
    """Window summation: Delta(delta_u) = sum over p q = u of delta_p ⊗ delta_q, then cover."""
    out = {}
    for p, q in itertools.product(W, repeat=2):
        pq = G.mul(p, q)
        if which == "T1" and pq == x and q == y:        # Delta(delta_x)(1 ⊗ delta_y)
            out[(p, q)] = 1
        elif which == "T2" and pq == y and p == x:      # (delta_x ⊗ 1)Delta(delta_y)
            out[(p, q)] = 1
        elif which == "T3" and pq == x and p == y:      # Delta(delta_x)(delta_y ⊗ 1)
            out[(p, q)] = 1
        elif which == "T4" and pq == y and q == x:      # (1 ⊗ delta_x)Delta(delta_y)
            out[(p, q)] = 1
    return out


def test_t2_on_integers():
    A = FunctionAlgebra(Z)
    assert A.tmap("T2", A.delta("2"), A.delta("5")) == {("2", "3"): 1}


@pytest.mark.parametrize("G", [Z, F2], ids=["Z", "F2"])
@pytest.mark.parametrize("which", TMAPS)
def test_tmaps_match_window_summation(G, which):
    A = FunctionAlgebra(G)
    small, big = G.window(3), G.window(40) if G is F2 else G.window(12)
    for x in small:
        for y in small:
            got = A.tmap(which, A.delta(x), A.delta(y))
            assert got == tmap_oracle(G, which, x, y, big), (x, y)


@pytest.mark.parametrize("which", TMAPS)
def test_tmaps_on_finite_loops_match_summation(which):
    Q = loop("O16")
    A = FunctionAlgebra(Q)
    for x in Q.elements:
        for y in Q.elements:
            assert A.tmap(which, A.delta(x), A.delta(y)) == tmap_oracle(Q, which, x, y, Q.elements)


ints = st.integers(-6, 6).map(str)
coeffs = st.dictionaries(ints, st.integers(-3, 3), max_size=4)


@settings(max_examples=30, deadline=None)
@given(coeffs, coeffs, coeffs, st.sampled_from(TMAPS), st.integers(-3, 3))
def test_tmaps_are_bilinear(a, b, c, which, s):
    A = FunctionAlgebra(Z)
    a, b, c = A.element(a), A.element(b), A.element(c)
    lhs = A.tmap(which, A.add(a, A.scale(QQ(s), c)), b)
    rhs = dict(A.tmap(which, a, b))
    for k, v in A.tmap(which, c, b).items():
        rhs[k] = rhs.get(k, 0) + s * v
    rhs = {k: v for k, v in rhs.items() if v}
    assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(coeffs, coeffs, st.sampled_from(["T1", "T2", "T4"]))
def test_inverse_tmaps_round_trip(a, b, which):
    A = FunctionAlgebra(Z)
    a, b = A.element(a), A.element(b)
    fwd = A.tmap(which, a, b)
    back = {}
    for (p, q), c in fwd.items():
        for k, v in A.tmap_inverse(which, A.delta(p), A.delta(q)).items():
            back[k] = back.get(k, 0) + c * v
    assert {k: v for k, v in back.items() if v} == A.pure(a, b)


def test_no_finite_unit_on_integers():
    A = FunctionAlgebra(Z)
    cand = A.indicator(Z.window(3))
    assert unit_counterexample(A, cand) == "4"
    assert A.mul(cand, A.delta("5")) != A.delta("5")
    assert certify_no_finite_unit(A, [A.indicator(Z.window(k)) for k in range(6)]).holds


def test_finite_unit_exists_for_finite_loops():
    Q = loop("S3")
    A = FunctionAlgebra(Q)
    assert unit_counterexample(A, A.indicator(Q.elements)) is None
    assert not certify_no_finite_unit(A, [A.indicator(Q.elements)]).holds


def test_multiplier_embedding():
    A = FunctionAlgebra(Z)
    W = Z.window(4)
    m = multiplier_embed(A, A.delta("2"), W)
    assert m.leftAct(A.delta("2")) == A.delta("2") and m.rightAct(A.delta("3")) == {}
    u = multiplier_embed(A, "unit", W)
    assert u.leftAct(A.delta("-1")) == A.delta("-1")
    assert embedding_injective(A, W).holds
    bad = MultiplierPair(lambda b: dict(b), lambda a: {}, "bad")
    r = check_compatible(A, bad, W)
    assert not r.holds and r.witness == ("-4", "-4")


def test_incompatible_actions_are_rejected(monkeypatch):
    import hopfq.multiplier as mod
    A = FunctionAlgebra(Z)
    monkeypatch.setattr(mod, "MultiplierPair", lambda left, right, name: MultiplierPair(left, lambda a: {}, name))
    with pytest.raises(IncompatibleActions):
        multiplier_embed(A, A.delta("1"), Z.window(2))


@pytest.mark.parametrize("G", [Z, F2, loop("O16")], ids=["Z", "F2", "O16"])
def test_coproduct_multiplier_slices_agree(G):
    A = FunctionAlgebra(G)
    W = A.window(3)
    for u in W[:5]:
        assert CoproductMultiplier(A, u).slices_agree(W).holds


def test_non_ip_loop_rejected():
    Q = build_from_table([[0, 1, 2, 3, 4],
                          [1, 0, 3, 4, 2],
                          [2, 4, 0, 1, 3],
                          [3, 2, 4, 0, 1],
                          [4, 3, 1, 2, 0]])
    with pytest.raises(NotIPLoop):
        FunctionAlgebra(Q)


@pytest.mark.parametrize("name", ["Q8", "O16"])
def test_axioms_on_finite_loops(name):
    rep = verify_multiplier_axioms(loop(name), QQ, window=8, random_cases=2)
    assert rep.passed, [e.name for e in rep.failures]


@pytest.mark.parametrize("G", [Z, F2], ids=["Z", "F2"])
def test_axioms_on_infinite_groups(G):
    rep = verify_multiplier_axioms(G, GF101, window=4, random_cases=2)
    assert rep.passed, [e.name for e in rep.failures]


def test_coassociativity_tracks_associativity():
    for name, expected in (("Q8", True), ("O16", False)):
        A = FunctionAlgebra(loop(name))
        assert coassociative(A, A.window()).holds == expected
    A = FunctionAlgebra(F2)
    assert coassociative(A, A.window(4)).holds


@pytest.mark.parametrize("name", ["Q8", "O16", "O16skew"])
def test_dual_varieties_match_loop_laws(name):
    Q = loop(name)
    for v in ("flexible", "alternative", "Moufang"):
        assert check_variety_dual(Q, v).holds == window_property(Q, v, Q.elements).holds, v


def test_bridges():
    fin = unital_bridges(loop("O16"))
    assert fin.passed
    assert fin.info["classification"] == "multiplier Hopf coquasigroup"
    inf = unital_bridges(Z, window=4)
    assert inf.passed and inf.info["classification"] == "multiplier Hopf algebra"


def test_tmap_table_rows():
    A = FunctionAlgebra(Z)
    rows = tmap_table(A, Z.window(1))
    assert len(rows) == 4 * 9
    assert ("T2", "1", "-1", "1", "-2") in rows


def test_random_elements_are_deterministic():
    A = FunctionAlgebra(Z)
    W = Z.window(5)
    assert A.random_element(random.Random(1), W) == A.random_element(random.Random(1), W)
