from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfq.errors import FieldMismatch
from hopfq.linalg import (QQ, Matrix, PrimeField, Residue, Tensor2, field_inverse, inverse,
                          mat_vec, null_space, parse_field, rank, rref, solve)

GF7 = PrimeField(7)
GF101 = PrimeField(101)


def naive_rank(rows, field):
    """Textbook elimination with field division; the oracle for the fraction-free path."""
    m = [[field(x) for x in r] for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field_inverse(m[r][c])
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


small_ints = st.integers(min_value=-6, max_value=6)
matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=1, max_size=6))
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_field_inverse_examples():
    assert field_inverse(Fraction(2)) == Fraction(1, 2)
    assert field_inverse(GF7(3)) == GF7(5)
    with pytest.raises(ZeroDivisionError):
        field_inverse(Fraction(0))
    with pytest.raises(ZeroDivisionError):
        field_inverse(GF7(0))


def test_residues_are_reduced():
    assert Residue(-1, 7).value == 6
    assert Residue(15, 7) == Residue(1, 7)
    assert GF7(Fraction(1, 3)) * 3 == GF7.one


def test_fields_never_mix():
    with pytest.raises(FieldMismatch):
        GF7(1) + GF101(1)
    with pytest.raises(FieldMismatch):
        GF7(1) * Fraction(1, 2)
    with pytest.raises(FieldMismatch):
        QQ(GF7(2))


def test_parse_field():
    assert parse_field("rational") is QQ
    assert parse_field("gf:101") == GF101
    with pytest.raises(ValueError):
        parse_field("gf:100")
    with pytest.raises(ValueError):
        parse_field("reals")


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * field_inverse(a) == 1


@given(st.integers(0, 100), st.integers(0, 100), st.integers(0, 100))
def test_prime_field_axioms(x, y, z):
    a, b, c = GF101(x), GF101(y), GF101(z)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    if a:
        assert a * a.inverse() == GF101.one


def test_rank_and_null_space_examples():
    I2 = Matrix.identity(2)
    assert null_space(I2) == []
    assert len(null_space([[0, 0], [0, 0]], QQ)) == 2
    assert rank(Matrix.identity(5)) == 5
    assert rank([[1, 1, 1]] * 3, QQ) == 1
    # Gram matrix of delta_e on kZ2 is the inversion permutation matrix
    assert rank([[1, 0], [0, 1]], QQ) == 2


def test_integral_system_of_kz2():
    # unknowns (phi(e), phi(g)); rows: coefficient of e and g in (id⊗phi)Delta(u) - phi(u)1
    M = [[0, 0], [0, 0], [0, -1], [0, 1]]
    basis = null_space(M, QQ)
    assert len(basis) == 1
    assert basis[0][1] == 0 and basis[0][0] != 0


@settings(max_examples=60)
@given(matrices)
def test_bareiss_rank_matches_naive_elimination(rows):
    assert rank(rows, QQ) == naive_rank(rows, QQ)
    assert rank(rows, GF101) == naive_rank(rows, GF101)


@settings(max_examples=60)
@given(matrices)
def test_rank_nullity(rows):
    for F in (QQ, GF7):
        ns = null_space([[F(x) for x in r] for r in rows], F)
        assert rank(rows, F) + len(ns) == len(rows[0])
        for v in ns:
            assert all(x == 0 for x in mat_vec([[F(x) for x in r] for r in rows], v, F))


@settings(max_examples=40)
@given(st.lists(st.lists(small_ints, min_size=3, max_size=3), min_size=3, max_size=3))
def test_inverse_is_two_sided(rows):
    inv = inverse(rows, QQ)
    if rank(rows, QQ) < 3:
        assert inv is None
        return
    M = Matrix.from_rows([[QQ(x) for x in r] for r in rows])
    prod = [[sum(M[i, k] * inv[k, j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert prod == Matrix.identity(3).to_rows()


def test_rref_of_rational_rows():
    red, piv = rref([[2, 4, 6], [1, 3, 5]], QQ)
    assert piv == [0, 1]
    assert red == [[1, 0, -1], [0, 1, 2]]


def test_solve_consistent_and_inconsistent():
    assert solve([[1, 1], [1, -1]], [3, 1], QQ) == [2, 1]
    assert solve([[1, 1], [1, 1]], [1, 2], QQ) is None


def test_tensor2_drops_zeros_and_iterates_sorted():
    t = Tensor2(3, {(2, 0): Fraction(1), (0, 1): Fraction(0), (1, 1): Fraction(-2)})
    assert list(t.items()) == [((1, 1), -2), ((2, 0), 1)]
    assert not (t - t)
    assert Tensor2.pure(2, {0: 2}, {1: 3}) == Tensor2(2, {(0, 1): 6})
