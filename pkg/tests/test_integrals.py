import pytest

from hopfq.errors import InconsistentModularElement, NotAnIntegral
from hopfq.integrals import (faithful_left_integral, integral_space, integrals_report,
                             is_faithful, is_integral, modular_data, right_from_left, uniqueness_check,
                             verify_invariance_identities)
from hopfq.linalg import QQ
from hopfq.suite import corrupt_antipode

from conftest import algebra, loop

CORPUS = ["Z6", "S3", "Q8", "O16"]


def delta_identity(H):
    """Oracle for kG: the functional picking the coefficient of the identity."""
    F = H.field
    return [F.one if i == 0 else F.zero for i in range(H.dim)]


@pytest.mark.parametrize("name", CORPUS)
def test_integral_space_is_spanned_by_delta_e(name, field):
    H = algebra(name, field)
    for side in ("left", "right"):
        space = integral_space(H, side)
        assert len(space) == 1
        phi = space[0]
        nz = [i for i, c in enumerate(phi) if c]
        assert nz == [0]
        assert is_integral(H, phi, side) == (True, None)
    assert faithful_left_integral(H) == delta_identity(H)


def test_faithfulness_ranks():
    H = algebra("Z6")
    assert is_faithful(H, list(H.counit)).gram_rank == 1
    assert is_faithful(H, [QQ.zero] * H.dim).gram_rank == 0
    fa = is_faithful(H, delta_identity(H))
    assert fa.faithful and fa.gram_rank == H.dim


def test_counit_is_not_an_integral():
    H = algebra("Z6")
    ok, bad = is_integral(H, list(H.counit), "left")
    assert not ok and bad is not None
    with pytest.raises(NotAnIntegral):
        verify_invariance_identities(H, list(H.counit), right_from_left(H, delta_identity(H)))


@pytest.mark.parametrize("name", CORPUS)
def test_invariance_identities(name, field):
    H = algebra(name, field)
    phi = delta_identity(H)
    rep = verify_invariance_identities(H, phi, right_from_left(H, phi))
    assert rep.passed and len(rep.entries) == 4


def test_invariance_identities_fail_with_a_corrupted_antipode():
    H = corrupt_antipode(algebra("Q8"))
    phi = delta_identity(H)
    rep = verify_invariance_identities(H, phi, right_from_left(H, phi))
    assert not rep.passed


@pytest.mark.parametrize("name", ["S3", "O16"])
def test_uniqueness_scalar_by_two_routes(name):
    H = algebra(name)
    phi2 = [3 * c for c in delta_identity(H)]
    u = uniqueness_check(H, phi2)
    assert u.dimension == 1
    assert u.scalar_via_delta == u.scalar_via_ratio == 3


@pytest.mark.parametrize("name", CORPUS)
def test_modular_data_is_trivial_for_loop_algebras(name, field):
    H = algebra(name, field)
    md = modular_data(H, delta_identity(H))
    assert md.delta == H.one() and md.delta_inverse == H.one()
    assert md.tau == field.one


def test_modular_data_rejects_zero():
    H = algebra("Z6")
    with pytest.raises(InconsistentModularElement):
        modular_data(H, [QQ.zero] * H.dim)


def test_integrals_report_for_q8():
    rep = integrals_report(algebra("Q8"))
    assert rep.passed
    assert rep.info["delta"] == "1" and rep.info["tau"] == "1"


def test_trivial_algebra():
    from hopfq.hopf import group_like_algebra
    from hopfq.loops import cyclic
    H = group_like_algebra(cyclic(1))
    assert integral_space(H) == [[QQ.one]]
    assert integrals_report(H).passed
