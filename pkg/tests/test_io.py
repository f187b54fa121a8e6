import pytest

from hopfq.errors import InvalidInput
from hopfq.hopf import HopfCoquasigroup, group_like_algebra, linear_dual
from hopfq.io import (STRUCTURE_HEADER, export_structure, export_tmaps, import_structure, import_tmaps,
                      same_structure)
from hopfq.loops import cyclic, integers
from hopfq.multiplier import FunctionAlgebra, tmap_table

from conftest import GF101, algebra, dual


def test_z2_round_trip(field):
    H = group_like_algebra(cyclic(2), field)
    text = export_structure(H)
    assert text.startswith(STRUCTURE_HEADER)
    again = import_structure(text)
    assert same_structure(H, again)
    assert export_structure(again) == text


@pytest.mark.parametrize("name", ["S3", "O16"])
def test_round_trip_of_duals(name):
    A = dual(name).structure()
    assert same_structure(A, import_structure(export_structure(A)))
    L = linear_dual(algebra(name, GF101))
    assert same_structure(L, import_structure(export_structure(L)))


def test_q8_dual_export():
    A = dual("Q8").structure()
    text = export_structure(A, {"associative": A.is_associative().holds})
    assert "kind coquasigroup" in text and "flag associative yes" in text
    B = import_structure(text)
    assert isinstance(B, HopfCoquasigroup) and B.dim == 8


def test_same_structure_notices_a_changed_constant():
    H = algebra("Z6")
    lines = export_structure(H).splitlines()
    i = next(k for k, ln in enumerate(lines) if ln.startswith("counit 0"))
    lines[i] = "counit 0 2"
    assert not same_structure(H, import_structure("\n".join(lines)))


@pytest.mark.parametrize("text,fragment", [
    ("", "header"),
    (STRUCTURE_HEADER + "\nkind quasigroup\nfield rational\n", "labels"),
    (STRUCTURE_HEADER + "\nkind monoid\nfield rational\nlabels a\n", "kind"),
    (STRUCTURE_HEADER + "\nkind quasigroup\nfield gf:4\nlabels a\n", "prime"),
    (STRUCTURE_HEADER + "\nkind quasigroup\nfield rational\nlabels a\nunit 0\n", "line 5"),
    (STRUCTURE_HEADER + "\nkind quasigroup\nfield rational\nlabels a\nunit 3 1\n", "out of range"),
    (STRUCTURE_HEADER + "\nkind quasigroup\nfield rational\nlabels a\nunit 0 x\n", "bad number"),
])
def test_import_errors(text, fragment):
    with pytest.raises(InvalidInput) as exc:
        import_structure(text)
    assert fragment in str(exc.value)


def test_tmap_table_round_trip():
    A = FunctionAlgebra(integers())
    W = A.window(5)
    rows = tmap_table(A, W)
    text = export_tmaps(A.name, W, rows)
    name, window, again = import_tmaps(text)
    assert name == "Z" and window == W and again == rows
    assert ("T2", "2", "5", "2", "3") in again
    with pytest.raises(InvalidInput):
        import_tmaps("nope\n")
