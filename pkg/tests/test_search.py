import itertools

import pytest

from hopfq.errors import BoundExceeded
from hopfq.loops import build_from_table, check_property
from hopfq.search import _Filler, canonical_form, first_ip_non_moufang, parse_filter, search_ip_loops


def brute_force_classes(tables):
    """Oracle: isomorphism classes by trying every relabeling fixing the identity."""
    classes = []
    for t in tables:
        n = len(t)
        found = False
        for c in classes:
            for perm in itertools.permutations(range(1, n)):
                p = (0,) + perm
                if all(p[t[x][y]] == c[p[x]][p[y]] for x in range(n) for y in range(n)):
                    found = True
                    break
            if found:
                break
        if not found:
            classes.append(t)
    return classes


def test_parse_filter():
    assert parse_filter("IP,!Moufang") == (frozenset({"IP"}), frozenset({"Moufang"}))
    assert parse_filter(None) == (frozenset(), frozenset())
    with pytest.raises(ValueError):
        parse_filter("IP,shiny")


def has_two_sided_inverses(t):
    n = len(t)
    return all(any(t[x][y] == 0 == t[y][x] for y in range(n)) for x in range(n))


@pytest.mark.parametrize("order,loops", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 6)])
def test_canonical_form_agrees_with_brute_force(order, loops):
    tables = list(_Filler(order, None).fill())
    classes = brute_force_classes(tables)
    assert len({canonical_form(t) for t in tables}) == len(classes) == loops
    # the search keeps exactly the classes with two-sided inverses
    expected = sum(1 for t in classes if has_two_sided_inverses(t))
    assert len(list(search_ip_loops(order, None))) == expected


@pytest.mark.parametrize("order,groups", [(4, 2), (6, 2), (8, 5)])
def test_group_counts(order, groups):
    assert len(list(search_ip_loops(order, "associative"))) == groups


def test_order_two_moufang_is_z2():
    found = list(search_ip_loops(2, "Moufang"))
    assert len(found) == 1 and [list(r) for r in found[0].table] == [[0, 1], [1, 0]]


def test_smallest_ip_non_moufang_loop_has_order_seven():
    Q = first_ip_non_moufang(8)
    assert Q is not None and Q.order == 7
    assert check_property(Q, "IP").holds and not check_property(Q, "Moufang").holds
    assert not any(True for n in range(1, 7) for _ in search_ip_loops(n, "IP,!Moufang"))


def test_every_result_is_reverified():
    for Q in search_ip_loops(8, "IP,!Moufang"):
        again = build_from_table(Q.table)
        assert check_property(again, "IP").holds and not check_property(again, "Moufang").holds


def test_bounds():
    with pytest.raises(BoundExceeded):
        list(search_ip_loops(9, "IP"))
    with pytest.raises(BoundExceeded):
        list(search_ip_loops(7, None))
    assert len(list(search_ip_loops(9, "IP,commutative,associative", bound=9))) == 2
    with pytest.raises(ValueError):
        list(search_ip_loops(0))
