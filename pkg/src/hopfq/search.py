"""Enumeration of small loops up to isomorphism.

Loops are filled cell by cell as normalized Latin squares (identity 0 in row
and column 0). When the filter forces the inverse property, the inverse map is
fixed first, up to relabeling, and every placed cell propagates its IP
consequences. Isomorphic copies are rejected by a canonical form: the
lexicographically least table over all relabelings that start from a
generating tuple of minimum size.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .errors import BoundExceeded, InvalidInput
from .loops import PROPERTIES, FiniteLoop, build_from_table, check_property

DEFAULT_BOUND = 8
# without IP propagation the number of normalized Latin squares explodes past this
PLAIN_BOUND = 6
# properties that imply the inverse property
_IMPLY_IP = {"IP", "associative", "Moufang"}


def parse_filter(spec: str | Iterable[str] | None) -> tuple[frozenset, frozenset]:
    """``"IP,!Moufang"`` -> ({IP}, {Moufang}); names as in ``PROPERTIES`` plus "alternative"."""
    if spec is None:
        return frozenset(), frozenset()
    items = spec.split(",") if isinstance(spec, str) else list(spec)
    pos, neg = set(), set()
    for raw in items:
        item = raw.strip()
        if not item:
            continue
        target = neg if item[0] in "!~" else pos
        name = item.lstrip("!~").strip()
        if name not in PROPERTIES and name != "alternative":
            raise ValueError(f"unknown loop property {name!r}")
        target.add(name)
    return frozenset(pos), frozenset(neg)


def _involutions(n: int) -> Iterator[list[int]]:
    """One inverse map per conjugacy type: fixed points 1..f, then adjacent pairs."""
    for f in range(n - 1, -1, -1):
        if (n - 1 - f) % 2:
            continue
        J = list(range(n))
        for k in range(f + 1, n, 2):
            J[k], J[k + 1] = k + 1, k
        yield J


class _Filler:
    def __init__(self, n: int, J: list[int] | None):
        self.n = n
        self.J = J
        self.t = [[-1] * n for _ in range(n)]
        self.row_used = [set() for _ in range(n)]
        self.col_used = [set() for _ in range(n)]
        self.trail: list[tuple[int, int]] = []
        self.ok = all(self.set(0, i, i) and self.set(i, 0, i) for i in range(n))
        if J is not None:
            self.ok = self.ok and all(self.set(i, J[i], 0) for i in range(n))

    def set(self, x: int, y: int, z: int) -> bool:
        """Place x*y = z with all forced consequences; False on contradiction."""
        stack = [(x, y, z)]
        J = self.J
        while stack:
            x, y, z = stack.pop()
            cur = self.t[x][y]
            if cur == z:
                continue
            if cur != -1 or z in self.row_used[x] or z in self.col_used[y]:
                return False
            self.t[x][y] = z
            self.row_used[x].add(z)
            self.col_used[y].add(z)
            self.trail.append((x, y))
            if J is not None:
                # x^-1 (x y) = y, (x y) y^-1 = x, (x y)^-1 = y^-1 x^-1
                stack.append((J[x], z, y))
                stack.append((z, J[y], x))
                stack.append((J[y], J[x], J[z]))
        return True

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            x, y = self.trail.pop()
            z = self.t[x][y]
            self.t[x][y] = -1
            self.row_used[x].discard(z)
            self.col_used[y].discard(z)

    def fill(self) -> Iterator[list[list[int]]]:
        if not self.ok:
            return
        n = self.n
        best = None
        best_count = n + 1
        for x in range(1, n):
            row = self.t[x]
            for y in range(1, n):
                if row[y] == -1:
                    c = n - len(self.row_used[x] | self.col_used[y])
                    if c < best_count:
                        best, best_count = (x, y), c
        if best is None:
            yield [r[:] for r in self.t]
            return
        x, y = best
        for z in range(n):
            if z in self.row_used[x] or z in self.col_used[y]:
                continue
            mark = len(self.trail)
            if self.set(x, y, z):
                yield from self.fill()
            self.undo(mark)


def _generated(table, gens: tuple[int, ...]) -> list[int]:
    """Deterministic closure order: identity, generators, then new products as found."""
    order = [0]
    seen = {0}
    for g in gens:
        if g not in seen:
            seen.add(g)
            order.append(g)
    k = 0
    while k < len(order):
        c = order[k]
        for i in range(k + 1):
            a = order[i]
            for z in (table[a][c], table[c][a]):
                if z not in seen:
                    seen.add(z)
                    order.append(z)
        k += 1
    return order


def canonical_form(table) -> tuple[tuple[int, ...], ...]:
    """Isomorphism invariant: least relabeled table over minimum generating tuples."""
    n = len(table)
    if n == 1:
        return ((0,),)
    for k in range(1, n):
        best = None
        for gens in itertools.permutations(range(1, n), k):
            order = _generated(table, gens)
            if len(order) < n:
                continue
            pos = {u: i for i, u in enumerate(order)}
            relabeled = tuple(tuple(pos[table[order[i]][order[j]]] for j in range(n)) for i in range(n))
            if best is None or relabeled < best:
                best = relabeled
        if best is not None:
            return best
    raise AssertionError("a loop is generated by its non-identity elements")


def _accept(Q: FiniteLoop, pos: frozenset, neg: frozenset) -> bool:
    return all(check_property(Q, p).holds for p in pos) and not any(check_property(Q, p).holds for p in neg)


def search_ip_loops(order: int, predicate: str | Iterable[str] | None = "IP",
                    bound: int = DEFAULT_BOUND) -> Iterator[FiniteLoop]:
    """Loops of the given order satisfying the filter, one per isomorphism class.

    Every yielded loop is re-verified by ``check_property``. Loops without
    two-sided inverses are skipped, since nothing downstream can use them.
    """
    pos, neg = parse_filter(predicate)
    if order < 1:
        raise ValueError("order must be positive")
    if order > bound:
        raise BoundExceeded(f"order {order} exceeds the search bound {bound}")
    use_ip = bool(pos & _IMPLY_IP)
    if not use_ip and order > PLAIN_BOUND:
        raise BoundExceeded(f"order {order} without an IP-implying filter exceeds {PLAIN_BOUND}")
    seen: set = set()
    inverses = _involutions(order) if use_ip else [None]
    count = 0
    for J in inverses:
        for table in _Filler(order, J).fill():
            canon = canonical_form(table)
            if canon in seen:
                continue
            seen.add(canon)
            try:
                Q = build_from_table(canon, name=f"L{order}.{count}")
            except InvalidInput:
                continue
            if _accept(Q, pos, neg):
                count += 1
                yield Q


def first_ip_non_moufang(max_order: int = DEFAULT_BOUND) -> FiniteLoop | None:
    """The smallest IP loop that is not Moufang, searching orders 1..max_order."""
    for n in range(1, max_order + 1):
        for Q in search_ip_loops(n, "IP,!Moufang", bound=max_order):
            return Q
    return None
