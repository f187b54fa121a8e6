"""Line-oriented export format for structure constants.

    hopfq-structure 1
    kind quasigroup
    name kQ8
    field rational
    labels 1 i j k -1 -i -j -k
    flag associative yes
    unit 0 1
    product 1 2 3 1          # e_1 e_2 has coefficient 1 on e_3
    coproduct 3 3 3 1        # Delta(e_3) has coefficient 1 on e_3 ⊗ e_3
    counit 3 1
    antipode 1 5 1           # S(e_1) has coefficient 1 on e_5
    antipode_inverse 1 5 1

Only nonzero constants are written, in sorted order, so exports are
byte-for-byte deterministic. Flags are informational and ignored on import.
The T-map tables of k(G) use the header ``hopfq-tmaps 1``.
"""

from __future__ import annotations

from typing import Sequence

from .errors import InvalidInput
from .hopf import HopfCoquasigroup, HopfData, HopfQuasigroup
from .linalg import parse_field

STRUCTURE_HEADER = "hopfq-structure 1"
TMAP_HEADER = "hopfq-tmaps 1"
_KINDS = {"quasigroup": HopfQuasigroup, "coquasigroup": HopfCoquasigroup}


def export_structure(H: HopfData, flags: dict[str, bool] | None = None) -> str:
    fmt = H.field.format
    kind = "coquasigroup" if isinstance(H, HopfCoquasigroup) else "quasigroup"
    lines = [STRUCTURE_HEADER, f"kind {kind}", f"name {H.name}", f"field {H.field.name}",
             "labels " + " ".join(H.labels)]
    for k, v in (flags or {}).items():
        lines.append(f"flag {k} {'yes' if v else 'no'}")
    lines += [f"unit {i} {fmt(c)}" for i, c in sorted(H.unit.items()) if c]
    for (i, j) in sorted(H.product):
        lines += [f"product {i} {j} {k} {fmt(c)}" for k, c in sorted(H.product[(i, j)].items()) if c]
    for k, d in enumerate(H.coproduct):
        lines += [f"coproduct {k} {i} {j} {fmt(c)}" for (i, j), c in sorted(d.items()) if c]
    lines += [f"counit {i} {fmt(c)}" for i, c in enumerate(H.counit) if c]
    for key, table in (("antipode", H.antipode), ("antipode_inverse", H.antipode_inverse)):
        for i, d in enumerate(table):
            lines += [f"{key} {i} {j} {fmt(c)}" for j, c in sorted(d.items()) if c]
    return "\n".join(lines) + "\n"


def import_structure(text: str) -> HopfData:
    """Inverse of ``export_structure``; raises InvalidInput with a line number."""
    rows = [(n, line.split("#", 1)[0].split()) for n, line in enumerate(text.splitlines(), 1)]
    rows = [(n, r) for n, r in rows if r]
    if not rows or " ".join(rows[0][1]) != STRUCTURE_HEADER:
        raise InvalidInput(f"missing header {STRUCTURE_HEADER!r}")
    meta: dict = {}
    body = []
    for n, r in rows[1:]:
        if r[0] in ("kind", "name", "field"):
            meta[r[0]] = " ".join(r[1:])
        elif r[0] == "labels":
            meta["labels"] = tuple(r[1:])
        elif r[0] == "flag":
            continue
        else:
            body.append((n, r))
    for key in ("kind", "field", "labels"):
        if key not in meta:
            raise InvalidInput(f"missing '{key}' line")
    if meta["kind"] not in _KINDS:
        raise InvalidInput(f"unknown kind {meta['kind']!r}")
    try:
        F = parse_field(meta["field"])
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None
    labels = meta["labels"]
    dim = len(labels)
    unit: dict = {}
    product: dict = {}
    coproduct = [dict() for _ in range(dim)]
    counit = [F.zero] * dim
    antipode = [dict() for _ in range(dim)]
    antipode_inv = [dict() for _ in range(dim)]
    arity = {"unit": 1, "counit": 1, "product": 3, "coproduct": 3, "antipode": 2, "antipode_inverse": 2}
    for n, r in body:
        key = r[0]
        if key not in arity or len(r) != arity[key] + 2:
            raise InvalidInput(f"line {n}: cannot parse {' '.join(r)!r}")
        try:
            idx = [int(x) for x in r[1:-1]]
            c = F(r[-1])
        except (ValueError, ZeroDivisionError):
            raise InvalidInput(f"line {n}: bad number in {' '.join(r)!r}") from None
        if any(not 0 <= i < dim for i in idx):
            raise InvalidInput(f"line {n}: index out of range")
        if key == "unit":
            unit[idx[0]] = c
        elif key == "counit":
            counit[idx[0]] = c
        elif key == "product":
            product.setdefault((idx[0], idx[1]), {})[idx[2]] = c
        elif key == "coproduct":
            coproduct[idx[0]][(idx[1], idx[2])] = c
        elif key == "antipode":
            antipode[idx[0]][idx[1]] = c
        else:
            antipode_inv[idx[0]][idx[1]] = c
    return _KINDS[meta["kind"]](F, labels, product, unit, tuple(coproduct), tuple(counit),
                                tuple(antipode), tuple(antipode_inv), name=meta.get("name", "H"))


def same_structure(A: HopfData, B: HopfData) -> bool:
    """Coefficientwise equality, ignoring names and stored zeros."""
    def nz(d):
        return {k: v for k, v in d.items() if v}
    return (type(A) is type(B) and A.field == B.field and A.labels == B.labels
            and {k: nz(v) for k, v in A.product.items() if nz(v)} == {k: nz(v) for k, v in B.product.items() if nz(v)}
            and nz(A.unit) == nz(B.unit)
            and [nz(d) for d in A.coproduct] == [nz(d) for d in B.coproduct]
            and list(A.counit) == list(B.counit)
            and [nz(d) for d in A.antipode] == [nz(d) for d in B.antipode]
            and [nz(d) for d in A.antipode_inverse] == [nz(d) for d in B.antipode_inverse])


def export_tmaps(name: str, window: Sequence[str], rows: Sequence[tuple]) -> str:
    lines = [TMAP_HEADER, f"name {name}", "window " + " ".join(window)]
    lines += [" ".join(r) for r in rows]
    return "\n".join(lines) + "\n"


def import_tmaps(text: str) -> tuple[str, list[str], list[tuple[str, ...]]]:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or " ".join(lines[0]) != TMAP_HEADER:
        raise InvalidInput(f"missing header {TMAP_HEADER!r}")
    name = " ".join(lines[1][1:])
    window = lines[2][1:]
    return name, window, [tuple(r) for r in lines[3:]]
