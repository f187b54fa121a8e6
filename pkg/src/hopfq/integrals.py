"""Integrals on a finite-dimensional Hopf quasigroup.

A functional is a dense list of its values on the basis. Integrals are found
as the exact null space of the invariance system; everything derived from
them (faithfulness, the modular element, the scaling constant) is verified on
every basis element rather than inferred.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InconsistentModularElement, NoFaithfulIntegral, NotAnIntegral
from .hopf import HopfData, HopfQuasigroup
from .linalg import Matrix, axpy, clean, field_inverse, null_space, rank, scaled
from .report import Report

Functional = list


def pair(f: Sequence, x: Mapping):
    """Evaluate a functional (dense values) on a sparse element."""
    acc = 0
    for i, c in x.items():
        v = f[i]
        if v:
            acc = acc + v * c
    return acc


def _eval(H: HopfData, f: Sequence, x: Mapping):
    v = pair(f, x)
    return H.field(v) if isinstance(v, int) else v


def compose(H: HopfData, f: Sequence, images: Sequence[Mapping]) -> Functional:
    """f ∘ L for the linear map L with L(e_i) = images[i]."""
    return [_eval(H, f, images[i]) for i in range(H.dim)]


def integral_system(H: HopfData, side: str) -> Matrix:
    """Rows of the homogeneous system in the unknown values f(e_0..e_{n-1}).

    Left:  (id⊗f)Delta(h) - f(h) 1 = 0, one row per (h, output coordinate).
    Right: (f⊗id)Delta(h) - f(h) 1 = 0.
    """
    n = H.dim
    F = H.field
    rows = []
    for h in range(n):
        coeffs = [[F.zero] * n for _ in range(n)]  # coeffs[k][unknown]
        for (a, b), c in H.coproduct[h].items():
            out, unk = (a, b) if side == "left" else (b, a)
            coeffs[out][unk] = coeffs[out][unk] + c
        for k, u in H.unit.items():
            coeffs[k][h] = coeffs[k][h] - u
        rows.extend(coeffs)
    return Matrix.from_rows(rows, n)


def integral_space(H: HopfData, side: str = "left") -> list[Functional]:
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    return null_space(integral_system(H, side), H.field)


def is_integral(H: HopfData, f: Sequence, side: str = "left") -> tuple[bool, str | None]:
    """Check the defining identity on every basis element; return (ok, first bad label)."""
    if not any(f):
        return False, None
    for h in range(H.dim):
        lhs: dict = {}
        for (a, b), c in H.coproduct[h].items():
            v = f[b] if side == "left" else f[a]
            if v:
                k = a if side == "left" else b
                lhs[k] = lhs.get(k, H.field.zero) + c * v
        if clean(lhs) != scaled(f[h], H.unit):
            return False, H.labels[h]
    return True, None


def gram_matrix(H: HopfData, f: Sequence) -> Matrix:
    n = H.dim
    return Matrix.from_rows([[_eval(H, f, H.product.get((i, j), {})) for j in range(n)]
                             for i in range(n)], n)


@dataclass(frozen=True)
class Faithfulness:
    faithful: bool
    gram_rank: int


def is_faithful(H: HopfData, f: Sequence) -> Faithfulness:
    """Non-degeneracy of (g, h) -> f(gh): full rank of the Gram matrix and its transpose."""
    G = gram_matrix(H, f)
    r_rows = rank(G, H.field)
    r_cols = rank(G.transpose(), H.field)
    if r_rows != r_cols:
        raise AssertionError("row and column rank disagree")  # exact arithmetic: never expected
    return Faithfulness(r_rows == H.dim, r_rows)


def right_from_left(H: HopfData, phi: Sequence) -> Functional:
    """psi = phi ∘ S."""
    return compose(H, phi, H.antipode)


# ---------------------------------------------------------------------------
# invariance identities
# ---------------------------------------------------------------------------

def _sum(H, pairs):
    out: dict = {}
    for c, x in pairs:
        if c:
            axpy(out, c, x)
    return clean(out)


def invariance_identities(H: HopfData, phi: Sequence, psi: Sequence) -> dict:
    """The four element identities satisfied by a left integral phi and right integral psi."""
    m, S, b_ = H.mul, H.S, H.basis
    ev = lambda f, x: _eval(H, f, x)  # noqa: E731

    def l1(g, h):
        lhs = _sum(H, ((c * ev(phi, m(b_(q), S(g))), b_(p)) for (p, q), c in H.comul(h).items()))
        rhs = _sum(H, ((c * ev(phi, m(h, S(b_(p)))), b_(q)) for (p, q), c in H.comul(g).items()))
        return lhs == rhs

    def l2(g, h):
        lhs = _sum(H, ((c * ev(phi, m(g, b_(q))), b_(p)) for (p, q), c in H.comul(h).items()))
        rhs = _sum(H, ((c * ev(phi, m(b_(q), h)), S(b_(p))) for (p, q), c in H.comul(g).items()))
        return lhs == rhs

    def r1(g, h):
        lhs = _sum(H, ((c * ev(psi, m(S(g), b_(p))), b_(q)) for (p, q), c in H.comul(h).items()))
        rhs = _sum(H, ((c * ev(psi, m(S(b_(q)), h)), b_(p)) for (p, q), c in H.comul(g).items()))
        return lhs == rhs

    def r2(g, h):
        lhs = _sum(H, ((c * ev(psi, m(b_(p), h)), b_(q)) for (p, q), c in H.comul(g).items()))
        rhs = _sum(H, ((c * ev(psi, m(g, b_(p))), S(b_(q))) for (p, q), c in H.comul(h).items()))
        return lhs == rhs

    return {
        "h1 phi(h2 S(g)) = phi(h S(g1)) g2": l1,
        "h1 phi(g h2) = S(g1) phi(g2 h)": l2,
        "psi(S(g) h1) h2 = psi(S(g2) h) g1": r1,
        "psi(g1 h) g2 = psi(g h1) S(h2)": r2,
    }


def verify_invariance_identities(H: HopfData, phi: Sequence, psi: Sequence) -> Report:
    ok, bad = is_integral(H, phi, "left")
    if not ok:
        raise NotAnIntegral(f"phi is not a left integral (fails at {bad})")
    ok, bad = is_integral(H, psi, "right")
    if not ok:
        raise NotAnIntegral(f"psi is not a right integral (fails at {bad})")
    rep = Report(f"integral invariance identities: {H.name}")
    for name, law in invariance_identities(H, phi, psi).items():
        w = None
        for g, h in itertools.product(range(H.dim), repeat=2):
            if not law(H.basis(g), H.basis(h)):
                w = (H.labels[g], H.labels[h])
                break
        rep.add(name, w is None, w)
    return rep


# ---------------------------------------------------------------------------
# uniqueness and the modular element
# ---------------------------------------------------------------------------

def faithful_left_integral(H: HopfData) -> Functional:
    """The first basis vector of the left integral space, if it is faithful."""
    space = integral_space(H, "left")
    for phi in space:
        if is_faithful(H, phi).faithful:
            return phi
    raise NoFaithfulIntegral(f"{H.name} has no faithful left integral among {len(space)} basis vectors")


def _first_nonzero(f: Sequence) -> int:
    return next(i for i, v in enumerate(f) if v)


@dataclass(frozen=True)
class Uniqueness:
    dimension: int
    phi: Functional
    scalar_via_delta: object = None
    scalar_via_ratio: object = None

    @property
    def consistent(self) -> bool:
        return self.scalar_via_delta == self.scalar_via_ratio


def uniqueness_scalar(H: HopfData, phi: Sequence, phi2: Sequence) -> tuple:
    """lambda with phi2 = lambda phi, by two independent routes.

    Route one builds delta_h = phi2(h1) h2, extracts delta with
    delta_h = phi(h) delta and reads lambda = eps(delta). Route two is a
    plain coefficient ratio, then checked on every basis element.
    """
    h0 = _first_nonzero(phi)
    delta_h: dict = {}
    for (a, b), c in H.coproduct[h0].items():
        if phi2[a]:
            axpy(delta_h, c * phi2[a], H.basis(b))
    delta = scaled(field_inverse(phi[h0]), clean(delta_h))
    via_delta = H.eps(delta)
    ratio = phi2[h0] * field_inverse(phi[h0])
    if any(phi2[i] != ratio * phi[i] for i in range(H.dim)):
        ratio = None
    return via_delta, ratio


def uniqueness_check(H: HopfData, other: Sequence | None = None) -> Uniqueness:
    phi = faithful_left_integral(H)
    dim = len(integral_space(H, "left"))
    if other is None:
        return Uniqueness(dim, phi)
    via_delta, via_ratio = uniqueness_scalar(H, phi, other)
    return Uniqueness(dim, phi, via_delta, via_ratio)


@dataclass(frozen=True)
class ModularData:
    delta: dict
    delta_inverse: dict
    tau: object


def _modular_checks(H: HopfData, phi: Sequence) -> tuple[dict, dict, object, list]:
    """delta, delta^-1, tau and a (law, holds, witness) row per defining property."""
    F = H.field
    n = H.dim
    if not any(phi):
        raise InconsistentModularElement("phi is zero")

    def phi_tensor_id(h):
        out: dict = {}
        for (a, b), c in H.coproduct[h].items():
            if phi[a]:
                axpy(out, c * phi[a], H.basis(b))
        return clean(out)

    def first(cases):
        return next((H.labels[i] for i, ok in cases if not ok), None)

    h0 = _first_nonzero(phi)
    delta = scaled(field_inverse(phi[h0]), phi_tensor_id(h0))
    delta_inv = H.S(delta)
    rows = []
    w = first((h, phi_tensor_id(h) == scaled(phi[h], delta)) for h in range(n))
    rows.append(("(phi⊗id)Delta(h) = phi(h) delta", w is None, w))
    group_like = H.comul(delta) == {(i, j): a * b for i, a in delta.items() for j, b in delta.items()}
    rows.append(("delta group-like", group_like and H.eps(delta) == F.one, None))
    inv_ok = H.mul(delta_inv, delta) == H.one() and H.mul(delta, delta_inv) == H.one()
    rows.append(("S(delta) inverts delta", inv_ok, None))
    w = first((a, _eval(H, phi, H.S(H.basis(a))) == _eval(H, phi, H.mul(H.basis(a), delta)))
              for a in range(n))
    rows.append(("phi(S(a)) = phi(a delta)", w is None, w))

    phi_s2 = compose(H, phi, [H.S(H.S(H.basis(i))) for i in range(n)])
    tau = phi_s2[h0] * field_inverse(phi[h0])
    scaling = all(phi_s2[i] == tau * phi[i] for i in range(n)) and bool(tau)
    rows.append(("phi∘S^2 = tau phi", scaling, None))
    w = first((a, _eval(H, phi, H.mul(H.mul(delta_inv, H.basis(a)), delta)) == tau * phi[a])
              for a in range(n))
    rows.append(("phi((delta^-1 a) delta) = tau phi(a)", w is None, w))

    psi = right_from_left(H, phi)

    def id_tensor_psi(h):
        out: dict = {}
        for (a, b), c in H.coproduct[h].items():
            if psi[b]:
                axpy(out, c * psi[b], H.basis(a))
        return clean(out)
    w = first((h, id_tensor_psi(h) == scaled(psi[h], delta_inv)) for h in range(n))
    rows.append(("(id⊗psi)Delta(h) = psi(h) delta^-1", w is None, w))
    return delta, delta_inv, tau, rows


def modular_data(H: HopfData, phi: Sequence) -> ModularData:
    """Modular element delta and scaling constant tau, each law verified exhaustively."""
    delta, delta_inv, tau, rows = _modular_checks(H, phi)
    for name, holds, w in rows:
        if not holds:
            raise InconsistentModularElement(name + ("" if w is None else f" fails at {w}"))
    return ModularData(delta, delta_inv, tau)


def modular_report(H: HopfData, phi: Sequence) -> Report:
    rep = Report(f"modular data: {H.name}")
    try:
        delta, _, tau, rows = _modular_checks(H, phi)
    except InconsistentModularElement as exc:
        rep.add("modular element", False, str(exc))
        return rep
    for name, holds, w in rows:
        rep.add(name, holds, w)
    if rep.passed:
        rep.info["delta"] = H.label(delta)
        rep.info["tau"] = H.field.format(tau)
    return rep


def integrals_report(H: HopfQuasigroup) -> Report:
    """Everything about integrals on H in one report (used by the CLI)."""
    rep = Report(f"integrals: {H.name} over {H.field.name}")
    left = integral_space(H, "left")
    right = integral_space(H, "right")
    rep.add("left integral space is one-dimensional", len(left) == 1, len(left))
    rep.add("right integral space is one-dimensional", len(right) == 1, len(right))
    try:
        phi = faithful_left_integral(H)
    except NoFaithfulIntegral as exc:
        rep.add("faithful left integral exists", False, str(exc))
        return rep
    fa = is_faithful(H, phi)
    rep.add("left integral faithful", fa.faithful, fa.gram_rank)
    psi = right_from_left(H, phi)
    ok, bad = is_integral(H, psi, "right")
    rep.add("phi∘S is a right integral", ok, bad)
    fpsi = is_faithful(H, psi)
    rep.probe("psi = phi∘S faithful", fpsi.faithful, fpsi.gram_rank)
    try:
        rep.extend(verify_invariance_identities(H, phi, psi))
    except NotAnIntegral as exc:
        rep.add("invariance identities", False, str(exc))
    md = modular_report(H, phi)
    rep.extend(md)
    rep.info.update(md.info)
    rep.info["phi"] = " ".join(H.field.format(H.field(v)) for v in phi)
    return rep
