"""The integral dual of a finite-dimensional Hopf quasigroup.

Elements of the dual are stored as their values on the basis of H (which are
also their coefficients on the dual basis). The four carrier representations
phi(.a), phi(a.), psi(.a), psi(a.) are views derived from that vector by an
exact linear solve. Products and coproduct slices are computed twice, once by
pairing against the structure maps of H and once from the carrier closed
forms, and the two must agree exactly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import RepresentationMismatch, SingularEvaluationMatrix
from .hopf import HopfCoquasigroup, HopfData, HopfQuasigroup, linear_dual, verify_coquasigroup
from .integrals import faithful_left_integral, is_faithful, right_from_left
from .linalg import Matrix, Tensor2, axpy, clean, inverse, mat_vec, rank
from .report import Report

REPS = ("phiRight", "phiLeft", "psiRight", "psiLeft")
SLICES = ("(w1⊗1)D(w2)", "D(w1)(1⊗w2)", "(1⊗w1)D(w2)", "D(w1)(w2⊗1)")
EXHAUSTIVE_LIMIT = 2 ** 20
DEFAULT_SEED = 20190517


@dataclass(frozen=True)
class DualElement:
    """A functional on H, given by its values on the basis."""

    coeffs: tuple

    @cached_property
    def nz(self) -> dict:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def __call__(self, x: Mapping):
        acc = 0
        nz = self.nz
        for i, c in x.items():
            v = nz.get(i)
            if v is not None:
                acc = acc + v * c
        return acc

    def __add__(self, other: "DualElement") -> "DualElement":
        return DualElement(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DualElement") -> "DualElement":
        return DualElement(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, c) -> "DualElement":
        return DualElement(tuple(c * a for a in self.coeffs))

    def __bool__(self):
        return bool(self.nz)


@dataclass(frozen=True)
class RepresentedFunctional:
    rep: str
    carrier: dict


class IntegralDual:
    """The dual built from a faithful left integral phi and psi = phi∘S."""

    def __init__(self, H: HopfQuasigroup, phi: Sequence | None = None):
        self.H = H
        self.field = H.field
        self.phi = list(phi) if phi is not None else faithful_left_integral(H)
        if not is_faithful(H, self.phi).faithful:
            raise SingularEvaluationMatrix("phi is not faithful; the evaluation matrices are singular")
        self.psi = right_from_left(H, self.phi)
        n = H.dim
        F = self.field
        self._prod = [[H.mul(H.basis(i), H.basis(j)) for j in range(n)] for i in range(n)]
        self._Sb = [H.S(H.basis(i)) for i in range(n)]
        self._Sib = [H.Sinv(H.basis(i)) for i in range(n)]
        phi_d, psi_d = DualElement(tuple(map(F, self.phi))), DualElement(tuple(map(F, self.psi)))
        self.phi_elem, self.psi_elem = phi_d, psi_d

        # column j holds the values of the functional carried by e_j
        def ev(f, i, j):
            return F(f(self._prod[i][j]))
        self._E = {
            "phiRight": Matrix.from_rows([[ev(phi_d, i, j) for j in range(n)] for i in range(n)], n),
            "phiLeft": Matrix.from_rows([[ev(phi_d, j, i) for j in range(n)] for i in range(n)], n),
            "psiRight": Matrix.from_rows([[ev(psi_d, i, j) for j in range(n)] for i in range(n)], n),
            "psiLeft": Matrix.from_rows([[ev(psi_d, j, i) for j in range(n)] for i in range(n)], n),
        }
        self._Einv = {}
        for rep, E in self._E.items():
            inv = inverse(E, F)
            if inv is None:
                raise SingularEvaluationMatrix(f"{rep} evaluation matrix is singular")
            self._Einv[rep] = inv

    # -- elements ------------------------------------------------------------
    @property
    def dim(self) -> int:
        return self.H.dim

    def basis(self, i: int) -> DualElement:
        F = self.field
        return DualElement(tuple(F.one if k == i else F.zero for k in range(self.dim)))

    def element(self, values: Sequence) -> DualElement:
        return DualElement(tuple(self.field(v) for v in values))

    def functional(self, f) -> DualElement:
        """Tabulate any callable on basis elements of H."""
        return DualElement(tuple(self.field(f(self.H.basis(i))) for i in range(self.dim)))

    def zero(self) -> DualElement:
        return DualElement(tuple(self.field.zero for _ in range(self.dim)))

    def random(self, rng: random.Random, lo: int = -3, hi: int = 3) -> DualElement:
        return self.element([rng.randint(lo, hi) for _ in range(self.dim)])

    # -- representations -------------------------------------------------------
    def evaluate(self, f: RepresentedFunctional) -> DualElement:
        v = self.H.to_vector(f.carrier)
        return DualElement(tuple(mat_vec(self._E[f.rep], v, self.field)))

    def represent(self, w: DualElement, rep: str) -> RepresentedFunctional:
        c = mat_vec(self._Einv[rep], list(w.coeffs), self.field)
        return RepresentedFunctional(rep, clean(dict(enumerate(c))))

    def rep_convert(self, f: RepresentedFunctional, target: str) -> RepresentedFunctional:
        if target not in REPS:
            raise ValueError(f"unknown representation {target!r}")
        return self.represent(self.evaluate(f), target)

    # -- product ---------------------------------------------------------------
    def product_by_pairing(self, w: DualElement, w2: DualElement) -> DualElement:
        """(w w2)(h) = (w ⊗ w2) Delta(h)."""
        H = self.H
        F = self.field
        vals = []
        for h in range(self.dim):
            acc = F.zero
            for (a, b), c in H.coproduct[h].items():
                x, y = w.coeffs[a], w2.coeffs[b]
                if x and y:
                    acc = acc + c * x * y
            vals.append(acc)
        return DualElement(tuple(vals))

    def _fval(self, w: DualElement, x: Mapping):
        v = w(x)
        return self.field(v) if isinstance(v, int) else v

    def product_closed_forms(self, w: DualElement, w2: DualElement) -> dict[str, DualElement]:
        """The product from each of the four carrier forms."""
        H = self.H
        out = {}
        # w phi(.a) = phi(.b), b = w(S^-1(a1)) a2
        a = self.represent(w2, "phiRight").carrier
        b: dict = {}
        for (p, q), c in H.comul(a).items():
            axpy(b, c * self._fval(w, self._Sib[p]), H.basis(q))
        out["phiRight"] = self.evaluate(RepresentedFunctional("phiRight", clean(b)))
        # w phi(a.) = phi(c.), c = w(S(a1)) a2
        a = self.represent(w2, "phiLeft").carrier
        cc: dict = {}
        for (p, q), c in H.comul(a).items():
            axpy(cc, c * self._fval(w, self._Sb[p]), H.basis(q))
        out["phiLeft"] = self.evaluate(RepresentedFunctional("phiLeft", clean(cc)))
        # psi(.a) w = psi(.d), d = a1 w(S(a2))
        a = self.represent(w, "psiRight").carrier
        d: dict = {}
        for (p, q), c in H.comul(a).items():
            axpy(d, c * self._fval(w2, self._Sb[q]), H.basis(p))
        out["psiRight"] = self.evaluate(RepresentedFunctional("psiRight", clean(d)))
        # psi(a.) w = psi(e.), e = a1 w(S^-1(a2))
        a = self.represent(w, "psiLeft").carrier
        e: dict = {}
        for (p, q), c in H.comul(a).items():
            axpy(e, c * self._fval(w2, self._Sib[q]), H.basis(p))
        out["psiLeft"] = self.evaluate(RepresentedFunctional("psiLeft", clean(e)))
        return out

    def product(self, w: DualElement, w2: DualElement, check: bool = True) -> DualElement:
        ref = self.product_by_pairing(w, w2)
        if check:
            for rep, val in self.product_closed_forms(w, w2).items():
                if val != ref:
                    raise RepresentationMismatch(f"closed form via {rep} disagrees with the pairing")
        return ref

    # -- coproduct slices --------------------------------------------------------
    def slice_by_pairing(self, w1: DualElement, w2: DualElement, kind: str) -> Tensor2:
        """Values <T, e_x ⊗ e_y> of a coproduct slice, from the product of H."""
        H = self.H
        n = self.dim
        P = self._prod
        out: dict = {}
        if kind == SLICES[0]:      # w1(x1) w2(x2 y)
            for x in range(n):
                for (p, q), c in H.coproduct[x].items():
                    u = w1.coeffs[p]
                    if u:
                        for y in range(n):
                            v = w2(P[q][y])
                            if v:
                                out[(x, y)] = out.get((x, y), 0) + c * u * v
        elif kind == SLICES[1]:    # w1(x y1) w2(y2)
            for y in range(n):
                for (p, q), c in H.coproduct[y].items():
                    u = w2.coeffs[q]
                    if u:
                        for x in range(n):
                            v = w1(P[x][p])
                            if v:
                                out[(x, y)] = out.get((x, y), 0) + c * u * v
        elif kind == SLICES[2]:    # w1(y1) w2(x y2)
            for y in range(n):
                for (p, q), c in H.coproduct[y].items():
                    u = w1.coeffs[p]
                    if u:
                        for x in range(n):
                            v = w2(P[x][q])
                            if v:
                                out[(x, y)] = out.get((x, y), 0) + c * u * v
        elif kind == SLICES[3]:    # w1(x1 y) w2(x2)
            for x in range(n):
                for (p, q), c in H.coproduct[x].items():
                    u = w2.coeffs[q]
                    if u:
                        for y in range(n):
                            v = w1(P[p][y])
                            if v:
                                out[(x, y)] = out.get((x, y), 0) + c * u * v
        else:
            raise ValueError(f"unknown slice {kind!r}")
        return Tensor2(n, out)

    def _outer(self, acc: dict, c, f: DualElement, g: DualElement) -> None:
        for i, u in f.nz.items():
            for j, v in g.nz.items():
                acc[(i, j)] = acc.get((i, j), 0) + c * u * v

    def slice_closed_form(self, w1: DualElement, w2: DualElement, kind: str) -> Tensor2:
        """The same slices from carrier formulas, without touching the pairing."""
        H = self.H
        psi, phi = self.psi_elem, self.phi_elem
        fn = self.functional
        m = H.mul
        out: dict = {}
        if kind == SLICES[0]:
            # w1 = psi(a.), w2 = psi(b.): psi(a1 .) ⊗ psi(b (S^-1(a2) .))
            a = self.represent(w1, "psiLeft").carrier
            b = self.represent(w2, "psiLeft").carrier
            for (p, q), c in H.comul(a).items():
                first = fn(lambda x: psi(m(H.basis(p), x)))
                second = fn(lambda x: psi(m(b, m(self._Sib[q], x))))
                self._outer(out, c, first, second)
        elif kind == SLICES[1]:
            # w1 = phi(.a), w2 = phi(.b): phi((. S^-1(b1)) a) ⊗ phi(. b2)
            a = self.represent(w1, "phiRight").carrier
            b = self.represent(w2, "phiRight").carrier
            for (p, q), c in H.comul(b).items():
                first = fn(lambda x: phi(m(m(x, self._Sib[p]), a)))
                second = fn(lambda x: phi(m(x, H.basis(q))))
                self._outer(out, c, first, second)
        elif kind == SLICES[2]:
            # w1 = psi(.a): w2(. S(a2)) ⊗ psi(. a1)
            a = self.represent(w1, "psiRight").carrier
            for (p, q), c in H.comul(a).items():
                first = fn(lambda x: w2(m(x, self._Sb[q])))
                second = fn(lambda x: psi(m(x, H.basis(p))))
                self._outer(out, c, first, second)
        elif kind == SLICES[3]:
            # w2 = phi(b.): phi(b2 .) ⊗ w1(S(b1) .)
            b = self.represent(w2, "phiLeft").carrier
            for (p, q), c in H.comul(b).items():
                first = fn(lambda x: phi(m(H.basis(q), x)))
                second = fn(lambda x: w1(m(self._Sb[p], x)))
                self._outer(out, c, first, second)
        else:
            raise ValueError(f"unknown slice {kind!r}")
        return Tensor2(self.dim, out)

    def coproduct_slice(self, w1: DualElement, w2: DualElement, kind: str = SLICES[0],
                        check: bool = True) -> Tensor2:
        ref = self.slice_by_pairing(w1, w2, kind)
        if check and self.slice_closed_form(w1, w2, kind) != ref:
            raise RepresentationMismatch(f"closed form for {kind} disagrees with the pairing")
        return ref

    def full_coproduct(self, w: DualElement) -> Tensor2:
        """Delta(w) as an element of the dual of H⊗H: <Delta(w), x⊗y> = w(xy)."""
        n = self.dim
        return Tensor2(n, {(x, y): w(self._prod[x][y]) for x in range(n) for y in range(n)})

    # -- counit, antipode, integral ----------------------------------------------
    def counit(self, w: DualElement):
        return self._fval(w, self.H.one())

    def antipode(self, w: DualElement) -> DualElement:
        return DualElement(tuple(self._fval(w, s) for s in self._Sb))

    def antipode_inverse(self, w: DualElement) -> DualElement:
        return DualElement(tuple(self._fval(w, s) for s in self._Sib))

    def dual_integral(self, w: DualElement):
        """phi_hat(psi(a.)) = eps(a)."""
        return self.H.eps(self.represent(w, "psiLeft").carrier)

    # -- tensor-level helpers ------------------------------------------------------
    def pair2(self, T: Tensor2 | Mapping, t: Mapping):
        """Evaluate a dual 2-tensor on an element of H⊗H."""
        coeffs = T.coeffs if isinstance(T, Tensor2) else T
        acc = self.field.zero
        for k, c in t.items():
            v = coeffs.get(k)
            if v:
                acc = acc + v * c
        return acc

    def tensor_product(self, P: Tensor2, Q: Tensor2) -> Tensor2:
        """Product in the dual of H⊗H: <PQ, x⊗y> = P(x1⊗y1) Q(x2⊗y2)."""
        H = self.H
        n = self.dim
        out: dict = {}
        for x in range(n):
            for y in range(n):
                acc = self.field.zero
                for (x1, x2), c in H.coproduct[x].items():
                    for (y1, y2), d in H.coproduct[y].items():
                        u = P.coeffs.get((x1, y1))
                        if u:
                            v = Q.coeffs.get((x2, y2))
                            if v:
                                acc = acc + c * d * u * v
                out[(x, y)] = acc
        return Tensor2(n, out)

    def structure(self) -> HopfCoquasigroup:
        """Assemble the dual as structure constants on the dual basis."""
        H = self.H
        n = self.dim
        F = self.field
        basis = [self.basis(i) for i in range(n)]
        product = {}
        for i in range(n):
            for j in range(n):
                p = self.product(basis[i], basis[j], check=False).nz
                if p:
                    product[(i, j)] = dict(p)
        unit = clean({k: F(v) for k, v in enumerate(self.functional(H.eps).coeffs)})
        coproduct = tuple(dict(self.full_coproduct(basis[k]).coeffs) for k in range(n))
        counit = tuple(self.counit(basis[k]) for k in range(n))
        antipode = tuple(dict(self.antipode(basis[k]).nz) for k in range(n))
        antipode_inv = tuple(dict(self.antipode_inverse(basis[k]).nz) for k in range(n))
        return HopfCoquasigroup(F, tuple("d_" + s for s in H.labels), product, unit, coproduct,
                                counit, antipode, antipode_inv, name=f"{H.name}^")


def integral_dual(H: HopfQuasigroup, phi: Sequence | None = None) -> IntegralDual:
    return IntegralDual(H, phi)


# ---------------------------------------------------------------------------
# assumption and axiom suite
# ---------------------------------------------------------------------------

def assumption_check(D: IntegralDual) -> Report:
    """Spans of phi(.h) and phi(h.) and closure of phi((.h)h') and phi(h'(h.))."""
    H = D.H
    n = D.dim
    F = D.field
    rep = Report(f"dual assumption: {H.name}")
    r_right = rank(D._E["phiRight"], F)
    r_left = rank(D._E["phiLeft"], F)
    both = Matrix.from_rows(D._E["phiRight"].transpose().to_rows() + D._E["phiLeft"].transpose().to_rows(), n)
    r_joint = rank(both, F)
    rep.add("span phi(.h) has full dimension", r_right == n, r_right)
    rep.add("span phi(h.) has full dimension", r_left == n, r_left)
    rep.add("span phi(.h) = span phi(h.)", r_joint == r_right == r_left, r_joint)
    span_rows = D._E["phiRight"].transpose().to_rows()
    bad = None
    for h, h2 in itertools.product(range(n), repeat=2):
        f1 = [D._fval(D.phi_elem, H.mul(D._prod[x][h], H.basis(h2))) for x in range(n)]
        f2 = [D._fval(D.phi_elem, H.mul(H.basis(h2), D._prod[h][x])) for x in range(n)]
        if rank(Matrix.from_rows(span_rows + [f1, f2], n), F) != r_right:
            bad = (H.labels[h], H.labels[h2])
            break
    rep.add("phi((.h)h') and phi(h'(h.)) lie in the span", bad is None, bad)
    rep.info["span_dim"] = str(r_right)
    return rep


def _tuples(n: int, arity: int, rng: random.Random, D: IntegralDual, extra: int):
    """Basis tuples (exhaustive when small enough) followed by seeded random tuples."""
    if n ** arity <= EXHAUSTIVE_LIMIT:
        for idx in itertools.product(range(n), repeat=arity):
            yield tuple(D.basis(i) for i in idx), tuple(D.H.labels[i] for i in idx)
    for k in range(extra):
        yield tuple(D.random(rng) for _ in range(arity)), ("random", k)


def _first_bad(cases: Iterable, law) -> object:
    for args, tag in cases:
        if not law(*args):
            return tag
    return None


def dual_axiom_suite(D: IntegralDual, seed: int = DEFAULT_SEED, random_cases: int = 3) -> Report:
    H = D.H
    n = D.dim
    F = D.field
    rng = random.Random(seed)
    rep = Report(f"integral dual axioms: {H.name} over {F.name}")
    rep.info["seed"] = str(seed)
    prod = D.product
    S, Si, eps = D.antipode, D.antipode_inverse, D.counit
    cases = lambda k: _tuples(n, k, rng, D, random_cases)  # noqa: E731

    def routes_agree(w1, w2):
        ref = D.product_by_pairing(w1, w2)
        return all(v == ref for v in D.product_closed_forms(w1, w2).values())
    w = _first_bad(cases(2), routes_agree)
    rep.add("product: pairing = four closed forms", w is None, w)

    def slices_agree(w1, w2):
        return all(D.slice_closed_form(w1, w2, k) == D.slice_by_pairing(w1, w2, k) for k in SLICES)
    w = _first_bad(cases(2), slices_agree)
    rep.add("coproduct slices: pairing = closed forms", w is None, w)

    w = _first_bad(cases(3), lambda a, b, c: prod(prod(a, b, False), c, False) == prod(a, prod(b, c, False), False))
    rep.add("product associative", w is None, w)
    nondeg = Matrix.from_rows([[x for j in range(n) for x in prod(D.basis(i), D.basis(j), False).coeffs]
                               for i in range(n)], n * n)
    r1 = rank(nondeg, F)
    nondeg2 = Matrix.from_rows([[x for i in range(n) for x in prod(D.basis(i), D.basis(j), False).coeffs]
                                for j in range(n)], n * n)
    r2 = rank(nondeg2, F)
    rep.add("product non-degenerate", r1 == n and r2 == n, (r1, r2))

    # (a) Delta hom: Delta(w1 w2)(1⊗w3) = Delta(w1) Delta(w2)(1⊗w3)
    right = SLICES[1]
    w = _first_bad(cases(3), lambda a, b, c: D.slice_by_pairing(prod(a, b, False), c, right)
                   == D.tensor_product(D.full_coproduct(a), D.slice_by_pairing(b, c, right)))
    rep.add("(a) Delta multiplicative", w is None, w)

    # (b) counit laws and multiplicativity of the counit
    def counit_left(a, b):
        T = D.slice_by_pairing(a, b, SLICES[0])
        vals = [D.pair2(T, {(x, k): u for k, u in H.unit.items()}) for x in range(n)]
        return D.element(vals) == prod(a, b, False)

    def counit_right(a, b):
        T = D.slice_by_pairing(a, b, SLICES[1])
        vals = [D.pair2(T, {(k, y): u for k, u in H.unit.items()}) for y in range(n)]
        return D.element(vals) == prod(a, b, False)
    w = _first_bad(cases(2), counit_left)
    rep.add("(b) (id⊗eps)((w1⊗1)D(w2)) = w1 w2", w is None, w)
    w = _first_bad(cases(2), counit_right)
    rep.add("(b) (eps⊗id)(D(w1)(1⊗w2)) = w1 w2", w is None, w)
    w = _first_bad(cases(2), lambda a, b: eps(prod(a, b, False)) == eps(a) * eps(b))
    rep.add("(b) eps multiplicative", w is None, w)

    # (c) antipode anti-(co)multiplicative
    w = _first_bad(cases(2), lambda a, b: S(prod(a, b, False)) == prod(S(b), S(a), False))
    rep.add("(c) S antimultiplicative", w is None, w)

    def coanti(a, b):
        lhs = D.slice_by_pairing(S(a), S(b), SLICES[1])
        L = D.slice_by_pairing(b, a, SLICES[0])
        rhs = {}
        for x in range(n):
            for y in range(n):
                t = {(p, q): u * v for p, u in D._Sb[y].items() for q, v in D._Sb[x].items()}
                rhs[(x, y)] = D.pair2(L, t)
        return lhs == Tensor2(n, rhs)
    w = _first_bad(cases(2), coanti)
    rep.add("(c) S coantimultiplicative", w is None, w)
    w = _first_bad(cases(1), lambda a: S(Si(a)) == a and Si(S(a)) == a)
    rep.add("(c) S invertible", w is None, w)

    # (d) recovery identities, evaluated on e_x ⊗ e_z
    def recover(kind, wp, wq):
        # returns the tensor to compare with wp ⊗ wq
        out: dict = {}
        if kind == 1:
            T = D.slice_by_pairing(wp, wq, SLICES[0])
            for x in range(n):
                for (p, q), c in H.coproduct[x].items():
                    for z in range(n):
                        t = {(p, k): v for k, v in H.mul(D._Sb[q], H.basis(z)).items()}
                        out[(x, z)] = out.get((x, z), 0) + c * D.pair2(T, t)
        elif kind == 2:
            T = D.slice_by_pairing(wq, Si(wp), SLICES[3])
            for x in range(n):
                for (p, q), c in H.coproduct[x].items():
                    for z in range(n):
                        t = {(i, k): u * v for i, u in D._Sb[p].items() for k, v in D._prod[q][z].items()}
                        out[(x, z)] = out.get((x, z), 0) + c * D.pair2(T, t)
        elif kind == 3:
            T = D.slice_by_pairing(wp, wq, SLICES[1])
            for y in range(n):
                for (p, q), c in H.coproduct[y].items():
                    for x in range(n):
                        t = {(k, q): v for k, v in H.mul(H.basis(x), D._Sb[p]).items()}
                        out[(x, y)] = out.get((x, y), 0) + c * D.pair2(T, t)
        else:
            T = D.slice_by_pairing(Si(wq), wp, SLICES[2])
            for y in range(n):
                for (p, q), c in H.coproduct[y].items():
                    for x in range(n):
                        t = {(i, k): u * v for i, u in D._prod[x][p].items() for k, v in D._Sb[q].items()}
                        out[(x, y)] = out.get((x, y), 0) + c * D.pair2(T, t)
        return Tensor2(n, out)

    for kind, label in ((1, "(d) w'⊗w = (m⊗id)(id⊗S⊗id)(id⊗D)((w'⊗1)D(w))"),
                        (2, "(d) w'⊗w = (m⊗id)(S⊗id⊗id)(id⊗D)(D(w)(S^-1(w')⊗1))"),
                        (3, "(d) w'⊗w = (id⊗m)(id⊗S⊗id)(D⊗id)(D(w')(1⊗w))"),
                        (4, "(d) w'⊗w = (id⊗m)(id⊗id⊗S)(D⊗id)((1⊗S^-1(w))D(w'))")):
        w = _first_bad(cases(2), lambda a, b, kind=kind: recover(kind, a, b) == Tensor2.pure(n, a.nz, b.nz))
        rep.add(label, w is None, w)

    # (e) antipode against the counit
    def anti_left(a, b):
        T = D.slice_by_pairing(a, b, SLICES[0])
        vals = []
        for x in range(n):
            acc = F.zero
            for (p, q), c in H.coproduct[x].items():
                acc = acc + c * D.pair2(T, {(p, k): v for k, v in D._Sb[q].items()})
            vals.append(acc)
        return D.element(vals) == eps(b) * a

    def anti_right(a, b):
        T = D.slice_by_pairing(a, b, SLICES[1])
        vals = []
        for x in range(n):
            acc = F.zero
            for (p, q), c in H.coproduct[x].items():
                acc = acc + c * D.pair2(T, {(k, q): v for k, v in D._Sb[p].items()})
            vals.append(acc)
        return D.element(vals) == eps(a) * b
    w = _first_bad(cases(2), anti_left)
    rep.add("(e) m(id⊗S)((w1⊗1)D(w2)) = eps(w2) w1", w is None, w)
    w = _first_bad(cases(2), anti_right)
    rep.add("(e) m(S⊗id)(D(w1)(1⊗w2)) = eps(w1) w2", w is None, w)

    # (f) the dual integral
    phat = [D.dual_integral(D.basis(j)) for j in range(n)]

    def phat_of(w):
        acc = F.zero
        for j, c in w.nz.items():
            acc = acc + c * phat[j]
        return acc

    def left_invariant(a, b):
        T = D.slice_by_pairing(a, b, SLICES[0])
        vals = [sum((c * phat[j] for (i, j), c in T.coeffs.items() if i == x), F.zero) for x in range(n)]
        return D.element(vals) == phat_of(b) * a
    w = _first_bad(cases(2), left_invariant)
    rep.add("(f) (id⊗phi_hat)((w1⊗1)D(w2)) = phi_hat(w2) w1", w is None, w)

    def faithful_formula(a, b):
        carrier = D.represent(a, "psiLeft").carrier
        return phat_of(prod(a, b, False)) == D._fval(b, H.Sinv(carrier))
    w = _first_bad(cases(2), faithful_formula)
    rep.add("(f) phi_hat(w1 w2) = w2(S^-1(a)) for w1 = psi(a.)", w is None, w)
    gram = Matrix.from_rows([[phat_of(prod(D.basis(i), D.basis(j), False)) for j in range(n)]
                             for i in range(n)], n)
    g = rank(gram, F)
    rep.add("(f) phi_hat faithful", g == n and rank(gram.transpose(), F) == n, g)
    rep.add("(f) phi_hat nonzero", any(phat), None)

    # (g) phi is a cointegral
    phi = D.phi_elem
    w = _first_bad(cases(1), lambda a: prod(a, phi, False) == eps(a) * phi)
    rep.add("(g) w phi = eps(w) phi", w is None, w)
    w = _first_bad(cases(1), lambda a: prod(a, D.functional(H.eps), False) == a
                   and prod(D.functional(H.eps), a, False) == a)
    rep.add("(g) eps of H is the unit", w is None, w)

    # (h) the assembled dual is a Hopf coquasigroup, and matches the plain linear dual
    A = D.structure()
    coq = verify_coquasigroup(A)
    for e in coq.entries:
        if e.required:
            rep.add("(h) " + e.name, e.holds, e.witness)
    L = linear_dual(H)
    same = (A.product == {k: v for k, v in L.product.items() if v} and A.unit == L.unit
            and A.coproduct == L.coproduct and A.counit == L.counit
            and A.antipode == L.antipode and A.antipode_inverse == L.antipode_inverse)
    rep.add("duality consistency with the linear dual", same, None)
    assoc = H.is_associative()
    co = A.is_coassociative()
    rep.probe("coassociativity", co.holds, co.witness, expect=assoc.holds,
              detail="expected iff H is associative")
    return rep
