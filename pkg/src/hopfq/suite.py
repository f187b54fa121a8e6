"""The built-in corpus and the end-to-end suite that runs every checker over it."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Callable

from .dual import IntegralDual, assumption_check, dual_axiom_suite
from .errors import HopfqError, InvalidInput, StructureError
from .hopf import HopfQuasigroup, check_prime_bound, group_like_algebra, verify_axioms
from .integrals import integrals_report
from .linalg import QQ, Field, PrimeField, inverse, Matrix
from .loops import (FiniteLoop, EnumerableQuasigroup, check_property, cyclic, free_group, integers,
                    octonion_loop16, parse_table, quaternion8, symmetric3)
from .multiplier import (VARIETIES, FunctionAlgebra, check_variety_dual, multiplier_embed,
                         unital_bridges, verify_multiplier_axioms, window_property)
from .report import Report
from .search import first_ip_non_moufang

FINITE_CORPUS = ("cyclic:6", "s3", "quaternion8", "octonion16")
INFINITE_CORPUS = ("integers", "free:2")
DEFAULT_FIELDS = ("rational", "gf:101")
SUITE_WINDOW = 8
DEFAULT_SEED = 20190517


def resolve(spec: str) -> FiniteLoop | EnumerableQuasigroup:
    """``builtin:NAME`` or a path to a Cayley table file."""
    if spec.startswith("builtin:"):
        name = spec[len("builtin:"):]
        try:
            return builtin(name)
        except (KeyError, ValueError):
            raise InvalidInput(f"unknown builtin {name!r}") from None
    path = Path(spec)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"cannot read {spec}: {exc.strerror}") from None
    return parse_table(text, name=path.stem)


def builtin(name: str) -> FiniteLoop | EnumerableQuasigroup:
    if name.startswith("cyclic:"):
        n = int(name.split(":", 1)[1])
        if n < 1:
            raise ValueError("cyclic order must be positive")
        return cyclic(n)
    if name.startswith("free:"):
        return free_group(int(name.split(":", 1)[1]))
    return {"s3": symmetric3, "quaternion8": quaternion8, "octonion16": octonion_loop16,
            "integers": integers}[name]()


# ---------------------------------------------------------------------------
# closed forms for the dual of kG
# ---------------------------------------------------------------------------

def group_dual_closed_forms(G: FiniteLoop, field: Field = QQ) -> Report:
    """The computed dual of kG against the delta-function formulas, coefficient for coefficient."""
    H = group_like_algebra(G, field)
    D = IntegralDual(H)
    n = G.order
    e = G.identity
    F = field
    rep = Report(f"dual of k{G.name}: delta-function closed forms over {field.name}")
    d = D.basis   # the dual basis vector of u is delta_u

    def first(cases):
        return next((c for c, ok in cases if not ok), None)

    w = first(((G.label(u), G.label(v)), D.product(d(u), d(v)) == (d(v) if u == v else D.zero()))
              for u in range(n) for v in range(n))
    rep.add("delta_u delta_v = [u = v] delta_v", w is None, w)
    # Delta(delta_u) = sum_v delta_v ⊗ delta_{v^-1 u}, checked through the slices
    w = first(((G.label(u), G.label(a)),
               D.coproduct_slice(d(a), d(u), "(w1⊗1)D(w2)").coeffs == {(a, G.mul(G.inv(a), u)): F.one})
              for u in range(n) for a in range(n))
    rep.add("(delta_a⊗1)Delta(delta_u) = delta_a ⊗ delta_{a^-1 u}", w is None, w)
    w = first(((G.label(u), G.label(b)),
               D.coproduct_slice(d(u), d(b), "D(w1)(1⊗w2)").coeffs == {(G.mul(u, G.inv(b)), b): F.one})
              for u in range(n) for b in range(n))
    rep.add("Delta(delta_u)(1⊗delta_b) = delta_{u b^-1} ⊗ delta_b", w is None, w)
    full = {u: {(v, G.mul(G.inv(v), u)): F.one for v in range(n)} for u in range(n)}
    w = first((G.label(u), D.full_coproduct(d(u)).coeffs == full[u]) for u in range(n))
    rep.add("Delta(delta_u) = sum_v delta_v ⊗ delta_{v^-1 u}", w is None, w)
    w = first((G.label(u), D.counit(d(u)) == (F.one if u == e else F.zero)) for u in range(n))
    rep.add("eps(delta_u) = [u = e]", w is None, w)
    w = first((G.label(u), D.antipode(d(u)) == d(G.inv(u))) for u in range(n))
    rep.add("S(delta_u) = delta_{u^-1}", w is None, w)
    w = first((G.label(u), D.dual_integral(d(u)) == F.one) for u in range(n))
    rep.add("phi_hat(delta_u) = 1", w is None, w)
    w = first((G.label(u), D.evaluate(D.represent(d(G.inv(u)), "phiRight")) == d(G.inv(u))
               and D.represent(d(G.inv(u)), "phiRight").carrier == H.basis(u)) for u in range(n))
    rep.add("phi(.u) = delta_{u^-1}", w is None, w)
    w = first((G.label(u), D.product(d(u), D.phi_elem) == D.counit(d(u)) * D.phi_elem) for u in range(n))
    rep.add("w phi = eps(w) phi", w is None, w)
    return rep


# ---------------------------------------------------------------------------
# the end-to-end suite
# ---------------------------------------------------------------------------

@dataclass
class SuiteConfig:
    fields: tuple[str, ...] = DEFAULT_FIELDS
    window: int = SUITE_WINDOW
    seed: int = DEFAULT_SEED
    corrupt_antipode: bool = False
    finite: tuple[str, ...] = FINITE_CORPUS
    infinite: tuple[str, ...] = INFINITE_CORPUS
    search_order: int = 8
    log: Callable[[str], None] | None = dc_field(default=None, repr=False)


def corrupt_antipode(H: HopfQuasigroup) -> HopfQuasigroup:
    """Replace S by the identity map (a consistent but wrong antipode)."""
    ident = tuple({i: H.field.one} for i in range(H.dim))
    return H.replace(antipode=ident, antipode_inverse=ident, name=H.name + "[corrupt S]")


def _guarded(rep: Report, prefix: str, build: Callable[[], Report]) -> None:
    try:
        rep.extend(build(), prefix)
    except HopfqError as exc:
        rep.add(prefix + type(exc).__name__, False, str(exc))


def finite_block(name: str, field: Field, cfg: SuiteConfig) -> Report:
    G = builtin(name)
    check_prime_bound(field, G.order)
    tag = f"[k{G.name}/{field.name}] "
    rep = Report(f"k{G.name} over {field.name}")
    H = group_like_algebra(G, field)
    if cfg.corrupt_antipode and name == "quaternion8":
        H = corrupt_antipode(H)
    _guarded(rep, tag, lambda: verify_axioms(H))
    _guarded(rep, tag, lambda: integrals_report(H))
    _guarded(rep, tag + "dual ", lambda: assumption_check(IntegralDual(H)))
    _guarded(rep, tag + "dual ", lambda: dual_axiom_suite(IntegralDual(H), seed=cfg.seed))
    _guarded(rep, tag, lambda: group_dual_closed_forms(G, field))
    _guarded(rep, tag + "k(G) ", lambda: verify_multiplier_axioms(G, field, cfg.window, cfg.seed))
    _guarded(rep, tag + "k(G) ", lambda: unital_bridges(G, field, cfg.window))
    for v in VARIETIES:
        dual = check_variety_dual(G, v, field, cfg.window)
        loop = check_property(G, v)
        rep.add(f"{tag}k(G) {v} dual identity matches loop law", dual.holds == loop.holds,
                dual.witness, detail=f"dual={dual.holds} loop={loop.holds}")
    return rep


def infinite_block(name: str, field: Field, cfg: SuiteConfig) -> Report:
    G = builtin(name)
    tag = f"[k({G.name})/{field.name}] "
    rep = Report(f"k({G.name}) over {field.name}")
    _guarded(rep, tag, lambda: verify_multiplier_axioms(G, field, cfg.window, cfg.seed))
    _guarded(rep, tag, lambda: unital_bridges(G, field, cfg.window))
    A = FunctionAlgebra(G, field, cfg.window)
    try:
        multiplier_embed(A, "unit", A.window(cfg.window))
        rep.add(tag + "formal unit is a multiplier", True)
    except HopfqError as exc:
        rep.add(tag + "formal unit is a multiplier", False, str(exc))
    for v in VARIETIES:
        W = A.window(cfg.window)
        dual = check_variety_dual(G, v, field, cfg.window)
        loop = window_property(G, v, W)
        rep.add(f"{tag}{v} dual identity matches loop law", dual.holds == loop.holds,
                dual.witness, detail=f"dual={dual.holds} loop={loop.holds}")
    return rep


def search_block(field: Field, cfg: SuiteConfig) -> Report:
    rep = Report("searched IP non-Moufang specimen")
    Q = first_ip_non_moufang(cfg.search_order)
    if Q is None:
        rep.add("IP non-Moufang loop found", False, f"none up to order {cfg.search_order}")
        return rep
    rep.info["specimen"] = f"order {Q.order}"
    tag = f"[search L{Q.order}/{field.name}] "
    rep.add(tag + "specimen is IP and not Moufang",
            check_property(Q, "IP").holds and not check_property(Q, "Moufang").holds)
    for v in VARIETIES:
        dual = check_variety_dual(Q, v, field)
        loop = check_property(Q, v)
        rep.add(f"{tag}{v} dual identity matches loop law", dual.holds == loop.holds,
                dual.witness, detail=f"dual={dual.holds} loop={loop.holds}")
    m = check_variety_dual(Q, "Moufang", field)
    rep.add(tag + "Moufang dual identity fails", not m.holds, m.witness)
    return rep


def paper_suite(cfg: SuiteConfig | None = None) -> Report:
    cfg = cfg or SuiteConfig()
    from .linalg import parse_field
    fields = [parse_field(f) for f in cfg.fields]
    for F in fields:
        for name in cfg.finite:
            check_prime_bound(F, builtin(name).order)
    rep = Report("full suite")
    rep.info["seed"] = str(cfg.seed)
    rep.info["window"] = str(cfg.window)
    rep.info["fields"] = ",".join(F.name for F in fields)
    for F in fields:
        for name in cfg.finite:
            if cfg.log:
                cfg.log(f"{name} / {F.name}")
            rep.extend(finite_block(name, F, cfg))
        for name in cfg.infinite:
            if cfg.log:
                cfg.log(f"{name} / {F.name}")
            rep.extend(infinite_block(name, F, cfg))
        rep.extend(search_block(F, cfg))
    families = {e.name.split("] ", 1)[-1] for e in rep.entries}
    rep.info["families"] = str(len(families))
    return rep


# ---------------------------------------------------------------------------
# mutation testing
# ---------------------------------------------------------------------------

def mutate(H: HopfQuasigroup, rng: random.Random) -> tuple[str, HopfQuasigroup | None]:
    """Change one structure constant by +1. Returns (description, mutant or None when rejected)."""
    n = H.dim
    one = H.field.one
    part = rng.choice(["product", "coproduct", "unit", "counit", "antipode"])
    i, j, k = (rng.randrange(n) for _ in range(3))
    try:
        if part == "product":
            product = {key: dict(v) for key, v in H.product.items()}
            d = product.setdefault((i, j), {})
            d[k] = d.get(k, H.field.zero) + one
            return f"product[{i},{j}][{k}] += 1", H.replace(product=product)
        if part == "coproduct":
            cop = [dict(d) for d in H.coproduct]
            cop[k][(i, j)] = cop[k].get((i, j), H.field.zero) + one
            return f"coproduct[{k}][{i},{j}] += 1", H.replace(coproduct=tuple(cop))
        if part == "unit":
            unit = dict(H.unit)
            unit[k] = unit.get(k, H.field.zero) + one
            return f"unit[{k}] += 1", H.replace(unit=unit)
        if part == "counit":
            counit = list(H.counit)
            counit[k] = counit[k] + one
            return f"counit[{k}] += 1", H.replace(counit=tuple(counit))
        S = [dict(d) for d in H.antipode]
        S[i][k] = S[i].get(k, H.field.zero) + one
        desc = f"antipode[{i}][{k}] += 1"
        M = Matrix.from_rows([[S[c].get(r, H.field.zero) for c in range(n)] for r in range(n)], n)
        Minv = inverse(M, H.field)
        if Minv is None:
            return desc, None
        Sinv = tuple({r: Minv[r, c] for r in range(n) if Minv[r, c]} for c in range(n))
        return desc, H.replace(antipode=tuple(S), antipode_inverse=Sinv)
    except StructureError:
        return "rejected", None


def mutant_suite(H: HopfQuasigroup) -> Report:
    rep = Report(f"suite on {H.name}")
    _guarded(rep, "", lambda: verify_axioms(H))
    _guarded(rep, "", lambda: integrals_report(H))
    return rep


@dataclass
class MutationOutcome:
    description: str
    detected: bool
    first_failure: str


def mutation_run(count: int = 20, seed: int = DEFAULT_SEED, field: Field = QQ) -> list[MutationOutcome]:
    rng = random.Random(seed)
    H = group_like_algebra(quaternion8(), field)
    out = []
    for _ in range(count):
        desc, M = mutate(H, rng)
        if M is None:
            # a singular or inconsistent antipode is rejected when the structure is built
            out.append(MutationOutcome(desc, True, "structure validation"))
            continue
        r = mutant_suite(M)
        fails = r.failures
        out.append(MutationOutcome(desc, bool(fails), fails[0].name if fails else ""))
    return out
