"""Acceptance criteria 1-8. Each test prints one PASS/FAIL line with its timing."""

import random
import time

from hopfq.dual import IntegralDual, dual_axiom_suite
from hopfq.hopf import group_like_algebra, verify_axioms
from hopfq.integrals import (integral_space, is_faithful, is_integral, modular_report, right_from_left,
                             verify_invariance_identities)
from hopfq.loops import check_property, free_group, integers
from hopfq.multiplier import (FunctionAlgebra, certify_no_finite_unit, check_variety_dual, verify_def411,
                              window_property)
from hopfq.search import first_ip_non_moufang
from hopfq.suite import group_dual_closed_forms, mutation_run

from conftest import FIELDS, loop

CORPUS = ("Z6", "S3", "Q8", "O16")
WINDOW = 8
RESULTS: dict[int, str] = {}


def criterion(number, budget, body):
    start = time.perf_counter()
    problems = []
    try:
        body(problems)
    except Exception as exc:  # any crash counts as a failure of the criterion
        problems.append(f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    if elapsed >= budget:
        problems.append(f"runtime {elapsed:.1f}s exceeds {budget}s")
    status = "PASS" if not problems else "FAIL"
    line = f"criterion {number}: {status} ({elapsed:.1f}s, budget {budget}s)"
    if problems:
        line += " " + "; ".join(problems[:3])
    RESULTS[number] = line
    print(line)
    assert not problems, line


def check(problems, ok, message):
    if not ok:
        problems.append(message)


def test_criterion_1_corpus_axioms():
    def body(p):
        for F in FIELDS:
            for name in CORPUS:
                rep = verify_axioms(group_like_algebra(loop(name), F))
                check(p, rep.passed, f"k{name}/{F.name}: {[e.name for e in rep.failures]}")
                probe = rep["associativity"]
                if name == "O16":
                    check(p, not probe.holds and probe.witness is not None, "kO16 associativity probe has no witness")
                else:
                    check(p, probe.holds, f"k{name} should be associative")
    criterion(1, 10, body)


def test_criterion_2_integrals():
    def body(p):
        for F in FIELDS:
            for name in CORPUS:
                H = group_like_algebra(loop(name), F)
                left, right = integral_space(H, "left"), integral_space(H, "right")
                check(p, len(left) == len(right) == 1, f"k{name}: integral space dimensions")
                phi = left[0]
                check(p, [i for i, c in enumerate(phi) if c] == [0], f"k{name}: integral is not delta_e")
                check(p, is_integral(H, phi, "right")[0], f"k{name}: delta_e is not a right integral")
                check(p, is_faithful(H, phi).gram_rank == loop(name).order, f"k{name}: rank")
                rep = verify_invariance_identities(H, phi, right_from_left(H, phi))
                check(p, rep.passed and len(rep.entries) == 4, f"k{name}: invariance identities")
    criterion(2, 10, body)


def test_criterion_3_modular_data():
    def body(p):
        for F in FIELDS:
            for name in CORPUS:
                H = group_like_algebra(loop(name), F)
                phi = integral_space(H, "left")[0]
                rep = modular_report(H, phi)
                check(p, rep.passed and len(rep.entries) == 7, f"k{name}: {[e.name for e in rep.failures]}")
                check(p, rep.info.get("delta") == loop(name).label(loop(name).identity), f"k{name}: delta")
                check(p, rep.info.get("tau") == "1", f"k{name}: tau")
    criterion(3, 5, body)


def test_criterion_4_dual_construction():
    def body(p):
        for F in FIELDS:
            for name, coassociative in (("Q8", True), ("O16", False)):
                rep = dual_axiom_suite(IntegralDual(group_like_algebra(loop(name), F)))
                bad = [e.name for e in rep.entries if e.required and not e.holds]
                check(p, not bad, f"dual of k{name}/{F.name}: {bad}")
                check(p, rep["product: pairing = four closed forms"].holds, "product routes disagree")
                probe = rep["coassociativity"]
                check(p, probe.holds == coassociative, f"dual of k{name}: coassociativity {probe.holds}")
                if not coassociative:
                    check(p, probe.witness is not None, "no non-coassociativity witness")
    criterion(4, 60, body)


def test_criterion_5_group_dual_closed_forms():
    def body(p):
        for F in FIELDS:
            for name in CORPUS:
                rep = group_dual_closed_forms(loop(name), F)
                check(p, rep.passed, f"{name}/{F.name}: {[e.name for e in rep.failures]}")
    criterion(5, 5, body)


def test_criterion_6_nonunital_regime():
    def body(p):
        for F in FIELDS:
            for G in (integers(), free_group(2)):
                rep = verify_def411(G, F, WINDOW)
                check(p, rep.passed, f"{G.name}/{F.name}: {[e.name for e in rep.failures]}")
                A = FunctionAlgebra(G, F, WINDOW)
                W = A.window(WINDOW)
                cands = [A.indicator(A.window(k)) for k in range(WINDOW + 1)]
                check(p, certify_no_finite_unit(A, cands).holds, f"{G.name}: finite unit found")
                for which in ("T1", "T2"):
                    for x in W:
                        for y in W:
                            fwd = A.tmap(which, A.delta(x), A.delta(y))
                            ((u, v), c), = fwd.items()
                            back = A.tmap_inverse(which, A.delta(u), A.delta(v))
                            if back != {(x, y): c}:
                                p.append(f"{G.name}: {which} round trip fails at {(x, y)}")
        rng = random.Random(20190517)
        for F in FIELDS:
            for name in CORPUS:
                D = IntegralDual(group_like_algebra(loop(name), F))
                phi = D.phi_elem
                tests = [D.basis(i) for i in range(D.dim)] + [D.random(rng) for _ in range(3)]
                for w in tests:
                    if D.product(w, phi, check=False) != D.counit(w) * phi:
                        p.append(f"{name}: w phi != eps(w) phi")
                        break
    criterion(6, 30, body)


def test_criterion_7_variety_correspondence():
    def body(p):
        for name in CORPUS:
            Q = loop(name)
            for v in ("flexible", "alternative", "Moufang"):
                dual = check_variety_dual(Q, v)
                check(p, dual.holds == check_property(Q, v).holds, f"{name}/{v}: dual {dual.holds}")
        for G in (integers(), free_group(2)):
            W = G.window(4)
            for v in ("flexible", "alternative", "Moufang"):
                check(p, check_variety_dual(G, v, window=4).holds == window_property(G, v, W).holds,
                      f"{G.name}/{v}")
        check(p, check_variety_dual(loop("O16"), "Moufang").holds, "Moufang dual identity fails for O16")
        L = first_ip_non_moufang(8)
        check(p, L is not None, "no IP non-Moufang loop up to order 8")
        if L is not None:
            m = check_variety_dual(L, "Moufang")
            check(p, not m.holds and m.witness is not None, f"{L.name}: Moufang dual identity holds")
    criterion(7, 120, body)


def test_criterion_8_fault_injection():
    def body(p):
        outcomes = mutation_run(20)
        check(p, len(outcomes) == 20, "wrong number of mutations")
        missed = [o.description for o in outcomes if not o.detected]
        check(p, not missed, f"undetected mutations: {missed}")
    criterion(8, 60, body)
