"""Acceptance criteria 1-8, one pass/fail line each.

Run with pytest (lines appear in the terminal summary) or directly:
``python3 tests/test_acceptance.py``.  All comparisons are exact.
"""

import random
import time

import pytest

from qhopf import duality as du
from qhopf import hopf, mhc
from qhopf.catalog import catalog, corrupted_antipode_hq, corrupted_antipode_mhc
from qhopf.linalg import FinSupp
from qhopf.quasigroup import chein_double, cyclic_group, integer_oracle, symmetric_group

RESULTS: dict[int, tuple[bool, str]] = {}
d = FinSupp.basis


def _record(n: int, title: str, ok: bool, detail: str) -> tuple[bool, str]:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title} -- {detail}"
    RESULTS[n] = (ok, line)
    return ok, line


def criterion_1():
    t = time.perf_counter()
    bad = []
    for q in (cyclic_group(2), cyclic_group(3), symmetric_group(3), chein_double(symmetric_group(3))):
        A = mhc.function_algebra(q)
        G = q.elements()
        one = A.unit_element()
        phi, _ = mhc.integrals(A)
        D = du.integral_dual(A, phi)
        for u in G:
            for v in G:
                if A.mul(d(u), d(v)) != (d(v) if u == v else FinSupp()):
                    bad.append((q.name, "product", u, v))
            expected = FinSupp(((v, q.product(q.inverse(v), u)), 1) for v in G)
            if A.delta_cut(d(u), right=(one, one)) != expected:
                bad.append((q.name, "coproduct", u))
            # the coproduct is also the pairing <w_x (x) w_y, Delta(delta_u)>
            for x in G:
                for y in G:
                    pr = D.product_pairing(D.basis_functional(x), D.basis_functional(y), d(u))
                    if pr != expected[(x, y)]:
                        bad.append((q.name, "coproduct_pairing", u, x, y))
            if A.counit_of(d(u)) != (1 if u == q.identity else 0):
                bad.append((q.name, "counit", u))
            if A.S(d(u)) != d(q.inverse(u)):
                bad.append((q.name, "antipode", u))
            if phi(d(u)) != 1:
                bad.append((q.name, "integral", u))
        if mhc.cointegral(A, phi) != d(q.identity):
            bad.append((q.name, "cointegral"))
    dt = time.perf_counter() - t
    ok = not bad and dt < 10
    return _record(1, "worked example golden suite", ok,
                   f"{len(bad)} mismatches, {dt:.2f}s (limit 10s)" + (f", first {bad[0]}" if bad else ""))


def criterion_2():
    t = time.perf_counter()
    failures = []
    for name, q in catalog().items():
        if not hopf.verify_hopf_quasigroup(hopf.group_algebra(q)).passed:
            failures.append(f"k{name}")
        if not mhc.verify_mhc(mhc.function_algebra(q)).passed:
            failures.append(f"k({name})")
    s3 = symmetric_group(3)
    rh = hopf.verify_hopf_quasigroup(corrupted_antipode_hq(s3))
    rm = mhc.verify_mhc(corrupted_antipode_mhc(s3))
    controls = (not rh.passed and bool(rh.violations[0].witness)
                and not rm.passed and bool(rm.violations[0].witness))
    dt = time.perf_counter() - t
    ok = not failures and controls and dt < 60
    return _record(2, "axiom suites and negative controls", ok,
                   f"failures={failures}, controls_fail_with_witness={controls}, {dt:.2f}s (limit 60s)")


def criterion_3():
    dims = {}
    for name, q in catalog().items():
        h = hopf.group_algebra(q)
        F = mhc.function_algebra(q).to_findim()
        dims[name] = tuple(len(hopf.integral_space(x, s)) for x in (h, F) for s in ("left", "right"))
    off = {k: v for k, v in dims.items() if v != (1, 1, 1, 1)}
    return _record(3, "integral uniqueness", not off,
                   f"{len(dims)} instances, left/right dims of kG and k(G) all 1" if not off else f"off={off}")


def criterion_4():
    bad = []
    for name, q in catalog().items():
        A = mhc.function_algebra(q)
        phi, psi = mhc.integrals(A)
        md = mhc.modular_data(A, phi, psi)
        tests = [d(u) for u in A.basis()]
        if not md.is_trivial(A, tests):
            bad.append((name, "nontrivial"))
        rep = mhc.verify_modular_properties(A, phi, psi, md)
        if not rep.passed:
            bad.append((name, rep.failed_axioms()))
        md2 = mhc.modular_data(A, phi.scale(2), psi.scale(2))
        if not (md2.tau == md.tau and md2.delta.equals(md.delta, tests)
                and all(md2.sigma(b) == md.sigma(b) and md2.sigma_prime(b) == md.sigma_prime(b)
                        for b in tests)):
            bad.append((name, "scale"))
    return _record(4, "modular data and its properties", not bad,
                   "delta=1, tau=1, sigma=sigma'=id, all properties and scale invariance hold"
                   if not bad else f"bad={bad}")


def criterion_5():
    bad, pairs = [], 0
    for name, q in catalog().items():
        kG = hopf.group_algebra(q)
        for A in (mhc.function_algebra(q), hopf.dual_to_mhc(kG, hopf.normalized_integral(kG))):
            phi, psi = mhc.integrals(A)
            rep = mhc.verify_integral_identities(A, phi, psi)
            pairs += rep.checked["integral_identity_phi_1"]
            if not rep.passed:
                bad.append((A.name, rep.failed_axioms()))
    return _record(5, "four integral identities", not bad,
                   f"{pairs} basis pairs x 4 identities" if not bad else f"bad={bad}")


def criterion_6():
    bad, detail = [], ""
    for name, q in catalog().items():
        A = mhc.function_algebra(q)
        D = du.integral_dual(A)
        H, rep = du.verify_materialized(D)
        if not rep.passed:
            bad.append((name, rep.failed_axioms()))
        for u in q.elements():
            for v in q.elements():
                p = D.product(D.basis_functional(u), D.basis_functional(v))
                if D.canonical(p) != d(q.product(u, v)):
                    bad.append((name, "w_u w_v", u, v))
        if name == "M_S3_2":
            rd = du.verify_dual(D)
            wit = du.nonassociativity_witness(D)
            coassoc = rd.checked.get("coproduct_coassociative", 0)
            if not rd.passed or wit is None or coassoc == 0:
                bad.append((name, "contrast", rd.failed_axioms(), wit))
            detail = f"M(S3,2) nonassoc witness {wit}, coassociativity on {coassoc} tuples"
        phi_hat = D.dual_integral_functional()
        if not (hopf.is_integral(H, phi_hat, "left") and hopf.is_faithful(H, phi_hat)):
            bad.append((name, "dual integral"))
    return _record(6, "integral dual is a Hopf quasigroup", not bad, detail if not bad else f"bad={bad}")


def criterion_7():
    bad = []
    for name, q in catalog().items():
        kG = hopf.group_algebra(q)
        g1 = du.gamma_hq(kG, hopf.normalized_integral(kG))
        g2 = du.gamma_mhc(mhc.function_algebra(q))
        for g in (g1, g2):
            if not g.report.passed:
                bad.append((name, g.direction, g.report.failed_axioms()))
        # Gamma(u) = psi^(. delta_u) and Gamma(delta_u) = phi^(. u^-1), i.e. u
        if [(c.form, c.carrier) for c in g1.carriers] != [("psi(.a)", d(j)) for j in range(kG.dim)]:
            bad.append((name, "Gamma(u) carrier"))
        if g2.carriers != [d(q.inverse(u)) for u in q.elements()]:
            bad.append((name, "Gamma(delta_u) carrier"))
    return _record(7, "biduality isomorphisms", not bad,
                   "both directions bijective and structure preserving; closing identifications exact"
                   if not bad else f"bad={bad}")


def criterion_8():
    t = time.perf_counter()
    rng = random.Random(2024)
    Z = integer_oracle()
    sample = sorted(rng.sample(range(-50, 51), 10))
    A = mhc.function_algebra(Z, sample)
    bad = []

    def rand_el():
        return FinSupp((rng.randint(-40, 40), rng.randint(-3, 3)) for _ in range(rng.randint(1, 4)))

    for _ in range(100):
        a, b = rand_el(), rand_el()
        t1, t2 = A.t1(a, b), A.t2(a, b)
        if len(t1) > len(a) * len(b) or len(t2) > len(a) * len(b):
            bad.append("T support")
        want1 = FinSupp(((u - z, z), ca * cb) for u, ca in a.items() for z, cb in b.items())
        want2 = FinSupp(((x, u - x), ca * cb) for x, ca in a.items() for u, cb in b.items())
        if t1 != want1 or t2 != want2:
            bad.append("T closed form")
        els = [rand_el() for _ in range(rng.randint(1, 5))]
        e = mhc.local_unit(A, els)
        if not all(A.mul(x, e) == x == A.mul(e, x) for x in els):
            bad.append("local unit")
    phi, psi = mhc.integrals(A, sample)
    rep = mhc.verify_integral_identities(A, phi, psi, sample)
    n_pairs = rep.checked["integral_identity_phi_1"]
    if not rep.passed or n_pairs != 100:
        bad.append(("identities", rep.failed_axioms(), n_pairs))
    dt = time.perf_counter() - t
    ok = not bad and dt < 10
    return _record(8, "infinite carrier k(Z)", ok,
                   f"100 T-map pairs, 100 local-unit lists, {n_pairs} sampled pairs, {dt:.2f}s (limit 10s)"
                   + (f", bad={bad[:3]}" if bad else ""))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_acceptance(criterion):
    ok, line = criterion()
    print(line)
    assert ok, line


if __name__ == "__main__":
    for c in CRITERIA:
        print(c()[1])
