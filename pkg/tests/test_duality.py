import random

import pytest

from qhopf import duality as du
from qhopf import hopf, mhc
from qhopf.duality import FORMS, DualFunctional
from qhopf.linalg import FinSupp
from qhopf.quasigroup import cyclic_group, integer_oracle, symmetric_group

d = FinSupp.basis


@pytest.fixture(scope="module")
def dual_m12(k_m12):
    return du.integral_dual(k_m12)


@pytest.fixture(scope="module")
def dual_s3():
    return du.integral_dual(mhc.function_algebra(symmetric_group(3)))


@pytest.fixture(scope="module")
def dual_z():
    sample = list(range(-4, 5))
    return du.integral_dual(mhc.function_algebra(integer_oracle(), sample), sample=sample)


def test_pairing_on_delta_basis(dual_s3):
    A = dual_s3.A
    for u in A.basis():
        w = dual_s3.basis_functional(u)
        for v in A.basis():
            assert du.pair(dual_s3, w, d(v)) == (1 if u == v else 0)


def test_form_conversions_agree(dual_m12):
    rng = random.Random(5)
    A = dual_m12.A
    for _ in range(10):
        a = FinSupp((rng.choice(A.basis()), rng.randint(-3, 3)) for _ in range(3))
        w = DualFunctional("phi(.a)", a)
        base = [dual_m12.pair(w, d(x)) for x in A.basis()]
        for form in FORMS:
            v = dual_m12.to_form(w, form)
            assert [dual_m12.pair(v, d(x)) for x in A.basis()] == base
            assert dual_m12.canonical(v) == a


def test_dual_product_is_loop_product(dual_m12):
    q = dual_m12.A.q
    for u in q.elements():
        for v in q.elements():
            p = du.dual_product(dual_m12, dual_m12.basis_functional(u), dual_m12.basis_functional(v))
            assert p == DualFunctional("phi(.a)", d(q.product(u, v)))


def test_dual_unit(dual_m12):
    one = dual_m12.unit()
    assert one.carrier == d(dual_m12.A.q.identity)
    for u in dual_m12.A.basis():
        w = dual_m12.basis_functional(u)
        assert dual_m12.product(one, w) == w == dual_m12.product(w, one)


def test_dual_nonassociative(dual_m12):
    u, v, t = du.nonassociativity_witness(dual_m12)
    w = dual_m12.basis_functional
    lhs = dual_m12.product(dual_m12.product(w(u), w(v)), w(t))
    rhs = dual_m12.product(w(u), dual_m12.product(w(v), w(t)))
    assert not dual_m12.same(lhs, rhs)


def test_counit_antipode_grouplike(dual_s3):
    A = dual_s3.A
    q = A.q
    for u in A.basis():
        w = dual_s3.basis_functional(u)
        assert du.dual_counit(dual_s3, w) == 1
        assert dual_s3.canonical(du.dual_antipode(dual_s3, w)) == d(q.inverse(u))
        for x in A.basis():
            for y in A.basis():
                assert du.dual_coproduct_pair(dual_s3, w, d(x), d(y)) == (1 if x == y == u else 0)


def test_dual_integrals(dual_s3):
    for u in dual_s3.A.basis():
        w = dual_s3.basis_functional(u)
        assert dual_s3.dual_left_integral(w) == (1 if u == dual_s3.A.q.identity else 0)
    assert dual_s3.dual_left_integral(dual_s3.unit()) == 1


def test_verify_dual_m12(dual_m12):
    rep = du.verify_dual(dual_m12)
    assert rep.passed
    assert rep.checked["coproduct_coassociative"] == 12 ** 4


def test_materialized_dual(dual_m12, kG_m12):
    H, rep = du.verify_materialized(dual_m12)
    assert rep.passed and rep.probes["nonassoc_witness"] is not None
    assert len(hopf.integral_space(H, "left")) == 1
    assert du.group_loop_identification(dual_m12, kG_m12).passed
    assert H.dim == dual_m12.A.q.order


def test_lazy_dual_on_integers(dual_z):
    w5, w3 = dual_z.basis_functional(5), dual_z.basis_functional(3)
    assert dual_z.product(w5, w3).carrier == d(8)
    assert dual_z.canonical(dual_z.antipode(w5)) == d(-5)
    assert dual_z.unit().carrier == d(0)
    assert du.verify_dual(dual_z).passed
    with pytest.raises(ValueError):
        dual_z.materialize()


def test_gamma_hq_example(c2):
    h = hopf.group_algebra(c2)
    g = du.gamma_hq(h, hopf.normalized_integral(h))
    assert g.report.passed
    assert [c.form for c in g.carriers] == ["psi(.a)", "psi(.a)"]
    assert [c.carrier for c in g.carriers] == [d(0), d(1)]
    for j in range(2):
        assert g.inverse(g.forward(h.e(j))) == h.e(j)


def test_gamma_mhc_example():
    q = cyclic_group(3)
    g = du.gamma_mhc(mhc.function_algebra(q))
    assert g.report.passed
    # Gamma(delta_u) = phi^(. w_{u^-1})
    assert g.carriers == [d(q.inverse(u)) for u in q.elements()]


def test_gamma_m12(kG_m12, k_m12):
    assert du.gamma_hq(kG_m12, hopf.normalized_integral(kG_m12)).report.passed
    assert du.gamma_mhc(k_m12).report.passed


def test_y_conditions(kG_m12):
    assert du.y_conditions(kG_m12, hopf.normalized_integral(kG_m12)).passed


def test_bidual_dimension():
    for q in (cyclic_group(4), symmetric_group(3)):
        g = du.gamma_mhc(mhc.function_algebra(q))
        assert g.target.dim == g.source.dim == q.order
