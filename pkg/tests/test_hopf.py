from fractions import Fraction

import pytest

from qhopf import hopf
from qhopf.catalog import corrupted_antipode_hq, non_ip_loop
from qhopf.errors import NoIntegral, NotFaithful, NotIntegral
from qhopf.hopf import FinDimHopfQuasigroup, Functional
from qhopf.linalg import FinSupp, Matrix, Tensor3
from qhopf.mhc import FinDimMHC, function_algebra, integrals, verify_mhc
from qhopf.quasigroup import check_ip, cyclic_group, symmetric_group


def test_group_algebra_c2(c2):
    h = hopf.group_algebra(c2)
    assert h.dim == 2 and h.basis_labels == ("e", "g")
    assert h.S(h.e(1)) == h.e(1)
    assert hopf.verify_hopf_quasigroup(h).passed


@pytest.mark.parametrize("q", [cyclic_group(4), symmetric_group(3)], ids=["C4", "S3"])
def test_groups_give_hopf_algebras(q):
    h = hopf.group_algebra(q)
    rep = hopf.verify_hopf_quasigroup(h)
    assert rep.passed and rep.probes["associativity_witness"] is None


def test_nonassociative_hopf_quasigroup(kG_m12):
    rep = hopf.verify_hopf_quasigroup(kG_m12)
    assert rep.passed
    i, j, k = rep.probes["associativity_witness"]
    lhs = kG_m12.mul(kG_m12.mul(kG_m12.e(i), kG_m12.e(j)), kG_m12.e(k))
    assert lhs != kG_m12.mul(kG_m12.e(i), kG_m12.mul(kG_m12.e(j), kG_m12.e(k)))


def test_zero_antipode_fails_with_witness(c2):
    h = hopf.group_algebra(c2)
    bad = FinDimHopfQuasigroup(h.basis_labels, h.mult, h.unit, h.comult, h.counit, Matrix.zeros(2, 2))
    rep = hopf.verify_hopf_quasigroup(bad)
    v = rep.first("quasi_antipode_1")
    assert v is not None and v.lhs != v.rhs


def test_corrupted_antipode_fails(s3):
    rep = hopf.verify_hopf_quasigroup(corrupted_antipode_hq(s3))
    assert "quasi_antipode_1" in rep.failed_axioms()


def test_verifier_agrees_with_ip_check():
    for q in (cyclic_group(3), symmetric_group(3), non_ip_loop()):
        assert hopf.verify_hopf_quasigroup(hopf.group_algebra(q)).passed == check_ip(q).passed


def test_integrals_of_group_algebra(s3):
    h = hopf.group_algebra(s3)
    for side in ("left", "right"):
        (f,) = hopf.integral_space(h, side)
        assert list(f.coefficients) == [1] + [0] * 5
    (xi,) = hopf.cointegral_space(h, "left")
    assert xi == FinSupp({i: 1 for i in range(6)})
    phi = hopf.normalized_integral(h)
    assert phi(xi) == 1


def test_faithfulness(c2):
    h = hopf.group_algebra(c2)
    assert hopf.is_faithful(h, Functional([1, 0]))
    assert not hopf.is_faithful(h, Functional([0, 0]))


def test_function_algebra_wrapper_integral(c2):
    F = function_algebra(c2).to_findim()
    (f,) = hopf.integral_space(F, "left")
    assert list(f.coefficients) == [1, 1]
    (xi,) = hopf.cointegral_space(F, "left")
    assert xi == FinSupp.basis(0)


def test_dual_to_mhc_c2(c2):
    h = hopf.group_algebra(c2)
    A = hopf.dual_to_mhc(h, hopf.normalized_integral(h))
    assert isinstance(A, FinDimMHC)
    for u in range(2):
        for v in range(2):
            assert A.mul(A.e(u), A.e(v)) == (A.e(v) if u == v else FinSupp())
    assert verify_mhc(A).passed


def test_dual_to_mhc_m12_non_coassociative(kG_m12):
    A = hopf.dual_to_mhc(kG_m12, hopf.normalized_integral(kG_m12))
    rep = verify_mhc(A)
    assert rep.passed and rep.probes["coassociativity_witness"] is not None
    assert hopf.coassociativity_probe(A) is not None


def test_dual_to_mhc_rejects_bad_functionals(c2):
    h = hopf.group_algebra(c2)
    with pytest.raises(NotIntegral):
        hopf.dual_to_mhc(h, Functional([1, 1]))
    with pytest.raises((NotFaithful, NotIntegral)):
        hopf.dual_to_mhc(h, Functional([0, 0]))


def test_serialization_round_trip(kG_m12):
    back = FinDimHopfQuasigroup.from_dict(kG_m12.to_dict())
    assert back.mult == kG_m12.mult and back.comult == kG_m12.comult
    assert back.antipode == kG_m12.antipode and back.unit == kG_m12.unit
    perm = list(reversed(range(kG_m12.dim)))
    r = kG_m12.relabel(perm)
    assert hopf.verify_hopf_quasigroup(r).passed


def test_counit_antipode_compatibility(kG_m12):
    h = kG_m12
    for i in h.basis():
        assert h.counit_of(h.S(h.e(i))) == h.counit_of(h.e(i)) == Fraction(1)


def test_corrupted_comult_has_no_integral(c2):
    h = hopf.group_algebra(c2)
    # Delta(e_k) = e_k (x) e_0 forces phi = 0
    comult = Tensor3.from_function((2, 2, 2), lambda k, i, j: int(j == 0 and i == k))
    bad = FinDimHopfQuasigroup(h.basis_labels, h.mult, h.unit, comult, h.counit, h.antipode)
    assert hopf.integral_space(bad, "left") == []
    assert hopf.normalized_integral(bad) is None
    A = FinDimMHC(h.basis_labels, h.mult, h.unit, comult, h.counit, h.antipode)
    with pytest.raises(NoIntegral):
        integrals(A)
