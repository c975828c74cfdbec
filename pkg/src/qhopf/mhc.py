"""Multiplier Hopf coquasigroups of discrete type.

Two backends share one interface:

* :class:`FinDimMHC` -- structure tensors on a finite basis (M(A) = A).
* :class:`DiscreteMHC` -- the function algebra k(G) of a loop handle, finite
  or oracle-backed.  Delta(delta_u) has infinite support when G is infinite,
  so it is never built: every coproduct access is a product of Delta with
  finitely supported cut elements, computed from the canonical maps

      T1(a (x) b) = Delta(a)(1 (x) b),   T2(a (x) b) = (a (x) 1)Delta(b).

Coproduct access is ``delta_cut(a, left, right)``, meaning
(l1 (x) l2) Delta(a) (r1 (x) r2), and ``delta2_cut`` for the two iterated
coproducts; ``None`` stands for the unit 1 of M(A).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import hopf
from .errors import (InconsistentTau, NoIntegral, NotDiscreteType, NotFaithful, NotIP,
                     SampleRequired)
from .hopf import FiniteStructure, Functional
from .linalg import (ONE, ZERO, FinSupp, Matrix, Tensor3, apply_leg, bilinear, contract_leg, flip,
                     multiply_leg_by, multiply_legs, solve)
from .quasigroup import Quasigroup, check_ip
from .report import AxiomReport

FinSuppElement = FinSupp
Cuts = tuple


class MHC:
    """Interface shared by both backends."""

    is_finite: bool = True
    name: str = ""

    def basis(self) -> list | None:
        raise NotImplementedError

    def e(self, key) -> FinSupp:
        return FinSupp.basis(key)

    def mul_basis(self, k1, k2) -> FinSupp:
        raise NotImplementedError

    def mul(self, a: FinSupp, b: FinSupp) -> FinSupp:
        return bilinear(a, b, self.mul_basis)

    def antipode_basis(self, k) -> FinSupp:
        raise NotImplementedError

    def antipode_inv_basis(self, k) -> FinSupp:
        raise NotImplementedError

    def S(self, a: FinSupp) -> FinSupp:
        return a.linear_map(self.antipode_basis)

    def S_inv(self, a: FinSupp) -> FinSupp:
        return a.linear_map(self.antipode_inv_basis)

    def counit_basis(self, k) -> Fraction:
        raise NotImplementedError

    def counit_of(self, a: FinSupp) -> Fraction:
        return a.pair(self.counit_basis)

    def t1(self, a: FinSupp, b: FinSupp) -> FinSupp:
        return self.delta_cut(a, right=(None, b))

    def t2(self, a: FinSupp, b: FinSupp) -> FinSupp:
        return self.delta_cut(b, left=(a, None))

    def delta_cut(self, a: FinSupp, left: Cuts = (None, None), right: Cuts = (None, None)) -> FinSupp:
        raise NotImplementedError

    def delta2_cut(self, a: FinSupp, assoc: str, left: Cuts = (None, None, None),
                   right: Cuts = (None, None, None)) -> FinSupp:
        raise NotImplementedError

    def window(self, a: FinSupp) -> list:
        """Finite set of basis keys on which a local linear solve around ``a`` is exact."""
        raise NotImplementedError

    def unit_tests(self) -> list[FinSupp]:
        """Cut elements that certify an identity between multipliers."""
        raise NotImplementedError

    @property
    def unit_multiplier(self) -> "Multiplier":
        return Multiplier.identity()

    def leg_mul(self, t: FinSupp, leg: int) -> FinSupp:
        return multiply_legs(t, leg, self.mul_basis)

    def leg_times(self, t: FinSupp, leg: int, x: FinSupp | None, side: str) -> FinSupp:
        if x is None:
            return t
        return multiply_leg_by(t, leg, x, self.mul_basis, side)


class Multiplier:
    """Element of M(A) stored as its left and right actions on A."""

    def __init__(self, left: Callable[[FinSupp], FinSupp], right: Callable[[FinSupp], FinSupp],
                 name: str = "m"):
        self.left = left
        self.right = right
        self.name = name

    @classmethod
    def identity(cls) -> "Multiplier":
        return cls(lambda b: b, lambda b: b, name="1")

    @classmethod
    def of_element(cls, A: MHC, x: FinSupp, name: str = "x") -> "Multiplier":
        return cls(lambda b: A.mul(x, b), lambda b: A.mul(b, x), name=name)

    def __mul__(self, other: "Multiplier") -> "Multiplier":
        return Multiplier(lambda b: self.left(other.left(b)), lambda b: other.right(self.right(b)),
                          name=f"{self.name}*{other.name}")

    def scale(self, c) -> "Multiplier":
        c = Fraction(c)
        return Multiplier(lambda b: self.left(b).scale(c), lambda b: self.right(b).scale(c),
                          name=f"{c}*{self.name}")

    def mismatch(self, other: "Multiplier", tests: Iterable[FinSupp]) -> tuple | None:
        for b in tests:
            if self.left(b) != other.left(b):
                return ("left", b, self.left(b), other.left(b))
            if self.right(b) != other.right(b):
                return ("right", b, self.right(b), other.right(b))
        return None

    def equals(self, other: "Multiplier", tests: Iterable[FinSupp]) -> bool:
        return self.mismatch(other, tests) is None

    def compatible(self, A: MHC, tests: Sequence[FinSupp]) -> bool:
        """a (m b) = (a m) b on all test pairs."""
        return all(A.mul(a, self.left(b)) == A.mul(self.right(a), b) for a in tests for b in tests)

    def __repr__(self) -> str:
        return f"Multiplier({self.name})"


# -- finite backend ---------------------------------------------------------------

class FinDimMHC(FiniteStructure, MHC):
    """Finite multiplier Hopf coquasigroup: associative unital algebra,
    coproduct allowed to be non-coassociative."""

    kind = "mhc"
    is_finite = True

    def counit_basis(self, k) -> Fraction:
        return self.counit[k]

    def _cut(self, t: FinSupp, left: Cuts, right: Cuts) -> FinSupp:
        for leg, x in enumerate(left):
            t = self.leg_times(t, leg, x, "left")
        for leg, x in enumerate(right):
            t = self.leg_times(t, leg, x, "right")
        return t

    def delta_cut(self, a, left=(None, None), right=(None, None)):
        return self._cut(self.comul(a), left, right)

    def delta2_cut(self, a, assoc, left=(None, None, None), right=(None, None, None)):
        return self._cut(self.comul2(a, assoc), left, right)

    def window(self, a):
        return self.basis()

    def unit_tests(self):
        return [self.one_element]

    @property
    def one_element(self) -> FinSupp:
        return self._unit

    @property
    def unit_multiplier(self) -> Multiplier:
        return Multiplier.of_element(self, self._unit, name="1")


# -- function algebra backend -----------------------------------------------------

class DiscreteMHC(MHC):
    """k(G) for an IP loop G: pointwise product on the delta basis,
    eps(delta_u) = [u = e], S(delta_u) = delta_{u^-1}.

    Basis keys are the loop elements themselves.
    """

    def __init__(self, q: Quasigroup):
        self.q = q
        self.is_finite = q.is_finite
        self.name = f"k({q.name})"

    def __repr__(self) -> str:
        return f"DiscreteMHC({self.name})"

    def basis(self):
        return self.q.elements()

    def label(self, u) -> str:
        return self.q.label(u)

    def mul_basis(self, u, v):
        return FinSupp.basis(u) if u == v else FinSupp()

    def mul(self, a, b):
        return FinSupp((u, c * b[u]) for u, c in a.items() if b[u])

    def antipode_basis(self, u):
        return FinSupp.basis(self.q.inverse(u))

    antipode_inv_basis = antipode_basis

    def counit_basis(self, u):
        return ONE if u == self.q.identity else ZERO

    def cointegral_element(self) -> FinSupp:
        return FinSupp.basis(self.q.identity)

    def indicator(self, keys: Iterable) -> FinSupp:
        return FinSupp((k, 1) for k in set(keys))

    def unit_element(self) -> FinSupp:
        """1 = sum of all delta_u; only for finite carriers."""
        if not self.is_finite:
            raise ValueError("the unit of M(k(G)) is not finitely supported for infinite G")
        return self.indicator(self.q.elements())

    def t1(self, a, b):
        # Delta(delta_u)(1 (x) delta_z) = delta_{u/z} (x) delta_z
        rd = self.q.right_divide
        return FinSupp(((rd(u, z), z), ca * cb) for u, ca in a.items() for z, cb in b.items())

    def t2(self, a, b):
        # (delta_x (x) 1)Delta(delta_u) = delta_x (x) delta_{x\u}
        ld = self.q.left_divide
        return FinSupp(((x, ld(x, u)), ca * cb) for x, ca in a.items() for u, cb in b.items())

    @staticmethod
    def _merge(left, right):
        # k(G) is commutative, so left and right cuts on a leg combine
        out = []
        for l, r in zip(left, right):
            if l is None:
                out.append(r)
            elif r is None:
                out.append(l)
            else:
                out.append(FinSupp((u, c * r[u]) for u, c in l.items() if r[u]))
        return out

    def delta_cut(self, a, left=(None, None), right=(None, None)):
        c1, c2 = self._merge(left, right)
        if c2 is not None:
            t = self.t1(a, c2)
            return t if c1 is None else self.leg_times(t, 0, c1, "right")
        if c1 is not None:
            return self.t2(c1, a)
        if self.is_finite:
            return self.t1(a, self.unit_element())
        raise ValueError("Delta(a) is not finitely supported; cut at least one leg")

    def coproduct_local_unit(self, b: FinSupp, c: FinSupp) -> FinSupp:
        """e with Delta(e)(b (x) c) = b (x) c: the indicator of supp(b) * supp(c)."""
        mul = self.q.product
        return self.indicator(mul(y, z) for y in b.support() for z in c.support())

    def delta2_cut(self, a, assoc, left=(None, None, None), right=(None, None, None)):
        c1, c2, c3 = self._merge(left, right)
        if self.is_finite:
            one = self.unit_element()
            c1, c2, c3 = [one if c is None else c for c in (c1, c2, c3)]
        acc = FinSupp()
        if assoc == "right":
            # x(yz) = u: outer cut on leg 1, or on the product leg via a local unit
            if c1 is not None:
                outer = self.delta_cut(a, left=(c1, None))
            elif c2 is not None and c3 is not None:
                outer = self.delta_cut(a, right=(None, self.coproduct_local_unit(c2, c3)))
            else:
                raise ValueError("(id (x) Delta)Delta(a) needs at least two cut legs")
            if c2 is None and c3 is None:
                raise ValueError("(id (x) Delta)Delta(a) needs at least two cut legs")
            for (x, w), v in outer.items():
                inner = self.delta_cut(FinSupp.basis(w), right=(c2, c3))
                acc = acc + FinSupp(((x,) + k, c * v) for k, c in inner.items())
        else:
            if c3 is not None:
                outer = self.delta_cut(a, right=(None, c3))
            elif c1 is not None and c2 is not None:
                outer = self.delta_cut(a, right=(self.coproduct_local_unit(c1, c2), None))
            else:
                raise ValueError("(Delta (x) id)Delta(a) needs at least two cut legs")
            if c1 is None and c2 is None:
                raise ValueError("(Delta (x) id)Delta(a) needs at least two cut legs")
            for (w, z), v in outer.items():
                inner = self.delta_cut(FinSupp.basis(w), right=(c1, c2))
                acc = acc + FinSupp((k + (z,), c * v) for k, c in inner.items())
        return acc

    def window(self, a):
        return a.support()

    def unit_tests(self):
        raise SampleRequired("cut elements come from the basis sample")

    def to_findim(self) -> FinDimMHC:
        """Materialized tensors (finite carriers only)."""
        if not self.is_finite:
            raise ValueError("infinite carrier")
        q = self.q
        els = q.elements()
        n = len(els)
        pos = {u: i for i, u in enumerate(els)}
        mult = Tensor3.from_function((n, n, n), lambda i, j, k: int(i == j == k))
        comult = Tensor3.from_function(
            (n, n, n), lambda k, i, j: int(q.left_divide(els[i], els[k]) == els[j]))
        anti = Matrix(n, n, [int(pos[q.inverse(els[i])] == k) for k in range(n) for i in range(n)])
        return FinDimMHC([q.label(u) for u in els], mult, [1] * n, comult,
                         [int(u == q.identity) for u in els], anti, name=self.name)


def function_algebra(q: Quasigroup, sample: Sequence | None = None) -> DiscreteMHC:
    """k(G); the loop must pass the IP check (sampled for oracles)."""
    rep = check_ip(q, None if q.is_finite else sample)
    if not rep.passed:
        v = rep.violations[0]
        raise NotIP(f"{q.name} fails {v.axiom} at {v.witness}")
    return DiscreteMHC(q)


def t1(A: MHC, a: FinSupp, b: FinSupp) -> FinSupp:
    return A.t1(a, b)


def t2(A: MHC, a: FinSupp, b: FinSupp) -> FinSupp:
    return A.t2(a, b)


# -- sampling helpers ---------------------------------------------------------------

def _keys(A: MHC, sample: Sequence | None) -> list:
    if sample is not None:
        return list(sample)
    if not A.is_finite:
        raise SampleRequired(f"{A.name} is infinite: pass a sample of basis labels")
    return A.basis()


def _cut_tests(A: MHC, keys: Sequence) -> list[FinSupp]:
    if isinstance(A, FinDimMHC):
        return A.unit_tests()
    return [FinSupp.basis(k) for k in keys]


# -- axioms -----------------------------------------------------------------------

def verify_mhc(A: MHC, sample: Sequence | None = None, probe: bool = True) -> AxiomReport:
    """Axioms of a multiplier Hopf coquasigroup, with Delta reached through cuts.

    For finite carriers all basis tuples are checked; infinite carriers need
    a sample of basis labels.  The coassociativity of Delta is probed, not
    required.
    """
    keys = _keys(A, sample)
    rep = AxiomReport(sampled=sample is not None)
    tests = _cut_tests(A, keys)
    els = [A.e(k) for k in keys]
    S, Si, mul = A.S, A.S_inv, A.mul
    eps_leg0 = lambda t: contract_leg(t, 0, A.counit_basis)  # noqa: E731
    eps_leg1 = lambda t: contract_leg(t, 1, A.counit_basis)  # noqa: E731

    for ka, a in zip(keys, els):
        rep.check("antipode_bijective", (ka,), Si(S(a)), a)
        for kb, b in zip(keys, els):
            ab = mul(a, b)
            rep.check("counit_t1", (ka, kb), eps_leg0(A.t1(a, b)), ab)
            rep.check("counit_t2", (ka, kb), eps_leg1(A.t2(a, b)), ab)
            rep.check("counit_multiplicative", (ka, kb), A.counit_of(ab), A.counit_of(a) * A.counit_of(b))
            rep.check("antipode_antimultiplicative", (ka, kb), S(ab), mul(S(b), S(a)))
            # m(id (x) S)((a (x) 1)Delta(b)) = eps(b) a
            rep.check("antipode_display_t2", (ka, kb),
                      A.leg_mul(apply_leg(A.t2(a, b), 1, A.antipode_basis), 0), a.scale(A.counit_of(b)))
            # m(S (x) id)(Delta(a)(1 (x) b)) = eps(a) b
            rep.check("antipode_display_t1", (ka, kb),
                      A.leg_mul(apply_leg(A.t1(a, b), 0, A.antipode_basis), 0), b.scale(A.counit_of(a)))
            for kc, c in zip(keys, els):
                rep.check("algebra_associative", (ka, kb, kc), mul(ab, c), mul(a, mul(b, c)))

    for ka, a in zip(keys, els):
        for ib, b in enumerate(tests):
            for ic, c in enumerate(tests):
                wit = (ka, _tag(keys, tests, ib), _tag(keys, tests, ic))
                # Delta(S a) = (S (x) S) Delta^cop(a)
                lhs = A.delta_cut(S(a), right=(b, c))
                x = A.delta_cut(a, left=(Si(c), Si(b)))
                rhs = flip(apply_leg(apply_leg(x, 0, A.antipode_basis), 1, A.antipode_basis))
                rep.check("antipode_anticomultiplicative", wit, lhs, rhs)
                # S(a1) a2(1) (x) a2(2) = 1 (x) a, cut by b (x) c: b S(a1) a2(1) (x) c a2(2) = b (x) c a
                x = A.delta2_cut(a, "right", left=(None, None, c), right=(Si(b), None, None))
                lhs = A.leg_mul(apply_leg(x, 0, A.antipode_basis), 0)
                rep.check("coquasi_antipode_1", wit, lhs, _pair(b, mul(c, a)))
                # a1 S(a2(1)) (x) a2(2) = 1 (x) a, cut: a1 S(a2(1)) b (x) a2(2) c = b (x) a c
                x = A.delta2_cut(a, "right", left=(None, Si(b), None), right=(None, None, c))
                lhs = A.leg_mul(apply_leg(x, 1, A.antipode_basis), 0)
                rep.check("coquasi_antipode_2", wit, lhs, _pair(b, mul(a, c)))
                # a1(1) (x) S(a1(2)) a2 = a (x) 1, cut: b a1(1) (x) c S(a1(2)) a2 = b a (x) c
                x = A.delta2_cut(a, "left", left=(b, None, None), right=(None, Si(c), None))
                lhs = A.leg_mul(apply_leg(x, 1, A.antipode_basis), 1)
                rep.check("coquasi_antipode_3", wit, lhs, _pair(mul(b, a), c))
                # a1(1) (x) a1(2) S(a2) = a (x) 1, cut: a1(1) b (x) a1(2) S(a2) c = a b (x) c
                x = A.delta2_cut(a, "left", left=(None, None, Si(c)), right=(b, None, None))
                lhs = A.leg_mul(apply_leg(x, 2, A.antipode_basis), 1)
                rep.check("coquasi_antipode_4", wit, lhs, _pair(mul(a, b), c))
                # Delta multiplicative: Delta(a a')(b (x) c) = Delta(a)(Delta(a')(b (x) c))
                for ka2, a2 in zip(keys, els):
                    inner = A.delta_cut(a2, right=(b, c))
                    rhs = FinSupp()
                    for (p, q), v in inner.items():
                        rhs = rhs + A.delta_cut(a, right=(A.e(p), A.e(q))).scale(v)
                    rep.check("coproduct_multiplicative", wit + (ka2,),
                              A.delta_cut(mul(a, a2), right=(b, c)), rhs)
    if probe:
        rep.probes["coassociativity_witness"] = coassociativity_probe(A, keys, tests)
    return rep


def _pair(x: FinSupp, y: FinSupp) -> FinSupp:
    # two-leg tensor that keeps tuple-valued labels intact
    return FinSupp(((k1, k2), v1 * v2) for k1, v1 in x.items() for k2, v2 in y.items())


def _tag(keys, tests, i):
    return keys[i] if len(tests) == len(keys) else "1"


def coassociativity_probe(A: MHC, keys: Sequence, tests: Sequence[FinSupp]) -> tuple | None:
    """First (a, b, c, d) with (Delta(x)id)Delta(a)(b(x)c(x)d) != (id(x)Delta)Delta(a)(b(x)c(x)d).

    For k(G) the candidates a are the products (bc)d of cut triples, so
    sampled oracles find witnesses too.
    """
    if isinstance(A, DiscreteMHC):
        mul = A.q.product
        for kb in keys:
            for kc in keys:
                for kd in keys:
                    cuts = (A.e(kb), A.e(kc), A.e(kd))
                    for ka in (mul(mul(kb, kc), kd), mul(kb, mul(kc, kd))):
                        a = A.e(ka)
                        if A.delta2_cut(a, "left", right=cuts) != A.delta2_cut(a, "right", right=cuts):
                            return (ka, kb, kc, kd)
        return None
    for ka in keys:
        a = A.e(ka)
        for ib, b in enumerate(tests):
            for ic, c in enumerate(tests):
                for id_, d in enumerate(tests):
                    if (A.delta2_cut(a, "left", right=(b, c, d))
                            != A.delta2_cut(a, "right", right=(b, c, d))):
                        return (ka, _tag(keys, tests, ib), _tag(keys, tests, ic), _tag(keys, tests, id_))
    return None


# -- local units and reconstruction -----------------------------------------------

def local_unit(A: MHC, elements: Sequence[FinSupp]) -> FinSupp:
    """e with a_i e = a_i = e a_i for every listed a_i, verified by multiplication."""
    if not elements:
        raise ValueError("need at least one element")
    if isinstance(A, DiscreteMHC):
        e = A.indicator(k for a in elements for k in a.support())
    else:
        n = A.dim
        rows, rhs = [], []
        for a in elements:
            for side in ("right", "left"):
                for k in range(n):
                    row = [ZERO] * n
                    for i, c in a.items():
                        for j in range(n):
                            m = A.mult[i, j, k] if side == "right" else A.mult[j, i, k]
                            row[j] += c * m
                    rows.append(row)
                    rhs.append(a[k])
        x = solve(Matrix.from_rows(rows), rhs)
        if x is None:
            raise ValueError("no local unit exists for these elements")
        e = FinSupp.from_dense(x)
    for a in elements:
        if A.mul(a, e) != a or A.mul(e, a) != a:
            raise AssertionError("local unit verification failed")
    return e


def reconstruction_witness(A: MHC, f: Functional, a: FinSupp, window: Sequence | None = None) -> FinSupp | None:
    """Some e with a = (id (x) f)(Delta(a)(1 (x) e)), found by a linear solve.

    The search runs over span(window); for k(G) the window {e_G} already
    suffices, giving e = delta_e.
    """
    if window is None:
        window = A.basis() if A.is_finite else [getattr(A, "q").identity]
    images = [contract_leg(A.t1(a, A.e(k)), 1, f.value) for k in window]
    keys = sorted({k for img in images for k in img.support()} | set(a.support()),
                  key=lambda k: (type(k).__name__, k))
    m = Matrix.from_columns([img.to_dense(keys) for img in images])
    x = solve(m, a.to_dense(keys))
    if x is None:
        return None
    return FinSupp(zip(window, x))


def reconstruction_span_rank(A: FinDimMHC, f: Functional) -> tuple[int, int]:
    """Ranks of span{(id(x)f)(Delta(a)(1(x)b))} and span{(id(x)f)((1(x)a)Delta(b))}."""
    from .linalg import rank
    n = A.dim
    first, second = [], []
    for i in range(n):
        for j in range(n):
            first.append(contract_leg(A.t1(A.e(i), A.e(j)), 1, f.value).to_dense(range(n)))
            second.append(contract_leg(A.delta_cut(A.e(j), left=(None, A.e(i))), 1, f.value).to_dense(range(n)))
    return rank(Matrix.from_rows(first)), rank(Matrix.from_rows(second))


# -- integrals ---------------------------------------------------------------------

def integrals(A: MHC, sample: Sequence | None = None) -> tuple[Functional, Functional]:
    """Left integral phi and right integral psi = phi o S.

    k(G): phi = psi = coefficient sum.  Finite tensors: kernel of the
    defining system, scaled so that phi(xi) = 1 for the cointegral xi.
    """
    if isinstance(A, DiscreteMHC):
        phi = Functional(lambda k: ONE, name="phi")
        keys = _keys(A, sample)
        for k in keys:
            if phi(A.mul(A.e(k), A.e(k))) == 0:
                raise NotFaithful(f"phi(delta_u delta_u) = 0 at {k!r}")
        return phi, Functional(lambda k: A.antipode_basis(k).pair(phi.value), name="psi")
    phi = hopf.normalized_integral(A, "left")
    if phi is None:
        raise NoIntegral(f"{A.name} has no left integral")
    if not hopf.is_faithful(A, phi):
        raise NotFaithful(f"the left integral of {A.name} is not faithful")
    phi.name = "phi"
    psi = phi.compose(A.antipode_basis, name="psi")
    return phi, psi


def integral_space(A: MHC, side: str = "left") -> list[Functional]:
    if not isinstance(A, FiniteStructure):
        raise TypeError("integral spaces are computed for finite tensors; use DiscreteMHC.to_findim()")
    return hopf.integral_space(A, side)


def cointegral(A: MHC, phi: Functional | None = None, sample: Sequence | None = None) -> FinSupp:
    """Left cointegral xi (a xi = eps(a) xi); also asserts phi(xi) != 0 when phi given."""
    if isinstance(A, DiscreteMHC):
        xi = A.cointegral_element()
        for k in _keys(A, sample):
            a = A.e(k)
            if A.mul(a, xi) != xi.scale(A.counit_of(a)):
                raise NotDiscreteType(f"delta_e fails a xi = eps(a) xi at {k!r}")
    else:
        space = hopf.cointegral_space(A, "left")
        if not space:
            raise NotDiscreteType(f"{A.name} has no left cointegral")
        xi = space[0]
    if phi is not None and phi(xi) == 0:
        raise NotDiscreteType("phi(xi) = 0; the integral is not faithful")
    return xi


def verify_integral_identities(A: MHC, phi: Functional, psi: Functional,
                               sample: Sequence | None = None) -> AxiomReport:
    """The integral laws and the four integral identities on basis pairs:

        a1 phi(a2 S(b)) = phi(a S(b1)) b2,   a1 phi(b a2) = S(b1) phi(b2 a),
        psi(S(a) b1) b2 = psi(S(a2) b) a1,   psi(a1 b) a2 = psi(a b1) S(b2).
    """
    keys = _keys(A, sample)
    rep = AxiomReport(sampled=sample is not None)
    els = [A.e(k) for k in keys]
    S, Si = A.S, A.S_inv
    f, g = phi.value, psi.value
    Sf = lambda k: A.antipode_basis(k).pair(f)  # noqa: E731
    Sg = lambda k: A.antipode_basis(k).pair(g)  # noqa: E731
    for ka, a in zip(keys, els):
        for kb, b in zip(keys, els):
            w = (ka, kb)
            rep.check("left_integral", w, contract_leg(A.delta_cut(a, right=(b, None)), 1, f), b.scale(phi(a)))
            rep.check("right_integral", w, contract_leg(A.t1(a, b), 0, g), b.scale(psi(a)))
            lhs = contract_leg(A.t1(a, S(b)), 1, f)
            rhs = contract_leg(A.delta_cut(b, right=(Si(a), None)), 0, Sf)
            rep.check("integral_identity_phi_1", w, lhs, rhs)
            lhs = contract_leg(A.delta_cut(a, left=(None, b)), 1, f)
            rhs = contract_leg(apply_leg(A.t1(b, a), 0, A.antipode_basis), 1, f)
            rep.check("integral_identity_phi_2", w, lhs, rhs)
            lhs = contract_leg(A.t2(S(a), b), 0, g)
            rhs = contract_leg(A.delta_cut(a, left=(None, Si(b))), 1, Sg)
            rep.check("integral_identity_psi_1", w, lhs, rhs)
            lhs = contract_leg(A.delta_cut(a, right=(b, None)), 0, g)
            rhs = contract_leg(apply_leg(A.t2(a, b), 1, A.antipode_basis), 0, g)
            rep.check("integral_identity_psi_2", w, lhs, rhs)
        # eps o S = eps
        rep.check("counit_antipode", (ka,), A.counit_of(S(a)), A.counit_of(a))
        # phi o S is a right integral (psi as supplied must agree)
        rep.check("psi_is_phi_S", (ka,), psi(a), phi(S(a)))
    return rep


# -- modular data ------------------------------------------------------------------

class LinearMap:
    """Linear endomorphism of A, evaluated on finitely supported elements."""

    def __init__(self, fn: Callable[[FinSupp], FinSupp], name: str = "L"):
        self._fn = fn
        self.name = name

    def __call__(self, a: FinSupp) -> FinSupp:
        return self._fn(a)

    def then(self, other: "LinearMap") -> "LinearMap":
        """other o self."""
        return LinearMap(lambda a: other(self(a)), f"{other.name}{self.name}")

    def matrix(self, n: int) -> Matrix:
        return Matrix.from_columns([self(FinSupp.basis(i)).to_dense(range(n)) for i in range(n)])

    def __repr__(self) -> str:
        return f"LinearMap({self.name})"


@dataclass
class ModularData:
    delta: Multiplier
    delta_inverse: Multiplier
    tau: Fraction
    sigma: LinearMap
    sigma_inverse: LinearMap
    sigma_prime: LinearMap
    sigma_prime_inverse: LinearMap

    def is_trivial(self, A: MHC, tests: Sequence[FinSupp]) -> bool:
        one = Multiplier.identity()
        return (self.tau == 1 and self.delta.equals(one, tests) and self.delta_inverse.equals(one, tests)
                and all(self.sigma(b) == b and self.sigma_prime(b) == b for b in tests))


def _local_gram_solve(A: MHC, form: Functional, a: FinSupp, side: str) -> FinSupp:
    """sigma-type solve on the window of a.

    side='sigma':   x with form(b x) = form(a b) for all b
    side='inverse': x with form(x b) = form(b a) for all b
    """
    W = A.window(a)
    if side == "sigma":
        rows = [[form(A.mul(A.e(wi), A.e(wj))) for wj in W] for wi in W]
        rhs = [form(A.mul(a, A.e(wi))) for wi in W]
    else:
        rows = [[form(A.mul(A.e(wj), A.e(wi))) for wj in W] for wi in W]
        rhs = [form(A.mul(A.e(wi), a)) for wi in W]
    if not W:
        return FinSupp()
    x = solve(Matrix.from_rows(rows), rhs)
    if x is None:
        raise NotFaithful("Gram system is inconsistent; the functional is not faithful")
    return FinSupp(zip(W, x))


def modular_data(A: MHC, phi: Functional, psi: Functional | None = None,
                 sample: Sequence | None = None) -> ModularData:
    """delta, tau, sigma and sigma' for the left integral phi.

    delta from (phi (x) id)Delta(a) = phi(a) delta, read off through T-maps
    on a basis element with phi(a) != 0; delta^-1 likewise from psi.  tau is
    the common ratio phi(S^2 a) / phi(a), cross-checked on every tested basis
    element.  sigma solves phi(a b) = phi(b sigma(a)) locally; sigma' is
    S^-1 sigma^-1 S.
    """
    if psi is None:
        psi = phi.compose(A.antipode_basis, name="psi")
    keys = _keys(A, sample)
    if isinstance(A, DiscreteMHC):
        pivot_keys = [A.q.identity] + list(keys)
    else:
        pivot_keys = list(keys)
    a0 = next((A.e(k) for k in pivot_keys if phi(A.e(k)) != 0), None)
    b0 = next((A.e(k) for k in pivot_keys if psi(A.e(k)) != 0), None)
    if a0 is None or b0 is None:
        raise NotFaithful("phi vanishes on every tested basis element")
    pa, pb = phi(a0), psi(b0)
    delta = Multiplier(
        lambda b: contract_leg(A.t1(a0, b), 0, phi.value).scale(1 / pa),
        lambda b: contract_leg(A.delta_cut(a0, left=(None, b)), 0, phi.value).scale(1 / pa),
        name="delta")
    delta_inv = Multiplier(
        lambda b: contract_leg(A.delta_cut(b0, right=(b, None)), 1, psi.value).scale(1 / pb),
        lambda b: contract_leg(A.t2(b, b0), 1, psi.value).scale(1 / pb),
        name="delta^-1")

    tau = None
    for k in keys:
        a = A.e(k)
        num, den = phi(A.S(A.S(a))), phi(a)
        if den == 0:
            if num != 0:
                raise InconsistentTau(f"phi(a) = 0 but phi(S^2 a) != 0 at {k!r}")
            continue
        r = num / den
        if tau is None:
            tau = r
        elif r != tau:
            raise InconsistentTau(f"ratios {tau} and {r} disagree at {k!r}")
    if tau is None or tau == 0:
        raise InconsistentTau("no usable ratio for tau")

    sigma = LinearMap(lambda a: _local_gram_solve(A, phi, a, "sigma"), "sigma")
    sigma_inv = LinearMap(lambda a: _local_gram_solve(A, phi, a, "inverse"), "sigma^-1")
    S = LinearMap(A.S, "S")
    Sinv = LinearMap(A.S_inv, "S^-1")
    sigma_prime = S.then(sigma_inv).then(Sinv)
    sigma_prime.name = "sigma'"
    sigma_prime_inv = S.then(sigma).then(Sinv)
    sigma_prime_inv.name = "sigma'^-1"
    return ModularData(delta, delta_inv, tau, sigma, sigma_inv, sigma_prime, sigma_prime_inv)


def multiplier_antipode(A: MHC, m: Multiplier) -> Multiplier:
    """S extended to M(A): S(m) b = S(S^-1(b) m), b S(m) = S(m S^-1(b))."""
    return Multiplier(lambda b: A.S(m.right(A.S_inv(b))), lambda b: A.S(m.left(A.S_inv(b))),
                      name=f"S({m.name})")


def multiplier_automorphism(m: Multiplier, alpha: LinearMap, alpha_inv: LinearMap) -> Multiplier:
    """alpha extended to M(A): alpha(m) c = alpha(m alpha^-1(c))."""
    return Multiplier(lambda c: alpha(m.left(alpha_inv(c))), lambda c: alpha(m.right(alpha_inv(c))),
                      name=f"{alpha.name}({m.name})")


def multiplier_counit(A: MHC, m: Multiplier, probe: FinSupp) -> Fraction:
    """eps(m) = eps(m b) / eps(b) for a probe with eps(b) != 0."""
    e = A.counit_of(probe)
    if e == 0:
        raise ValueError("probe element has eps = 0")
    return A.counit_of(m.left(probe)) / e


def verify_modular_properties(A: MHC, phi: Functional, psi: Functional, md: ModularData,
                              sample: Sequence | None = None) -> AxiomReport:
    """Defining equations of delta, tau, sigma, sigma' and their listed properties."""
    keys = _keys(A, sample)
    rep = AxiomReport(sampled=sample is not None)
    els = [A.e(k) for k in keys]
    S, Si, mul = A.S, A.S_inv, A.mul
    d, di = md.delta, md.delta_inverse
    sig, sigi, sp, spi = md.sigma, md.sigma_inverse, md.sigma_prime, md.sigma_prime_inverse
    f, g = phi.value, psi.value
    probe_el = A.cointegral_element() if isinstance(A, DiscreteMHC) else A.one_element

    for b in els:
        rep.check("delta_times_delta_inverse", (b,), d.left(di.left(b)), b)
        rep.check("delta_inverse_times_delta", (b,), di.left(d.left(b)), b)
        rep.check("delta_times_delta_inverse_right", (b,), di.right(d.right(b)), b)
        rep.check("delta_inverse_times_delta_right", (b,), d.right(di.right(b)), b)
    rep.check("delta_compatible", (), d.compatible(A, els), True)
    Sd = multiplier_antipode(A, d)
    mm = Sd.mismatch(di, els)
    rep.check("antipode_of_delta", mm[:2] if mm else (), mm[2] if mm else None, mm[3] if mm else None)
    rep.check("counit_of_delta", (), multiplier_counit(A, d, probe_el), ONE)

    for ka, a in zip(keys, els):
        w = (ka,)
        for kb, b in zip(keys, els):
            rep.check("modular_element_phi", (ka, kb), contract_leg(A.t1(a, b), 0, f), d.left(b).scale(phi(a)))
            rep.check("modular_element_psi", (ka, kb),
                      contract_leg(A.delta_cut(a, right=(b, None)), 1, g), di.left(b).scale(psi(a)))
            rep.check("sigma_modular", (ka, kb), phi(mul(a, b)), phi(mul(b, sig(a))))
            rep.check("sigma_prime_modular", (ka, kb), psi(mul(a, b)), psi(mul(b, sp(a))))
            rep.check("sigma_multiplicative", (ka, kb), sig(mul(a, b)), mul(sig(a), sig(b)))
            rep.check("sigma_prime_multiplicative", (ka, kb), sp(mul(a, b)), mul(sp(a), sp(b)))
        rep.check("phi_S_is_phi_delta", w, phi(S(a)), phi(d.right(a)))
        rep.check("tau", w, phi(S(S(a))), phi(a) * md.tau)
        rep.check("tau_conjugation", w, phi(di.left(d.right(a))), phi(a) * md.tau)
        rep.check("sigma_invariant", w, phi(sig(a)), phi(a))
        rep.check("sigma_prime_invariant", w, psi(sp(a)), psi(a))
        rep.check("sigma_inverse", w, sigi(sig(a)), a)
        rep.check("sigma_prime_inverse", w, spi(sp(a)), a)
        # sigma' solved independently with psi must equal S^-1 sigma^-1 S
        rep.check("sigma_prime_formula", w, _local_gram_solve(A, psi, a, "sigma"), sp(a))
        rep.check("sigma_prime_conjugation", w, sp(a), d.left(di.right(sig(a))))
        rep.check("sigma_commutes_sigma_prime", w, sig(sp(a)), sp(sig(a)))
        S2a = S(S(a))
        rep.check("sigma_commutes_S2", w, sig(S2a), S(S(sig(a))))
        rep.check("sigma_prime_commutes_S2", w, sp(S2a), S(S(sp(a))))

    sd = multiplier_automorphism(d, sig, sigi)
    spd = multiplier_automorphism(d, sp, spi)
    target = d.scale(1 / md.tau)
    for label, m in (("sigma_of_delta", sd), ("sigma_prime_of_delta", spd)):
        mm = m.mismatch(target, els)
        rep.check(label, mm[:2] if mm else (), mm[2] if mm else None, mm[3] if mm else None)

    S2 = lambda k: S(S(A.e(k)))  # noqa: E731
    Sm2 = lambda x: Si(Si(x))  # noqa: E731
    tests = _cut_tests(A, keys)
    for ka, a in zip(keys, els):
        for ib, b in enumerate(tests):
            for ic, c in enumerate(tests):
                w = (ka, _tag(keys, tests, ib), _tag(keys, tests, ic))
                # Delta(sigma a) = (S^2 (x) sigma)Delta(a)
                lhs = A.delta_cut(sig(a), right=(b, c))
                x = A.delta_cut(a, right=(Sm2(b), sigi(c)))
                rhs = apply_leg(apply_leg(x, 0, S2), 1, lambda k: sig(A.e(k)))
                rep.check("coproduct_sigma", w, lhs, rhs)
                # Delta(sigma' a) = (sigma' (x) S^-2)Delta(a)
                lhs = A.delta_cut(sp(a), right=(b, c))
                x = A.delta_cut(a, right=(spi(b), S(S(c))))
                rhs = apply_leg(apply_leg(x, 0, lambda k: sp(A.e(k))), 1, lambda k: Sm2(A.e(k)))
                rep.check("coproduct_sigma_prime", w, lhs, rhs)
    return rep
