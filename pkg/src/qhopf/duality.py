"""Integral duals of discrete multiplier Hopf coquasigroups and biduality.

Dual elements are carrier-backed functionals in one of four forms; the
canonical form is phi(. a).  Products and the counit/antipode are computed on
carriers with T-maps, so everything also works for the lazy k(G) of an
infinite loop.  Finite carriers can additionally be materialized into a
:class:`FinDimHopfQuasigroup` on the basis w_i = phi(. e_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import hopf, mhc
from .errors import NotDiscreteType, NotFaithful
from .hopf import FinDimHopfQuasigroup, FiniteStructure, Functional
from .linalg import ONE, FinSupp, Matrix, Tensor3, contract_leg, rank, solve
from .mhc import MHC, DiscreteMHC, FinDimMHC, ModularData
from .report import AxiomReport

FORMS = ("phi(.a)", "phi(a.)", "psi(.a)", "psi(a.)")


@dataclass(frozen=True)
class DualFunctional:
    """phi(. a), phi(a .), psi(. a) or psi(a .) for a carrier a."""

    form: str
    carrier: FinSupp

    def __post_init__(self):
        if self.form not in FORMS:
            raise ValueError(f"unknown form {self.form!r}")


def _key_order(A: MHC) -> list:
    return A.basis()


def _labels(A: MHC) -> list[str]:
    if isinstance(A, DiscreteMHC):
        return [A.label(u) for u in A.basis()]
    return list(A.basis_labels)


class IntegralDual:
    """The dual A^ = phi(. A) of a regular discrete MHC with left integral phi."""

    def __init__(self, A: MHC, phi: Functional, psi: Functional | None = None,
                 xi: FinSupp | None = None, sample: Sequence | None = None):
        self.A = A
        self.phi = phi
        self.psi = psi if psi is not None else phi.compose(A.antipode_basis, name="psi")
        self.sample = sample
        self.xi = xi if xi is not None else mhc.cointegral(A, phi, sample)
        if phi(self.xi) == 0:
            raise NotDiscreteType("phi(xi) = 0")
        self.md: ModularData = mhc.modular_data(A, phi, self.psi, sample)
        self.name = f"dual({A.name})"

    # -- forms --------------------------------------------------------------

    def element(self, a: FinSupp, form: str = "phi(.a)") -> DualFunctional:
        return DualFunctional(form, a)

    def basis_functional(self, key) -> DualFunctional:
        return DualFunctional("phi(.a)", self.A.e(key))

    def canonical(self, w: DualFunctional) -> FinSupp:
        """Carrier c with w = phi(. c)."""
        md, a = self.md, w.carrier
        if w.form == "phi(.a)":
            return a
        if w.form == "phi(a.)":
            return md.sigma(a)                      # phi(a x) = phi(x sigma(a))
        if w.form == "psi(.a)":
            return md.delta.right(a)                # psi(x) = phi(x delta)
        return md.delta.right(md.sigma_prime(a))    # psi(a x) = psi(x sigma'(a))

    def to_form(self, w: DualFunctional, form: str) -> DualFunctional:
        c, md = self.canonical(w), self.md
        if form == "phi(.a)":
            a = c
        elif form == "phi(a.)":
            a = md.sigma_inverse(c)
        elif form == "psi(.a)":
            a = md.delta_inverse.right(c)
        elif form == "psi(a.)":
            a = md.sigma_prime_inverse(md.delta_inverse.right(c))
        else:
            raise ValueError(f"unknown form {form!r}")
        return DualFunctional(form, a)

    def pair(self, w: DualFunctional, x: FinSupp) -> Fraction:
        """w(x), evaluated directly in the form of w."""
        mul, a = self.A.mul, w.carrier
        if w.form == "phi(.a)":
            return self.phi(mul(x, a))
        if w.form == "phi(a.)":
            return self.phi(mul(a, x))
        if w.form == "psi(.a)":
            return self.psi(mul(x, a))
        return self.psi(mul(a, x))

    def same(self, w1: DualFunctional, w2: DualFunctional) -> bool:
        return self.canonical(w1) == self.canonical(w2)

    # -- structure ------------------------------------------------------------

    def product(self, w: DualFunctional, w2: DualFunctional) -> DualFunctional:
        """w phi(. a) = phi(. b) with b = (w S^-1 (x) id)Delta(a).

        For w = phi(. c) this is b = (phi S^-1 (x) id) T2(S(c) (x) a).
        """
        A = self.A
        c, a = self.canonical(w), self.canonical(w2)
        f = self.phi.compose(A.antipode_inv_basis).value
        return DualFunctional("phi(.a)", contract_leg(A.t2(A.S(c), a), 0, f))

    def product_forms(self, w: DualFunctional, w2: DualFunctional) -> dict[str, DualFunctional]:
        """The product w w' through each of the four carrier formulas."""
        A, S, Si = self.A, self.A.S, self.A.S_inv
        phiS = self.phi.compose(A.antipode_basis).value
        phiSi = self.phi.compose(A.antipode_inv_basis).value
        c, c2 = self.canonical(w), self.canonical(w2)
        out = {"1": self.product(w, w2)}
        # (2) w phi(a .) = phi(b .), b = w(S(a1)) a2; phi(S(a1) c) = phi S(S^-1(c) a1)
        a = self.to_form(w2, "phi(a.)").carrier
        out["2"] = DualFunctional("phi(a.)", contract_leg(A.t2(Si(c), a), 0, phiS))
        # (3) psi(. a) w' = psi(. d), d = a1 w'(S(a2)); phi(S(a2) c') = phi S(S^-1(c') a2)
        a = self.to_form(w, "psi(.a)").carrier
        out["3"] = DualFunctional("psi(.a)", contract_leg(A.delta_cut(a, left=(None, Si(c2))), 1, phiS))
        # (4) psi(a .) w' = psi(e .), e = a1 w'(S^-1(a2)); phi(S^-1(a2) c') = phi S^-1(S(c') a2)
        a = self.to_form(w, "psi(a.)").carrier
        out["4"] = DualFunctional("psi(a.)", contract_leg(A.delta_cut(a, left=(None, S(c2))), 1, phiSi))
        return out

    def product_pairing(self, w: DualFunctional, w2: DualFunctional, x: FinSupp) -> Fraction:
        """(w (x) w')Delta(x) = (phi (x) phi)(Delta(x)(c (x) c'))."""
        c, c2 = self.canonical(w), self.canonical(w2)
        t = self.A.delta_cut(x, right=(c, c2))
        return sum((v * self.phi.value(p) * self.phi.value(q) for (p, q), v in t.items()), Fraction(0))

    def unit(self) -> DualFunctional:
        return DualFunctional("phi(.a)", self.xi.scale(1 / self.phi(self.xi)))

    def counit(self, w: DualFunctional) -> Fraction:
        return self.phi(self.canonical(w))

    def antipode(self, w: DualFunctional) -> DualFunctional:
        """S^(phi(. a)) = psi(S^-1(a) .)."""
        return DualFunctional("psi(a.)", self.A.S_inv(self.canonical(w)))

    def coproduct_pair(self, w: DualFunctional, x: FinSupp, y: FinSupp) -> Fraction:
        """<Delta^(w), x (x) y> = w(xy)."""
        return self.pair(w, self.A.mul(x, y))

    def _require_finite(self):
        if not self.A.is_finite:
            raise ValueError("Delta(xi) is not finitely supported for an infinite carrier")

    def coproduct_split(self, w: DualFunctional) -> list[tuple[Fraction, DualFunctional, DualFunctional]]:
        """Delta^(psi(b .)) = psi(S(xi2) . / psi S(xi)) (x) psi(b xi1 .)."""
        self._require_finite()
        A, xi = self.A, self.xi
        b = self.to_form(w, "psi(a.)").carrier
        norm = self.psi(A.S(xi))
        if norm == 0:
            raise NotDiscreteType("psi(S(xi)) = 0")
        out = []
        for (i, j), v in A.delta_cut(xi).items():
            out.append((v / norm, DualFunctional("psi(a.)", A.S(A.e(j))),
                        DualFunctional("psi(a.)", A.mul(b, A.e(i)))))
        return out

    def coproduct_split_phi(self, w: DualFunctional) -> list[tuple[Fraction, DualFunctional, DualFunctional]]:
        """Delta^(phi(. a)) = phi(. S^-1(xi1) a / phi(xi)) (x) phi(. xi2)."""
        self._require_finite()
        A, xi = self.A, self.xi
        a = self.canonical(w)
        norm = self.phi(xi)
        return [(v / norm, DualFunctional("phi(.a)", A.mul(A.S_inv(A.e(i)), a)),
                 DualFunctional("phi(.a)", A.e(j)))
                for (i, j), v in A.delta_cut(xi).items()]

    def split_pair(self, split, x: FinSupp, y: FinSupp) -> Fraction:
        return sum((c * self.pair(w1, x) * self.pair(w2, y) for c, w1, w2 in split), Fraction(0))

    # -- dual integrals ---------------------------------------------------------

    def dual_left_integral(self, w: DualFunctional) -> Fraction:
        """phi^(psi(a .)) = eps(a)."""
        return self.A.counit_of(self.to_form(w, "psi(a.)").carrier)

    def dual_right_integral(self, w: DualFunctional) -> Fraction:
        """psi^(phi(. a)) = eps(a)."""
        return self.A.counit_of(self.canonical(w))

    # -- materialization ------------------------------------------------------

    def coordinates(self, w: DualFunctional) -> list[Fraction]:
        """Coordinates of w in the basis phi(. e_i)."""
        self._require_finite()
        return self.canonical(w).to_dense(_key_order(self.A))

    def covector_matrix(self) -> Matrix:
        """P[i][j] = w_i(e_j)."""
        keys = _key_order(self.A)
        return Matrix.from_rows([[self.pair(self.basis_functional(ki), self.A.e(kj)) for kj in keys]
                                 for ki in keys])

    def materialize(self) -> FinDimHopfQuasigroup:
        """Structure tensors on the basis w_i = phi(. e_i).

        The coproduct comes from the cointegral split and is cross-checked
        against the pairing <Delta^(w), e_i (x) e_j> = w(e_i e_j).
        """
        self._require_finite()
        A, keys = self.A, _key_order(self.A)
        n = len(keys)
        ws = [self.basis_functional(k) for k in keys]
        prods = [[self.coordinates(self.product(ws[i], ws[j])) for j in range(n)] for i in range(n)]
        mult = Tensor3.from_function((n, n, n), lambda i, j, k: prods[i][j][k])
        comult_rows = []
        for k in range(n):
            acc = FinSupp()
            for c, w1, w2 in self.coproduct_split(ws[k]):
                x = FinSupp.from_dense(self.coordinates(w1))
                y = FinSupp.from_dense(self.coordinates(w2))
                acc = acc + x.tensor(y).scale(c)
            comult_rows.append(acc)
        comult = Tensor3.from_function((n, n, n), lambda k, i, j: comult_rows[k][(i, j)])
        # pairing cross-check: P^T D_k P = M_k with M_k[i][j] = w_k(e_i e_j)
        P = self.covector_matrix()
        for k in range(n):
            D = Matrix.from_rows([[comult[k, i, j] for j in range(n)] for i in range(n)])
            M = Matrix.from_rows([[self.coproduct_pair(ws[k], A.e(keys[i]), A.e(keys[j])) for j in range(n)]
                                  for i in range(n)])
            if P.T @ D @ P != M:
                raise AssertionError(f"coproduct split disagrees with the pairing at w_{k}")
        unit = self.coordinates(self.unit())
        counit = [self.counit(w) for w in ws]
        anti = Matrix.from_columns([self.coordinates(self.antipode(w)) for w in ws])
        labels = [f"w[{lab}]" for lab in _labels(A)]
        return FinDimHopfQuasigroup(labels, mult, unit, comult, counit, anti, name=self.name)

    def dual_integral_functional(self) -> Functional:
        """phi^ on the materialized basis."""
        return Functional([self.dual_left_integral(self.basis_functional(k)) for k in _key_order(self.A)],
                          name="phi^")


def integral_dual(A: MHC, phi: Functional | None = None, sample: Sequence | None = None) -> IntegralDual:
    if phi is None:
        phi, _ = mhc.integrals(A, sample)
    return IntegralDual(A, phi, sample=sample)


def pair(D: IntegralDual, w: DualFunctional, x: FinSupp) -> Fraction:
    return D.pair(w, x)


def dual_product(D: IntegralDual, w: DualFunctional, w2: DualFunctional) -> DualFunctional:
    return D.product(w, w2)


def dual_coproduct_pair(D: IntegralDual, w: DualFunctional, x: FinSupp, y: FinSupp) -> Fraction:
    return D.coproduct_pair(w, x, y)


def dual_counit(D: IntegralDual, w: DualFunctional) -> Fraction:
    return D.counit(w)


def dual_antipode(D: IntegralDual, w: DualFunctional) -> DualFunctional:
    return D.antipode(w)


def _tests(D: IntegralDual, sample: Sequence | None) -> list:
    if sample is not None:
        return list(sample)
    if D.sample is not None:
        return list(D.sample)
    if not D.A.is_finite:
        raise mhc.SampleRequired("infinite carrier: pass a sample of basis labels")
    return D.A.basis()


def verify_dual(D: IntegralDual, sample: Sequence | None = None) -> AxiomReport:
    """Carrier-level laws of the dual, checked by pairing against basis elements.

    Works lazily for infinite carriers given a sample.  The split forms of
    the coproduct are only checked on finite carriers.
    """
    A = D.A
    keys = _tests(D, sample)
    rep = AxiomReport(sampled=sample is not None or not A.is_finite)
    xs = [A.e(k) for k in keys]
    ws = [D.basis_functional(k) for k in keys]
    one = D.unit()
    pair_all = lambda w: [D.pair(w, x) for x in xs]  # noqa: E731

    for ka, w in zip(keys, ws):
        base = pair_all(w)
        for form in FORMS:
            v = D.to_form(w, form)
            rep.check("form_conversion", (ka, form), pair_all(v), base)
            rep.check("form_round_trip", (ka, form), D.canonical(D.to_form(v, "phi(.a)")), w.carrier)
        rep.check("unit_left", (ka,), D.canonical(D.product(one, w)), w.carrier)
        rep.check("unit_right", (ka,), D.canonical(D.product(w, one)), w.carrier)
        Sw = D.antipode(w)
        rep.check("antipode_pointwise", (ka,), pair_all(Sw), [D.pair(w, A.S(x)) for x in xs])
        rep.check("counit_is_evaluation_at_one", (ka,), D.counit(w),
                  D.pair(w, A.one_element) if isinstance(A, FinDimMHC) else D.phi(w.carrier))
        for kb, w2 in zip(keys, ws):
            p = D.product(w, w2)
            for kx, x in zip(keys, xs):
                rep.check("product_pairing", (ka, kb, kx), D.pair(p, x), D.product_pairing(w, w2, x))
            for label, q in D.product_forms(w, w2).items():
                rep.check(f"product_formula_{label}", (ka, kb), D.canonical(q), D.canonical(p))
            rep.check("counit_multiplicative", (ka, kb), D.counit(p), D.counit(w) * D.counit(w2))
            rep.check("antipode_antimultiplicative", (ka, kb),
                      D.canonical(D.antipode(p)), D.canonical(D.product(D.antipode(w2), D.antipode(w))))
            # faithfulness witness: phi^(w1 w2) = w2(S^-1(a)) for w1 = psi(a .)
            a = D.to_form(w, "psi(a.)").carrier
            rep.check("dual_integral_faithful_witness", (ka, kb),
                      D.dual_left_integral(D.product(w, w2)), D.pair(w2, A.S_inv(a)))
            for kx, x in zip(keys, xs):
                for ky, y in zip(keys, xs):
                    # <Delta^(w w'), x (x) y> = <w (x) w', Delta(x)Delta(y)>
                    lhs = D.coproduct_pair(p, x, y)
                    t = A.delta_cut(y, right=(D.canonical(w), D.canonical(w2)))
                    rhs = Fraction(0)
                    for (i, j), v in t.items():
                        s = A.delta_cut(x, right=(A.e(i), A.e(j)))
                        rhs += v * sum((c * D.phi.value(r) * D.phi.value(s_)
                                        for (r, s_), c in s.items()), Fraction(0))
                    rep.check("coproduct_multiplicative", (ka, kb, kx, ky), lhs, rhs)
        rep.check("dual_right_integral_is_phi_hat_S", (ka,),
                  D.dual_right_integral(w), D.dual_left_integral(D.antipode(w)))

    if A.is_finite:
        for ka, w in zip(keys, ws):
            split = D.coproduct_split(w)
            split2 = D.coproduct_split_phi(w)
            for kx, x in zip(keys, xs):
                for ky, y in zip(keys, xs):
                    target = D.coproduct_pair(w, x, y)
                    rep.check("coproduct_split_psi", (ka, kx, ky), D.split_pair(split, x, y), target)
                    rep.check("coproduct_split_phi", (ka, kx, ky), D.split_pair(split2, x, y), target)
                    for kz, z in zip(keys, xs):
                        rep.check("coproduct_coassociative", (ka, kx, ky, kz),
                                  D.pair(w, A.mul(A.mul(x, y), z)), D.pair(w, A.mul(x, A.mul(y, z))))
            # counit laws of Delta^
            left = FinSupp()
            right = FinSupp()
            for c, w1, w2 in split2:
                left = left + D.canonical(w1).scale(c * D.counit(w2))
            for c, w1, w2 in split:
                right = right + D.canonical(w2).scale(c * D.counit(w1))
            rep.check("dual_counit_right", (ka,), left, w.carrier)
            rep.check("dual_counit_left", (ka,), right, w.carrier)
            # (id (x) phi^)Delta^(w) = phi^(w) 1
            acc = FinSupp()
            for c, w1, w2 in split:
                acc = acc + D.canonical(w1).scale(c * D.dual_left_integral(w2))
            rep.check("dual_left_integral", (ka,), acc, D.canonical(one).scale(D.dual_left_integral(w)))
    return rep


def nonassociativity_witness(D: IntegralDual, keys: Sequence | None = None) -> tuple | None:
    """First (u, v, t) with (w_u w_v) w_t != w_u (w_v w_t)."""
    keys = _tests(D, keys)
    ws = {k: D.basis_functional(k) for k in keys}
    for a in keys:
        for b in keys:
            ab = D.product(ws[a], ws[b])
            for c in keys:
                if not D.same(D.product(ab, ws[c]), D.product(ws[a], D.product(ws[b], ws[c]))):
                    return (a, b, c)
    return None


def verify_materialized(D: IntegralDual) -> tuple[FinDimHopfQuasigroup, AxiomReport]:
    """Materialize, then check it as a Hopf quasigroup with its dual integral."""
    H = D.materialize()
    rep = hopf.verify_hopf_quasigroup(H)
    phi_hat = D.dual_integral_functional()
    rep.check("dual_integral_is_left_integral", (), hopf.is_integral(H, phi_hat, "left"), True)
    rep.check("dual_integral_faithful", (), hopf.is_faithful(H, phi_hat), True)
    rep.check("dual_integral_space_dim", (), len(hopf.integral_space(H, "left")), 1)
    rep.check("dual_coassociative", (), hopf.coassociativity_probe(H), None)
    keys = _key_order(D.A)
    ws = [D.basis_functional(k) for k in keys]
    # lazy and materialized evaluations agree
    for i, w in enumerate(ws):
        rep.check("lazy_counit", (i,), D.counit(w), H.counit[i])
        rep.check("lazy_antipode", (i,), D.coordinates(D.antipode(w)), list(H.antipode.col(i)))
        for j, w2 in enumerate(ws):
            rep.check("lazy_product", (i, j), FinSupp.from_dense(D.coordinates(D.product(w, w2))),
                      H.mul_basis(i, j))
    rep.probes["nonassoc_witness"] = hopf.associativity_probe(H)
    return H, rep


def y_conditions(H: FiniteStructure, phi: Functional) -> AxiomReport:
    """phi(. H) = phi(H .) and closure of phi((. h)h'), phi(h'(h .)) in phi(. H)."""
    n = H.dim
    rep = AxiomReport()
    right_forms = [[phi(H.mul(H.e(j), H.e(i))) for j in range(n)] for i in range(n)]
    left_forms = [[phi(H.mul(H.e(i), H.e(j))) for j in range(n)] for i in range(n)]
    r = rank(Matrix.from_rows(right_forms))
    rep.check("forms_span_equal", (), (r, rank(Matrix.from_rows(right_forms + left_forms))), (r, r))
    base = Matrix.from_rows(right_forms)
    for h in range(n):
        for h2 in range(n):
            f1 = [phi(H.mul(H.mul(H.e(j), H.e(h)), H.e(h2))) for j in range(n)]
            f2 = [phi(H.mul(H.e(h2), H.mul(H.e(h), H.e(j)))) for j in range(n)]
            rep.check("closure_right", (h, h2), solve(base.T, f1) is not None, True)
            rep.check("closure_left", (h, h2), solve(base.T, f2) is not None, True)
    return rep


# -- biduality ---------------------------------------------------------------------

@dataclass
class Gamma:
    """Gamma(x)(f) = f(x) as a linear bijection onto a materialized bidual."""

    direction: str
    source: FiniteStructure
    target: FiniteStructure
    matrix: Matrix          # column j = coordinates of Gamma(e_j)
    inverse_matrix: Matrix
    carriers: list          # carrier form of Gamma(e_j) in the bidual
    report: AxiomReport

    def forward(self, x: FinSupp) -> FinSupp:
        return FinSupp.from_dense(self.matrix @ x.to_dense(range(self.source.dim)))

    def inverse(self, y: FinSupp) -> FinSupp:
        return FinSupp.from_dense(self.inverse_matrix @ y.to_dense(range(self.target.dim)))


def _invert_by_solve(m: Matrix) -> Matrix:
    n = m.rows
    cols = []
    for j in range(n):
        x = solve(m, [ONE if i == j else 0 for i in range(n)])
        if x is None:
            raise NotFaithful("Gamma is not bijective")
        cols.append(x)
    return Matrix.from_columns(cols)


def verify_isomorphism(src: FiniteStructure, dst: FiniteStructure, m: Matrix,
                       m_inv: Matrix | None = None, rep: AxiomReport | None = None) -> AxiomReport:
    """Structure-preserving check of the linear map with matrix m on all basis tuples."""
    rep = rep if rep is not None else AxiomReport()
    n = src.dim
    r = range(n)
    g = lambda x: FinSupp.from_dense(m @ x.to_dense(r))  # noqa: E731
    g2 = lambda t: FinSupp(  # noqa: E731
        ((a, b), v * m[a, i] * m[b, j]) for (i, j), v in t.items() for a in r for b in r)
    rep.check("dimension", (), dst.dim, n)
    if m_inv is not None:
        rep.check("forward_inverse", (), (m @ m_inv).is_identity(), True)
        rep.check("inverse_forward", (), (m_inv @ m).is_identity(), True)
    rep.check("unit", (), g(src.one), dst.one)
    for i in r:
        x = src.e(i)
        rep.check("counit", (i,), dst.counit_of(g(x)), src.counit_of(x))
        rep.check("antipode", (i,), g(src.S(x)), dst.S(g(x)))
        rep.check("comultiplicative", (i,), g2(src.comul(x)), dst.comul(g(x)))
        for j in r:
            y = src.e(j)
            rep.check("multiplicative", (i, j), g(src.mul(x, y)), dst.mul(g(x), g(y)))
    return rep


def _right_integral_from_dual_rule(h: FiniteStructure, phi: Functional, A: FinDimMHC) -> Functional:
    """psi_A(phi(. k)) = eps(k); an element of A is a covector on h."""
    n = h.dim
    G = h.gram(phi)           # phi(. e_k) has covector column k of G
    vals = []
    for i in range(n):
        # e_i^* = phi(. k) with G k = e_i
        k = solve(G, [ONE if t == i else 0 for t in range(n)])
        if k is None:
            raise NotFaithful("phi is not faithful")
        vals.append(h.counit_of(FinSupp.from_dense(k)))
    return Functional(vals, name="psi_A")


def gamma_hq(h: FinDimHopfQuasigroup, phi: Functional) -> Gamma:
    """Biduality for a finite Hopf quasigroup with faithful left integral phi.

    Gamma(h) = psi^(. f) with f = phi(. S(h)), psi^ being the right
    integral on the dual determined by psi^(phi(. k)) = eps(k).
    """
    if not hopf.is_faithful(h, phi):
        raise NotFaithful("phi is not faithful")
    n = h.dim
    A = hopf.dual_to_mhc(h, phi)
    rep = mhc.verify_mhc(A, probe=False)
    psi_A = _right_integral_from_dual_rule(h, phi, A)
    phi_A = psi_A.compose(A.antipode_inv_basis, name="phi_A")
    rep.check("bidual_right_integral", (), hopf.is_integral(A, psi_A, "right"), True)
    rep.check("bidual_left_integral", (), hopf.is_integral(A, phi_A, "left"), True)
    D = IntegralDual(A, phi_A, psi_A)
    B = D.materialize()
    carriers = []
    cols = []
    for j in range(n):
        # f = phi(. S(e_j)) as an element of A = h^* (dual basis coordinates)
        Sj = h.S(h.e(j))
        f = FinSupp.from_dense([phi(h.mul(h.e(i), Sj)) for i in range(n)])
        gj = DualFunctional("psi(.a)", f)
        carriers.append(gj)
        for i in range(n):
            # Gamma(e_j)(f') = f'(e_j) for f' = e_i^*
            rep.check("gamma_is_evaluation", (j, i), D.pair(gj, A.e(i)), ONE if i == j else 0)
        cols.append(D.coordinates(gj))
    m = Matrix.from_columns(cols)
    m_inv = _invert_by_solve(m)
    verify_isomorphism(h, B, m, m_inv, rep)
    return Gamma("hq", h, B, m, m_inv, carriers, rep)


def gamma_mhc(A: MHC, phi: Functional | None = None) -> Gamma:
    """Biduality for a finite discrete MHC.

    The bidual is dual_to_mhc(A^, phi^) on the dual basis of the
    materialized A^; Gamma(a) has coordinates w_i(a).  Its carrier form
    phi^(. c) is recovered by solving phi^(w c) = w(a).
    """
    if isinstance(A, DiscreteMHC):
        A = A.to_findim()
    if phi is None:
        phi, _ = mhc.integrals(A)
    n = A.dim
    D = IntegralDual(A, phi)
    H = D.materialize()
    rep = hopf.verify_hopf_quasigroup(H)
    phi_hat = D.dual_integral_functional()
    B = hopf.dual_to_mhc(H, phi_hat)
    rep.merge(mhc.verify_mhc(B, probe=False))
    P = D.covector_matrix()          # P[i][j] = w_i(e_j)
    m = Matrix.from_columns([P.col(j) for j in range(n)])
    m_inv = _invert_by_solve(m)
    verify_isomorphism(A, B, m, m_inv, rep)
    G = H.gram(phi_hat)              # G[i][k] = phi^(w_i w_k)
    carriers = []
    for j in range(n):
        c = solve(G, list(P.col(j)))
        if c is None:
            raise NotFaithful("phi^ is not faithful")
        carriers.append(FinSupp.from_dense(c))
        for i in range(n):
            rep.check("gamma_carrier", (j, i), phi_hat(H.mul(H.e(i), carriers[-1])), P[i, j])
    return Gamma("mhc", A, B, m, m_inv, carriers, rep)


def group_loop_identification(D: IntegralDual, kG: FinDimHopfQuasigroup) -> AxiomReport:
    """Materialized dual of k(G) equals kG under w_u <-> u (same basis order)."""
    H = D.materialize()
    rep = AxiomReport()
    for attr in ("mult", "comult", "antipode"):
        rep.check(f"same_{attr}", (), getattr(H, attr), getattr(kG, attr))
    rep.check("same_unit", (), H.unit, kG.unit)
    rep.check("same_counit", (), H.counit, kG.counit)
    return rep
