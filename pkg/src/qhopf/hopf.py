"""Finite-dimensional Hopf quasigroups as structure tensors.

Conventions, for a basis e_0..e_{n-1}:

* ``mult[i, j, k]``   : e_i e_j = sum_k mult[i, j, k] e_k
* ``comult[k, i, j]`` : Delta(e_k) = sum_ij comult[k, i, j] e_i (x) e_j
* ``antipode[k, i]``  : S(e_i) = sum_k antipode[k, i] e_k   (columns are images)

Axioms are checked on basis elements only; bilinearity does the rest.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Sequence

from .errors import NotFaithful, NotIntegral
from .linalg import (ONE, ZERO, FinSupp, Matrix, Tensor3, apply_leg, as_scalar, bilinear,
                     flip, format_scalar, kernel_basis, rank)
from .quasigroup import FiniteLoop, associativity_witness
from .report import AxiomReport


class Functional:
    """Linear functional given by its values on basis keys.

    Dense functionals (finite bases) keep ``coefficients``; functionals on
    infinite carriers keep only the value callable.
    """

    def __init__(self, values: Sequence | Callable, name: str = "f"):
        if callable(values):
            self._fn = values
            self.coefficients = None
        else:
            self.coefficients = tuple(as_scalar(v) for v in values)
            self._fn = self.coefficients.__getitem__
        self.name = name

    def value(self, key) -> Fraction:
        return as_scalar(self._fn(key))

    def __call__(self, x: FinSupp) -> Fraction:
        return x.pair(self._fn)

    def scale(self, c) -> "Functional":
        c = as_scalar(c)
        if self.coefficients is not None:
            return Functional([c * v for v in self.coefficients], self.name)
        fn = self._fn
        return Functional(lambda k: c * as_scalar(fn(k)), self.name)

    def compose(self, linear_map: Callable[[object], FinSupp], name: str | None = None) -> "Functional":
        """The functional x -> f(L(x)), with L given on basis keys."""
        fn = self._fn
        values = lambda k: linear_map(k).pair(fn)  # noqa: E731
        if self.coefficients is not None:
            return Functional([values(k) for k in range(len(self.coefficients))], name or self.name)
        return Functional(values, name or self.name)

    def is_zero(self) -> bool:
        return self.coefficients is not None and not any(self.coefficients)

    def __eq__(self, other) -> bool:
        if isinstance(other, Functional) and self.coefficients is not None:
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        if self.coefficients is None:
            return f"Functional({self.name}, lazy)"
        return f"Functional({self.name}: [{', '.join(format_scalar(c) for c in self.coefficients)}])"


class FiniteStructure:
    """Algebra + coalgebra + antipode on a finite basis, stored as tensors."""

    kind = "structure"

    def __init__(self, basis_labels: Sequence[str], mult: Tensor3, unit: Sequence,
                 comult: Tensor3, counit: Sequence, antipode: Matrix, name: str = ""):
        n = len(basis_labels)
        if mult.dims != (n, n, n) or comult.dims != (n, n, n):
            raise ValueError("tensor dimensions do not match the basis")
        if antipode.rows != n or antipode.cols != n or len(unit) != n or len(counit) != n:
            raise ValueError("unit/counit/antipode dimensions do not match the basis")
        self.dim = n
        self.basis_labels = tuple(str(x) for x in basis_labels)
        self.mult = mult
        self.unit = tuple(as_scalar(x) for x in unit)
        self.comult = comult
        self.counit = tuple(as_scalar(x) for x in counit)
        self.antipode = antipode
        self.name = name
        r = range(n)
        self._mul = {(i, j): FinSupp((k, mult[i, j, k]) for k in r) for i in r for j in r}
        self._comul = [FinSupp(((i, j), comult[k, i, j]) for i in r for j in r) for k in r]
        self._S = [FinSupp.from_dense(antipode.col(i)) for i in r]
        self._unit = FinSupp.from_dense(self.unit)
        try:
            inv = antipode.inverse()
        except ValueError:
            self.antipode_inverse = None
            self._Sinv = None
        else:
            self.antipode_inverse = inv
            self._Sinv = [FinSupp.from_dense(inv.col(i)) for i in r]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r}, dim={self.dim})"

    # basic operations on sparse elements (keys = basis indices)
    def basis(self) -> list[int]:
        return list(range(self.dim))

    def e(self, i: int) -> FinSupp:
        return FinSupp.basis(i)

    @property
    def one(self) -> FinSupp:
        return self._unit

    def index(self, label: str) -> int:
        return self.basis_labels.index(label)

    def mul_basis(self, i: int, j: int) -> FinSupp:
        return self._mul[(i, j)]

    def mul(self, a: FinSupp, b: FinSupp) -> FinSupp:
        return bilinear(a, b, self.mul_basis)

    def comul_basis(self, k: int) -> FinSupp:
        return self._comul[k]

    def comul(self, a: FinSupp) -> FinSupp:
        return a.linear_map(self.comul_basis)

    def counit_of(self, a: FinSupp) -> Fraction:
        return a.pair(self.counit.__getitem__)

    def antipode_basis(self, i: int) -> FinSupp:
        return self._S[i]

    def S(self, a: FinSupp) -> FinSupp:
        return a.linear_map(self.antipode_basis)

    def antipode_inv_basis(self, i: int) -> FinSupp:
        if self._Sinv is None:
            raise ValueError("antipode is not invertible")
        return self._Sinv[i]

    def S_inv(self, a: FinSupp) -> FinSupp:
        return a.linear_map(self.antipode_inv_basis)

    def mul_tensor(self, x: FinSupp, y: FinSupp) -> FinSupp:
        """Componentwise product in the tensor power."""
        def on_basis(k1, k2):
            out = FinSupp({(): 1})
            for a, b in zip(k1, k2):
                out = out.tensor(self.mul_basis(a, b))
            return out
        return bilinear(x, y, on_basis)

    def comul2(self, a: FinSupp, assoc: str) -> FinSupp:
        """(Delta (x) id) Delta  (assoc='left') or (id (x) Delta) Delta (assoc='right')."""
        d = self.comul(a)
        leg = 0 if assoc == "left" else 1
        acc = FinSupp()
        for (i, j), v in d.items():
            inner = self.comul_basis(i if leg == 0 else j)
            if leg == 0:
                acc = acc + inner.tensor(FinSupp.basis(j)).scale(v)
            else:
                acc = acc + FinSupp.basis(i).tensor(inner).scale(v)
        return acc

    def gram(self, f: Functional) -> Matrix:
        """G[i][j] = f(e_i e_j)."""
        r = range(self.dim)
        return Matrix.from_rows([[f(self.mul_basis(i, j)) for j in r] for i in r])

    def to_dict(self) -> dict:
        fmt = lambda seq: [format_scalar(x) for x in seq]  # noqa: E731
        return {
            "kind": self.kind,
            "name": self.name,
            "basis": list(self.basis_labels),
            "mult": [[fmt(r) for r in m] for m in self.mult.to_nested()],
            "unit": fmt(self.unit),
            "comult": [[fmt(r) for r in m] for m in self.comult.to_nested()],
            "counit": fmt(self.counit),
            "antipode": [fmt(r) for r in self.antipode.to_rows()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_dict(cls, data: dict):
        nested = lambda x: Tensor3.from_nested([[[Fraction(v) for v in r] for r in m] for m in x])  # noqa: E731
        return cls(data["basis"], nested(data["mult"]), [Fraction(v) for v in data["unit"]],
                   nested(data["comult"]), [Fraction(v) for v in data["counit"]],
                   Matrix.from_rows([[Fraction(v) for v in r] for r in data["antipode"]]),
                   name=data.get("name", ""))

    def relabel(self, perm: Sequence[int]) -> "FiniteStructure":
        """Structure transported along e_i -> e'_{perm[i]} (basis permutation)."""
        n = self.dim
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        labels = [self.basis_labels[inv[i]] for i in range(n)]
        mult = Tensor3.from_function((n, n, n), lambda i, j, k: self.mult[inv[i], inv[j], inv[k]])
        comult = Tensor3.from_function((n, n, n), lambda k, i, j: self.comult[inv[k], inv[i], inv[j]])
        anti = Matrix(n, n, [self.antipode[inv[k], inv[i]] for k in range(n) for i in range(n)])
        return type(self)(labels, mult, [self.unit[inv[i]] for i in range(n)], comult,
                          [self.counit[inv[i]] for i in range(n)], anti, name=self.name)


class FinDimHopfQuasigroup(FiniteStructure):
    """Unital (possibly nonassociative) algebra with coassociative coproduct
    and an antipode satisfying the four quasi-antipode identities."""

    kind = "hopf_quasigroup"


def group_algebra(q: FiniteLoop) -> FinDimHopfQuasigroup:
    """kG: basis = loop elements, Delta(u) = u (x) u, eps(u) = 1, S(u) = u^-1.

    The loop is expected to be IP; for other loops S(u) is the right inverse
    and the verifier reports the failures.
    """
    n = q.order
    mult = Tensor3.from_function((n, n, n), lambda i, j, k: int(q.product(i, j) == k))
    comult = Tensor3.from_function((n, n, n), lambda k, i, j: int(i == j == k))
    unit = [int(i == q.identity) for i in range(n)]
    anti = Matrix(n, n, [int(q.inverse(i) == k) for k in range(n) for i in range(n)])
    return FinDimHopfQuasigroup(q.labels, mult, unit, comult, [1] * n, anti, name=f"k{q.name}")


# -- verification -------------------------------------------------------------

def _eq_unit_check(rep: AxiomReport, h: FiniteStructure, basis: Sequence[int]) -> None:
    one = h.one
    for i in basis:
        ei = h.e(i)
        rep.check("unit_left", (i,), h.mul(one, ei), ei)
        rep.check("unit_right", (i,), h.mul(ei, one), ei)


def _counit_checks(rep: AxiomReport, h: FiniteStructure, basis: Sequence[int]) -> None:
    for i in basis:
        d = h.comul_basis(i)
        left = d.linear_map(lambda k: FinSupp.basis(k[1], h.counit[k[0]]))
        right = d.linear_map(lambda k: FinSupp.basis(k[0], h.counit[k[1]]))
        rep.check("counit_left", (i,), left, h.e(i))
        rep.check("counit_right", (i,), right, h.e(i))


def verify_hopf_quasigroup(h: FiniteStructure, sample: Sequence[int] | None = None) -> AxiomReport:
    """Exhaustive check of the Hopf-quasigroup laws on basis tuples.

    Checked: unit and counit laws, coassociativity, Delta and eps
    multiplicative and unital, S antimultiplicative and anticomultiplicative,
    S invertible, and the four quasi-antipode identities

        S(h1)(h2 g) = eps(h) g = h1(S(h2) g),
        (g S(h1)) h2 = eps(h) g = (g h1) S(h2).

    The first and last are the forms m(S (x) id)(Delta(h)(1 (x) g)) and
    m(id (x) S)((g (x) 1)Delta(h)).  Associativity of the product is only
    probed, never required.
    """
    basis = list(sample) if sample is not None else h.basis()
    rep = AxiomReport(sampled=sample is not None)
    _eq_unit_check(rep, h, basis)
    _counit_checks(rep, h, basis)
    one = h.one
    rep.check("comult_unital", (), h.comul(one), one.tensor(one))
    rep.check("counit_unital", (), h.counit_of(one), ONE)
    rep.check("antipode_invertible", (), h.antipode_inverse is not None, True)
    for i in basis:
        ei = h.e(i)
        rep.check("coassociative", (i,), h.comul2(ei, "left"), h.comul2(ei, "right"))
        rep.check("antipode_anticomultiplicative", (i,), h.comul(h.S(ei)),
                  flip(apply_leg(apply_leg(h.comul(ei), 0, h.antipode_basis), 1, h.antipode_basis)))
    for i in basis:
        ei = h.e(i)
        di = h.comul(ei)
        epsi = h.counit[i]
        for j in basis:
            ej = h.e(j)
            eij = h.mul_basis(i, j)
            rep.check("comult_multiplicative", (i, j), h.comul(eij), h.mul_tensor(di, h.comul(ej)))
            rep.check("counit_multiplicative", (i, j), h.counit_of(eij), epsi * h.counit[j])
            rep.check("antipode_antimultiplicative", (i, j), h.S(eij), h.mul(h.S(ej), h.S(ei)))
            target = ej.scale(epsi)
            q1 = q2 = q3 = q4 = FinSupp()
            for (a, b), v in di.items():
                Sa, Sb = h.antipode_basis(a), h.antipode_basis(b)
                ea, eb = h.e(a), h.e(b)
                q1 = q1 + h.mul(Sa, h.mul(eb, ej)).scale(v)
                q2 = q2 + h.mul(ea, h.mul(Sb, ej)).scale(v)
                q3 = q3 + h.mul(h.mul(ej, Sa), eb).scale(v)
                q4 = q4 + h.mul(h.mul(ej, ea), Sb).scale(v)
            rep.check("quasi_antipode_1", (i, j), q1, target)
            rep.check("quasi_antipode_2", (i, j), q2, target)
            rep.check("quasi_antipode_3", (i, j), q3, target)
            rep.check("quasi_antipode_4", (i, j), q4, target)
    rep.probes["associativity_witness"] = associativity_probe(h)
    return rep


def associativity_probe(h: FiniteStructure) -> tuple | None:
    """First basis triple with (e_i e_j) e_k != e_i (e_j e_k), or None."""
    for i in range(h.dim):
        for j in range(h.dim):
            eij = h.mul_basis(i, j)
            for k in range(h.dim):
                if h.mul(eij, h.e(k)) != h.mul(h.e(i), h.mul_basis(j, k)):
                    return (i, j, k)
    return None


def coassociativity_probe(h: FiniteStructure) -> int | None:
    for i in range(h.dim):
        if h.comul2(h.e(i), "left") != h.comul2(h.e(i), "right"):
            return i
    return None


# -- integrals and cointegrals -------------------------------------------------

def _normalize_first(v: Sequence[Fraction]) -> list[Fraction]:
    lead = next((x for x in v if x), ONE)
    return [x / lead for x in v]


def integral_system(h: FiniteStructure, side: str) -> Matrix:
    """Linear system whose kernel is the space of left (right) integrals.

    left:  (id (x) phi) Delta(e_a) = phi(e_a) 1
    right: (phi (x) id) Delta(e_a) = phi(e_a) 1
    """
    n = h.dim
    rows = []
    for a in range(n):
        for k in range(n):
            row = [ZERO] * n
            for j in range(n):
                row[j] += h.comult[a, k, j] if side == "left" else h.comult[a, j, k]
            row[a] -= h.unit[k]
            rows.append(row)
    return Matrix.from_rows(rows)


def integral_space(h: FiniteStructure, side: str = "left") -> list[Functional]:
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    return [Functional(_normalize_first(v), name=f"{side}_integral")
            for v in kernel_basis(integral_system(h, side))]


def is_integral(h: FiniteStructure, f: Functional, side: str = "left") -> bool:
    if f.coefficients is None or f.is_zero():
        return False
    return all(x == 0 for x in integral_system(h, side) @ list(f.coefficients))


def cointegral_space(h: FiniteStructure, side: str = "left") -> list[FinSupp]:
    """Basis of {xi : a xi = eps(a) xi} (left) or {eta : eta a = eps(a) eta} (right)."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    n = h.dim
    rows = []
    for a in range(n):
        for k in range(n):
            row = [ZERO] * n
            for j in range(n):
                row[j] += h.mult[a, j, k] if side == "left" else h.mult[j, a, k]
            row[k] -= h.counit[a]
            rows.append(row)
    return [FinSupp.from_dense(_normalize_first(v)) for v in kernel_basis(Matrix.from_rows(rows))]


def is_faithful(h: FiniteStructure, f: Functional) -> bool:
    g = h.gram(f)
    # f(e_j e_i) is the transpose; both sides are required
    return rank(g) == h.dim and rank(g.T) == h.dim


def normalized_integral(h: FiniteStructure, side: str = "left") -> Functional | None:
    """The integral scaled so that phi(xi) = 1 for the left cointegral xi, if any."""
    space = integral_space(h, side)
    if not space:
        return None
    phi = space[0]
    cos = cointegral_space(h, "left")
    if cos:
        val = phi(cos[0])
        if val:
            phi = phi.scale(1 / val)
    return phi


# -- dual of a Hopf quasigroup ---------------------------------------------------

def dual_to_mhc(h: FiniteStructure, phi: Functional):
    """The dual multiplier Hopf coquasigroup on the coordinate dual basis.

    Product dual to Delta, coproduct dual to m, counit = evaluation at 1,
    antipode = transpose of S.  Dual basis vectors keep the labels of ``h``.
    """
    from .mhc import FinDimMHC

    if not is_integral(h, phi, "left"):
        raise NotIntegral("functional is not a left integral")
    if not is_faithful(h, phi):
        raise NotFaithful("integral is not faithful")
    n = h.dim
    mult = Tensor3.from_function((n, n, n), lambda i, j, k: h.comult[k, i, j])
    comult = Tensor3.from_function((n, n, n), lambda k, i, j: h.mult[i, j, k])
    out = FinDimMHC(h.basis_labels, mult, list(h.counit), comult, list(h.unit), h.antipode.T,
                    name=f"dual({h.name})")
    return out
