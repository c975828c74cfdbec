"""Built-in instances, negative controls and the full verification suite."""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import duality, hopf, mhc
from .hopf import FiniteStructure, FinDimHopfQuasigroup
from .linalg import FinSupp, Matrix
from .mhc import DiscreteMHC, FinDimMHC
from .quasigroup import (FiniteLoop, associativity_witness, chein_double, check_ip, cyclic_group,
                         from_cayley_table, symmetric_group)
from .report import AxiomReport, render

EXHAUSTIVE_LIMIT = 24


def instance_id(name: str) -> str:
    """'M(S3,2)' -> 'M_S3_2'."""
    return name.replace("(", "_").replace(",", "_").replace(")", "")


def catalog() -> dict[str, FiniteLoop]:
    loops = [cyclic_group(n) for n in range(2, 9)]
    loops += [symmetric_group(3), chein_double(cyclic_group(3)), chein_double(symmetric_group(3))]
    return {instance_id(q.name): q for q in loops}


def non_ip_loop() -> FiniteLoop:
    """Order-5 loop without the inverse property."""
    rows = ["01234", "10342", "23401", "34120", "42013"]
    return from_cayley_table(list("01234"), [[int(c) for c in r] for r in rows], "0", name="L5")


def corrupted_antipode_hq(q: FiniteLoop) -> FinDimHopfQuasigroup:
    """kG with S replaced by the identity map."""
    h = hopf.group_algebra(q)
    return FinDimHopfQuasigroup(h.basis_labels, h.mult, h.unit, h.comult, h.counit,
                                Matrix.identity(h.dim), name=f"{h.name}[S=id]")


class _IdentityAntipode(DiscreteMHC):
    def antipode_basis(self, u):
        return FinSupp.basis(u)

    antipode_inv_basis = antipode_basis


def corrupted_antipode_mhc(q: FiniteLoop) -> DiscreteMHC:
    """k(G) with S replaced by the identity map."""
    A = _IdentityAntipode(q)
    A.name = f"k({q.name})[S=id]"
    return A


# -- run reports ---------------------------------------------------------------

@dataclass
class Check:
    id: str
    status: str
    witness: Any = None

    def to_dict(self) -> dict:
        return {"id": self.id, "status": self.status, "witness": self.witness}


@dataclass
class RunReport:
    instance: str
    checks: list[Check] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def add_report(self, prefix: str, rep: AxiomReport) -> None:
        """One check per axiom, in sorted order; a failure carries its first witness."""
        for axiom in sorted(rep.checked):
            v = rep.first(axiom)
            self.checks.append(Check(f"{prefix}.{axiom}", "fail" if v else "pass",
                                     v.to_dict() if v else None))

    def add(self, cid: str, ok: bool, witness: Any = None) -> None:
        self.checks.append(Check(cid, "pass" if ok else "fail", None if ok else render(witness)))

    def skip(self, cid: str, reason: str) -> None:
        self.checks.append(Check(cid, "skipped", reason))

    def to_dict(self) -> dict:
        # timings are left out so that reports are byte-identical across runs
        stats = {k: render(self.stats.get(k)) for k in
                 ("integral_dim", "tau", "delta_is_unit", "nonassoc_witness")}
        if "sample" in self.stats:
            stats["sample"] = self.stats["sample"]
        return {"instance": self.instance, "checks": [c.to_dict() for c in self.checks], "stats": stats}

    def summary(self) -> str:
        failed = [c for c in self.checks if c.status == "fail"]
        skipped = sum(c.status == "skipped" for c in self.checks)
        head = f"{self.instance}: {'PASS' if not failed else 'FAIL'} ({len(self.checks)} checks"
        head += f", {skipped} skipped)" if skipped else ")"
        lines = [head]
        for c in failed:
            lines.append(f"  FAIL {c.id}: {json.dumps(c.witness, sort_keys=True)}")
        for k in ("integral_dim", "tau", "delta_is_unit", "nonassoc_witness"):
            if k in self.stats:
                lines.append(f"  {k} = {render(self.stats[k])}")
        return "\n".join(lines)


def _timed(report: RunReport, key: str, fn: Callable):
    t = time.perf_counter()
    out = fn()
    report.timings[key] = time.perf_counter() - t
    return out


def _labelled(q: FiniteLoop, w):
    return None if w is None else [q.label(i) for i in w]


def choose_sample(keys: Sequence, n: int | None, seed: int) -> list | None:
    """None means exhaustive."""
    if n is None or n >= len(keys):
        return None
    return sorted(random.Random(seed).sample(list(keys), n))


# -- suites ----------------------------------------------------------------------

def loop_suite(q: FiniteLoop, report: RunReport, sample=None) -> None:
    report.add_report("loop", check_ip(q, sample))
    report.stats["nonassoc_witness"] = _labelled(q, associativity_witness(q))


def hq_suite(h: FiniteStructure, report: RunReport, sample=None) -> Any:
    rep = _timed(report, "hq", lambda: hopf.verify_hopf_quasigroup(h, sample))
    report.add_report("hq", rep)
    dims = [len(hopf.integral_space(h, s)) for s in ("left", "right")]
    report.add("hq.integral_uniqueness", dims == [1, 1], {"left": dims[0], "right": dims[1]})
    phi = hopf.normalized_integral(h)
    if phi is not None:
        report.add("hq.integral_faithful", hopf.is_faithful(h, phi))
    report.stats.setdefault("integral_dim", dims[0])
    report.stats.setdefault("nonassoc_witness", rep.probes.get("associativity_witness"))
    return phi


def mhc_suite(A, report: RunReport, sample=None, modular: bool = True) -> None:
    """Axioms, integrals, integral identities and modular data of a discrete MHC."""
    rep = _timed(report, "mhc", lambda: mhc.verify_mhc(A, sample))
    report.add_report("mhc", rep)
    finite = A.to_findim() if isinstance(A, DiscreteMHC) and A.is_finite else A
    if isinstance(finite, FinDimMHC):
        dims = [len(hopf.integral_space(finite, s)) for s in ("left", "right")]
        report.add("mhc.integral_uniqueness", dims == [1, 1], {"left": dims[0], "right": dims[1]})
        report.stats["integral_dim"] = dims[0]
    phi, psi = mhc.integrals(A, sample)
    xi = mhc.cointegral(A, phi, sample)
    report.add("mhc.cointegral_pairs_nonzero", phi(xi) != 0)
    report.add_report("mhc", mhc.verify_integral_identities(A, phi, psi, sample))
    if not modular:
        return
    md = mhc.modular_data(A, phi, psi, sample)
    report.add_report("modular", mhc.verify_modular_properties(A, phi, psi, md, sample))
    keys = sample if sample is not None else A.basis()
    tests = [A.e(k) for k in keys]
    report.stats["tau"] = md.tau
    report.stats["delta_is_unit"] = md.delta.equals(A.unit_multiplier, tests)
    # all defining equations are homogeneous in phi
    md2 = mhc.modular_data(A, phi.scale(2), psi.scale(2), sample)
    same = (md2.tau == md.tau and md2.delta.equals(md.delta, tests)
            and all(md2.sigma(b) == md.sigma(b) and md2.sigma_prime(b) == md.sigma_prime(b) for b in tests))
    report.add("modular.weighted_integral_invariance", same)
    for k in keys:
        a = A.e(k)
        e = mhc.reconstruction_witness(A, phi, a)
        if e is None:
            report.add("mhc.reconstruction", False, [k])
            break
    else:
        report.add("mhc.reconstruction", True)


def duality_suite(A, report: RunReport, kG: FinDimHopfQuasigroup | None = None) -> FinDimHopfQuasigroup:
    D = _timed(report, "dual_build", lambda: duality.integral_dual(A))
    report.add_report("dual", _timed(report, "dual", lambda: duality.verify_dual(D)))
    H, rep = _timed(report, "dual_materialize", lambda: duality.verify_materialized(D))
    report.add_report("dual_hq", rep)
    w = rep.probes.get("nonassoc_witness")
    report.stats["nonassoc_witness"] = None if w is None else [H.basis_labels[i] for i in w]
    if kG is not None:
        report.add_report("dual_is_kG", duality.group_loop_identification(D, kG))
    return H


def biduality_suite(A, h: FinDimHopfQuasigroup | None, report: RunReport) -> None:
    if h is not None:
        phi = hopf.normalized_integral(h)
        g = _timed(report, "gamma_hq", lambda: duality.gamma_hq(h, phi))
        report.add_report("gamma_hq", g.report)
    g = _timed(report, "gamma_mhc", lambda: duality.gamma_mhc(A))
    report.add_report("gamma_mhc", g.report)


def full_suite(q: FiniteLoop) -> RunReport:
    """Everything for one finite IP loop: loop, kG, k(G), dual, biduality."""
    report = RunReport(instance_id(q.name))
    loop_suite(q, report)
    kG = hopf.group_algebra(q)
    hq_suite(kG, report)
    A = mhc.function_algebra(q)
    mhc_suite(A, report)
    duality_suite(A, report, kG)
    biduality_suite(A, kG, report)
    return report
