"""The integral dual of k(G) is kG again, and the bidual maps are isomorphisms."""

from qhopf import duality, hopf, mhc
from qhopf.quasigroup import chein_double, symmetric_group

q = chein_double(symmetric_group(3))
A = mhc.function_algebra(q)
D = duality.integral_dual(A)

u, v = 1, 6
p = D.product(D.basis_functional(u), D.basis_functional(v))
print(f"w_{u} w_{v} = phi(. {D.canonical(p)}), and {u}*{v} = {q.product(u, v)}")
print("dual axioms:", duality.verify_dual(D).passed)
print("nonassociativity witness in the dual:", duality.nonassociativity_witness(D))

H, rep = duality.verify_materialized(D)
print(f"materialized dual of dimension {H.dim} is a Hopf quasigroup: {rep.passed}")

kG = hopf.group_algebra(q)
for g in (duality.gamma_hq(kG, hopf.normalized_integral(kG)), duality.gamma_mhc(A)):
    print(f"Gamma ({g.direction}) is an isomorphism: {g.report.passed}")
