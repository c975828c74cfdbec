"""k(G): its integrals, the integral identities and the modular data."""

from qhopf import mhc
from qhopf.quasigroup import chein_double, symmetric_group

q = chein_double(symmetric_group(3))
A = mhc.function_algebra(q)
print(A.name, "axioms:", mhc.verify_mhc(A).passed)

phi, psi = mhc.integrals(A)
print("phi(delta_u) =", sorted({str(phi(A.e(u))) for u in A.basis()}), "for every u")
print("cointegral:", mhc.cointegral(A, phi))
print("integral identities:", mhc.verify_integral_identities(A, phi, psi).passed)

md = mhc.modular_data(A, phi, psi)
tests = [A.e(u) for u in A.basis()]
print("tau =", md.tau, "| modular data trivial:", md.is_trivial(A, tests))

# T1 on basis vectors: delta_u (x) delta_z  ->  delta_{u/z} (x) delta_z
u, z = 3, 7
print(f"T1(d{u} (x) d{z}) =", A.t1(A.e(u), A.e(z)))
