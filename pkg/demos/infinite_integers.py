"""k(Z): a genuinely non-unital example, handled through oracles and local units."""

import random

from qhopf import mhc
from qhopf.linalg import FinSupp
from qhopf.quasigroup import integer_oracle

rng = random.Random(7)
sample = list(range(-4, 5))
A = mhc.function_algebra(integer_oracle(), sample)

a = FinSupp({2: 1, 5: -3})
b = FinSupp({-1: 2})
print("T1(a (x) b) =", A.t1(a, b))
print("T2(a (x) b) =", A.t2(a, b))

els = [FinSupp({rng.randint(-20, 20): 1}) for _ in range(4)]
e = mhc.local_unit(A, els)
print("local unit for", [x.support() for x in els], "is supported on", e.support())

phi, psi = mhc.integrals(A, sample)
rep = mhc.verify_integral_identities(A, phi, psi, sample)
print(f"integral identities on {rep.checked['integral_identity_phi_1']} sampled pairs:", rep.passed)
