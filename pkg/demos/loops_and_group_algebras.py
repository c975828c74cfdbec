"""IP loops, their group algebras kG, and where associativity breaks."""

from qhopf import hopf
from qhopf.quasigroup import associativity_witness, chein_double, check_ip, symmetric_group

s3 = symmetric_group(3)
m12 = chein_double(s3)

for q in (s3, m12):
    w = associativity_witness(q)
    print(f"{q.name}: order {len(q.elements())}, IP holds: {check_ip(q).passed},",
          "associative" if w is None else f"(xy)z != x(yz) at {[q.label(i) for i in w]}")

kG = hopf.group_algebra(m12)
rep = hopf.verify_hopf_quasigroup(kG)
print(f"{kG.name} is a Hopf quasigroup: {rep.passed} ({sum(rep.checked.values())} checks)")
print("associativity witness in kG:", rep.probes.get("associativity_witness"))
phi = hopf.normalized_integral(kG)
print("normalized left integral:", [str(phi.value(i)) for i in kG.basis()])
