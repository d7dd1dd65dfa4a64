"""
Diagram automorphisms and twisted Coxeter elements
==================================================

A twist permutes the simple roots and preserves the Cartan matrix.
"""

from twistfiber import build, resolve
from twistfiber.twist import diagram_automorphisms, supp_sigma, twisted_coxeter_elements

d4 = build("D", 4)
for sigma in diagram_automorphisms(d4):
    print(sigma.perm, "orbits", sigma.orbits.orbits, "order", sigma.order)

# triality folds the three outer nodes into a single orbit
tri = resolve(d4, "triality")
cox = twisted_coxeter_elements(d4, tri)
print(len(cox), "twisted Coxeter elements, e.g.", cox[0], sorted(supp_sigma(tri, cox[0])))

# a non-automorphism is rejected with the offending entry
try:
    resolve(build("B", 3), "3,2,1")
except ValueError as exc:
    print("rejected:", exc)
