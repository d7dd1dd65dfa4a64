"""
Counting points over a finite field
===================================

The count is a polynomial in q with exact integer coefficients.
"""

from twistfiber import build, resolve
from twistfiber.qcount import boundary_count, poincare

rs = build("A", 2)
print("Poincare:", poincare(rs))
for name in ("identity", "flip"):
    p = boundary_count(rs, resolve(rs, name))
    print(f"{name:>8}: {p}   degree {p.degree}, leading {p.leading_coeff}, at q=2: {p(2)}")

# two independent routes for the second factor
e6 = build("E6")
sigma = resolve(e6, "flip")
a = boundary_count(e6, sigma, "enumerate")
b = boundary_count(e6, sigma, "inclusion_exclusion")
print("E6 flip routes agree:", a == b, "degree", a.degree)
