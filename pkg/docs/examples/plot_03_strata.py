"""
Pieces, boundary and nilpotent cones
====================================

Pieces are labelled by pairs (J, w).  The boundary keeps those whose
twisted support is everything.
"""

from twistfiber import build, resolve
from twistfiber.strata import (
    enumerate_pieces,
    irreducible_components,
    labels,
    nilcone,
    steinberg_boundary,
)

rs = build("A", 2)
for name in ("identity", "flip"):
    sigma = resolve(rs, name)
    print(f"--- A2, {name}: {len(enumerate_pieces(rs, sigma))} pieces")
    for p in steinberg_boundary(rs, sigma):
        print("  ", p)
    print("components:", irreducible_components(rs, sigma))

# the boundary is the intersection of the cones of the orbit weights
sigma = resolve(rs, "flip")
cone = labels(nilcone(rs, sigma, (1, 1)))
print(cone == labels(steinberg_boundary(rs, sigma)))
