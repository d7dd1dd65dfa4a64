"""Combinatorics of G-stable pieces in twisted wonderful compactifications.

Stratum labels, Steinberg-fiber boundaries, nilpotent cones, twisted
Coxeter elements and F_q point-count polynomials for simple types A-G.
"""

from .qcount import QPolynomial, boundary_count, poincare, second_factor
from .rootsystem import RootSystem, RootSystemSpec, build, dim_g, height
from .strata import (
                     PieceDescriptor,
                     enumerate_pieces,
                     irreducible_components,
                     is_in_nilcone,
                     nilcone,
                     steinberg_boundary,
)
from .twist import (
                     DiagramAut,
                     diagram_automorphisms,
                     omega_orbit,
                     resolve,
                     sigma_on_w,
                     sigma_stable_subsets,
                     supp_sigma,
                     twisted_coxeter_elements,
                     validate,
)
from .weylgroup import (
                     WeylElement,
                     act,
                     big_l,
                     enumerate_group,
                     length,
                     longest_element,
                     min_coset_reps,
                     multiply,
                     simple_reflection,
                     supp,
)

__all__ = [
    "DiagramAut", "PieceDescriptor", "QPolynomial", "RootSystem", "RootSystemSpec", "WeylElement",
    "act", "big_l", "boundary_count", "build", "diagram_automorphisms", "dim_g", "enumerate_group",
    "enumerate_pieces", "height", "irreducible_components", "is_in_nilcone", "length",
    "longest_element", "min_coset_reps", "multiply", "nilcone", "omega_orbit", "poincare",
    "resolve", "second_factor", "sigma_on_w", "sigma_stable_subsets", "simple_reflection",
    "steinberg_boundary", "supp", "supp_sigma", "twisted_coxeter_elements", "validate",
]

__version__ = "0.1.0"
