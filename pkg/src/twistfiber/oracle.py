"""Brute-force cross-checks of the combinatorics, for small rank.

Each ``verify_*`` returns a :class:`Report`.  They deliberately avoid the
cached words and descent tables: reduced words are re-derived here by
peeling right descents (largest index first) off the root-coordinate
matrix, and coset membership is read off matrix columns directly.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from .rootsystem import RootSystem, admissible_types, build
from .strata import enumerate_pieces, labels, nilcone, steinberg_boundary
from .twist import DiagramAut, diagram_automorphisms, omega_orbit, supp_sigma
from .weylgroup import DEFAULT_CAP, enumerate_group

DEFAULT_SEED = 20080917
DEFAULT_TRIALS = 100


@dataclass
class Report:
    check: str
    system: str
    twist: list[int]
    cases: int = 0
    violations: list = field(default_factory=list)
    seed: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        out = {"check": self.check, "system": self.system, "twist": self.twist,
               "cases": self.cases, "violations": self.violations, "seed": self.seed}
        out.update(self.extra)
        return out


def _root_reflections(rs: RootSystem) -> list[np.ndarray]:
    C = np.array(rs.cartan, dtype=np.int64)
    out = []
    for i in range(rs.rank):
        R = np.eye(rs.rank, dtype=np.int64)
        R[i] -= C[i]
        out.append(R)
    return out


def fresh_word(rs: RootSystem, root_matrix: np.ndarray) -> list[int]:
    """A reduced word for the element, by stripping the largest right descent."""
    refl = _root_reflections(rs)
    R = np.array(root_matrix, dtype=np.int64)
    word = []
    while True:
        neg = [i for i in range(rs.rank) if R[:, i].sum() < 0]
        if not neg:
            return word[::-1]
        i = neg[-1]
        word.append(i + 1)
        R = R @ refl[i]


def _orbit_closure(sigma: DiagramAut, S) -> frozenset[int]:
    out = set()
    for orb in sigma.orbits:
        if set(orb) & set(S):
            out.update(orb)
    return frozenset(out)


def _sigma_stable(sigma: DiagramAut, K) -> bool:
    return sigma.image(K) == frozenset(K)


def _positive_on(R: np.ndarray, idx) -> bool:
    return all(R[:, j - 1].sum() > 0 for j in idx)


def verify_fixed_weights(rs: RootSystem, cap: int = DEFAULT_CAP) -> Report:
    """``w omega_i == omega_i`` exactly when ``i`` is outside ``supp(w)``."""
    rep = Report("fixed-weights", rs.label, list(range(1, rs.rank + 1)))
    eye = np.eye(rs.rank, dtype=np.int64)
    for w in enumerate_group(rs, cap):
        support = set(fresh_word(rs, w.root_matrix))
        for i in range(1, rs.rank + 1):
            rep.cases += 1
            fixed = bool((w.matrix[:, i - 1] == eye[:, i - 1]).all())
            if fixed != (i not in support):
                rep.violations.append({"w_word": list(w.word), "i": i, "fixed": fixed})
    return rep


def verify_height_inequality(rs: RootSystem, sigma: DiagramAut, trials: int = DEFAULT_TRIALS,
                             seed: int = DEFAULT_SEED, cap: int = DEFAULT_CAP) -> Report:
    """``ht(w sigma(x)) >= ht(x)`` for ``x`` a nonnegative combination of ``alpha_J``, ``w`` in ``W^{sigma(J)}``."""
    rep = Report("height", rs.label, sigma.to_json(), seed=seed)
    rng = np.random.default_rng(seed)
    n = rs.rank
    P = sigma.permutation_matrix()
    elements = enumerate_group(rs, cap)
    for r in range(n + 1):
        for J in itertools.combinations(range(1, n + 1), r):
            sJ = sigma.image(J)
            cols = [j - 1 for j in J]
            for w in elements:
                R = w.root_matrix
                if not _positive_on(R, sJ):
                    continue
                X = np.zeros((trials, n), dtype=np.int64)
                if cols:
                    X[:, cols] = rng.integers(0, 6, size=(trials, len(cols)))
                image = (R @ P @ X.T).T
                bad = np.flatnonzero(image.sum(axis=1) < X.sum(axis=1))
                rep.cases += trials
                for t in bad[:1]:
                    rep.violations.append({"J": list(J), "w_word": list(w.word),
                                           "x": X[t].tolist()})
    return rep


def verify_boundary_identity(rs: RootSystem, sigma: DiagramAut, cap: int = DEFAULT_CAP) -> Report:
    """The boundary equals the intersection of the nilpotent cones of the orbit weights."""
    rep = Report("boundary", rs.label, sigma.to_json())
    boundary = labels(steinberg_boundary(rs, sigma, cap))
    orbs = sigma.orbits
    inter = None
    for j in range(1, orbs.l + 1):
        cone = labels(nilcone(rs, sigma, omega_orbit(orbs, j, rs.rank), cap))
        inter = cone if inter is None else inter & cone
    rep.cases = len(enumerate_pieces(rs, sigma, cap))
    for lab in sorted(boundary ^ inter):
        rep.violations.append({"J": list(lab[0]), "w_word": list(lab[1]),
                               "in_boundary": lab in boundary})
    rep.extra["boundary_size"] = len(boundary)
    return rep


def brute_force_boundary(rs: RootSystem, sigma: DiagramAut, cap: int = DEFAULT_CAP) -> set:
    """Boundary labels from scratch: fresh words, column-tested coset membership."""
    out = set()
    n = rs.rank
    full = frozenset(range(1, n + 1))
    for w in enumerate_group(rs, cap):
        word = fresh_word(rs, w.root_matrix)
        if _orbit_closure(sigma, word) != full:
            continue
        canon = tuple(w.word)
        for r in range(n + 1):
            for J in itertools.combinations(range(1, n + 1), r):
                if _positive_on(w.root_matrix, sigma.image(J)):
                    out.add((J, canon))
    return out


def verify_boundary_bruteforce(rs: RootSystem, sigma: DiagramAut, cap: int = DEFAULT_CAP) -> Report:
    rep = Report("boundary-bruteforce", rs.label, sigma.to_json())
    fast = labels(steinberg_boundary(rs, sigma, cap))
    slow = brute_force_boundary(rs, sigma, cap)
    rep.cases = len(slow)
    for lab in sorted(fast ^ slow):
        rep.violations.append({"J": list(lab[0]), "w_word": list(lab[1]), "in_fast": lab in fast})
    return rep


def verify_supp_minimality(rs: RootSystem, sigma: DiagramAut, cap: int = DEFAULT_CAP) -> Report:
    """The twisted support is the least sigma-stable ``K`` with ``w`` in ``W_K``."""
    rep = Report("supp-minimality", rs.label, sigma.to_json())
    n = rs.rank
    eye = np.eye(n, dtype=np.int64)
    stable = [frozenset(K) for r in range(n + 1)
              for K in itertools.combinations(range(1, n + 1), r) if _sigma_stable(sigma, K)]
    for w in enumerate_group(rs, cap):
        rep.cases += 1
        support = frozenset(fresh_word(rs, w.root_matrix))
        closure = _orbit_closure(sigma, support)
        witness = {"w_word": list(w.word)}
        if closure != supp_sigma(sigma, w):
            rep.violations.append({**witness, "reason": "twisted support mismatch"})
            continue
        outside = [j for j in range(1, n + 1) if j not in closure]
        if any((w.matrix[:, j - 1] != eye[:, j - 1]).any() for j in outside):
            rep.violations.append({**witness, "reason": "moves a weight outside the twisted support"})
        for K in stable:
            if K < closure and support <= K:
                rep.violations.append({**witness, "reason": f"smaller stable subset {sorted(K)}"})
    return rep


def verify_fixed_orbit_dichotomy(rs: RootSystem, sigma: DiagramAut, cap: int = DEFAULT_CAP) -> Report:
    """For ``J != I``, ``w`` in ``W^{sigma(J)}`` and an orbit ``C``.

    Condition (1): ``w`` moves ``omega_C``.  Condition (2): ``C`` lies in ``J``
    and ``w`` fixes every ``alpha_j``, ``j`` in ``C``.  Checked: (1) holds iff
    ``C`` meets ``supp(w)``, and for ``w = 1`` (1) fails while (2) holds iff
    ``C`` lies in ``J``.  Triples satisfying both conditions are counted under
    ``overlaps``; they do occur (first in A3) and are not violations.
    """
    rep = Report("dichotomy", rs.label, sigma.to_json())
    n = rs.rank
    eye = np.eye(n, dtype=np.int64)
    orbs = sigma.orbits.orbits
    overlaps, first_overlap = 0, None
    for w in enumerate_group(rs, cap):
        support = set(fresh_word(rs, w.root_matrix))
        for r in range(n):
            for J in itertools.combinations(range(1, n + 1), r):
                if not _positive_on(w.root_matrix, sigma.image(J)):
                    continue
                for C in orbs:
                    rep.cases += 1
                    om = np.array([int(i in C) for i in range(1, n + 1)], dtype=np.int64)
                    cond1 = bool((w.matrix @ om != om).any())
                    cond2 = set(C) <= set(J) and all(
                        (w.root_matrix[:, j - 1] == eye[:, j - 1]).all() for j in C)
                    witness = {"J": list(J), "w_word": list(w.word), "orbit": list(C)}
                    if cond1 != bool(support & set(C)):
                        rep.violations.append({**witness, "reason": "moved orbit weight vs support"})
                    if not w.word and (cond1 or cond2 != (set(C) <= set(J))):
                        rep.violations.append({**witness, "reason": "identity case"})
                    if cond1 and cond2:
                        overlaps += 1
                        first_overlap = first_overlap or witness
    rep.extra["overlaps"] = overlaps
    rep.extra["first_overlap"] = first_overlap
    return rep


CHECKS: dict[str, Callable] = {
    "fixed-weights": lambda rs, s, seed, trials, cap: verify_fixed_weights(rs, cap),
    "height": lambda rs, s, seed, trials, cap: verify_height_inequality(rs, s, trials, seed, cap),
    "boundary": lambda rs, s, seed, trials, cap: verify_boundary_identity(rs, s, cap),
    "boundary-bruteforce": lambda rs, s, seed, trials, cap: verify_boundary_bruteforce(rs, s, cap),
    "supp-minimality": lambda rs, s, seed, trials, cap: verify_supp_minimality(rs, s, cap),
    "dichotomy": lambda rs, s, seed, trials, cap: verify_fixed_orbit_dichotomy(rs, s, cap),
}

#: checks whose outcome does not depend on the twist
_TWIST_FREE = {"fixed-weights"}


def run_checks(max_rank: int, checks=None, seed: int = DEFAULT_SEED,
               trials: int = DEFAULT_TRIALS, cap: int = DEFAULT_CAP) -> list[Report]:
    """Run ``checks`` (default: all) over every admissible type and twist up to ``max_rank``."""
    names = list(CHECKS) if checks is None else list(checks)
    for name in names:
        if name not in CHECKS:
            raise KeyError(f"unknown check {name!r}; choose from {sorted(CHECKS)}")
    reports = []
    for spec in admissible_types(max_rank):
        rs = build(spec)
        twists = diagram_automorphisms(rs)
        for name in names:
            for sigma in (twists[:1] if name in _TWIST_FREE else twists):
                reports.append(CHECKS[name](rs, sigma, seed, trials, cap))
    return reports
