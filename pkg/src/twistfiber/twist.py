"""Diagram automorphisms, their orbits, and twisted supports/Coxeter elements.

A twist is a permutation ``sigma`` of the index set ``1..rank`` with
``C[sigma(i)][sigma(j)] == C[i][j]``.  It acts on roots and weights by
permuting coordinates (``sigma(alpha_i) = alpha_sigma(i)``) and on W
letterwise.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from math import lcm

import numpy as np

from .rootsystem import RootSystem
from .weylgroup import DEFAULT_CAP, WeylElement, enumerate_group, from_word, mask

NAMED_TWISTS = ("identity", "flip", "triality", "triality2")


class InvalidTwistError(ValueError):
    pass


@dataclass(frozen=True)
class SigmaOrbits:
    orbits: tuple[tuple[int, ...], ...]

    @property
    def l(self) -> int:
        return len(self.orbits)

    def __len__(self):
        return len(self.orbits)

    def __iter__(self):
        return iter(self.orbits)

    def orbit_of(self, i: int) -> tuple[int, ...]:
        for orb in self.orbits:
            if i in orb:
                return orb
        raise IndexError(i)


@dataclass(frozen=True)
class DiagramAut:
    """A Cartan-preserving permutation, stored in 1-based one-line notation."""

    rs: RootSystem
    perm: tuple[int, ...]

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    @property
    def order(self) -> int:
        return lcm(*(len(o) for o in self.orbits.orbits))

    @property
    def orbits(self) -> SigmaOrbits:
        seen, out = set(), []
        for i in range(1, len(self.perm) + 1):
            if i in seen:
                continue
            orb, j = [], i
            while j not in seen:
                seen.add(j)
                orb.append(j)
                j = self(j)
            out.append(tuple(sorted(orb)))
        return SigmaOrbits(tuple(sorted(out)))

    @property
    def is_identity(self) -> bool:
        return all(self(i) == i for i in range(1, len(self.perm) + 1))

    def image(self, J: Iterable[int]) -> frozenset[int]:
        return frozenset(self(j) for j in J)

    def apply_coords(self, x: Sequence[int]) -> tuple[int, ...]:
        """Permute coordinates: entry ``i`` moves to slot ``sigma(i)``."""
        out = [0] * len(self.perm)
        for i, v in enumerate(x, start=1):
            out[self(i) - 1] = int(v)
        return tuple(out)

    def permutation_matrix(self) -> np.ndarray:
        n = len(self.perm)
        P = np.zeros((n, n), dtype=np.int64)
        for i in range(1, n + 1):
            P[self(i) - 1, i - 1] = 1
        return P

    def compose(self, other: DiagramAut) -> DiagramAut:
        """``self o other``."""
        return DiagramAut(self.rs, tuple(self(other(i)) for i in range(1, len(self.perm) + 1)))

    def power(self, k: int) -> DiagramAut:
        out = identity_twist(self.rs)
        for _ in range(k % self.order):
            out = self.compose(out)
        return out

    def to_json(self) -> list[int]:
        return list(self.perm)

    def __repr__(self):
        return f"DiagramAut({self.rs.label}, {list(self.perm)})"

    def __eq__(self, other):
        return isinstance(other, DiagramAut) and self.rs == other.rs and self.perm == other.perm

    def __hash__(self):
        return hash((self.rs.key, self.perm))


def validate(rs: RootSystem, perm: Sequence[int]) -> DiagramAut:
    perm = tuple(int(p) for p in perm)
    n = rs.rank
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidTwistError(f"{list(perm)} is not a permutation of 1..{n}")
    C = rs.cartan
    for i in range(n):
        for j in range(n):
            if C[perm[i] - 1, perm[j] - 1] != C[i, j]:
                raise InvalidTwistError(
                    f"{list(perm)} does not preserve the Cartan matrix of {rs.label}: "
                    f"C[{perm[i]}][{perm[j]}] = {C[perm[i] - 1, perm[j] - 1]} "
                    f"but C[{i + 1}][{j + 1}] = {C[i, j]}")
    return DiagramAut(rs, perm)


def identity_twist(rs: RootSystem) -> DiagramAut:
    return DiagramAut(rs, tuple(range(1, rs.rank + 1)))


def named_twist(rs: RootSystem, name: str) -> DiagramAut:
    fam, n = rs.key
    if name == "identity":
        return identity_twist(rs)
    if name == "flip":
        if fam == "A":
            return validate(rs, [n + 1 - i for i in range(1, n + 1)])
        if fam == "D":
            return validate(rs, list(range(1, n - 1)) + [n, n - 1])
        if fam == "E" and n == 6:
            return validate(rs, [6, 2, 5, 4, 3, 1])
    if name in ("triality", "triality2") and (fam, n) == ("D", 4):
        # outer nodes 1 -> 3 -> 4 -> 1 around the central node 2
        sigma = validate(rs, [3, 2, 4, 1])
        return sigma if name == "triality" else sigma.power(2)
    raise InvalidTwistError(f"no twist named {name!r} for {rs.label}")


def resolve(rs: RootSystem, twist: str | Sequence[int] | DiagramAut | None) -> DiagramAut:
    """Accept ``None``, a name, a ``"2,1"`` string, or a permutation."""
    if twist is None:
        return identity_twist(rs)
    if isinstance(twist, DiagramAut):
        return validate(rs, twist.perm)
    if isinstance(twist, str):
        if twist in NAMED_TWISTS:
            return named_twist(rs, twist)
        try:
            perm = [int(p) for p in twist.replace(" ", "").split(",")]
        except ValueError:
            raise InvalidTwistError(f"cannot parse twist {twist!r}") from None
        return validate(rs, perm)
    return validate(rs, twist)


def diagram_automorphisms(rs: RootSystem) -> list[DiagramAut]:
    """Every Cartan-preserving permutation, lexicographic in one-line form."""
    out = []
    for perm in itertools.permutations(range(1, rs.rank + 1)):
        try:
            out.append(validate(rs, perm))
        except InvalidTwistError:
            pass
    return out


def omega_orbit(orbs: SigmaOrbits, j: int, rank: int | None = None) -> tuple[int, ...]:
    """``omega_{C_j} = sum of omega_i over the j-th orbit`` (1-based ``j``)."""
    if not 1 <= j <= orbs.l:
        raise IndexError(f"orbit index {j} outside 1..{orbs.l}")
    n = rank if rank is not None else max(max(o) for o in orbs.orbits)
    return tuple(int(i in orbs.orbits[j - 1]) for i in range(1, n + 1))


def sigma_on_w(sigma: DiagramAut, w: WeylElement) -> WeylElement:
    """Letterwise image ``s_{i1} ... -> s_{sigma(i1)} ...``."""
    return from_word(w.rs, [sigma(i) for i in w.word])


def sigma_on_w_matrix(sigma: DiagramAut, w: WeylElement) -> WeylElement:
    """Same element as :func:`sigma_on_w`, via conjugation by the permutation matrix."""
    P = sigma.permutation_matrix()
    M = P @ w.matrix @ P.T
    R = P @ w.root_matrix @ P.T
    return WeylElement(w.rs, M, R)


def supp_sigma(sigma: DiagramAut, w: WeylElement) -> frozenset[int]:
    """Union of the sigma-orbits meeting ``supp(w)``."""
    out = set()
    for orb in sigma.orbits:
        if any(i in w.word for i in orb):
            out.update(orb)
    return frozenset(out)


def supp_sigma_mask(sigma: DiagramAut, supp_mask: int) -> int:
    out = 0
    for orb in sigma.orbits:
        m = mask(orb)
        if m & supp_mask:
            out |= m
    return out


def sigma_stable_subsets(sigma: DiagramAut) -> list[frozenset[int]]:
    """All unions of sigma-orbits, ordered by bitmask."""
    orbs = sigma.orbits.orbits
    out = []
    for pick in itertools.product((False, True), repeat=len(orbs)):
        out.append(frozenset(i for o, p in zip(orbs, pick) if p for i in o))
    return sorted(out, key=mask)


def twisted_coxeter_elements(rs: RootSystem, sigma: DiagramAut,
                             cap: int = DEFAULT_CAP) -> list[WeylElement]:
    """Elements of length ``l`` (number of orbits) whose twisted support is all of I."""
    l = sigma.orbits.l
    full = rs.index_set
    return [w for w in enumerate_group(rs, cap)
            if w.length == l and supp_sigma(sigma, w) == full]
