"""Root systems of the simple types A-G in Bourbaki labelling.

Roots are integer vectors in the simple-root basis.  The Cartan matrix
follows the convention ``cartan[i][j] = <alpha_i^vee, alpha_j>``, so that
``s_i(beta) = beta - (cartan @ beta)[i] * alpha_i``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cache

import numpy as np

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

#: classical number of positive roots, keyed by family; E/F/G by (family, rank)
_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class InadmissibleTypeError(ValueError):
    """Raised for a (family, rank) pair that names no simple root system."""


def is_admissible(family: str, rank: int) -> bool:
    if not isinstance(rank, (int, np.integer)) or isinstance(rank, bool):
        return False
    return {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,  # C2 is accepted as an alias of B2
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }.get(family, False)


@dataclass(frozen=True)
class RootSystemSpec:
    family: str
    rank: int

    def __post_init__(self):
        if not is_admissible(self.family, self.rank):
            raise InadmissibleTypeError(
                f"inadmissible root system type ({self.family!r}, {self.rank!r})")

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def internal_family(self) -> str:
        # B2 and C2 are one system; we use the B2 labelling (alpha_1 long)
        if self.family == "C" and self.rank == 2:
            return "B"
        return self.family


def cartan_matrix(family: str, rank: int) -> np.ndarray:
    """Bourbaki Cartan matrix, ``C[i, j] = <alpha_i^vee, alpha_j>`` (0-based)."""
    spec = RootSystemSpec(family, rank)
    fam, n = spec.internal_family, rank
    C = 2 * np.eye(n, dtype=np.int64)

    def bond(i, j, a=-1, b=-1):
        # 1-based nodes; C[i][j] = a, C[j][i] = b
        C[i - 1, j - 1] = a
        C[j - 1, i - 1] = b

    if fam in "ABC":
        for i in range(1, n):
            bond(i, i + 1)
        if fam == "B":
            # alpha_n short: <alpha_n^vee, alpha_{n-1}> = -2
            bond(n - 1, n, -1, -2)
        elif fam == "C":
            bond(n - 1, n, -2, -1)
    elif fam == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif fam == "E":
        bond(1, 3)
        bond(2, 4)
        for i in range(3, n):
            bond(i, i + 1)
    elif fam == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif fam == "G":
        # alpha_1 short
        bond(1, 2, -3, -1)
    return C


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Positive roots and Cartan data of one simple type.

    ``positive_roots`` is sorted by height, then by descending lexicographic
    order of the coefficient vector, so the simple roots come out as
    ``alpha_1, ..., alpha_n``.  The index set is ``1..rank``.
    """

    spec: RootSystemSpec
    cartan: np.ndarray
    positive_roots: tuple[tuple[int, ...], ...]
    _root_array: np.ndarray = field(repr=False)
    _root_lookup: frozenset = field(repr=False)

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def family(self) -> str:
        return self.spec.family

    @property
    def label(self) -> str:
        return self.spec.label

    @property
    def key(self) -> tuple[str, int]:
        """Identity of the underlying system (B2 and C2 share a key)."""
        return (self.spec.internal_family, self.spec.rank)

    @property
    def index_set(self) -> frozenset[int]:
        return frozenset(range(1, self.rank + 1))

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    @property
    def highest_root(self) -> tuple[int, ...]:
        return self.positive_roots[-1]

    def simple_root(self, i: int) -> tuple[int, ...]:
        check_index(self, i)
        return tuple(int(k == i - 1) for k in range(self.rank))

    def reflect(self, i: int, beta: Sequence[int]) -> tuple[int, ...]:
        """Image of ``beta`` (simple-root coordinates) under ``s_i``."""
        check_index(self, i)
        b = np.asarray(beta, dtype=np.int64)
        b = b.copy()
        b[i - 1] -= int(self.cartan[i - 1] @ b)
        return tuple(int(x) for x in b)

    def is_root(self, beta: Sequence[int]) -> bool:
        t = tuple(int(x) for x in beta)
        return t in self._root_lookup or tuple(-x for x in t) in self._root_lookup

    def root_to_weight(self, beta: Sequence[int]) -> tuple[int, ...]:
        """Fundamental-weight coordinates of a root-lattice vector."""
        return tuple(int(x) for x in self.cartan @ np.asarray(beta, dtype=np.int64))

    def __repr__(self):
        return f"RootSystem({self.label}, N={self.num_positive_roots})"

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.key == other.key

    def __hash__(self):
        return hash(self.key)


def check_index(rs: RootSystem, i: int) -> None:
    if not isinstance(i, (int, np.integer)) or not 1 <= i <= rs.rank:
        raise IndexError(f"simple root index {i!r} outside 1..{rs.rank}")


def root_order_key(beta: Sequence[int]) -> tuple:
    """Height first; within a height, larger leading coefficients first (alpha_1 before alpha_2)."""
    return (sum(beta), tuple(-int(x) for x in beta))


def _close_positive_roots(C: np.ndarray) -> list[tuple[int, ...]]:
    n = C.shape[0]
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            b = np.array(beta, dtype=np.int64)
            pairing = C @ b
            for i in range(n):
                if pairing[i] == 0:
                    continue
                img = b.copy()
                img[i] -= pairing[i]
                if (img >= 0).all():
                    t = tuple(int(x) for x in img)
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
        frontier = nxt
    return sorted(found, key=root_order_key)


@cache
def _build(family: str, rank: int) -> RootSystem:
    spec = RootSystemSpec(family, rank)
    C = cartan_matrix(family, rank)
    C.setflags(write=False)
    roots = _close_positive_roots(C)
    expected = _POSITIVE_ROOT_COUNT[spec.internal_family](rank)
    if len(roots) != expected:  # pragma: no cover - would mean a bad Cartan matrix
        raise AssertionError(f"{spec.label}: found {len(roots)} positive roots, expected {expected}")
    arr = np.array(roots, dtype=np.int64)
    arr.setflags(write=False)
    return RootSystem(spec, C, tuple(roots), arr, frozenset(roots))


def build(spec: RootSystemSpec | str, rank: int | None = None) -> RootSystem:
    """Construct the root system for ``spec``.

    Accepts a :class:`RootSystemSpec`, a family letter plus rank, or a
    compact label such as ``"E6"``.
    """
    if isinstance(spec, RootSystemSpec):
        return _build(spec.family, spec.rank)
    if rank is None:
        spec, rank = spec[0], int(spec[1:])
    return _build(spec, rank)


def height(x: Iterable[int]) -> int:
    """Sum of simple-root coordinates."""
    return int(sum(int(v) for v in x))


def dim_g(rs: RootSystem) -> int:
    return 2 * rs.num_positive_roots + rs.rank


def admissible_types(max_rank: int) -> list[RootSystemSpec]:
    """Every admissible type up to ``max_rank``.  C2 is omitted (it is B2)."""
    out = []
    for fam in FAMILIES:
        for n in range(1, max_rank + 1):
            if fam == "C" and n == 2:
                continue
            if is_admissible(fam, n):
                out.append(RootSystemSpec(fam, n))
    return out
