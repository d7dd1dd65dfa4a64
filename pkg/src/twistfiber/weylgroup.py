"""Weyl group elements as integer matrices on weight coordinates.

An element ``w`` carries two integer matrices: ``matrix`` acts on
fundamental-weight coordinates (the canonical form), and ``root_matrix``
acts on simple-root coordinates.  The cached ``word`` is the lex-least
reduced word, found by repeatedly stripping the smallest left descent.
Words are read left to right as products: ``(1, 2)`` is ``s1 s2``, which
applies ``s2`` first.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from functools import cache

import numpy as np

from .rootsystem import RootSystem, check_index

DEFAULT_CAP = 10**7

#: |W| for the exceptional types
_EXCEPTIONAL_ORDER = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                      ("F", 4): 1152, ("G", 2): 12}


class WeylCapExceeded(RuntimeError):
    def __init__(self, label: str, order: int, cap: int):
        super().__init__(f"|W({label})| = {order} exceeds enumeration cap {cap}")
        self.order = order
        self.cap = cap


class MixedRootSystemError(ValueError):
    pass


def group_order(rs: RootSystem) -> int:
    fam, n = rs.key
    if fam == "A":
        return math.factorial(n + 1)
    if fam in "BC":
        return 2**n * math.factorial(n)
    if fam == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return _EXCEPTIONAL_ORDER[(fam, n)]


class WeylElement:
    """An element of W(rs).  Immutable; equality is matrix equality."""

    __slots__ = ("_key", "matrix", "root_matrix", "rs", "word")

    def __init__(self, rs: RootSystem, matrix: np.ndarray, root_matrix: np.ndarray,
                 word: tuple[int, ...] | None = None):
        matrix.setflags(write=False)
        root_matrix.setflags(write=False)
        self.rs = rs
        self.matrix = matrix
        self.root_matrix = root_matrix
        self._key = matrix.tobytes()
        self.word = canonical_word(rs, matrix) if word is None else word

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return not self.word

    def __mul__(self, other: WeylElement) -> WeylElement:
        return multiply(self, other)

    def __eq__(self, other):
        return (isinstance(other, WeylElement) and self.rs.key == other.rs.key
                and self._key == other._key)

    def __hash__(self):
        return hash((self.rs.key, self._key))

    def sort_key(self) -> tuple:
        return (len(self.word), self.word)

    def __lt__(self, other: WeylElement):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        if not self.word:
            return "1"
        return "".join(f"s{i}" for i in self.word)


@cache
def _reflection_matrices(rs: RootSystem) -> list[tuple[np.ndarray, np.ndarray]]:
    C = rs.cartan
    n = rs.rank
    out = []
    for i in range(n):
        # weights: lambda -> lambda - lambda_i * alpha_i, alpha_i = column i of C
        S = np.eye(n, dtype=np.int64)
        S[:, i] -= C[:, i]
        # roots: beta -> beta - (C beta)_i e_i
        R = np.eye(n, dtype=np.int64)
        R[i, :] -= C[i, :]
        out.append((S, R))
    return out


def canonical_word(rs: RootSystem, matrix: np.ndarray) -> tuple[int, ...]:
    """Lex-least reduced word of the element with weight matrix ``matrix``.

    ``i`` is a left descent of ``w`` iff the ``i``-th coordinate of
    ``w(rho)`` is negative, with ``rho = (1, ..., 1)``.
    """
    C = rs.cartan
    v = matrix.sum(axis=1)
    word = []
    while True:
        neg = np.flatnonzero(v < 0)
        if neg.size == 0:
            return tuple(word)
        i = int(neg[0])
        word.append(i + 1)
        v = v - v[i] * C[:, i]


def identity(rs: RootSystem) -> WeylElement:
    n = rs.rank
    return WeylElement(rs, np.eye(n, dtype=np.int64), np.eye(n, dtype=np.int64), ())


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    check_index(rs, i)
    S, R = _reflection_matrices(rs)[i - 1]
    return WeylElement(rs, S.copy(), R.copy(), (i,))


def from_word(rs: RootSystem, word: Iterable[int]) -> WeylElement:
    """The product ``s_{w1} s_{w2} ...``; the word need not be reduced."""
    n = rs.rank
    M = np.eye(n, dtype=np.int64)
    R = np.eye(n, dtype=np.int64)
    refl = _reflection_matrices(rs)
    for i in word:
        check_index(rs, i)
        S, Ri = refl[i - 1]
        M = M @ S
        R = R @ Ri
    return WeylElement(rs, M, R)


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    if a.rs.key != b.rs.key:
        raise MixedRootSystemError(f"cannot multiply elements of {a.rs.label} and {b.rs.label}")
    return WeylElement(a.rs, a.matrix @ b.matrix, a.root_matrix @ b.root_matrix)


def inverse(w: WeylElement) -> WeylElement:
    return from_word(w.rs, reversed(w.word))


def apply_to_root(w: WeylElement, beta: Sequence[int]) -> tuple[int, ...]:
    """``w(beta)`` for ``beta`` in simple-root coordinates."""
    return tuple(int(x) for x in w.root_matrix @ np.asarray(beta, dtype=np.int64))


def act(w: WeylElement, weight: Sequence[int]) -> tuple[int, ...]:
    """``w(lambda)`` for ``lambda`` in fundamental-weight coordinates."""
    lam = np.asarray(weight, dtype=np.int64)
    if lam.shape != (w.rs.rank,):
        raise ValueError(f"weight must have {w.rs.rank} coordinates, got {len(lam)}")
    return tuple(int(x) for x in w.matrix @ lam)


def length(w: WeylElement) -> int:
    """Inversion count ``#{beta > 0 : w beta < 0}``."""
    heights = w.rs._root_array @ w.root_matrix.sum(axis=0)
    return int((heights < 0).sum())


def right_descents(w: WeylElement) -> frozenset[int]:
    """``{i : w alpha_i < 0}``."""
    col_heights = w.root_matrix.sum(axis=0)
    return frozenset(int(i) + 1 for i in np.flatnonzero(col_heights < 0))


def left_descents(w: WeylElement) -> frozenset[int]:
    v = w.matrix.sum(axis=1)
    return frozenset(int(i) + 1 for i in np.flatnonzero(v < 0))


def big_l(w: WeylElement) -> int:
    """Number of simple roots sent to negative roots."""
    return len(right_descents(w))


def supp(w: WeylElement) -> frozenset[int]:
    return frozenset(w.word)


def mask(J: Iterable[int]) -> int:
    """Bitmask of a subset of the 1-based index set."""
    m = 0
    for j in J:
        m |= 1 << (j - 1)
    return m


def unmask(m: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(m.bit_length()) if m >> i & 1)


class GroupTable:
    """All of W in canonical order with per-element descent data.

    ``elements`` is sorted by (length, canonical word).  ``right_mask[k]`` and
    ``supp_mask[k]`` are bitmasks for ``elements[k]``.
    """

    def __init__(self, rs: RootSystem, elements: list[WeylElement]):
        self.rs = rs
        self.elements = tuple(elements)
        self.index = {w: k for k, w in enumerate(self.elements)}
        self.right_mask = tuple(mask(right_descents(w)) for w in self.elements)
        self.supp_mask = tuple(mask(w.word) for w in self.elements)

    def __len__(self):
        return len(self.elements)

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    def coset_reps(self, K: Iterable[int]) -> list[WeylElement]:
        """``W^K = {w : w alpha_k > 0 for all k in K}`` in canonical order."""
        m = mask(K)
        return [w for w, d in zip(self.elements, self.right_mask) if not d & m]

    def lookup(self, w: WeylElement) -> int:
        return self.index[w]


def _bfs(rs: RootSystem, generators: Sequence[int]) -> list[WeylElement]:
    """Elements of the subgroup generated by ``s_i, i in generators``."""
    C = rs.cartan
    refl = _reflection_matrices(rs)
    gens = sorted(set(generators))
    e = identity(rs)
    level = [e]
    words = {tuple(map(int, e.matrix.sum(axis=1))): ()}
    out = [e]
    while level:
        fresh = {}
        for w in level:
            v = w.matrix.sum(axis=1)
            for i in gens:
                if v[i - 1] <= 0:
                    continue  # s_i w is shorter
                nv = v - v[i - 1] * C[:, i - 1]
                key = tuple(map(int, nv))
                if key in words or key in fresh:
                    continue
                S, R = refl[i - 1]
                fresh[key] = (S @ w.matrix, R @ w.root_matrix, nv)
        nxt = []
        for key, (M, R, nv) in fresh.items():
            i0 = int(np.flatnonzero(nv < 0)[0])
            prev = tuple(map(int, nv - nv[i0] * C[:, i0]))
            word = (i0 + 1,) + words[prev]
            words[key] = word
            nxt.append(WeylElement(rs, M, R, word))
        nxt.sort(key=WeylElement.sort_key)
        out.extend(nxt)
        level = nxt
    return out


_TABLES: dict[tuple[str, int], GroupTable] = {}


def group_table(rs: RootSystem, cap: int = DEFAULT_CAP) -> GroupTable:
    order = group_order(rs)
    if order > cap:
        raise WeylCapExceeded(rs.label, order, cap)
    table = _TABLES.get(rs.key)
    if table is None:
        table = _TABLES[rs.key] = GroupTable(rs, _bfs(rs, range(1, rs.rank + 1)))
    return table


def clear_cache() -> None:
    """Drop every memoized group table."""
    _TABLES.clear()


def table_from_words(rs: RootSystem, words: Sequence[Sequence[int]]) -> GroupTable:
    """Rebuild and register a table from canonical words (as saved by a cache).

    Raises ``ValueError`` if the words do not list W exactly once in canonical order.
    """
    elements = [from_word(rs, w) for w in words]
    if (len(elements) != group_order(rs)
            or any(tuple(w) != e.word for w, e in zip(words, elements))
            or any(b.sort_key() <= a.sort_key() for a, b in zip(elements, elements[1:]))):
        raise ValueError(f"word list is not a canonical enumeration of W({rs.label})")
    table = _TABLES[rs.key] = GroupTable(rs, elements)
    return table


def enumerate_group(rs: RootSystem, cap: int = DEFAULT_CAP) -> tuple[WeylElement, ...]:
    """Every element of W once, ordered by (length, lex-least reduced word)."""
    return group_table(rs, cap).elements


def longest_element(rs: RootSystem) -> WeylElement:
    """``w0``, built by left-multiplying while some ``s_i`` increases length."""
    w = identity(rs)
    while True:
        v = w.matrix.sum(axis=1)
        up = np.flatnonzero(v > 0)
        if up.size == 0:
            return w
        w = multiply(simple_reflection(rs, int(up[0]) + 1), w)


def min_coset_reps(rs: RootSystem, J: Iterable[int], cap: int = DEFAULT_CAP) -> list[WeylElement]:
    J = frozenset(J)
    for j in J:
        check_index(rs, j)
    return group_table(rs, cap).coset_reps(J)


def parabolic_subgroup(rs: RootSystem, K: Iterable[int]) -> list[WeylElement]:
    """``W_K`` enumerated from its own generators, canonical order."""
    K = frozenset(K)
    for k in K:
        check_index(rs, k)
    return _bfs(rs, sorted(K))


def is_min_coset_rep(w: WeylElement, J: Iterable[int]) -> bool:
    return not (right_descents(w) & frozenset(J))
