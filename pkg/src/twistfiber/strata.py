"""G-stable pieces of the twisted wonderful compactification, as labels.

A piece is a pair ``(J, w)`` with ``J`` a subset of I and ``w`` a minimal
length representative in ``W^{sigma(J)}``; it has dimension
``dim(G) - l(w) - |I - J|``.  Lists of pieces are always in canonical
order: ``J`` by ascending bitmask, then ``w`` by (length, canonical word).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .rootsystem import RootSystem, dim_g
from .twist import DiagramAut, supp_sigma_mask
from .weylgroup import DEFAULT_CAP, WeylElement, from_word, group_table, mask, unmask


class WeightError(ValueError):
    """A weight violates a precondition (dominance, sigma-invariance, nonzero)."""


@dataclass(frozen=True)
class PieceDescriptor:
    J: frozenset[int]
    w: WeylElement
    dim: int

    @property
    def length(self) -> int:
        return self.w.length

    @property
    def label(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (tuple(sorted(self.J)), self.w.word)

    def to_record(self) -> dict:
        return {"J": sorted(self.J), "w_word": list(self.w.word),
                "length": self.w.length, "dim": self.dim}

    @classmethod
    def from_record(cls, rs: RootSystem, rec: dict) -> PieceDescriptor:
        w = from_word(rs, rec["w_word"])
        piece = make_piece(rs, rec["J"], w)
        if piece.dim != rec["dim"] or w.length != rec["length"]:
            raise ValueError(f"inconsistent piece record {rec}")
        return piece

    def __repr__(self):
        return f"Z({sorted(self.J)}, {self.w!r}; dim={self.dim})"


def piece_dim(rs: RootSystem, J: Iterable[int], w: WeylElement) -> int:
    return dim_g(rs) - w.length - (rs.rank - len(frozenset(J)))


def make_piece(rs: RootSystem, J: Iterable[int], w: WeylElement) -> PieceDescriptor:
    return PieceDescriptor(frozenset(J), w, piece_dim(rs, J, w))


def _subset_masks(rank: int) -> range:
    return range(1 << rank)


def _sigma_mask(sigma: DiagramAut, m: int) -> int:
    return mask(sigma.image(unmask(m)))


def _pieces(rs: RootSystem, sigma: DiagramAut, keep, cap: int) -> Iterator[PieceDescriptor]:
    """Yield pieces ``(J, w)`` for which ``keep(J_mask, element_index)`` holds."""
    table = group_table(rs, cap)
    dg, n = dim_g(rs), rs.rank
    for jm in _subset_masks(n):
        sm = _sigma_mask(sigma, jm)
        J = unmask(jm)
        codim = n - len(J)
        for k, (w, d) in enumerate(zip(table.elements, table.right_mask)):
            if d & sm or not keep(jm, k):
                continue
            yield PieceDescriptor(J, w, dg - w.length - codim)


def enumerate_pieces(rs: RootSystem, sigma: DiagramAut, cap: int = DEFAULT_CAP) -> list[PieceDescriptor]:
    return list(_pieces(rs, sigma, lambda jm, k: True, cap))


def count_pieces(rs: RootSystem, sigma: DiagramAut, cap: int = DEFAULT_CAP) -> int:
    table = group_table(rs, cap)
    total = 0
    for jm in _subset_masks(rs.rank):
        sm = _sigma_mask(sigma, jm)
        total += sum(1 for d in table.right_mask if not d & sm)
    return total


def steinberg_boundary(rs: RootSystem, sigma: DiagramAut, cap: int = DEFAULT_CAP) -> list[PieceDescriptor]:
    """Pieces ``(J, w)`` with ``supp_sigma(w) = I``: the boundary of any Steinberg fiber's closure."""
    table = group_table(rs, cap)
    full = (1 << rs.rank) - 1
    twisted = [supp_sigma_mask(sigma, s) == full for s in table.supp_mask]
    return list(_pieces(rs, sigma, lambda jm, k: twisted[k], cap))


def irreducible_components(rs: RootSystem, sigma: DiagramAut,
                           cap: int = DEFAULT_CAP) -> list[PieceDescriptor]:
    """Pieces ``(I - {i}, w)`` for twisted Coxeter ``w`` in ``W^{I - {sigma(i)}}``.

    One entry per pair ``(i, w)``, in canonical piece order.
    """
    table = group_table(rs, cap)
    full = (1 << rs.rank) - 1
    l = sigma.orbits.l
    out = []
    for i in range(1, rs.rank + 1):
        J = rs.index_set - {i}
        forbid = mask(rs.index_set - {sigma(i)})
        for w, d, s in zip(table.elements, table.right_mask, table.supp_mask):
            if w.length > l:
                break
            if w.length == l and supp_sigma_mask(sigma, s) == full and not d & forbid:
                out.append(make_piece(rs, J, w))
    return sorted(out, key=lambda p: (mask(p.J), p.w.sort_key()))


def check_weight(rs: RootSystem, sigma: DiagramAut | None, weight: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(a) for a in weight)
    if len(lam) != rs.rank:
        raise WeightError(f"weight {list(lam)} must have {rs.rank} coordinates")
    if any(a < 0 for a in lam):
        raise WeightError(f"weight {list(lam)} is not dominant")
    if not any(lam):
        raise WeightError("weight must be nonzero")
    if sigma is not None and sigma.apply_coords(lam) != lam:
        raise WeightError(f"weight {list(lam)} is not invariant under twist {list(sigma.perm)}")
    return lam


def support_of_weight(weight: Sequence[int]) -> frozenset[int]:
    """``I(lambda) = {i : a_i != 0}``."""
    return frozenset(i for i, a in enumerate(weight, start=1) if a)


def nilcone(rs: RootSystem, sigma: DiagramAut, weight: Sequence[int],
            cap: int = DEFAULT_CAP) -> list[PieceDescriptor]:
    """Pieces ``(J, w)`` with ``I(lambda)`` meeting ``supp(w)``."""
    lam = check_weight(rs, sigma, weight)
    table = group_table(rs, cap)
    lm = mask(support_of_weight(lam))
    return list(_pieces(rs, sigma, lambda jm, k: bool(table.supp_mask[k] & lm), cap))


def is_in_nilcone(piece: PieceDescriptor, weight: Sequence[int],
                  sigma: DiagramAut | None = None) -> bool:
    lam = check_weight(piece.w.rs, sigma, weight)
    return bool(support_of_weight(lam) & frozenset(piece.w.word))


def labels(pieces: Iterable[PieceDescriptor]) -> set:
    return {p.label for p in pieces}


def random_invariant_weight(sigma: DiagramAut, rng, max_coeff: int = 3) -> tuple[int, ...]:
    """A nonzero dominant sigma-invariant weight ``sum a_j omega_{C_j}``."""
    orbs = sigma.orbits.orbits
    while True:
        a = rng.integers(0, max_coeff + 1, size=len(orbs))
        if a.any():
            break
    lam = [0] * sigma.rs.rank
    for coeff, orb in zip(a, orbs):
        for i in orb:
            lam[i - 1] = int(coeff)
    return tuple(lam)

