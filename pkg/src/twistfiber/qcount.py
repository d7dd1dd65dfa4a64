"""Exact polynomials in q and the rational point count of the fiber boundary."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable

from .rootsystem import RootSystem
from .twist import DiagramAut, sigma_stable_subsets, supp_sigma
from .weylgroup import (
    DEFAULT_CAP,
    big_l,
    enumerate_group,
    group_table,
    longest_element,
    multiply,
    parabolic_subgroup,
    right_descents,
)


class QPolynomial:
    """Integer polynomial in q.  ``coeffs[k]`` is the coefficient of ``q**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> QPolynomial:
        """Sum of ``q**e`` over ``exponents`` (with multiplicity)."""
        counts = Counter(exponents)
        if not counts:
            return cls()
        out = [0] * (max(counts) + 1)
        for e, m in counts.items():
            out[e] += m
        return cls(out)

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading_coeff(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial([other])
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "q" if k == 1 else f"q^{k}"
                body = mono if mag == 1 else f"{mag}{mono}"
            terms.append((c < 0, body))
        if not terms:
            return "0"
        neg, body = terms[0]
        out = ("-" if neg else "") + body
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, obj: dict) -> QPolynomial:
        return cls(obj["coeffs"])


def _coerce(x) -> QPolynomial:
    if isinstance(x, QPolynomial):
        return x
    if isinstance(x, int):
        return QPolynomial([x])
    return NotImplemented


def degree(p: QPolynomial) -> int | None:
    return p.degree


def leading_coeff(p: QPolynomial) -> int:
    return p.leading_coeff


def poincare(rs: RootSystem, K: Iterable[int] | None = None, cap: int = DEFAULT_CAP) -> QPolynomial:
    """``sum_{w in W_K} q^{l(w)}``; ``K=None`` means the whole index set."""
    if K is None or frozenset(K) == rs.index_set:
        return QPolynomial.from_exponents(w.length for w in enumerate_group(rs, cap))
    return QPolynomial.from_exponents(w.length for w in parabolic_subgroup(rs, K))


def boundary_exponent(w0, w) -> int:
    """``l(w0 w) + L(w0 w)``, evaluated on the product itself."""
    u = multiply(w0, w)
    return u.length + big_l(u)


def boundary_exponent_closed(rs: RootSystem, w) -> int:
    """``(N - l(w)) + (|I| - #{i : w alpha_i < 0})``."""
    return (rs.num_positive_roots - w.length) + (rs.rank - len(right_descents(w)))


def second_factor(rs: RootSystem, sigma: DiagramAut, method: str = "enumerate",
                  cap: int = DEFAULT_CAP) -> QPolynomial:
    """``sum over supp_sigma(w) = I of q^{l(w0 w) + L(w0 w)}``.

    ``method="enumerate"`` filters W directly.  ``method="inclusion_exclusion"``
    sums over sigma-stable ``K`` with sign ``(-1)^(#orbits(I) - #orbits(K))``,
    enumerating each ``W_K`` from its own generators.
    """
    if method == "enumerate":
        table = group_table(rs, cap)
        w0 = table.longest
        full = rs.index_set
        return QPolynomial.from_exponents(
            boundary_exponent(w0, w) for w in table.elements if supp_sigma(sigma, w) == full)
    if method == "inclusion_exclusion":
        group_table(rs, cap)  # enforce the cap consistently
        w0 = longest_element(rs)
        orbs = sigma.orbits.orbits
        total = QPolynomial()
        for K in sigma_stable_subsets(sigma):
            k_orbits = sum(1 for o in orbs if o[0] in K)
            sign = (-1) ** (len(orbs) - k_orbits)
            part = QPolynomial.from_exponents(
                boundary_exponent(w0, w) for w in parabolic_subgroup(rs, K))
            total = total + sign * part
        return total
    raise ValueError(f"unknown method {method!r}")


def boundary_count(rs: RootSystem, sigma: DiagramAut, method: str = "enumerate",
                   cap: int = DEFAULT_CAP) -> QPolynomial:
    """Number of F_q-points of the fiber boundary, as a polynomial in q."""
    return poincare(rs, cap=cap) * second_factor(rs, sigma, method, cap)
