"""Shared fixtures and an independent permutation model of type A.

W(A_n) is the symmetric group on 1..n+1 with ``s_i = (i, i+1)``.  For a
permutation ``w`` (a tuple of images): length is the inversion count,
``i`` is a right descent iff ``w(i) > w(i+1)``, and ``w`` fixes ``omega_i``
iff it maps ``{1..i}`` onto itself.
"""

import itertools

import pytest

from twistfiber import build, resolve
from twistfiber.rootsystem import admissible_types
from twistfiber.twist import diagram_automorphisms


def perm_from_word(word, n):
    """Product ``s_{a1} s_{a2} ...`` as a permutation of 1..n+1 (composition)."""
    w = list(range(1, n + 2))
    for a in word:
        # right-multiplying by s_a swaps the images at positions a, a+1
        w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


def inversions(w):
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def right_descents(w):
    return {i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]}


def perm_supp(w):
    return {i for i in range(1, len(w)) if set(w[:i]) != set(range(1, i + 1))}


def all_perms(n):
    return list(itertools.permutations(range(1, n + 2)))


SMALL_TYPES = [s.label for s in admissible_types(4)]


def small_systems_and_twists():
    out = []
    for label in SMALL_TYPES:
        rs = build(label)
        for sigma in diagram_automorphisms(rs):
            out.append((label, sigma.perm))
    return out


@pytest.fixture
def a2():
    return build("A2")


@pytest.fixture
def a2_id(a2):
    return a2, resolve(a2, "identity")


@pytest.fixture
def a2_flip(a2):
    return a2, resolve(a2, "flip")
