import math

import numpy as np
import pytest

from twistfiber.rootsystem import (
    InadmissibleTypeError,
    RootSystemSpec,
    admissible_types,
    build,
    cartan_matrix,
    dim_g,
    height,
    root_order_key,
)

CLASSICAL_N = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n,
               "D": lambda n: n * (n - 1)}
EXCEPTIONAL_N = {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}


def euclidean_positive_roots_a(n):
    """``e_i - e_j`` (i < j) is ``alpha_i + ... + alpha_{j-1}``."""
    out = []
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            out.append(tuple(int(i <= k < j) for k in range(n)))
    return sorted(out, key=root_order_key)


def euclidean_roots_g2():
    """Close the G2 simple roots under reflection in the plane, then decompose."""
    a1 = np.array([1.0, 0.0])
    a2 = np.array([-1.5, math.sqrt(3) / 2])
    basis = np.column_stack([a1, a2])
    roots = [a1, a2]
    changed = True
    while changed:
        changed = False
        for r in list(roots):
            for a in (a1, a2):
                img = r - 2 * (r @ a) / (a @ a) * a
                if not any(np.allclose(img, s) for s in roots):
                    roots.append(img)
                    changed = True
    coords = {tuple(int(round(c)) for c in np.linalg.solve(basis, r)) for r in roots}
    return sorted((c for c in coords if min(c) >= 0), key=root_order_key)


def test_a1_a2_roots():
    assert build("A", 1).positive_roots == ((1,),)
    assert build("A", 2).positive_roots == ((1, 0), (0, 1), (1, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_type_a_matches_euclidean_model(n):
    assert list(build("A", n).positive_roots) == euclidean_positive_roots_a(n)


def test_g2_matches_plane_model():
    rs = build("G", 2)
    assert list(rs.positive_roots) == euclidean_roots_g2()
    assert rs.highest_root == (3, 2)


@pytest.mark.parametrize("spec", admissible_types(8), ids=lambda s: s.label)
def test_root_counts_and_invariants(spec):
    rs = build(spec)
    n = spec.rank
    expected = CLASSICAL_N[spec.family](n) if spec.family in CLASSICAL_N else EXCEPTIONAL_N[spec.label]
    assert rs.num_positive_roots == expected
    assert all(min(r) >= 0 for r in rs.positive_roots)
    for i in range(1, n + 1):
        assert rs.simple_root(i) in rs.positive_roots
    keys = [root_order_key(r) for r in rs.positive_roots]
    assert keys == sorted(keys)
    assert list(rs.positive_roots[:n]) == [rs.simple_root(i) for i in range(1, n + 1)]
    assert (np.diag(rs.cartan) == 2).all()


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "D4", "G2", "F4", "E6"])
def test_simple_reflection_permutes_other_positive_roots(label):
    rs = build(label)
    for i in range(1, rs.rank + 1):
        for beta in rs.positive_roots:
            img = rs.reflect(i, beta)
            if beta == rs.simple_root(i):
                assert img == tuple(-x for x in beta)
            else:
                assert img in rs.positive_roots


@pytest.mark.parametrize("family,rank", [("A", 0), ("B", 1), ("D", 3), ("E", 5), ("E", 9),
                                         ("F", 3), ("G", 3), ("H", 3), ("A", -1)])
def test_inadmissible(family, rank):
    with pytest.raises(InadmissibleTypeError, match=f"{family!r}, {rank}"):
        RootSystemSpec(family, rank)


def test_b2_c2_are_one_system():
    b2, c2 = build("B", 2), build("C", 2)
    assert c2.label == "C2" and b2.label == "B2"
    assert (b2.cartan == c2.cartan).all()
    assert b2 == c2
    assert c2.num_positive_roots == 4


def test_bourbaki_long_short_conventions():
    # B_n: alpha_n short; C_n: alpha_n long
    assert cartan_matrix("B", 3)[2, 1] == -2
    assert cartan_matrix("C", 3)[1, 2] == -2
    # F4: alpha_3 short next to long alpha_2
    assert cartan_matrix("F", 4)[2, 1] == -2
    # E6: node 2 attached to node 4
    C = cartan_matrix("E", 6)
    assert C[1, 3] == C[3, 1] == -1 and C[1, 2] == 0


def test_height():
    assert height((1, 0)) == 1
    assert height((1, 1)) == 2
    assert height(build("G2").highest_root) == 5
    assert height((3, -1, 2)) == height((3, 0, 0)) + height((0, -1, 2))


@pytest.mark.parametrize("label,expected", [("A1", 3), ("A2", 8), ("D4", 28), ("E8", 248),
                                            ("G2", 14), ("F4", 52), ("B3", 21)])
def test_dim_g(label, expected):
    assert dim_g(build(label)) == expected


def test_build_is_deterministic():
    assert build("F4").positive_roots == build("F", 4).positive_roots
    assert build("F4") is build("F", 4)
