import itertools

import numpy as np
import pytest
from conftest import (
    all_perms,
    inversions,
    perm_from_word,
    perm_supp,
    right_descents,
    small_systems_and_twists,
)

from twistfiber import build, dim_g, resolve
from twistfiber.strata import (
    PieceDescriptor,
    WeightError,
    count_pieces,
    enumerate_pieces,
    irreducible_components,
    is_in_nilcone,
    labels,
    nilcone,
    random_invariant_weight,
    steinberg_boundary,
)
from twistfiber.twist import omega_orbit, twisted_coxeter_elements, validate
from twistfiber.weylgroup import from_word, group_order, identity, parabolic_subgroup


def perm_model_pieces(n, sigma_perm, keep):
    """(J, permutation) pairs from the symmetric-group model of A_n."""
    sig = dict(zip(range(1, n + 1), sigma_perm))
    out = set()
    for r in range(n + 1):
        for J in itertools.combinations(range(1, n + 1), r):
            sJ = {sig[j] for j in J}
            for p in all_perms(n):
                if right_descents(p) & sJ:
                    continue
                if keep(p):
                    out.add((J, p))
    return out


def as_perm_labels(pieces, n):
    return {(tuple(sorted(p.J)), perm_from_word(p.w.word, n)) for p in pieces}


def orbit_closure(sigma_perm, S):
    n = len(sigma_perm)
    out = set(S)
    for _ in range(n):
        out |= {sigma_perm[i - 1] for i in out}
    return out


TYPE_A_CASES = [(1, (1,)), (2, (1, 2)), (2, (2, 1)), (3, (1, 2, 3)), (3, (3, 2, 1)),
                (4, (4, 3, 2, 1))]


@pytest.mark.parametrize("n,perm", TYPE_A_CASES)
def test_boundary_against_permutation_model(n, perm):
    rs = build("A", n)
    sigma = validate(rs, perm)
    full = set(range(1, n + 1))
    expected = perm_model_pieces(n, perm, lambda p: orbit_closure(perm, perm_supp(p)) == full)
    assert as_perm_labels(steinberg_boundary(rs, sigma), n) == expected
    everything = perm_model_pieces(n, perm, lambda p: True)
    assert as_perm_labels(enumerate_pieces(rs, sigma), n) == everything
    for piece in steinberg_boundary(rs, sigma):
        p = perm_from_word(piece.w.word, n)
        assert piece.dim == n * (n + 2) - inversions(p) - (n - len(piece.J))


@pytest.mark.parametrize("n,perm", TYPE_A_CASES)
def test_nilcone_against_permutation_model(n, perm):
    rs = build("A", n)
    sigma = validate(rs, perm)
    rng = np.random.default_rng(7)
    for _ in range(5):
        lam = random_invariant_weight(sigma, rng)
        I_lam = {i for i, a in enumerate(lam, 1) if a}
        expected = perm_model_pieces(n, perm, lambda p: bool(perm_supp(p) & I_lam))
        assert as_perm_labels(nilcone(rs, sigma, lam), n) == expected


def test_enumerate_pieces_a1():
    rs = build("A1")
    pieces = enumerate_pieces(rs, resolve(rs, "identity"))
    assert [p.label for p in pieces] == [((), ()), ((), (1,)), ((1,), ())]


@pytest.mark.parametrize("twist_name", ["identity", "flip"])
def test_piece_count_a2(twist_name):
    rs = build("A2")
    sigma = resolve(rs, twist_name)
    assert len(enumerate_pieces(rs, sigma)) == count_pieces(rs, sigma) == 13


@pytest.mark.parametrize("label,perm", small_systems_and_twists())
def test_piece_count_formula(label, perm):
    rs = build(label)
    sigma = validate(rs, perm)
    expected = sum(group_order(rs) // len(parabolic_subgroup(rs, sigma.image(J)))
                   for r in range(rs.rank + 1)
                   for J in itertools.combinations(range(1, rs.rank + 1), r))
    assert count_pieces(rs, sigma) == expected


def test_open_piece_has_full_dimension(a2_flip):
    rs, flip = a2_flip
    top = [p for p in enumerate_pieces(rs, flip) if p.J == rs.index_set]
    assert len(top) == 1 and top[0].w == identity(rs) and top[0].dim == dim_g(rs)


def test_boundary_a1():
    rs = build("A1")
    b = steinberg_boundary(rs, resolve(rs, "identity"))
    assert [(p.label, p.dim) for p in b] == [(((), (1,)), 1)]


def test_boundary_a2_identity(a2_id):
    rs, sigma = a2_id
    got = [(p.label, p.dim) for p in steinberg_boundary(rs, sigma)]
    assert got == [(((), (1, 2)), 4), (((), (2, 1)), 4), (((), (1, 2, 1)), 3),
                   (((1,), (1, 2)), 5), (((2,), (2, 1)), 5)]


def test_boundary_a2_flip(a2_flip):
    rs, sigma = a2_flip
    got = [(p.label, p.dim) for p in steinberg_boundary(rs, sigma)]
    assert got == [(((), (1,)), 5), (((), (2,)), 5), (((), (1, 2)), 4), (((), (2, 1)), 4),
                   (((), (1, 2, 1)), 3), (((1,), (1,)), 6), (((1,), (2, 1)), 5),
                   (((2,), (2,)), 6), (((2,), (1, 2)), 5)]


def test_components_examples():
    a1 = build("A1")
    assert [p.label for p in irreducible_components(a1, resolve(a1, "identity"))] == [((), (1,))]
    a2 = build("A2")
    ident = irreducible_components(a2, resolve(a2, "identity"))
    assert [(p.label, p.dim) for p in ident] == [(((1,), (1, 2)), 5), (((2,), (2, 1)), 5)]
    flip = irreducible_components(a2, resolve(a2, "flip"))
    assert [(p.label, p.dim) for p in flip] == [(((1,), (1,)), 6), (((2,), (2,)), 6)]


@pytest.mark.parametrize("label,perm", small_systems_and_twists())
def test_component_properties(label, perm):
    rs = build(label)
    sigma = validate(rs, perm)
    boundary = steinberg_boundary(rs, sigma)
    comps = irreducible_components(rs, sigma)
    l = sigma.orbits.l
    assert comps
    assert labels(comps) <= labels(boundary)
    assert all(p.dim == dim_g(rs) - l - 1 for p in comps)
    assert max(p.dim for p in boundary) == dim_g(rs) - l - 1
    # J = I never appears in the boundary
    assert all(p.J != rs.index_set for p in boundary)
    # each component comes from exactly one (i, w) pair
    cox = set(twisted_coxeter_elements(rs, sigma))
    assert all(p.w in cox and len(rs.index_set - p.J) == 1 for p in comps)
    assert len(comps) == len(labels(comps))


def test_nilcone_examples(a2_id, a2_flip):
    rs, ident = a2_id
    cone = nilcone(rs, ident, (1, 0))
    assert len(cone) == 7
    assert all(1 in p.w.word for p in cone)
    regular = labels(nilcone(rs, ident, (2, 1)))
    assert regular == {p.label for p in enumerate_pieces(rs, ident) if p.w.word}
    _, flip = a2_flip
    assert labels(nilcone(rs, flip, (1, 1))) == labels(steinberg_boundary(rs, flip))
    assert len(nilcone(rs, flip, (1, 1))) == 9


def test_nilcone_rejects_bad_weights(a2_flip):
    rs, flip = a2_flip
    with pytest.raises(WeightError, match="dominant"):
        nilcone(rs, flip, (-1, -1))
    with pytest.raises(WeightError, match="invariant"):
        nilcone(rs, flip, (1, 0))
    with pytest.raises(WeightError, match="nonzero"):
        nilcone(rs, flip, (0, 0))
    with pytest.raises(WeightError, match="coordinates"):
        nilcone(rs, flip, (1, 1, 1))


def test_is_in_nilcone(a2_id):
    rs, ident = a2_id
    for J in [(), (1,), (1, 2)]:
        p = PieceDescriptor(frozenset(J), identity(rs), 0)
        assert not is_in_nilcone(p, (1, 1))
    s1 = PieceDescriptor(frozenset(), from_word(rs, [1]), 7)
    assert is_in_nilcone(s1, (1, 0))
    assert not is_in_nilcone(s1, (0, 1), ident)
    with pytest.raises(WeightError):
        is_in_nilcone(s1, (1, 0), resolve(rs, "flip"))


@pytest.mark.parametrize("label,perm", small_systems_and_twists())
def test_union_law_and_orbit_intersection(label, perm):
    rs = build(label)
    sigma = validate(rs, perm)
    rng = np.random.default_rng(11)
    for _ in range(10):
        lam = random_invariant_weight(sigma, rng)
        mu = random_invariant_weight(sigma, rng)
        both = tuple(a + b for a, b in zip(lam, mu))
        assert labels(nilcone(rs, sigma, both)) == labels(nilcone(rs, sigma, lam)) | labels(nilcone(rs, sigma, mu))
    orbs = sigma.orbits
    inter = set.intersection(*(labels(nilcone(rs, sigma, omega_orbit(orbs, j, rs.rank)))
                               for j in range(1, orbs.l + 1)))
    assert inter == labels(steinberg_boundary(rs, sigma))


def test_boundary_depends_on_twist_only_through_permutation():
    d4 = build("D4")
    tri = resolve(d4, "triality")
    b1 = labels(steinberg_boundary(d4, tri))
    assert b1 == labels(steinberg_boundary(d4, tri.power(4)))
    assert b1 != labels(steinberg_boundary(d4, tri.power(2)))
    assert b1 != labels(steinberg_boundary(d4, tri.power(3)))


def test_record_round_trip(a2_flip):
    rs, flip = a2_flip
    for p in enumerate_pieces(rs, flip):
        q = PieceDescriptor.from_record(rs, p.to_record())
        assert q == p
    with pytest.raises(ValueError):
        PieceDescriptor.from_record(rs, {"J": [1], "w_word": [1], "length": 1, "dim": 99})
