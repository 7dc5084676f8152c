"""The reduction f -> f* and the truncated big-Ramsey experiment."""

import random

import pytest

from msetramsey.bigramsey import (_max_mono_subset, big_ramsey_reduce,
                                  equivariance_of_pi, pi_star,
                                  random_coloring, subchains_containing_min,
                                  unordered_degree_bound)
from msetramsey.chains import Chain, ChainEmbedding, omega
from msetramsey.errors import (InputError, MissingOrdering, NotAnEmbedding,
                               SizeOverflow, TruncationTooSmall)
from msetramsey.expansion import fibers, order_key
from msetramsey.monoid import trivial_monoid, z2
from msetramsey.mset import MSetMorphism, enumerate_embeddings, validate_mset
from msetramsey.transport import hat_E


def _trivial_pair():
    return validate_mset(trivial_monoid(), ("a1", "a2"), [[0, 1]],
                         order=("a1", "a2"))


def _swap_pair():
    return validate_mset(z2(), ("a1", "a2"), [[0, 1], [1, 0]],
                         order=("a1", "a2"))


def test_subchains_containing_min_counts():
    assert [c.labels for c in subchains_containing_min(omega(1))] == [(0,)]
    assert [c.labels for c in subchains_containing_min(omega(2))] == \
        [(0,), (0, 1)]
    subs = subchains_containing_min(Chain(("a1", "a2", "a3")))
    assert [c.labels for c in subs] == [
        ("a1",), ("a1", "a2"), ("a1", "a3"), ("a1", "a2", "a3")]
    assert len(subchains_containing_min(omega(5))) == 2 ** 4
    with pytest.raises(InputError):
        subchains_containing_min(Chain(()))


def test_pi_star_trivial_monoid_is_identity_shadow():
    a = _trivial_pair()
    lift = hat_E(omega(5), trivial_monoid())
    for f in enumerate_embeddings(a, lift.lifted):
        rec = pi_star(f, lift)
        assert rec.rho_blocks == ((0,), (1,))
        assert rec.subchain.labels == ("a1", "a2")
        assert rec.ell == 1
        assert rec.f_star.map == tuple(lift.functions[x][0] for x in
                                       (f.map[0], f.map[1]))


def test_pi_star_collapsing_epsilon_values():
    """Equal epsilon-values merge into one rho block with one representative."""
    a = _swap_pair()
    lift = hat_E(omega(6), z2())
    h1 = lift.index[(3, 2)]
    h2 = lift.index[(3, 5)]
    f = MSetMorphism(a, lift.lifted, (h1, h2), "morphism")
    rec = pi_star(f, lift)
    assert rec.rho_blocks == ((0, 1),)
    assert rec.subchain.labels == ("a1",)
    assert rec.ell == 0
    assert rec.f_star.map == (3,)


def test_pi_star_rejects_nonmonotone_and_noninjective():
    a = _swap_pair()
    lift = hat_E(omega(6), z2())
    f = MSetMorphism(a, lift.lifted,
                     (lift.index[(4, 0)], lift.index[(1, 2)]), "morphism")
    with pytest.raises(NotAnEmbedding):
        pi_star(f, lift)
    g = MSetMorphism(a, lift.lifted,
                     (lift.index[(1, 2)], lift.index[(1, 2)]), "morphism")
    with pytest.raises(NotAnEmbedding):
        pi_star(g, lift)


def test_pi_star_epsilon_values_are_monotone_on_every_embedding():
    for a, m, n in ((_trivial_pair(), trivial_monoid(), 5),
                    (_swap_pair(), z2(), 4)):
        lift = hat_E(omega(n), m)
        e = m.identity
        for f in enumerate_embeddings(a, lift.lifted):
            eps = [lift.functions[f.map[x]][e] for x in a.order]
            assert eps == sorted(eps)
            pi_star(f, lift)  # must not raise


@pytest.mark.parametrize("a,monoid,big_n", [
    (_trivial_pair(), trivial_monoid(), 4),
    (_swap_pair(), z2(), 4)])
def test_pi_injective_exhaustively(a, monoid, big_n):
    for n in range(2, big_n + 1):
        lift = hat_E(omega(n), monoid)
        r = enumerate_embeddings(a, lift.lifted)
        keys = {(rec.ell, rec.f_star.map)
                for rec in (pi_star(f, lift) for f in r)}
        assert len(keys) == len(r)


def test_equivariance_of_pi_identity():
    a = _trivial_pair()
    lift = hat_E(omega(4), trivial_monoid())
    u = ChainEmbedding(omega(4), omega(4), (0, 1, 2, 3))
    assert equivariance_of_pi(u, a, lift, lift)


def test_equivariance_of_pi_trivial_shift():
    a = _trivial_pair()
    m = trivial_monoid()
    l4, l5 = hat_E(omega(4), m), hat_E(omega(5), m)
    u = ChainEmbedding(omega(4), omega(5), (1, 2, 3, 4))
    assert equivariance_of_pi(u, a, l4, l5)


def test_equivariance_of_pi_z2():
    a = _swap_pair()
    l3, l4 = hat_E(omega(3), z2()), hat_E(omega(4), z2())
    u = ChainEmbedding(omega(3), omega(4), (0, 2, 3))
    assert equivariance_of_pi(u, a, l3, l4)


def test_max_mono_subset_singletons():
    colors = {0: 0, 1: 1, 2: 1, 3: 1, 4: 0}
    got = _max_mono_subset(range(5), 1, lambda s: colors[s[0]])
    assert got == [1, 2, 3]


def test_max_mono_subset_pairs_is_max_clique():
    # color pairs by parity of the sum: even-sum pairs form cliques on
    # the odds and on the evens of {0..5}
    got = _max_mono_subset(range(6), 2, lambda s: (s[0] + s[1]) % 2)
    assert len(got) == 3
    assert all((x + y) % 2 == 0 for x in got for y in got if x < y)


def test_max_mono_subset_vacuous_below_arity():
    assert _max_mono_subset([3], 2, lambda s: 0) == [3]


def test_big_ramsey_reduce_single_point():
    a = validate_mset(trivial_monoid(), ("a1",), [[0]], order=("a1",))
    lift = hat_E(omega(4), trivial_monoid())
    r = enumerate_embeddings(a, lift.lifted)
    res = big_ramsey_reduce(a, random_coloring(len(r), 3, 0), 3, 4)
    assert res.bound == 1 and res.colors_used <= 1


def test_big_ramsey_reduce_trivial_pairs():
    a = _trivial_pair()
    lift = hat_E(omega(12), trivial_monoid())
    r_size = len(enumerate_embeddings(a, lift.lifted))
    for seed in range(3):
        chi = random_coloring(r_size, 4, seed)
        res = big_ramsey_reduce(a, chi, 4, 12)
        assert res.colors_used <= res.bound == 2
        assert res.tower[0] == 12
        assert all(x >= y for x, y in zip(res.tower, res.tower[1:]))


def test_big_ramsey_reduce_z2_swap():
    a = _swap_pair()
    lift = hat_E(omega(5), z2())
    r_size = len(enumerate_embeddings(a, lift.lifted))
    assert r_size == 10
    for seed in range(3):
        res = big_ramsey_reduce(a, random_coloring(r_size, 3, seed), 3, 5)
        assert res.colors_used <= 2


def test_big_ramsey_reduce_validates_coloring():
    a = _trivial_pair()
    with pytest.raises(InputError):
        big_ramsey_reduce(a, (0, 1), 2, 4)  # wrong length
    lift = hat_E(omega(4), trivial_monoid())
    n = len(enumerate_embeddings(a, lift.lifted))
    with pytest.raises(InputError):
        big_ramsey_reduce(a, (9,) * n, 2, 4)  # color out of range


def test_big_ramsey_reduce_r_cap():
    a = _trivial_pair()
    with pytest.raises(SizeOverflow):
        big_ramsey_reduce(a, (), 2, 20, r_cap=10)


def test_big_ramsey_reduce_truncation_too_small():
    a = _trivial_pair()
    with pytest.raises(TruncationTooSmall):
        big_ramsey_reduce(a, (), 2, 1)


def test_reduce_callable_coloring_matches_sequence():
    a = _trivial_pair()
    lift = hat_E(omega(8), trivial_monoid())
    r = enumerate_embeddings(a, lift.lifted)
    chi = random_coloring(len(r), 3, 11)
    table = {f.map: c for f, c in zip(r, chi)}
    res_seq = big_ramsey_reduce(a, chi, 3, 8)
    res_fun = big_ramsey_reduce(a, lambda f: table[f.map], 3, 8)
    assert res_seq.u.map == res_fun.u.map
    assert res_seq.colors_used == res_fun.colors_used


def test_unordered_degree_bound():
    a = _trivial_pair().base
    degrees = {order_key(f): 2 for f in fibers(a)}
    agg = unordered_degree_bound(a, degrees)
    assert agg.aggregate == 4 == agg.formula
    assert agg.within_formula
    with pytest.raises(MissingOrdering):
        unordered_degree_bound(a, {(0, 1): 2})
    one = validate_mset(trivial_monoid(), ("a",), [[0]])
    agg1 = unordered_degree_bound(one, {(0,): 1})
    assert agg1.aggregate == 1 == agg1.formula


def test_random_coloring_deterministic():
    assert random_coloring(10, 3, 7) == random_coloring(10, 3, 7)
    assert all(0 <= c < 3 for c in random_coloring(10, 3, 7))
