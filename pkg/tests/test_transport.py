"""Lexicographic lifts, weak coalgebras and witness transport."""

import pytest

from msetramsey.chains import ChainEmbedding, omega
from msetramsey.errors import (InputError, NoChainWitnessInBudget,
                               SizeOverflow)
from msetramsey.monoid import left_zero_monoid, trivial_monoid, z2
from msetramsey.mset import (enumerate_embeddings, validate_morphism,
                             validate_mset)
from msetramsey.ramsey import MSetContext
from msetramsey.transport import (check_PA, hat_E, hat_E_map, hat_delta,
                                  lift_chain, mset_as_weak_coalgebra, phi,
                                  transport_witness, universal_embed)


def _fixed_point(labels=("u",)):
    n = len(labels)
    return validate_mset(z2(), labels, [list(range(n)), list(range(n))],
                         order=labels)


def test_hat_e_of_trivial_monoid_is_the_base_chain():
    lift = hat_E(omega(4), trivial_monoid())
    assert lift.lifted.size == 4
    assert lift_chain(lift).labels == tuple((x,) for x in range(4))


def test_hat_e_lex_order_matches_sorted_tuples():
    lift = hat_E(omega(2), z2())
    ordered = [lift.functions[i] for i in lift.lifted.order]
    assert ordered == sorted(lift.functions)
    # the underlying action satisfies the M-set axioms
    validate_mset(z2(), lift.lifted.carrier, lift.lifted.base.action)


def test_hat_e_action_formula():
    m = z2()
    lift = hat_E(omega(3), m)
    g = 1
    for i, h in enumerate(lift.functions):
        moved = lift.functions[lift.lifted.act(g, i)]
        assert moved == tuple(h[m.mul(g, mp)] for mp in range(m.size))


def test_hat_e_cap():
    with pytest.raises(SizeOverflow):
        hat_E(omega(10), z2(), cap=50)


def test_hat_e_map_is_functorial():
    m = z2()
    l2, l3, l4 = (hat_E(omega(n), m) for n in (2, 3, 4))
    u = ChainEmbedding(omega(2), omega(3), (0, 2))
    v = ChainEmbedding(omega(3), omega(4), (1, 2, 3))
    eu = hat_E_map(u, l2, l3)
    ev = hat_E_map(v, l3, l4)
    evu = hat_E_map(v.compose(u), l2, l4)
    assert tuple(ev.map[x] for x in eu.map) == evu.map


def test_hat_e_map_rejects_mismatched_lifts():
    m = z2()
    l2, l3 = hat_E(omega(2), m), hat_E(omega(3), m)
    u = ChainEmbedding(omega(2), omega(4), (0, 2))
    with pytest.raises(InputError):
        hat_E_map(u, l2, l3)


@pytest.mark.parametrize("monoid", [trivial_monoid(), z2(),
                                    left_zero_monoid(2)])
def test_hat_delta_is_a_validated_order_embedding(monoid):
    lift = hat_E(omega(2), monoid)
    mor, outer = hat_delta(lift)
    assert mor.kind == "order-embedding"
    assert outer.lifted.size == lift.lifted.size ** monoid.size


def test_composition_convention_pinned_by_noncommutative_monoid():
    """The reversed composition order breaks the comultiplication square."""
    m = left_zero_monoid(2)
    lift = hat_E(omega(2), m)
    pairs = [(v, w) for v in range(m.size) for w in range(m.size)
             if m.mul(v, w) != m.mul(w, v)]
    assert pairs  # the monoid is noncommutative
    # delta'(h)(v)(w) = h(w * v) is not even equivariant into hat_E(chain)
    rank_of = lift.lifted.positions
    src_index = lift.index
    outer = hat_E(lift_chain(lift), m)

    def delta_rev(i):
        h = lift.functions[i]
        return tuple(
            rank_of[src_index[tuple(h[m.mul(w, v)] for w in range(m.size))]]
            for v in range(m.size))

    table = tuple(outer.index[delta_rev(i)]
                  for i in range(len(lift.functions)))
    with pytest.raises(InputError):
        validate_morphism(lift.lifted, outer.lifted, table, "morphism")


def test_mset_as_weak_coalgebra_structure():
    swap = validate_mset(z2(), ("a1", "a2"), [[0, 1], [1, 0]],
                         order=("a1", "a2"))
    coalg = mset_as_weak_coalgebra(swap)
    # alpha(a)(g) = rank of g.a in the carrier chain
    assert coalg.structure == ((0, 1), (1, 0))


def test_phi_and_universal_embed():
    swap = validate_mset(z2(), ("a1", "a2"), [[0, 1], [1, 0]],
                         order=("a1", "a2"))
    coalg = mset_as_weak_coalgebra(swap)
    u = ChainEmbedding(coalg.carrier_chain, omega(4), (1, 3))
    mor, lift_c = phi(u, coalg)
    assert mor.kind == "order-embedding"
    assert [lift_c.functions[i] for i in mor.map] == [(1, 3), (3, 1)]
    mor2, _ = universal_embed(coalg, u)
    assert mor2.map == mor.map


def test_phi_rejects_wrong_source_chain():
    coalg = mset_as_weak_coalgebra(_fixed_point())
    u = ChainEmbedding(omega(2), omega(4), (0, 1))
    with pytest.raises(InputError):
        phi(u, coalg)


def test_check_pa_exhaustive_small_z2():
    """(PA) with v = f for all small ordered Z2-sets and chain targets."""
    ctx = MSetContext(z2(), ordered=True)
    objs = [o for o in ctx.objects(2)]
    checked = 0
    for a_star in objs:
        for b_star in objs:
            embeddings = enumerate_embeddings(a_star, b_star)
            if not embeddings:
                continue
            b_coalg = mset_as_weak_coalgebra(b_star)
            a_coalg = mset_as_weak_coalgebra(a_star)
            for c_size in range(b_star.size, 4):
                for u_map in _increasing_maps(b_star.size, c_size):
                    u = ChainEmbedding(b_coalg.carrier_chain, omega(c_size),
                                       u_map)
                    for f in embeddings:
                        ok, v = check_PA(u, f.map, a_coalg, b_coalg)
                        assert ok and v == f.map
                        checked += 1
    assert checked > 0


def _increasing_maps(n, m):
    from itertools import combinations
    return list(combinations(range(m), n))


def test_transport_witness_fixed_points():
    u_star = _fixed_point(("u",))
    v_star = _fixed_point(("v0", "v1"))
    result = transport_witness(u_star, v_star, 2)
    assert len(result.chain_witness) == 3
    assert result.lift.lifted.size == 9
    assert result.certified == "holds"


def test_transport_witness_budget_exhausted():
    u_star = _fixed_point(("u",))
    v_star = _fixed_point(("v0", "v1"))
    with pytest.raises(NoChainWitnessInBudget):
        transport_witness(u_star, v_star, 2, chain_witness_budget=2)
