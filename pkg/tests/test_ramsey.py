"""The arrow decision engine and degree probes."""

from itertools import product

import pytest

from msetramsey.chains import omega
from msetramsey.mset import validate_mset, with_order
from msetramsey.monoid import trivial_monoid, z2
from msetramsey.ramsey import (ChainContext, Coloring, ForestContext,
                               MSetContext, SMALL_BUDGET, TINY_BUDGET,
                               _search_bad_coloring, coloring_is_bad,
                               composite_images, compose_map, find_witness,
                               holds_arrow, probe_small_degree)


def test_compose_map_is_pointwise():
    assert compose_map((3, 4, 5), (0, 2)) == (3, 5)


def test_coloring_validates_range():
    with pytest.raises(ValueError):
        Coloring((0, 2), 2)
    Coloring((0, 1, 1), 2)


def test_composite_images_small_chain_instance():
    ctx = ChainContext()
    hom_ac, hom_ab, hom_bc, images = composite_images(
        omega(1), omega(2), omega(3), ctx)
    assert len(hom_ac) == 3 and len(hom_ab) == 2 and len(hom_bc) == 3
    # w = {0,1}: its copies of the point are positions 0 and 1
    w_index = hom_bc.index((0, 1))
    assert images[w_index] == (0, 1)


def _oracle_has_bad_coloring(n, k, t, images):
    return any(coloring_is_bad(colors, images, t)
               for colors in product(range(k), repeat=n))


@pytest.mark.parametrize("sizes,k,t", [
    ((1, 2, 3), 2, 1), ((1, 2, 4), 3, 1), ((2, 3, 4), 2, 1),
    ((2, 3, 5), 2, 1), ((1, 2, 3), 2, 2), ((2, 2, 4), 2, 1)])
def test_search_agrees_with_naive_oracle(sizes, k, t):
    sa, sb, sc = sizes
    ctx = ChainContext()
    _, _, _, images = composite_images(omega(sa), omega(sb), omega(sc), ctx)
    n = len(ctx.hom(omega(sa), omega(sc)))
    found = _search_bad_coloring(n, k, t, images)
    assert (found is not None) == _oracle_has_bad_coloring(n, k, t, images)
    if found is not None:
        assert coloring_is_bad(found, images, t)


def test_search_returns_least_canonical_bad_coloring():
    ctx = ChainContext()
    _, _, _, images = composite_images(omega(2), omega(3), omega(5), ctx)
    n = 10
    found = _search_bad_coloring(n, 2, 1, images)
    canonical = [c for c in product(range(2), repeat=n)
                 if coloring_is_bad(c, images, 1)]
    assert found == min(canonical)


def test_pigeonhole_arrows_on_points():
    ctx = ChainContext()
    # a mono pair among c points with k colors exists iff c > k
    assert holds_arrow(omega(1), omega(2), omega(3), 2, 1, ctx).status == "holds"
    v = holds_arrow(omega(1), omega(2), omega(2), 2, 1, ctx)
    assert v.status == "refuted"
    assert coloring_is_bad(v.bad_coloring.colors,
                           composite_images(omega(1), omega(2), omega(2),
                                            ctx)[3], 1)


def test_vacuous_cases_and_priority():
    ctx = ChainContext()
    # hom(A, C) empty: holds, even though hom(B, C) is empty too
    v = holds_arrow(omega(3), omega(2), omega(1), 2, 1, ctx)
    assert v.status == "holds" and v.reason == "empty_hom_A_C"
    # hom(B, C) empty with hom(A, C) nonempty: refuted
    v = holds_arrow(omega(1), omega(3), omega(2), 2, 1, ctx)
    assert v.status == "refuted" and v.reason == "empty_hom_B_C"
    # t >= k is trivially satisfied
    v = holds_arrow(omega(1), omega(2), omega(2), 2, 2, ctx)
    assert v.status == "holds" and v.reason == "t_not_below_k"


def test_sampling_path_is_deterministic_and_marked():
    ctx = ChainContext()
    v1 = holds_arrow(omega(1), omega(2), omega(2), 2, 1, ctx, cap=0, seed=5)
    v2 = holds_arrow(omega(1), omega(2), omega(2), 2, 1, ctx, cap=0, seed=5)
    assert v1.status == v2.status == "refuted"
    assert v1.bad_coloring.colors == v2.bad_coloring.colors
    v3 = holds_arrow(omega(1), omega(2), omega(3), 2, 1, ctx, cap=0,
                     sample_trials=10)
    assert v3.status == "inconclusive"


def test_find_witness_first_success():
    ctx = ChainContext()
    c, verdict = find_witness(omega(1), omega(2), 2, 1, ctx,
                              (omega(n) for n in range(1, 6)))
    assert len(c) == 3 and verdict.status == "holds"
    c, bound = find_witness(omega(1), omega(2), 5, 1, ctx,
                            (omega(n) for n in range(1, 4)))
    assert c is None and bound == 3


def test_mset_context_objects_counts():
    ctx = MSetContext(trivial_monoid())
    assert len(ctx.objects(2)) == 2  # one object per carrier size
    ctx2 = MSetContext(z2())
    # carrier 1: identity action only; carrier 2: the two involutions
    sizes = [ms.size for ms in ctx2.objects(2)]
    assert sizes.count(1) == 1 and sizes.count(2) == 2


def test_mset_context_hom_and_arrow():
    m = trivial_monoid()
    one = with_order(validate_mset(m, (0,), [(0,)]))
    two = with_order(validate_mset(m, (0, 1), [(0, 1)]))
    three = with_order(validate_mset(m, (0, 1, 2), [(0, 1, 2)]))
    ctx = MSetContext(m, ordered=True)
    assert len(ctx.hom(one, three)) == 3
    assert holds_arrow(one, two, three, 2, 1, ctx).status == "holds"


def test_forest_context_hom():
    from msetramsey.forests import make_forest
    ctx = ForestContext(ordered=True)
    single = make_forest(("r",), (0,), (0,))
    path2 = make_forest(("r", "s"), (0, 0), (0, 1))
    homs = ctx.hom(single, path2)
    # a root must land on a root
    assert homs == [(0,)]


def test_probe_small_degree_point_mset():
    m = trivial_monoid()
    one = validate_mset(m, (0,), [(0,)])
    probe = probe_small_degree(one, MSetContext(m), budget=TINY_BUDGET)
    assert probe.lower == 1 and probe.upper == 1


def test_probe_small_degree_two_point_mset():
    m = trivial_monoid()
    two = validate_mset(m, (0, 1), [(0, 1)])
    probe = probe_small_degree(two, MSetContext(m), budget=SMALL_BUDGET)
    assert probe.lower == 2 and probe.upper == 2
    assert probe.evidence["defeats"]
