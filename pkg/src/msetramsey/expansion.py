"""Order expansions: forgetting, fibers, restrictions and degree sums.

Only the ordered -> unordered expansion is modeled; every use in the
main results is of this form. Fibers are raw (isomorphic orderings are
not merged), matching the sum the degree bounds are stated over.
"""

from itertools import permutations

from .errors import IncompleteFiber, NotAnEmbedding
from .mset import OrderedMSet, check_equivariant


def forget_order(a_star):
    return a_star.base


def fibers(a):
    """All |A|! orderings of an unordered M-set."""
    return [OrderedMSet(a, perm) for perm in permutations(range(a.size))]


def order_key(a_star):
    """Hashable identity of a fiber element (its order permutation)."""
    return a_star.order


def _is_order_embedding(e_map, a_star, b_star):
    spos, tpos = a_star.positions, b_star.positions
    for x in range(len(e_map)):
        for y in range(len(e_map)):
            if (spos[x] < spos[y]) != (tpos[e_map[x]] < tpos[e_map[y]]):
                return False
    return True


def restrict_along(b_star, e_map, a):
    """The unique ordering of A making e an order-embedding into B*.

    `e_map` is an embedding of the unordered M-set A into forget(B*);
    uniqueness is asserted by sweeping the whole fiber of A.
    """
    if len(set(e_map)) != len(e_map) or check_equivariant(e_map, a, b_star.base):
        raise NotAnEmbedding("map is not an embedding of M-sets")
    tpos = b_star.positions
    order = tuple(sorted(range(a.size), key=lambda x: tpos[e_map[x]]))
    a_star = OrderedMSet(a, order)
    if not _is_order_embedding(e_map, a_star, b_star):
        raise NotAnEmbedding("pulled-back order does not embed")
    admitting = [f for f in fibers(a) if _is_order_embedding(e_map, f, b_star)]
    assert len(admitting) == 1 and admitting[0].order == order
    return a_star


def check_reasonable(instances):
    """For each (e, A*, B): find B* in the fiber of B admitting e.

    `instances` is an iterable of (e_map, a_star, b) triples where b is
    the unordered target. Returns (True, None) or (False, witness).
    """
    for e_map, a_star, b in instances:
        image = set(e_map)
        spos = a_star.positions
        # place non-image elements after the (order-transported) image
        rank = {}
        for x in range(a_star.size):
            rank[e_map[x]] = spos[x]
        nxt = a_star.size
        for y in range(b.size):
            if y not in image:
                rank[y] = nxt
                nxt += 1
        b_star = OrderedMSet(b, tuple(sorted(range(b.size),
                                             key=lambda y: rank[y])))
        if _is_order_embedding(e_map, a_star, b_star):
            continue
        found = any(_is_order_embedding(e_map, a_star, f)
                    for f in fibers(b))
        if not found:
            return False, (e_map, a_star, b)
    return True, None


def degree_sum_bound(a, ordered_degrees):
    """Sum the fiber degrees; the whole fiber must be covered.

    `ordered_degrees` maps order_key(A*) -> degree of that ordering.
    """
    total = 0
    for a_star in fibers(a):
        key = order_key(a_star)
        if key not in ordered_degrees or ordered_degrees[key] is None:
            raise IncompleteFiber(f"no degree for ordering {key}")
        total += ordered_degrees[key]
    return total
