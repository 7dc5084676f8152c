"""Finite M-sets, ordered M-sets, unary algebras and their embeddings.

Carriers are indexed 0..n-1 with user labels kept in a side table. The
action table is indexed action[m][a]. An ordered M-set carries a
permutation of the carrier listing it in increasing order; the unordered
code path is the same engine with the order checks disabled.
"""

from dataclasses import dataclass
from itertools import product

from .chains import Chain
from .errors import (CompositionFails, IdentityAxiomFails, InputError,
                     MonoidMismatch, UnknownSymbol)
from .monoid import FiniteMonoid


@dataclass(frozen=True)
class MSet:
    monoid: FiniteMonoid
    carrier: tuple   # labels
    action: tuple    # action[m][a] = alpha(m, a), positional

    @property
    def size(self):
        return len(self.carrier)

    def act(self, m, a):
        return self.action[m][a]

    def to_json(self):
        return {"monoid": self.monoid.to_json(),
                "carrier": list(self.carrier),
                "action": [list(row) for row in self.action]}


@dataclass(frozen=True)
class OrderedMSet:
    base: MSet
    order: tuple  # carrier indices listed in increasing order

    def __post_init__(self):
        if sorted(self.order) != list(range(self.base.size)):
            raise InputError("order is not a permutation of the carrier")

    @property
    def monoid(self):
        return self.base.monoid

    @property
    def carrier(self):
        return self.base.carrier

    @property
    def size(self):
        return self.base.size

    def act(self, m, a):
        return self.base.act(m, a)

    @property
    def positions(self):
        """positions[a] = rank of carrier element a in the order."""
        pos = [0] * self.base.size
        for rank, a in enumerate(self.order):
            pos[a] = rank
        return tuple(pos)

    def carrier_chain(self):
        """The carrier as a chain, listed in increasing order."""
        return Chain(tuple(self.base.carrier[a] for a in self.order))

    def to_json(self):
        d = self.base.to_json()
        d["order"] = [self.base.carrier[a] for a in self.order]
        return d


def validate_mset(monoid, carrier, action, order=None):
    """Check the two action axioms; optionally attach a total order.

    `order` is given as carrier labels in increasing order.
    """
    carrier = tuple(carrier)
    action = tuple(tuple(row) for row in action)
    n = len(carrier)
    if len(action) != monoid.size or any(len(row) != n for row in action):
        raise InputError("action table dimensions do not match monoid/carrier")
    for row in action:
        for x in row:
            if not (0 <= x < n):
                raise InputError(f"action value {x} out of carrier range")
    e = monoid.identity
    for a in range(n):
        if action[e][a] != a:
            raise IdentityAxiomFails(carrier[a])
    for m1, m2, a in product(range(monoid.size), range(monoid.size), range(n)):
        if action[m1][action[m2][a]] != action[monoid.mul(m2, m1)][a]:
            raise CompositionFails(m1, m2, carrier[a])
    ms = MSet(monoid, carrier, action)
    if order is None:
        return ms
    if sorted(order) != sorted(carrier):
        raise InputError("order does not list the carrier labels")
    return OrderedMSet(ms, tuple(carrier.index(lab) for lab in order))


def with_order(ms, order_indices=None):
    """Wrap an MSet with a total order (default: carrier index order)."""
    if order_indices is None:
        order_indices = tuple(range(ms.size))
    return OrderedMSet(ms, tuple(order_indices))


@dataclass(frozen=True)
class MSetMorphism:
    source: object   # MSet or OrderedMSet
    target: object
    map: tuple       # target index per source index
    kind: str        # "morphism" | "embedding" | "order-embedding"

    def __call__(self, a):
        return self.map[a]

    def compose(self, inner):
        return MSetMorphism(inner.source, self.target,
                            tuple(self.map[a] for a in inner.map), self.kind)


def _base(x):
    return x.base if isinstance(x, OrderedMSet) else x


def check_equivariant(f_map, a, b):
    """First (m, x) where f(alpha(m,x)) != beta(m, f(x)), or None."""
    a, b = _base(a), _base(b)
    for m in range(a.monoid.size):
        for x in range(a.size):
            if f_map[a.act(m, x)] != b.act(m, f_map[x]):
                return (m, x)
    return None


def validate_morphism(source, target, f_map, kind="morphism"):
    if _base(source).monoid is not _base(target).monoid and \
            _base(source).monoid != _base(target).monoid:
        raise MonoidMismatch("source and target live over different monoids")
    bad = check_equivariant(f_map, source, target)
    if bad is not None:
        raise InputError(f"map is not equivariant at (m, a) = {bad}")
    if kind in ("embedding", "order-embedding"):
        if len(set(f_map)) != len(f_map):
            raise InputError("map is not injective")
    if kind == "order-embedding":
        spos, tpos = source.positions, target.positions
        for x in range(len(f_map)):
            for y in range(len(f_map)):
                if (spos[x] < spos[y]) != (tpos[f_map[x]] < tpos[f_map[y]]):
                    raise InputError(
                        f"map is not order-preserving at pair ({x},{y})")
    return MSetMorphism(source, target, tuple(f_map), kind)


def enumerate_embeddings(a, b):
    """All embeddings a -> b (order-embeddings when both are ordered).

    Backtracking over the carrier with equivariance propagation; the
    result is in canonical order (lexicographic in the map table).
    """
    ordered = isinstance(a, OrderedMSet)
    if ordered != isinstance(b, OrderedMSet):
        raise MonoidMismatch("cannot mix ordered and unordered M-sets")
    ab, bb = _base(a), _base(b)
    if ab.monoid != bb.monoid:
        raise MonoidMismatch("source and target live over different monoids")
    n, msize = ab.size, ab.monoid.size
    if ordered:
        spos, tpos = a.positions, b.positions
    kind = "order-embedding" if ordered else "embedding"
    results = []
    assign = [-1] * n

    def propagate(pairs, trail):
        """Close tentative assignments under the action; False on clash."""
        queue = list(pairs)
        while queue:
            x, y = queue.pop()
            if assign[x] == y:
                continue
            if assign[x] != -1:
                return False
            if y in assign:
                return False  # injectivity
            if ordered:
                for z in range(n):
                    if assign[z] == -1 or z == x:
                        continue
                    if (spos[z] < spos[x]) != (tpos[assign[z]] < tpos[y]):
                        return False
            assign[x] = y
            trail.append(x)
            for m in range(msize):
                queue.append((ab.act(m, x), bb.act(m, y)))
        return True

    def extend():
        try:
            x = assign.index(-1)
        except ValueError:
            results.append(MSetMorphism(a, b, tuple(assign), kind))
            return
        for y in range(bb.size):
            trail = []
            if propagate([(x, y)], trail):
                extend()
            for z in trail:
                assign[z] = -1

    extend()
    results.sort(key=lambda mor: mor.map)
    return results


@dataclass(frozen=True)
class UnaryAlgebra:
    """A unary algebra stored by its generator self-maps.

    Word actions are computed by composition on demand; no free monoid
    is ever materialized.
    """

    alphabet: tuple
    carrier: tuple
    actions: dict    # symbol -> tuple (self-map on carrier positions)

    def __post_init__(self):
        for s in self.alphabet:
            if s not in self.actions:
                raise InputError(f"no generator action for symbol {s!r}")
            row = self.actions[s]
            if len(row) != len(self.carrier) or \
                    any(not (0 <= x < len(self.carrier)) for x in row):
                raise InputError(f"generator action for {s!r} is malformed")


def evaluate_word(algebra, word, a):
    """Apply a word with the leftmost symbol acting first."""
    for s in word:
        if s not in algebra.actions:
            raise UnknownSymbol(s)
        a = algebra.actions[s][a]
    return a


def cofree_mset(x, m, ordered=False):
    """The cofree M-set on generators x: carrier x^M, gamma(m,h)(m') = h(m m').

    `x` is a Chain (ordered=True orders the carrier lexicographically by
    the monoid's well-order) or any sized collection.
    """
    labels = tuple(x.labels) if isinstance(x, Chain) else tuple(x)
    nx, nm = len(labels), m.size
    functions = list(product(range(nx), repeat=nm))  # h[m'] = value position
    index = {h: i for i, h in enumerate(functions)}
    action = tuple(
        tuple(index[tuple(h[m.mul(g, mp)] for mp in range(nm))]
              for h in functions)
        for g in range(nm))
    carrier = tuple(tuple(labels[v] for v in h) for h in functions)
    ms = MSet(m, carrier, action)
    if not ordered:
        return ms
    order = sorted(range(len(functions)),
                   key=lambda i: tuple(functions[i][w] for w in m.well_order))
    return OrderedMSet(ms, tuple(order))


def generated_sub_mset(b, seed):
    """Smallest action-closed superset of `seed`, with inclusion morphism."""
    bb = _base(b)
    closed = set(seed)
    frontier = list(seed)
    while frontier:
        a = frontier.pop()
        for m in range(bb.monoid.size):
            y = bb.act(m, a)
            if y not in closed:
                closed.add(y)
                frontier.append(y)
    keep = sorted(closed)
    back = {a: i for i, a in enumerate(keep)}
    action = tuple(tuple(back[bb.act(m, a)] for a in keep)
                   for m in range(bb.monoid.size))
    sub = MSet(bb.monoid, tuple(bb.carrier[a] for a in keep), action)
    if isinstance(b, OrderedMSet):
        pos = b.positions
        sub = OrderedMSet(sub, tuple(
            sorted(range(len(keep)), key=lambda i: pos[keep[i]])))
    inclusion = MSetMorphism(sub, b, tuple(keep),
                             "order-embedding" if isinstance(b, OrderedMSet)
                             else "embedding")
    return sub, inclusion
