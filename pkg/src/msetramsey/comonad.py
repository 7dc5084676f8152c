"""Functors with comultiplication and their (weak) coalgebras.

Two built-in functors: the monoid-action functor E(A) = A^M and the
duplicate-free list functor on chains (with the plain list comonad
available for explicitly given sequences). E-values are plain tuples, so
delta and epsilon apply uniformly at every nesting level; this is what
makes the law checks one-liners.

Composition order: we use delta(h)(m1)(m2) = h(m1 * m2). The quoted
reversed order breaks the Eilenberg-Moore square for noncommutative
monoids; both agree on commutative ones.
"""

from dataclasses import dataclass, field
from itertools import permutations, product

from .errors import (EmptySequence, InputError, NotEMCoalgebra, SizeOverflow)

DEFAULT_CAP = 10 ** 6


class MonoidActionFunctor:
    """E(A) = A^M; E(f)(h) = f . h; delta(h)[m1][m2] = h[m1 * m2]; eps(h) = h[1]."""

    name = "monoid_action"

    def __init__(self, monoid):
        self.monoid = monoid

    def carrier(self, elements, cap=DEFAULT_CAP):
        elements = list(elements)
        if len(elements) ** self.monoid.size > cap:
            raise SizeOverflow("E(A)", len(elements) ** self.monoid.size, cap)
        return [tuple(h) for h in product(elements, repeat=self.monoid.size)]

    def lift(self, f, h):
        return tuple(f(x) for x in h)

    def delta(self, h):
        m = self.monoid
        return tuple(tuple(h[m.mul(m1, m2)] for m2 in range(m.size))
                     for m1 in range(m.size))

    def epsilon(self, h):
        return h[self.monoid.identity]


class DistinctListFunctor:
    """E(A) = A-dagger: finite duplicate-free sequences (empty included).

    delta is the suffix list; epsilon (head) is only defined on nonempty
    sequences and no counit claim is made for this functor.
    """

    name = "duplicate_free_list"

    def carrier(self, elements, cap=DEFAULT_CAP):
        elements = list(elements)
        out = [()]
        for r in range(1, len(elements) + 1):
            out.extend(permutations(elements, r))
        if len(out) > cap:
            raise SizeOverflow("E(A)", len(out), cap)
        return out

    def lift(self, f, seq):
        return tuple(f(x) for x in seq)

    def delta(self, seq):
        return tuple(tuple(seq[i:]) for i in range(len(seq)))

    def epsilon(self, seq):
        if not seq:
            raise EmptySequence("epsilon of the empty sequence")
        return seq[0]


class ListFunctor:
    """The list comonad E(A) = A^+, materialized up to a length cap."""

    name = "list"

    def __init__(self, max_length=3):
        self.max_length = max_length

    def carrier(self, elements, cap=DEFAULT_CAP):
        elements = list(elements)
        out = []
        for r in range(1, self.max_length + 1):
            out.extend(product(elements, repeat=r))
        if len(out) > cap:
            raise SizeOverflow("E(A)", len(out), cap)
        return out

    def lift(self, f, seq):
        return tuple(f(x) for x in seq)

    def delta(self, seq):
        if not seq:
            raise EmptySequence("delta of the empty sequence")
        return tuple(tuple(seq[i:]) for i in range(len(seq)))

    def epsilon(self, seq):
        if not seq:
            raise EmptySequence("epsilon of the empty sequence")
        return seq[0]


def delta_action(m, h):
    """delta for the monoid-action functor, on one function table."""
    return MonoidActionFunctor(m).delta(tuple(h))


def epsilon_action(m, h):
    return tuple(h)[m.identity]


def delta_list(seq):
    """Suffix list of a nonempty sequence."""
    if not seq:
        raise EmptySequence("delta of the empty sequence")
    return tuple(tuple(seq[i:]) for i in range(len(seq)))


def epsilon_list(seq):
    if not seq:
        raise EmptySequence("epsilon of the empty sequence")
    return seq[0]


@dataclass
class LawReport:
    laws: list = field(default_factory=list)  # (name, ok, counterexample)

    def record(self, name, counterexample=None):
        self.laws.append((name, counterexample is None, counterexample))

    @property
    def all_pass(self):
        return all(ok for _, ok, _ in self.laws)

    def failures(self):
        return [(name, cx) for name, ok, cx in self.laws if not ok]

    def to_json(self):
        return [{"law": name, "passes": ok,
                 "counterexample": repr(cx) if cx is not None else None}
                for name, ok, cx in self.laws]


def _first(iterable, pred):
    for x in iterable:
        if pred(x):
            return x
    return None


def check_comonad_laws(functor, elements, delta=None, epsilon=None,
                       cap=DEFAULT_CAP, with_counit=True):
    """Exhaustively check functor + comultiplication (+ counit) laws.

    `delta`/`epsilon` override the functor's own maps, which is how the
    mutation tests inject corrupted structure.
    """
    elements = list(elements)
    delta = delta or functor.delta
    epsilon = epsilon or functor.epsilon
    ea = functor.carrier(elements, cap=cap)
    report = LawReport()

    # functor laws on E(A)
    cx = _first(ea, lambda h: functor.lift(lambda x: x, h) != h)
    report.record("functor_preserves_identity", cx)
    f = {x: elements[min(i + 1, len(elements) - 1)]
         for i, x in enumerate(elements)}
    g = {x: elements[0] for x in elements}
    cx = _first(ea, lambda h: functor.lift(lambda x: g[f[x]], h)
                != functor.lift(g.get, functor.lift(f.get, h)))
    report.record("functor_preserves_composition", cx)

    # delta lands in EE(A) and is coassociative
    cx = _first(ea, lambda h: delta(delta(h))
                != functor.lift(delta, delta(h)))
    report.record("coassociativity", cx)

    if with_counit:
        cx = _first(ea, lambda h: functor.lift(epsilon, delta(h)) != h)
        report.record("counit_left", cx)
        cx = _first(ea, lambda h: epsilon(delta(h)) != h)
        report.record("counit_right", cx)
    return report


@dataclass(frozen=True)
class Coalgebra:
    functor: object
    carrier: tuple      # element labels; structure values are over these
    structure: tuple    # structure[i] = E-value for carrier[i]

    def structure_of(self, label):
        return self.structure[self.carrier.index(label)]

    def as_map(self):
        table = dict(zip(self.carrier, self.structure))
        return table.__getitem__

    def to_json(self):
        return {"functor": self.functor.name,
                "carrier": list(self.carrier),
                "structure": [list(v) for v in self.structure]}


@dataclass(frozen=True)
class CoalgebraHom:
    source: Coalgebra
    target: Coalgebra
    map: dict  # source label -> target label


def validate_coalgebra_hom(source, target, f):
    """Check beta . f = E(f) . alpha pointwise."""
    functor = source.functor
    for a, va in zip(source.carrier, source.structure):
        lhs = target.structure_of(f[a])
        rhs = functor.lift(lambda x: f[x], va)
        if lhs != rhs:
            raise InputError(f"coalgebra-hom square fails at {a!r}")
    return CoalgebraHom(source, target, dict(f))


def classify_coalgebra(c, delta=None, epsilon=None):
    """Return ('EM'|'weak_EM_only'|'plain', witnesses for failed squares)."""
    functor = c.functor
    delta = delta or functor.delta
    epsilon = epsilon or functor.epsilon
    alpha = c.as_map()
    witnesses = {}
    for a, va in zip(c.carrier, c.structure):
        if delta(va) != functor.lift(alpha, va):
            witnesses.setdefault("comultiplication_square", a)
            break
    for a, va in zip(c.carrier, c.structure):
        try:
            ok = epsilon(va) == a
        except EmptySequence:
            ok = False
        if not ok:
            witnesses.setdefault("counit_triangle", a)
            break
    if "comultiplication_square" in witnesses:
        return "plain", witnesses
    if "counit_triangle" in witnesses:
        return "weak_EM_only", witnesses
    return "EM", witnesses


def mset_to_coalgebra(ms):
    """The EM coalgebra of an M-set: alpha(a)(m) = m . a."""
    functor = MonoidActionFunctor(ms.monoid)
    structure = tuple(
        tuple(ms.carrier[ms.act(m, a)] for m in range(ms.monoid.size))
        for a in range(ms.size))
    return Coalgebra(functor, tuple(ms.carrier), structure)


def coalgebra_to_mset(c):
    """The M-set of an EM coalgebra over the monoid-action functor."""
    from .mset import validate_mset
    status, witnesses = classify_coalgebra(c)
    if status != "EM":
        raise NotEMCoalgebra(f"coalgebra classifies as {status}: {witnesses}")
    m = c.functor.monoid
    index = {x: i for i, x in enumerate(c.carrier)}
    action = tuple(tuple(index[c.structure[a][g]] for a in range(len(c.carrier)))
                   for g in range(m.size))
    return validate_mset(m, c.carrier, action)


def cofree_coalgebra(functor, elements, cap=DEFAULT_CAP):
    """(E(X), delta_X) with the E(X)-elements themselves as carrier labels."""
    ex = functor.carrier(elements, cap=cap)
    return Coalgebra(functor, tuple(ex), tuple(functor.delta(h) for h in ex))


def sharp_lift(c, f, elements, cap=DEFAULT_CAP):
    """The unique lift f# = E(f) . alpha into the cofree coalgebra on X.

    `f` maps carrier labels of c to elements of X. Asserts the counit
    identity and the coalgebra-hom square.
    """
    status, _ = classify_coalgebra(c)
    if status != "EM":
        raise NotEMCoalgebra(f"coalgebra classifies as {status}")
    functor = c.functor
    target = cofree_coalgebra(functor, elements, cap=cap)
    sharp = {a: functor.lift(lambda x: f[x], va)
             for a, va in zip(c.carrier, c.structure)}
    for a in c.carrier:
        if functor.epsilon(sharp[a]) != f[a]:
            raise InputError(f"epsilon . f# != f at {a!r}")
    return validate_coalgebra_hom(c, target, sharp)
