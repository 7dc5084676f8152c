"""Finite monoids given by multiplication table, and word truncations.

The well-order attached to a monoid always lists the identity first; the
lexicographic lift machinery depends on that and nothing else.
"""

from dataclasses import dataclass, field
from itertools import product

from .errors import BadIdentity, DepthOverflow, InputError, NotAssociative


@dataclass(frozen=True)
class FiniteMonoid:
    table: tuple       # table[i][j] = i * j
    identity: int
    well_order: tuple  # permutation of 0..size-1, identity first

    @property
    def size(self):
        return len(self.table)

    def mul(self, i, j):
        return self.table[i][j]

    def to_json(self):
        return {"size": self.size, "identity": self.identity,
                "table": [list(row) for row in self.table],
                "well_order": list(self.well_order)}


def validate_monoid(size, table, identity, well_order=None):
    """Check the monoid axioms and return a validated FiniteMonoid."""
    table = tuple(tuple(row) for row in table)
    if len(table) != size or any(len(row) != size for row in table):
        raise InputError(f"table dimensions do not match size {size}")
    if not (0 <= identity < size):
        raise InputError(f"identity index {identity} out of range")
    for row in table:
        for x in row:
            if not (0 <= x < size):
                raise InputError(f"table entry {x} out of range")
    for i in range(size):
        if table[identity][i] != i or table[i][identity] != i:
            raise BadIdentity(i)
    for i, j, k in product(range(size), repeat=3):
        if table[table[i][j]][k] != table[i][table[j][k]]:
            raise NotAssociative(i, j, k)
    if well_order is None:
        well_order = (identity,) + tuple(
            i for i in range(size) if i != identity)
    else:
        well_order = tuple(well_order)
        if sorted(well_order) != list(range(size)):
            raise InputError("well_order is not a permutation of the elements")
        if well_order[0] != identity:
            raise InputError("well_order must list the identity first")
    return FiniteMonoid(table, identity, well_order)


def trivial_monoid():
    return validate_monoid(1, [[0]], 0)


def cyclic_group(n):
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return validate_monoid(n, table, 0)


def z2():
    return cyclic_group(2)


def chain_semilattice(n):
    """The commutative monoid {0 > 1 > ... > n-1} under max-of-indices.

    Index 0 is the identity; every element is idempotent.
    """
    table = [[max(i, j) for j in range(n)] for i in range(n)]
    return validate_monoid(n, table, 0)


def left_zero_monoid(n):
    """Identity adjoined to the left-zero semigroup on n elements.

    Noncommutative for n >= 2; useful for pinning composition order.
    """
    size = n + 1
    table = [list(range(size))] + [[i] * size for i in range(1, size)]
    return validate_monoid(size, table, 0)


def _words_up_to(alphabet, depth):
    words = [()]
    layer = [()]
    for _ in range(depth):
        layer = [w + (s,) for w in layer for s in alphabet]
        words.extend(layer)
    return words


@dataclass(frozen=True)
class WordTruncation:
    """All words of length <= depth over a unary alphabet, in length-lex order.

    Presents the same surface as FiniteMonoid (size / identity / mul /
    well_order) so the lex-lift code can index by words, but mul raises
    DepthOverflow instead of wrapping around.
    """

    alphabet: tuple
    depth: int
    words: tuple = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(
            self, "words", tuple(_words_up_to(self.alphabet, self.depth)))

    @property
    def size(self):
        return len(self.words)

    @property
    def identity(self):
        return 0

    @property
    def well_order(self):
        # words are generated in length-lex order, empty word first
        return tuple(range(self.size))

    def word_index(self, word):
        word = tuple(word)
        try:
            return self.words.index(word)
        except ValueError:
            raise InputError(f"word {word!r} not in the truncation") from None

    def mul(self, i, j):
        u, v = self.words[i], self.words[j]
        if len(u) + len(v) > self.depth:
            raise DepthOverflow(u, v, self.depth)
        return self.words.index(u + v)


def multiply_word(m, u, v):
    """Product in a FiniteMonoid (table lookup) or WordTruncation (concat)."""
    if isinstance(m, WordTruncation):
        return m.words[m.mul(m.word_index(u), m.word_index(v))]
    return m.mul(u, v)
