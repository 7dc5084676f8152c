"""Finite chains and their embeddings.

A chain is stored as a tuple of distinct labels; tuple position *is* the
strict order. All operations below work with positions (0..n-1) where
possible and keep labels as a presentation layer only.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .errors import InputError

LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class Chain:
    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(set(self.labels)) != len(self.labels):
            raise InputError(f"chain labels are not distinct: {self.labels}")

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def position(self, label):
        return self.labels.index(label)

    def to_json(self):
        return list(self.labels)


def omega(n):
    """The finite prefix {0 < 1 < ... < n-1} of the natural numbers."""
    return Chain(tuple(range(n)))


@dataclass(frozen=True)
class ChainEmbedding:
    """A strictly increasing map between chains, stored positionally."""

    source: Chain
    target: Chain
    map: tuple  # map[i] = target position of the i-th source element

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))
        if len(self.map) != len(self.source):
            raise InputError("embedding map is not total on the source chain")
        for i in range(len(self.map) - 1):
            if not self.map[i] < self.map[i + 1]:
                raise InputError(
                    f"embedding is not strictly increasing at positions {i},{i+1}"
                )
        if self.map and not (0 <= self.map[0] and self.map[-1] < len(self.target)):
            raise InputError("embedding map leaves the target chain")

    def __call__(self, pos):
        return self.map[pos]

    def compose(self, inner):
        """self . inner, where inner ends where self starts."""
        if inner.target is not self.source and inner.target != self.source:
            raise InputError("embeddings do not compose: chain mismatch")
        return ChainEmbedding(inner.source, self.target,
                              tuple(self.map[p] for p in inner.map))


def identity_embedding(chain):
    return ChainEmbedding(chain, chain, tuple(range(len(chain))))


def ordinal_sum(family):
    """Concatenate chains; elements become (index, label) pairs."""
    labels = []
    for i, chain in enumerate(family):
        labels.extend((i, lab) for lab in chain.labels)
    return Chain(tuple(labels))


def lex_product(family):
    """Cartesian product ordered by first position of disagreement."""
    if not family:
        return Chain(((),))
    return Chain(tuple(product(*(c.labels for c in family))))


def lex_compare(f, g, s_chain, a_chain):
    """Compare two functions S -> A at the <-least point of disagreement.

    f and g map labels of s_chain to labels of a_chain.
    """
    for s in s_chain.labels:
        if s not in f or s not in g:
            raise InputError(f"function not total on the index chain at {s!r}")
        fa, ga = a_chain.position(f[s]), a_chain.position(g[s])
        if fa != ga:
            return LESS if fa < ga else GREATER
    return EQUAL


def enumerate_chain_embeddings(a_chain, c_chain):
    """All strictly increasing injections, in canonical (lex) order."""
    n, m = len(a_chain), len(c_chain)
    return [ChainEmbedding(a_chain, c_chain, comb)
            for comb in combinations(range(m), n)]
