"""The arrow relation C -> (B)^A_{k,t}: decision engine and degree probes.

A coloring of hom(A, C) is "bad" when every w in hom(B, C) sees more
than t colors on w . hom(A, B). The arrow holds iff no bad coloring
exists. The search below assigns colors to hom(A, C) positions one at a
time and prunes a branch as soon as some w can no longer be pushed above
t colors by any completion; first occurrences of colors are forced into
increasing order, which cuts a k! symmetry factor.
"""

import random
from dataclasses import dataclass, field
from itertools import product

from .chains import enumerate_chain_embeddings, omega
from .errors import SizeOverflow
from .mset import enumerate_embeddings, validate_mset, with_order

DEFAULT_EXHAUSTIVE_CAP = 64
DEFAULT_SAMPLE_TRIALS = 2000


class ChainContext:
    """Hom-sets of finite chains (strictly increasing injections)."""

    name = "chains"

    def hom(self, a, c):
        return [e.map for e in enumerate_chain_embeddings(a, c)]

    def theory_degree_upper(self, a):
        # chains are a Ramsey category (Finite Ramsey Theorem)
        return 1, "finite_ramsey_theorem"

    def objects(self, max_size, like=None):
        return [omega(n) for n in range(1, max_size + 1)]


class MSetContext:
    """Hom-sets of (ordered) M-sets over a fixed monoid."""

    def __init__(self, monoid, ordered=False):
        self.monoid = monoid
        self.ordered = ordered
        self.name = "ordered_msets" if ordered else "msets"

    def hom(self, a, c):
        return [e.map for e in enumerate_embeddings(a, c)]

    def theory_degree_upper(self, a):
        if self.ordered:
            # ordered finite M-sets form a Ramsey category
            return 1, "ordered_msets_ramsey"
        bound = 1
        for i in range(2, a.size + 1):
            bound *= i
        return bound, "order_expansion_sum"

    def objects(self, max_size, like=None):
        """All M-sets (with all orders, in the ordered case) up to a size."""
        out = []
        for n in range(1, max_size + 1):
            for action in _all_actions(self.monoid, n):
                ms = validate_mset(self.monoid, tuple(range(n)), action)
                if self.ordered:
                    from itertools import permutations
                    out.extend(with_order(ms, p)
                               for p in permutations(range(n)))
                else:
                    out.append(ms)
        return out


def _all_actions(monoid, n):
    """Every valid action table of M on an n-element carrier."""
    rows = {}
    e = monoid.identity
    candidates = list(product(range(n), repeat=n))
    out = []

    def table_ok(table):
        for m1 in range(monoid.size):
            for m2 in range(monoid.size):
                m21 = monoid.mul(m2, m1)
                for a in range(n):
                    if table[m1][table[m2][a]] != table[m21][a]:
                        return False
        return True

    free = [m for m in range(monoid.size) if m != e]
    for choice in product(candidates, repeat=len(free)):
        table = [None] * monoid.size
        table[e] = tuple(range(n))
        for m, row in zip(free, choice):
            table[m] = row
        if table_ok(table):
            out.append(tuple(table))
    return out


class ForestContext:
    """Hom-sets of (ordered) rooted forests: injective parent-preserving maps."""

    def __init__(self, ordered=True):
        self.ordered = ordered
        self.name = "forests"

    def hom(self, a, c):
        n, m = a.size, c.size
        results = []
        assign = [-1] * n

        def ok(i, y):
            if y in assign:
                return False
            for j in range(n):
                if assign[j] == -1 or j == i:
                    continue
                if self.ordered and (a.order.index(j) < a.order.index(i)) != \
                        (c.order.index(assign[j]) < c.order.index(y)):
                    return False
            return True

        def extend(i):
            if i == n:
                for j in range(n):
                    if assign[a.parent[j]] != c.parent[assign[j]]:
                        return
                results.append(tuple(assign))
                return
            for y in range(m):
                if ok(i, y):
                    assign[i] = y
                    extend(i + 1)
                    assign[i] = -1

        extend(0)
        results.sort()
        return results

    def theory_degree_upper(self, a):
        if self.ordered:
            return 1, "ordered_forests_ramsey"
        bound = 1
        for i in range(2, a.size + 1):
            bound *= i
        return bound, "order_expansion_sum"


def compose_map(w, f):
    """(w . f)[x] = w[f[x]] for positional map tables."""
    return tuple(w[x] for x in f)


@dataclass
class Coloring:
    colors: tuple
    k: int

    def __post_init__(self):
        if any(not (0 <= c < self.k) for c in self.colors):
            raise ValueError("color out of range")


@dataclass
class ArrowVerdict:
    status: str                      # "holds" | "refuted" | "inconclusive"
    bad_coloring: Coloring = None
    reason: str = ""
    witness_stats: dict = field(default_factory=dict)

    def to_json(self):
        d = {"status": self.status, "reason": self.reason,
             "witness_stats": self.witness_stats}
        if self.bad_coloring is not None:
            d["bad_coloring"] = list(self.bad_coloring.colors)
        return d


def composite_images(a, b, c, ctx):
    """For each w in hom(B,C): indices of {w . f : f in hom(A,B)} in hom(A,C)."""
    hom_ac = ctx.hom(a, c)
    index = {f: i for i, f in enumerate(hom_ac)}
    hom_ab = ctx.hom(a, b)
    hom_bc = ctx.hom(b, c)
    images = []
    for w in hom_bc:
        images.append(tuple(sorted({index[compose_map(w, f)]
                                    for f in hom_ab})))
    return hom_ac, hom_ab, hom_bc, images


def coloring_is_bad(colors, images, t):
    """Naive oracle: every w sees more than t colors on its composites."""
    return all(len({colors[i] for i in image}) > t for image in images)


def _search_bad_coloring(n, k, t, images):
    """Least bad coloring in canonical color order, or None.

    Prunes when some w's composite image can no longer exceed t colors,
    and forces first occurrences of colors into increasing order.
    """
    if not images:
        return None
    pos_to_ws = [[] for _ in range(n)]
    for wi, image in enumerate(images):
        for p in image:
            pos_to_ws[p].append(wi)
    free = [len(image) for image in images]
    seen = [dict() for _ in images]   # color -> multiplicity
    colors = [0] * n

    def viable(wi):
        return len(seen[wi]) + min(free[wi], k - len(seen[wi])) > t

    def assign(p, c):
        touched = []
        for wi in pos_to_ws[p]:
            free[wi] -= 1
            seen[wi][c] = seen[wi].get(c, 0) + 1
            touched.append(wi)
        return touched

    def unassign(p, c):
        for wi in pos_to_ws[p]:
            free[wi] += 1
            if seen[wi][c] == 1:
                del seen[wi][c]
            else:
                seen[wi][c] -= 1

    def extend(p, used):
        if p == n:
            return all(len(s) > t for s in seen)
        for c in range(min(used + 1, k)):
            colors[p] = c
            assign(p, c)
            if all(viable(wi) for wi in pos_to_ws[p]) and \
                    extend(p + 1, max(used, c + 1)):
                return True
            unassign(p, c)
        return False

    if extend(0, 0):
        return tuple(colors)
    return None


def holds_arrow(a, b, c, k, t, ctx, cap=DEFAULT_EXHAUSTIVE_CAP,
                sample_trials=DEFAULT_SAMPLE_TRIALS, seed=0):
    """Decide C -> (B)^A_{k,t}; see the module docstring for the search."""
    hom_ac, hom_ab, hom_bc, images = composite_images(a, b, c, ctx)
    n = len(hom_ac)
    if n == 0:
        return ArrowVerdict("holds", reason="empty_hom_A_C")
    if not hom_bc:
        bad = Coloring(tuple(0 for _ in range(n)), k)
        return ArrowVerdict("refuted", bad_coloring=bad,
                            reason="empty_hom_B_C")
    if t >= k:
        return ArrowVerdict("holds", reason="t_not_below_k")
    if n <= cap:
        found = _search_bad_coloring(n, k, t, images)
        if found is None:
            return ArrowVerdict("holds", reason="exhausted_with_pruning",
                                witness_stats={"hom_AC": n,
                                               "hom_BC": len(hom_bc),
                                               "hom_AB": len(hom_ab)})
        return ArrowVerdict("refuted", bad_coloring=Coloring(found, k),
                            reason="bad_coloring_found")
    rng = random.Random(seed)
    for _ in range(sample_trials):
        colors = tuple(rng.randrange(k) for _ in range(n))
        if coloring_is_bad(colors, images, t):
            return ArrowVerdict("refuted", bad_coloring=Coloring(colors, k),
                                reason="bad_coloring_sampled")
    return ArrowVerdict("inconclusive",
                        reason=f"hom_set_size_{n}_exceeds_cap_{cap}",
                        witness_stats={"sampled": sample_trials})


def find_witness(a, b, k, t, ctx, candidates, cap=DEFAULT_EXHAUSTIVE_CAP):
    """First candidate C with a holding arrow, else (None, bound)."""
    bound = 0
    for c in candidates:
        bound += 1
        try:
            verdict = holds_arrow(a, b, c, k, t, ctx, cap=cap)
        except SizeOverflow:
            break
        if verdict.status == "holds":
            return c, verdict
    return None, bound


@dataclass
class DegreeProbe:
    lower: int
    upper: object   # int or None when unknown
    evidence: dict = field(default_factory=dict)


@dataclass
class ProbeBudget:
    max_b_size: int = 3
    max_c_size: int = 4
    max_k: int = 3


SMALL_BUDGET = ProbeBudget()
TINY_BUDGET = ProbeBudget(2, 3, 2)


def probe_small_degree(a, ctx, budget=SMALL_BUDGET,
                       cap=DEFAULT_EXHAUSTIVE_CAP):
    """Bracket the small Ramsey degree of `a` inside a finite budget.

    lower: t is bumped past any value defeated within the budget, where
    "defeated" means some (B, k) admits a bad coloring for every
    candidate C reachable from B. upper: a theory-side bound when the
    context provides one. The probe never reports an exact value without
    both sides; lower never exceeds a known upper.
    """
    upper, upper_src = ctx.theory_degree_upper(a)
    evidence = {"upper_source": upper_src, "defeats": []}
    candidates = ctx.objects(budget.max_c_size, like=a)
    bs = [b for b in ctx.objects(budget.max_b_size, like=a)
          if ctx.hom(a, b)]
    lower = 1
    while upper is None or lower < upper:
        defeated = False
        for b in bs:
            if len(ctx.hom(a, b)) <= lower:
                continue  # w-images can never exceed `lower` colors
            for k in range(lower + 1, budget.max_k + 1):
                cs = [c for c in candidates if ctx.hom(b, c)]
                if cs and all(
                        holds_arrow(a, b, c, k, lower, ctx, cap=cap).status
                        == "refuted" for c in cs):
                    b_size = b.size if hasattr(b, "size") else len(b)
                    evidence["defeats"].append(
                        {"t": lower, "k": k, "B_size": b_size,
                         "candidates": len(cs)})
                    defeated = True
                    break
            if defeated:
                break
        if not defeated:
            break
        lower += 1
    return DegreeProbe(lower, upper, evidence)
