"""Reflections, walls, sides, crossing, and chain partitions of separating walls.

A wall is the set of Cayley-graph edges fixed by one reflection, so a
:class:`Wall` is identified by the normal form of that reflection. Each wall
also carries an *anchor*: an edge ``(u, t)`` of the wall with ``u`` as close to
the identity as possible, which gives both a support vertex and the positive
root of the wall.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .core import CoxeterSystem, Element
from .errors import InvalidInputError, UndeterminedCrossingError


class Side(enum.Enum):
    IDENTITY_SIDE = "identity"
    FAR_SIDE = "far"


class Crossing(enum.Enum):
    CROSS = "cross"
    PARALLEL = "parallel"
    UNDETERMINED = "undetermined"


class Wall:
    """Wall of the Cayley graph, identified by its reflection."""

    __slots__ = ("reflection", "_anchor", "_root")

    def __init__(self, reflection: Element, anchor: tuple[Element, int] | None = None):
        self.reflection = reflection
        self._anchor = anchor
        self._root = None

    @property
    def system(self) -> CoxeterSystem:
        return self.reflection.system

    @property
    def anchor(self) -> tuple[Element, int]:
        """An edge ``(u, t)`` of the wall with ``u`` nearest to the identity."""
        if self._anchor is None or len(self._anchor[0].word) * 2 + 1 != len(self.reflection.word):
            self._anchor = conjugator(self.system, self.reflection)
        return self._anchor

    @property
    def root(self) -> list:
        """Positive root whose reflection is this wall's reflection."""
        if self._root is None:
            sys = self.system
            u, t = self._anchor if self._anchor is not None else self.anchor
            beta = sys.root(u.word, t)
            if sys.sign(sum(beta)) < 0:
                beta = [-x for x in beta]
            self._root = beta
        return self._root

    def __eq__(self, other):
        if not isinstance(other, Wall):
            return NotImplemented
        return self.reflection == other.reflection

    def __hash__(self):
        return hash(("wall", self.reflection))

    def __lt__(self, other: Wall) -> bool:
        return self.reflection < other.reflection

    def __str__(self):
        return str(self.reflection)

    def __repr__(self):
        return f"Wall({self.reflection.system.format_word(self.reflection.word)!r})"


def conjugator(sys: CoxeterSystem, r: Element) -> tuple[Element, int]:
    """Write a reflection as ``u t u^-1`` with ``l(r) = 2 l(u) + 1``.

    Conjugating by a left descent shortens a reflection by exactly two, so
    peeling descents ends at a generator. Raises ``InvalidInputError`` when
    ``r`` is not a reflection.
    """
    sys._same(r)
    peeled = []
    cur = r
    while len(cur.word) > 1:
        s = next((j for j in range(sys.rank) if sys.is_left_descent(cur, j)), None)
        nxt = sys.normal_form((s,) + cur.word + (s,))
        if len(nxt.word) != len(cur.word) - 2:
            raise InvalidInputError(f"{r} is not a reflection")
        peeled.append(s)
        cur = nxt
    if len(cur.word) != 1:
        raise InvalidInputError(f"{r} is not a reflection")
    return sys.normal_form(tuple(peeled)), cur.word[0]


def is_reflection(sys: CoxeterSystem, r: Element) -> bool:
    if len(r.word) % 2 == 0:
        return False
    try:
        conjugator(sys, r)
    except InvalidInputError:
        return False
    return True


def wall(sys: CoxeterSystem, reflection) -> Wall:
    """Wall of a reflection given as an element or a word."""
    r = sys.element(reflection)
    return Wall(r, conjugator(sys, r))


def edge_wall(sys: CoxeterSystem, u: Element, t: int) -> Wall:
    """Wall containing the edge from ``u`` labelled ``t``; its reflection is ``u t u^-1``."""
    sys._same(u)
    if isinstance(t, str):
        t = sys.word([t])[0]
    key = (u.word, t)
    memo = sys.table("edge_wall")
    hit = memo.get(key)
    if hit is None:
        r = sys.normal_form(u.word + (t,) + u.word[::-1])
        hit = Wall(r, (u, t))
        memo[key] = hit
    return hit


def side_of(sys: CoxeterSystem, q: Wall, v: Element) -> Side:
    """Side of ``q`` containing ``v``.

    ``IDENTITY_SIDE`` iff ``l(r v) > l(v)``, read off as the sign of
    ``v^-1(beta)`` for the positive root ``beta`` of ``q``.
    """
    sys._same(v)
    c = v.dual
    beta = q.root
    x = sum(c[i] * beta[i] for i in range(sys.rank) if beta[i])
    return Side.IDENTITY_SIDE if sys.sign(x) > 0 else Side.FAR_SIDE


def separates(sys: CoxeterSystem, q: Wall, a: Element, b: Element) -> bool:
    return side_of(sys, q, a) is not side_of(sys, q, b)


def walls_separating(sys: CoxeterSystem, a: Element, b: Element) -> list[Wall]:
    """Walls crossed by the ShortLex geodesic from ``a`` to ``b``, in crossing order."""
    sys._same(a, b)
    g = sys.normal_form(a.word[::-1] + b.word)
    out = []
    x = a
    for t in g.word:
        out.append(edge_wall(sys, x, t))
        x = sys.normal_form(x.word + (t,))
    return out


def _reflection_matrix(sys: CoxeterSystem, beta: Sequence) -> np.ndarray:
    b = np.asarray(beta, dtype=float)
    f = np.asarray(sys.form2, dtype=float)
    return np.eye(sys.rank) - np.outer(b, f @ b)


def product_order(sys: CoxeterSystem, q1: Wall, q2: Wall, order_cap: int | None = None) -> int | None:
    """Order of ``r1 r2`` if it is at most ``order_cap``, else ``None``.

    Powers are taken in the (faithful) geometric representation.
    """
    cap = sys.caps.order if order_cap is None else order_cap
    m = _reflection_matrix(sys, q1.root) @ _reflection_matrix(sys, q2.root)
    eye = np.eye(sys.rank)
    p = m
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(1, cap + 1):
            if np.abs(p - eye).max() < 1e-9:
                return k
            p = p @ m
    return None


def roots_cross(sys: CoxeterSystem, q1: Wall, q2: Wall) -> bool:
    """Root test: walls cross iff ``|B(beta1, beta2)| < 1``."""
    f = sys.form(q1.root, q2.root)  # 2B
    if sys.exact:
        return abs(f) < 2
    return abs(f) / 2 < 1 - sys.tol


def crosses(sys: CoxeterSystem, q1: Wall, q2: Wall, order_cap: int | None = None) -> Crossing:
    """Crossing verdict for two distinct walls.

    ``CROSS`` needs a finite order within the cap and the root test to agree;
    ``PARALLEL`` needs no finite order within the cap and the root test to
    agree. Any disagreement is ``UNDETERMINED``.
    """
    if q1 == q2:
        raise InvalidInputError("crossing test needs two distinct walls")
    cap = sys.caps.order if order_cap is None else order_cap
    memo = sys.table("crosses")
    key = (q1.reflection.word, q2.reflection.word, cap)
    hit = memo.get(key)
    if hit is not None:
        return hit
    finite = product_order(sys, q1, q2, cap) is not None
    by_roots = roots_cross(sys, q1, q2)
    if finite and by_roots:
        verdict = Crossing.CROSS
    elif not finite and not by_roots:
        verdict = Crossing.PARALLEL
    else:
        verdict = Crossing.UNDETERMINED
    memo[key] = verdict
    memo[(q2.reflection.word, q1.reflection.word, cap)] = verdict
    return verdict


def _determinate(sys, p, q, order_cap) -> bool:
    """True for crossing walls, False for parallel ones; raises otherwise."""
    v = crosses(sys, p, q, order_cap)
    if v is Crossing.UNDETERMINED:
        raise UndeterminedCrossingError(p, q)
    return v is Crossing.CROSS


def wall_support_in_ball(sys: CoxeterSystem, q: Wall, radius: int) -> set[Element]:
    """Vertices of edges of ``q`` lying in the ball of the given radius."""
    r = q.reflection
    out = set()
    for u in sys.ball(radius):
        if len(sys.normal_form(u.word[::-1] + r.word + u.word).word) == 1:
            out.add(u)
    return out


def wall_distance(sys: CoxeterSystem, v: Element, q: Wall, radius: int) -> int | None:
    """Distance from ``v`` to the part of ``q``'s support inside the ball; ``None`` if that part is empty."""
    support = wall_support_in_ball(sys, q, radius)
    if not support:
        return None
    return min(sys.distance(v, u) for u in support)


def distance_to_wall(sys: CoxeterSystem, v: Element, q: Wall) -> int:
    """Exact distance from ``v`` to the support of ``q``.

    Equals ``(l(v^-1 r v) - 1) / 2``: the nearest support vertex is the
    conjugator of the translated reflection.
    """
    sys._same(v)
    r = q.reflection
    return (len(sys.normal_form(v.word[::-1] + r.word + v.word).word) - 1) // 2


def chain_leq(sys: CoxeterSystem, p: Wall, q: Wall, x: Element, order_cap: int | None = None) -> bool:
    """``p <= q`` in the order on walls separating ``x`` from something.

    True iff ``p == q``, or the walls are parallel and ``p`` separates ``x``
    from the support of ``q``.
    """
    if p == q:
        return True
    if _determinate(sys, p, q, order_cap):
        return False
    u, _ = q.anchor
    return side_of(sys, p, x) is not side_of(sys, p, u)


@dataclass
class ChainPartition:
    basepair: tuple[Element, Element]
    chains: list[list[Wall]] = field(default_factory=list)

    @property
    def width(self) -> int:
        return len(self.chains)


def _max_matching(adj: list[list[int]], n_right: int) -> list[int]:
    """Kuhn's augmenting paths; returns ``match_right[j]`` (or -1)."""
    match_right = [-1] * n_right

    def augment(i, seen):
        for j in adj[i]:
            if not seen[j]:
                seen[j] = True
                if match_right[j] < 0 or augment(match_right[j], seen):
                    match_right[j] = i
                    return True
        return False

    for i in range(len(adj)):
        augment(i, [False] * n_right)
    return match_right


def min_chain_cover(n: int, less: list[list[bool]]) -> list[list[int]]:
    """Minimum partition of a finite poset into chains.

    ``less[i][j]`` is the strict order. A maximum matching between the two
    copies of the comparability DAG turns into a minimum path cover, and with a
    transitive relation each path is a chain (Dilworth).
    """
    adj = [[j for j in range(n) if less[i][j]] for i in range(n)]
    match_right = _max_matching(adj, n)
    succ = [-1] * n
    for j, i in enumerate(match_right):
        if i >= 0:
            succ[i] = j
    has_pred = [m >= 0 for m in match_right]
    chains = []
    for i in range(n):
        if not has_pred[i]:
            chain = [i]
            while succ[chain[-1]] >= 0:
                chain.append(succ[chain[-1]])
            chains.append(chain)
    return chains


def dilworth_partition(sys: CoxeterSystem, a: Element, b: Element, order_cap: int | None = None) -> ChainPartition:
    """Partition the walls separating ``a`` and ``b`` into the fewest chains.

    Chains are listed by ShortLex order of their least wall, each ordered from
    ``a`` towards ``b``.
    """
    ws = walls_separating(sys, a, b)
    n = len(ws)
    less = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if _determinate(sys, ws[i], ws[j], order_cap):
                continue
            if chain_leq(sys, ws[i], ws[j], a, order_cap):
                less[i][j] = True
            else:
                less[j][i] = True
    chains = [[ws[i] for i in c] for c in min_chain_cover(n, less)]
    chains.sort(key=lambda c: min(c))
    return ChainPartition((a, b), chains)


def _max_clique(nodes: list[int], adjacent) -> int:
    """Size of a largest clique (Bron-Kerbosch with pivoting)."""
    nbrs = {v: {w for w in nodes if w != v and adjacent(v, w)} for v in nodes}
    best = 0

    def expand(r_size, p, x):
        nonlocal best
        if not p and not x:
            best = max(best, r_size)
            return
        if r_size + len(p) <= best:
            return
        pivot = max(p | x, key=lambda v: len(nbrs[v] & p))
        for v in list(p - nbrs[pivot]):
            expand(r_size + 1, p & nbrs[v], x & nbrs[v])
            p = p - {v}
            x = x | {v}

    expand(0, set(nodes), set())
    return best


def max_antichain(sys: CoxeterSystem, walls: Iterable[Wall], order_cap: int | None = None) -> int:
    """Size of the largest set of pairwise crossing walls."""
    ws = list(dict.fromkeys(walls))
    idx = list(range(len(ws)))
    return _max_clique(idx, lambda i, j: _determinate(sys, ws[i], ws[j], order_cap))


def max_parallel_family(sys: CoxeterSystem, walls: Iterable[Wall], order_cap: int | None = None) -> int:
    """Size of the largest set of pairwise parallel walls."""
    ws = list(dict.fromkeys(walls))
    idx = list(range(len(ws)))
    return _max_clique(idx, lambda i, j: not _determinate(sys, ws[i], ws[j], order_cap))


def walls_near_identity(sys: CoxeterSystem, radius: int) -> list[Wall]:
    """Walls whose support meets the ball of the given radius, in ShortLex order."""
    found = {}
    for u in sys.ball(radius):
        for t in range(sys.rank):
            q = edge_wall(sys, u, t)
            found.setdefault(q.reflection, q)
    return [found[r] for r in sorted(found)]


@dataclass
class ParallelWallEstimate:
    n: int
    radius: int
    estimate: int
    witnesses: list[tuple[Element, Wall, int]]


def estimate_parallel_wall_constant(
    sys: CoxeterSystem, n: int, radius: int, order_cap: int | None = None
) -> ParallelWallEstimate:
    """Empirical lower bound for the Parallel Wall constant ``P(n)``.

    Walls are translated so that the point sits at the identity. A wall ``Q``
    at distance ``d`` from the identity with fewer than ``n`` pairwise parallel
    walls separating the identity from ``Q``'s support shows ``P(n) > d``;
    the estimate is one more than the largest such ``d`` seen.
    """
    if radius < 1:
        raise InvalidInputError("radius must be at least 1")
    if n < 1:
        raise InvalidInputError("n must be at least 1")
    one = sys.identity
    worst = -1
    witnesses = []
    for q in walls_near_identity(sys, radius):
        u, _ = q.anchor
        d = len(u.word)
        if d < worst:
            continue
        between = [
            p for p in walls_separating(sys, one, u) if p != q and not _determinate(sys, p, q, order_cap)
        ]
        if max_parallel_family(sys, between, order_cap) >= n:
            continue
        if d > worst:
            worst = d
            witnesses = []
        witnesses.append((one, q, d))
    return ParallelWallEstimate(n, radius, worst + 1, witnesses)


def observed_antichain_bound(sys: CoxeterSystem, radius: int, order_cap: int | None = None) -> int:
    """Largest number of pairwise crossing walls separating the identity from a vertex of the ball."""
    best = 0
    for w in sys.ball(radius):
        best = max(best, max_antichain(sys, walls_separating(sys, sys.identity, w), order_cap))
    return best
