"""Edge paths in the Cayley graph and the calculus of their wall crossings."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .core import CoxeterSystem, Element
from .errors import InvalidInputError
from .walls import Wall, edge_wall, walls_separating


@dataclass(frozen=True)
class EdgePath:
    """A start vertex followed by generator letters.

    Vertices are derived lazily: vertex ``i`` is ``start * letters[:i]``.
    """

    start: Element
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", self.start.system._check(self.letters))

    @classmethod
    def from_word(cls, sys: CoxeterSystem, letters, start=None) -> EdgePath:
        s = sys.identity if start is None else sys.element(start)
        return cls(s, sys.word(letters))

    @property
    def system(self) -> CoxeterSystem:
        return self.start.system

    def __len__(self) -> int:
        return len(self.letters)

    @cached_property
    def vertices(self) -> list[Element]:
        sys = self.system
        out = [self.start]
        x = self.start
        for s in self.letters:
            x = sys.normal_form(x.word + (s,))
            out.append(x)
        return out

    def vertex(self, i: int) -> Element:
        return self.vertices[i]

    @property
    def end(self) -> Element:
        return self.vertices[-1]

    def __str__(self):
        sys = self.system
        return f"{self.start}:{sys.format_word(self.letters)}"


@dataclass(frozen=True)
class QuasiGeodesicParams:
    lam: Fraction = Fraction(1)
    eps: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "eps", Fraction(self.eps))
        if self.lam < 1 or self.eps < 0:
            raise InvalidInputError("quasi-geodesic parameters need lambda >= 1 and epsilon >= 0")


@dataclass(frozen=True)
class QuasiGeodesicCheck:
    ok: bool
    witness: tuple[int, int] | None = None

    def __bool__(self):
        return self.ok


@dataclass
class BracketReport:
    per_vertex: list[int]
    max: int
    witnesses: list[list[Wall]] = field(repr=False)


def path(sys: CoxeterSystem, letters="", start=None) -> EdgePath:
    """Shorthand for ``EdgePath.from_word``."""
    return EdgePath.from_word(sys, letters, start)


def wall_sequence(sys: CoxeterSystem, p: EdgePath) -> list[Wall]:
    """Wall of each edge of ``p``, in order."""
    vs = p.vertices
    return [edge_wall(sys, vs[i], s) for i, s in enumerate(p.letters)]


def is_geodesic(sys: CoxeterSystem, p: EdgePath) -> bool:
    return len(p.letters) == sys.distance(p.start, p.end)


def _distance_table(sys: CoxeterSystem, p: EdgePath) -> list[list[int]]:
    vs = p.vertices
    n = len(vs)
    d = [[0] * n for _ in range(n)]
    for s in range(n):
        for t in range(s + 1, n):
            d[s][t] = d[t][s] = sys.distance(vs[s], vs[t])
    return d


def is_quasi_geodesic(sys: CoxeterSystem, p: EdgePath, params: QuasiGeodesicParams) -> QuasiGeodesicCheck:
    """Check ``t - s <= lam * d(p(s), p(t)) + eps`` for every pair ``s < t``.

    On failure the witness is the pair with the largest excess, ties broken by
    the smallest ``(s, t)``.
    """
    d = _distance_table(sys, p)
    n = len(d)
    worst = None
    worst_excess = 0
    for s in range(n):
        for t in range(s + 1, n):
            excess = (t - s) - params.lam * d[s][t] - params.eps
            if excess > worst_excess:
                worst, worst_excess = (s, t), excess
    return QuasiGeodesicCheck(worst is None, worst)


def quasi_geodesic_constants(sys: CoxeterSystem, p: EdgePath, eps=None) -> QuasiGeodesicParams:
    """Smallest ``lam`` making ``p`` a ``(lam, eps)``-quasi-geodesic.

    With ``eps=None`` the additive constant is taken as the longest closed
    subpath (the least ``eps`` for which some ``lam`` works).
    """
    d = _distance_table(sys, p)
    n = len(d)
    if eps is None:
        eps = max([t - s for s in range(n) for t in range(s + 1, n) if d[s][t] == 0], default=0)
    eps = Fraction(eps)
    lam = Fraction(1)
    for s in range(n):
        for t in range(s + 1, n):
            if d[s][t] == 0:
                if t - s > eps:
                    raise InvalidInputError(f"no lambda works with eps={eps}: closed subpath ({s}, {t})")
            else:
                lam = max(lam, Fraction(t - s - eps, d[s][t]))
    return QuasiGeodesicParams(lam, eps)


def defect(sys: CoxeterSystem, a: Element, v: Element, b: Element) -> int:
    """Half the detour ``d(a, v) + d(v, b) - d(a, b)``; zero iff ``v`` is on a geodesic from ``a`` to ``b``."""
    twice = sys.distance(a, v) + sys.distance(v, b) - sys.distance(a, b)
    return twice // 2


def bracket_report(sys: CoxeterSystem, p: EdgePath, lo: int | None = None, hi: int | None = None) -> BracketReport:
    """Bracket number of every vertex of ``p``.

    A wall brackets vertex ``t`` when it owns an edge before ``t`` and an edge
    after ``t``; each wall counts once. ``lo``/``hi`` restrict the maximum to a
    vertex range (inclusive), giving the bracket number of a subpath.
    """
    ws = wall_sequence(sys, p)
    first: dict[Wall, int] = {}
    last: dict[Wall, int] = {}
    for i, q in enumerate(ws):
        first.setdefault(q, i)
        last[q] = i
    nv = len(p.letters) + 1
    witnesses: list[list[Wall]] = [[] for _ in range(nv)]
    for q, f in first.items():
        # edges f and last[q] sit on either side of vertices f+1 .. last[q]
        for t in range(f + 1, last[q] + 1):
            witnesses[t].append(q)
    per_vertex = [len(w) for w in witnesses]
    lo = 0 if lo is None else lo
    hi = nv - 1 if hi is None else hi
    return BracketReport(per_vertex, max(per_vertex[lo:hi + 1], default=0), witnesses)


def delete_pair(sys: CoxeterSystem, p: EdgePath, i: int, j: int) -> EdgePath:
    """Drop edges ``i < j`` lying in one wall.

    The segment between them is reflected across that wall, which leaves its
    letters unchanged, so the result just omits the two letters.
    """
    n = len(p.letters)
    if not 0 <= i < j < n:
        raise InvalidInputError(f"need 0 <= i < j < {n}, got ({i}, {j})")
    vs = p.vertices
    if edge_wall(sys, vs[i], p.letters[i]) != edge_wall(sys, vs[j], p.letters[j]):
        raise InvalidInputError(f"edges {i} and {j} lie in different walls")
    lt = p.letters
    return EdgePath(p.start, lt[:i] + lt[i + 1:j] + lt[j + 1:])


def subpath(p: EdgePath, i: int, j: int) -> EdgePath:
    """Vertices ``i`` through ``j``."""
    if not 0 <= i <= j <= len(p.letters):
        raise InvalidInputError(f"bad subpath range ({i}, {j}) for a path with {len(p.letters)} edges")
    return EdgePath(p.vertices[i], p.letters[i:j])


def concat(p: EdgePath, q: EdgePath) -> EdgePath:
    if p.end != q.start:
        raise InvalidInputError(f"cannot concatenate: {p.end} != {q.start}")
    return EdgePath(p.start, p.letters + q.letters)


def reverse(p: EdgePath) -> EdgePath:
    return EdgePath(p.end, p.letters[::-1])


def splice(p: EdgePath, i: int, j: int, q: EdgePath) -> EdgePath:
    """Replace vertices ``i`` .. ``j`` of ``p`` by ``q`` (same endpoints)."""
    vs = p.vertices
    if q.start != vs[i] or q.end != vs[j]:
        raise InvalidInputError("spliced path must join the same vertices")
    return EdgePath(p.start, p.letters[:i] + q.letters + p.letters[j:])


def geodesic(sys: CoxeterSystem, a: Element, b: Element) -> EdgePath:
    """The ShortLex geodesic from ``a`` to ``b``."""
    return EdgePath(a, sys.normal_form(a.word[::-1] + b.word).word)


def _nearest_distance(sys: CoxeterSystem, u: Element, targets: Sequence[Element], hint: int = 0) -> tuple[int, int]:
    """Distance from ``u`` to the nearest target, and the index where it was found.

    Targets are consecutive path vertices, so distances change by at most one
    per step and the scan skips ahead by the current gap.
    """
    n = len(targets)
    best_d, best_i = sys.distance(u, targets[hint]), hint
    for direction in (1, -1):
        k = hint + direction
        while 0 <= k < n and best_d > 0:
            d = sys.distance(u, targets[k])
            if d < best_d:
                best_d, best_i = d, k
            k += direction * max(1, d - best_d)
    return best_d, best_i


def nearest_vertex(sys: CoxeterSystem, u: Element, q: EdgePath) -> tuple[int, int]:
    """``(distance, index)`` of the first vertex of ``q`` nearest to ``u``."""
    return min((sys.distance(u, w), k) for k, w in enumerate(q.vertices))


def tracking_distance(sys: CoxeterSystem, p: EdgePath, q: EdgePath) -> int:
    """Least ``K`` such that every vertex of ``p`` is within ``K`` of a vertex of ``q``."""
    targets = q.vertices
    worst = 0
    hint = 0
    for u in p.vertices:
        d, hint = _nearest_distance(sys, u, targets, hint)
        worst = max(worst, d)
    return worst


__all__ = [
    "BracketReport",
    "EdgePath",
    "QuasiGeodesicCheck",
    "QuasiGeodesicParams",
    "bracket_report",
    "concat",
    "defect",
    "delete_pair",
    "geodesic",
    "is_geodesic",
    "is_quasi_geodesic",
    "nearest_vertex",
    "path",
    "quasi_geodesic_constants",
    "reverse",
    "splice",
    "subpath",
    "tracking_distance",
    "wall_sequence",
    "walls_separating",
]
