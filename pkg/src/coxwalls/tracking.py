"""Projection onto geodesic intervals, straightening of paths, and double tracking."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import CoxeterSystem, Element
from .errors import CapExceededError, InfeasibleError, InvalidInputError
from .paths import (
    EdgePath,
    QuasiGeodesicParams,
    _nearest_distance,
    defect,
    delete_pair,
    is_geodesic,
    is_quasi_geodesic,
    quasi_geodesic_constants,
    splice,
    subpath,
    tracking_distance,
    wall_sequence,
)
from .systems import grid
from .walls import Wall, dilworth_partition, edge_wall


@dataclass
class ProjectionResult:
    projected: Element
    reflections_used: list[Wall]
    steps: int


@dataclass
class ApproximationResult:
    approx: EdgePath
    L_achieved: int
    segment_boundaries: list[int]
    projections: list[Element] = field(repr=False, default_factory=list)


@dataclass(frozen=True)
class TraceEvent:
    kind: str  # "closed", "geodesic", "delete", "recurse"
    depth: int
    span: tuple[int, int] | None = None
    chain: int | None = None
    length_before: int = 0
    length_after: int = 0


@dataclass
class StraightenResult:
    geodesic: EdgePath
    K_achieved: int
    trace: list[TraceEvent] = field(repr=False, default_factory=list)


@dataclass
class CorrespondenceReport:
    a_of: list[int]
    K: int
    bound_checked: Fraction
    reverse_distance: int
    holds: bool


# -- projection -------------------------------------------------------------


def _dot(c, beta):
    return sum(c[i] * beta[i] for i in range(len(beta)) if beta[i])


def project_vertex(sys: CoxeterSystem, a: Element, b: Element, v: Element) -> ProjectionResult:
    """Move ``v`` onto a geodesic from ``a`` to ``b`` by reflecting it in walls.

    Each step takes the ShortLex geodesic from ``a`` to ``v`` and the last of
    its edges whose wall does not separate ``a`` from ``b`` (so a path through
    ``v`` crosses it twice), then reflects ``v`` in that wall, which shortens
    both ``d(a, v)`` and ``d(v, b)`` by one.
    """
    sys._same(a, b, v)
    used: list[Wall] = []
    ca, cb = a.dual, b.dual
    while defect(sys, a, v, b) > 0:
        g = sys.normal_form(a.word[::-1] + v.word).word
        roots = sys.edge_roots(a.word, g)
        for i in range(len(g) - 1, -1, -1):
            beta = roots[i]
            if sys.sign(_dot(ca, beta)) == sys.sign(_dot(cb, beta)):
                break
        else:  # pragma: no cover - impossible while the defect is positive
            raise RuntimeError("no doubly crossed wall found")
        x = sys.normal_form(a.word + g[:i])
        used.append(edge_wall(sys, x, g[i]))
        v = sys.normal_form(a.word + g[:i] + g[i + 1:])
    return ProjectionResult(v, used, len(used))


def geodesic_approximation(sys: CoxeterSystem, p: EdgePath) -> ApproximationResult:
    """Project every vertex of ``p`` onto geodesics between its endpoints and join the projections.

    The joins are ShortLex geodesics, so every vertex of the result lies on a
    geodesic from ``p.start`` to ``p.end``. ``L_achieved`` is the largest
    distance from a vertex to its projection.
    """
    a, b = p.start, p.end
    ws = [project_vertex(sys, a, b, v).projected for v in p.vertices]
    letters: list[int] = []
    bounds = [0]
    for x, y in zip(ws, ws[1:]):
        letters.extend(sys.normal_form(x.word[::-1] + y.word).word)
        bounds.append(len(letters))
    L = max(sys.distance(v, w) for v, w in zip(p.vertices, ws))
    return ApproximationResult(EdgePath(a, tuple(letters)), L, bounds, ws)


# -- straightening ----------------------------------------------------------


def _innermost_repeat(ws: list[Wall]) -> tuple[int, int] | None:
    last: dict[Wall, int] = {}
    best = None
    for j, q in enumerate(ws):
        i = last.get(q)
        if i is not None and (best is None or j - i < best[1] - best[0]):
            best = (i, j)
        last[q] = j
    return best


def _first_recrossed(ws: list[Wall], chain: set[Wall]) -> tuple[int, int] | None:
    last: dict[Wall, int] = {}
    for j, q in enumerate(ws):
        if q in chain:
            last[q] = j
    for i, q in enumerate(ws):
        if q in chain and last[q] > i:
            return i, last[q]
    return None


def _straighten(sys: CoxeterSystem, p: EdgePath, depth: int, cap: int, trace: list[TraceEvent]) -> EdgePath:
    if depth > cap:
        raise CapExceededError("straighten recursion depth", cap)
    if p.start == p.end:
        trace.append(TraceEvent("closed", depth, length_before=len(p)))
        return EdgePath(p.start)
    if is_geodesic(sys, p):
        trace.append(TraceEvent("geodesic", depth, length_before=len(p), length_after=len(p)))
        return p
    q = geodesic_approximation(sys, p).approx
    part = dilworth_partition(sys, p.start, p.end)
    if part.width <= 1:
        while True:
            span = _innermost_repeat(wall_sequence(sys, q))
            if span is None:
                break
            before = len(q)
            q = delete_pair(sys, q, *span)
            trace.append(TraceEvent("delete", depth, span, 0, before, len(q)))
    else:
        for k, chain in enumerate(part.chains):
            members = set(chain)
            while True:
                span = _first_recrossed(wall_sequence(sys, q), members)
                if span is None:
                    break
                i, j = span
                before = len(q)
                inner = _straighten(sys, subpath(q, i, j), depth + 1, cap, trace)
                q = splice(q, i, j, inner)
                trace.append(TraceEvent("recurse", depth, span, k, before, len(q)))
    if not is_geodesic(sys, q):  # pragma: no cover - guarded by the chain argument
        raise RuntimeError(f"straightening left a non-geodesic path {q}")
    return q


def straighten(sys: CoxeterSystem, p: EdgePath, depth_cap: int | None = None) -> StraightenResult:
    """Turn ``p`` into a geodesic with the same endpoints that stays close to it.

    ``K_achieved`` is the tracking distance from ``p`` to the result. A closed
    path straightens to the empty path at its start.
    """
    cap = sys.caps.depth if depth_cap is None else depth_cap
    trace: list[TraceEvent] = []
    g = _straighten(sys, p, 0, cap, trace)
    if len(g) == 0:
        K = max(sys.distance(p.start, v) for v in p.vertices)
    else:
        K = tracking_distance(sys, p, g)
    return StraightenResult(g, K, trace)


# -- double tracking --------------------------------------------------------


def double_tracking_bound(lam, eps, K) -> Fraction:
    """``lam (2K + 1) + eps + K``."""
    lam, eps = Fraction(lam), Fraction(eps)
    return lam * (2 * K + 1) + eps + K


def tracking_correspondence(
    sys: CoxeterSystem,
    p1: EdgePath,
    p2: EdgePath,
    K: int,
    params2: QuasiGeodesicParams | None = None,
) -> CorrespondenceReport:
    """Nearest-vertex map from ``p1`` to ``p2`` and a check of the reverse tracking bound.

    ``p1`` must ``K``-track ``p2`` with endpoints within ``K`` of each other and
    ``p2`` must be a quasi-geodesic for ``params2``; otherwise
    :class:`InfeasibleError` names the failing condition. Without ``params2``
    the least constants of ``p2`` are measured.
    """
    if K < 0:
        raise InvalidInputError("K must be non-negative")
    d0 = sys.distance(p1.start, p2.start)
    if d0 > K:
        raise InfeasibleError(f"starts are {d0} apart, more than K={K}", ("start", d0))
    d1 = sys.distance(p1.end, p2.end)
    if d1 > K:
        raise InfeasibleError(f"ends are {d1} apart, more than K={K}", ("end", d1))
    targets = p2.vertices
    a_of = []
    hint = 0
    for n, u in enumerate(p1.vertices):
        d, hint = _nearest_distance(sys, u, targets, hint)
        if d > K:
            raise InfeasibleError(f"vertex {n} of the first path is {d} from the second", ("vertex", n, d))
        # smallest index attaining the minimum
        a_of.append(next(k for k, w in enumerate(targets) if sys.distance(u, w) == d))
    if params2 is None:
        params2 = quasi_geodesic_constants(sys, p2)
    qg = is_quasi_geodesic(sys, p2, params2)
    if not qg:
        raise InfeasibleError(f"second path is not a ({params2.lam}, {params2.eps})-quasi-geodesic", ("pair", qg.witness))
    a_of[0] = 0
    a_of[-1] = len(p2)
    bound = double_tracking_bound(params2.lam, params2.eps, K)
    back = tracking_distance(sys, p2, p1)
    return CorrespondenceReport(a_of, K, bound, back, back <= bound)


# -- path families used in experiments --------------------------------------


def periodic_path(sys: CoxeterSystem, g, k: int) -> EdgePath:
    """The path spelling the normal form of ``g`` ``k`` times from the identity."""
    w = sys.element(g).word
    if not w:
        raise InvalidInputError("periodic_path needs a nontrivial element")
    if k < 0:
        raise InvalidInputError("repetition count must be non-negative")
    return EdgePath(sys.identity, w * k)


_ARM_DIRECTIONS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def spiral_arms(windings: int, c: float = 4, growth: float = 1.7, per_arm: bool = False) -> list[int]:
    """Arm lengths of the square spiral, four arms per winding.

    By default all four arms of winding ``k`` have length ``round(c * growth**k)``.
    With ``per_arm`` the exponent advances by a quarter on every arm, so no
    winding closes up.
    """
    if windings < 1 or c <= 0 or growth < 1:
        raise InvalidInputError("need windings >= 1, c > 0 and growth >= 1")
    if per_arm:
        exps = [j / 4 for j in range(1, 4 * windings + 1)]
    else:
        exps = [k for k in range(1, windings + 1) for _ in range(4)]
    return [max(1, math.floor(c * growth**e + 0.5)) for e in exps]


def _line_step(pos: int, step: int, near: int, far: int) -> tuple[int, int]:
    # the infinite dihedral group acts on Z: at an even position `near` moves
    # right, at an odd one it moves left
    right, left = (near, far) if pos % 2 == 0 else (far, near)
    return (right, pos + 1) if step > 0 else (left, pos - 1)


def spiral_path(
    windings: int,
    c: float = 4,
    growth: float = 1.7,
    per_arm: bool = False,
    sys: CoxeterSystem | None = None,
) -> EdgePath:
    """Square spiral in the grid system, a product of two infinite dihedral groups.

    The two factors play the role of the x and y axes and each arm alternates
    the two generators of one factor. Arms run +x, +y, -x, -y and grow
    geometrically, so bracket numbers grow with the number of windings.
    """
    sys = sys or grid()
    a, b, cc, d = range(4)
    x = y = 0
    letters = []
    for j, n in enumerate(spiral_arms(windings, c, growth, per_arm)):
        dx, dy = _ARM_DIRECTIONS[j % 4]
        for _ in range(n):
            if dx:
                s, x = _line_step(x, dx, a, b)
            else:
                s, y = _line_step(y, dy, cc, d)
            letters.append(s)
    return EdgePath(sys.identity, tuple(letters))


__all__ = [
    "ApproximationResult",
    "CorrespondenceReport",
    "ProjectionResult",
    "StraightenResult",
    "TraceEvent",
    "double_tracking_bound",
    "geodesic_approximation",
    "periodic_path",
    "project_vertex",
    "spiral_arms",
    "spiral_path",
    "straighten",
    "tracking_correspondence",
]
