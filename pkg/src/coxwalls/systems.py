"""Named Coxeter systems used throughout the tests and demos."""

from __future__ import annotations

from .core import INFINITY, CoxeterSystem

inf = INFINITY


def dihedral(m, names: str = "st", **kw) -> CoxeterSystem:
    """Rank-2 system with ``m(s, t) = m`` (use ``INFINITY`` for D-infinity)."""
    return CoxeterSystem(list(names), [[1, m], [m, 1]], **kw)


def infinite_dihedral(**kw) -> CoxeterSystem:
    return dihedral(inf, **kw)


def a2(**kw) -> CoxeterSystem:
    """Symmetric group on three letters, order 6."""
    return dihedral(3, **kw)


def b2(**kw) -> CoxeterSystem:
    """Symmetries of the square, order 8."""
    return dihedral(4, **kw)


def a1_a2(**kw) -> CoxeterSystem:
    """``A1 x A2`` with ``s`` commuting with ``t`` and ``u``, ``m(t, u) = 3``; order 12."""
    return CoxeterSystem(list("stu"), [[1, 2, 2], [2, 1, 3], [2, 3, 1]], **kw)


def affine_a2(**kw) -> CoxeterSystem:
    """Affine triangle group with all ``m = 3`` (tiling of the plane by triangles)."""
    return CoxeterSystem(list("stu"), [[1, 3, 3], [3, 1, 3], [3, 3, 1]], **kw)


def grid(**kw) -> CoxeterSystem:
    """``D-inf x D-inf`` on ``a, b | c, d``; its Cayley graph is the square grid."""
    return CoxeterSystem(
        list("abcd"),
        [
            [1, inf, 2, 2],
            [inf, 1, 2, 2],
            [2, 2, 1, inf],
            [2, 2, inf, 1],
        ],
        **kw,
    )


def right_angled(n: int, **kw) -> CoxeterSystem:
    """``(Z/2)^n``: every pair of generators commutes."""
    names = "stuvwxyz"[:n]
    return CoxeterSystem(list(names), [[1 if i == j else 2 for j in range(n)] for i in range(n)], **kw)


STANDARD = {
    "dinf": infinite_dihedral,
    "a2": a2,
    "b2": b2,
    "a1a2": a1_a2,
    "a2tilde": affine_a2,
    "grid": grid,
}
"""The six systems every acceptance check runs over."""

INFINITE = ("dinf", "a2tilde", "grid")
