from collections import Counter
from fractions import Fraction

import pytest

from coxwalls import InvalidInputError
from coxwalls.paths import (
    EdgePath,
    QuasiGeodesicParams,
    bracket_report,
    concat,
    defect,
    delete_pair,
    geodesic,
    is_geodesic,
    is_quasi_geodesic,
    nearest_vertex,
    path,
    quasi_geodesic_constants,
    reverse,
    splice,
    subpath,
    tracking_distance,
    wall_sequence,
)
from coxwalls.systems import a2, dihedral, grid, infinite_dihedral

from _util import random_path


def test_vertices_and_end():
    d = infinite_dihedral()
    p = path(d, "stts")
    assert [str(v) for v in p.vertices] == ["1", "s", "st", "s", "1"]
    assert p.end == d.identity
    assert str(path(d, "ts", start="s")) == "s:ts"


def test_geodesic_checks():
    d = infinite_dihedral()
    assert is_geodesic(d, path(d, "stst"))
    assert not is_geodesic(d, path(d, "stts"))
    assert is_geodesic(d, path(d, ""))


def test_quasi_geodesic_examples():
    d = infinite_dihedral()
    one = QuasiGeodesicParams(1, 0)
    assert is_quasi_geodesic(d, path(d, "stst"), one)
    check = is_quasi_geodesic(d, path(d, "stts"), one)
    assert not check and check.witness == (0, 4)
    assert is_quasi_geodesic(d, path(d, "stts"), QuasiGeodesicParams(1, 4))
    with pytest.raises(InvalidInputError):
        QuasiGeodesicParams(Fraction(1, 2), 0)


def test_quasi_geodesic_constants():
    m2 = dihedral(2)
    c = quasi_geodesic_constants(m2, path(m2, "sts"))
    assert c.eps == 0 and c.lam == 3
    assert is_quasi_geodesic(m2, path(m2, "sts"), c)
    assert not is_quasi_geodesic(m2, path(m2, "sts"), QuasiGeodesicParams(c.lam - Fraction(1, 10), 0))


def test_defect():
    d = infinite_dihedral()
    one, s, t = d.identity, d.element("s"), d.element("t")
    assert defect(d, one, s, t) == 1
    assert defect(d, one, s, d.element("st")) == 0


def test_bracket_examples():
    m2 = dihedral(2)
    rep = bracket_report(m2, path(m2, "sts"))
    assert rep.per_vertex == [0, 1, 1, 0]
    assert rep.max == 1
    assert bracket_report(m2, path(m2, "sts"), 0, 0).max == 0
    d = infinite_dihedral()
    assert bracket_report(d, path(d, "stst")).max == 0
    assert bracket_report(d, path(d, "sttsst")).per_vertex == [0, 1, 2, 2, 2, 1, 0]


def test_delete_pair_examples():
    m2 = dihedral(2)
    p = path(m2, "sts")
    q = delete_pair(m2, p, 0, 2)
    assert q.letters == m2.word("t") and q.end == p.end
    with pytest.raises(InvalidInputError):
        delete_pair(m2, p, 0, 1)
    with pytest.raises(InvalidInputError):
        delete_pair(m2, p, 2, 0)


def test_subpath_concat_splice():
    sys = a2()
    p = path(sys, "stst")
    left, right = subpath(p, 0, 2), subpath(p, 2, 4)
    assert concat(left, right) == p
    assert reverse(reverse(p)) == p
    g = geodesic(sys, p.vertex(1), p.vertex(4))
    q = splice(p, 1, 4, g)
    assert q.end == p.end and len(q) == 1 + len(g)
    with pytest.raises(InvalidInputError):
        concat(right, left)
    with pytest.raises(InvalidInputError):
        subpath(p, 3, 2)


def test_tracking_distance_examples():
    d = infinite_dihedral()
    assert tracking_distance(d, path(d, "stts"), path(d, "")) == 2
    m2 = dihedral(2)
    assert tracking_distance(m2, path(m2, "sts"), path(m2, "t")) == 1
    assert tracking_distance(m2, path(m2, "t"), path(m2, "sts")) == 0
    assert nearest_vertex(m2, m2.element("t"), path(m2, "sts")) == (0, 3)


def test_tracking_distance_matches_exhaustive(any_system, rng):
    sys = any_system
    for _ in range(40):
        p, q = random_path(sys, rng, 10), random_path(sys, rng, 10)
        brute = max(min(sys.distance(u, w) for w in q.vertices) for u in p.vertices)
        assert tracking_distance(sys, p, q) == brute


def test_deletion_keeps_parity(any_system, rng):
    sys = any_system
    for _ in range(30):
        p = random_path(sys, rng, 10)
        ws = wall_sequence(sys, p)
        for i in range(len(ws)):
            for j in range(i + 1, len(ws)):
                if ws[i] == ws[j]:
                    q = delete_pair(sys, p, i, j)
                    odd = lambda c: {w for w, k in c.items() if k % 2}
                    assert odd(Counter(wall_sequence(sys, q))) == odd(Counter(ws))


def test_path_validation():
    g = grid()
    with pytest.raises(InvalidInputError):
        EdgePath(g.identity, (7,))
    with pytest.raises(InvalidInputError):
        path(g, "axe")
