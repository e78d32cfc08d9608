import math

import pytest

from coxwalls import CapExceededError, InfeasibleError, InvalidInputError
from coxwalls.paths import (
    EdgePath,
    QuasiGeodesicParams,
    bracket_report,
    defect,
    is_geodesic,
    is_quasi_geodesic,
    path,
    quasi_geodesic_constants,
    tracking_distance,
)
from coxwalls.systems import a2, affine_a2, dihedral, grid, infinite_dihedral
from coxwalls.tracking import (
    double_tracking_bound,
    geodesic_approximation,
    periodic_path,
    project_vertex,
    spiral_arms,
    spiral_path,
    straighten,
    tracking_correspondence,
)
from coxwalls.walls import estimate_parallel_wall_constant

from _util import random_path


def test_project_vertex_examples():
    m2 = dihedral(2)
    r = project_vertex(m2, m2.identity, m2.element("t"), m2.element("s"))
    assert r.projected == m2.identity and [str(q.reflection) for q in r.reflections_used] == ["s"] and r.steps == 1
    d = infinite_dihedral()
    r = project_vertex(d, d.identity, d.element("ts"), d.element("s"))
    assert r.projected == d.identity and [str(q.reflection) for q in r.reflections_used] == ["s"]
    v = d.element("t")
    assert project_vertex(d, d.identity, d.element("ts"), v).steps == 0


def test_projection_steps_shrink_both_distances(any_system, rng):
    sys = any_system
    P = estimate_parallel_wall_constant(sys, 1, 8).estimate
    for _ in range(60):
        p = random_path(sys, rng, 12)
        a, b = p.start, p.end
        for v in p.vertices:
            r = project_vertex(sys, a, b, v)
            assert r.steps <= defect(sys, a, v, b)
            assert defect(sys, a, r.projected, b) == 0
            cur = v
            for q in r.reflections_used:
                nxt = sys.multiply(q.reflection, cur)
                assert sys.distance(a, nxt) < sys.distance(a, cur)
                assert sys.distance(nxt, b) < sys.distance(cur, b)
                assert defect(sys, a, nxt, b) < defect(sys, a, cur, b)
                assert sys.distance(cur, nxt) <= 2 * P + 1
                cur = nxt
            assert cur == r.projected


def test_approximation_examples():
    m2 = dihedral(2)
    r = geodesic_approximation(m2, path(m2, "sts"))
    assert r.L_achieved <= 1 and r.approx.end == m2.element("t")
    g = grid()
    r = geodesic_approximation(g, path(g, "aca"))
    assert r.L_achieved <= 1
    assert all(defect(g, g.identity, v, g.element("c")) == 0 for v in r.approx.vertices)
    d = infinite_dihedral()
    p = path(d, "stst")
    r = geodesic_approximation(d, p)
    assert r.approx == p and r.L_achieved == 0


def test_approximation_bracket_bound(any_system, rng):
    # bracket number of the approximation stays within 6L + B of the input
    sys = any_system
    for _ in range(150):
        p = random_path(sys, rng)
        r = geodesic_approximation(sys, p)
        assert r.approx.start == p.start and r.approx.end == p.end
        assert r.segment_boundaries[0] == 0 and r.segment_boundaries[-1] == len(r.approx)
        assert bracket_report(sys, r.approx).max <= 6 * r.L_achieved + bracket_report(sys, p).max


def test_straighten_examples():
    m2 = dihedral(2)
    r = straighten(m2, path(m2, "sts"))
    assert r.geodesic.letters == m2.word("t") and r.K_achieved == 1
    g = grid()
    r = straighten(g, path(g, "aca"))
    assert r.geodesic.letters == g.word("c") and r.K_achieved == 1
    d = infinite_dihedral()
    p = path(d, "tstst")
    r = straighten(d, p)
    assert r.geodesic == p and r.K_achieved == 0


def test_straighten_closed_path():
    d = infinite_dihedral()
    p = path(d, "sttssttsst")
    p = EdgePath(p.start, p.letters + tuple(reversed(p.letters)))
    r = straighten(d, p)
    assert len(r.geodesic) == 0 and r.geodesic.start == p.start
    assert r.K_achieved == max(d.distance(p.start, v) for v in p.vertices)


def test_straighten_random(any_system, rng):
    sys = any_system
    for _ in range(120):
        p = random_path(sys, rng)
        r = straighten(sys, p)
        assert is_geodesic(sys, r.geodesic)
        assert r.geodesic.start == p.start and r.geodesic.end == p.end
        if len(r.geodesic):
            assert r.K_achieved == tracking_distance(sys, p, r.geodesic)


def test_straighten_multichain_recursion():
    sys = affine_a2()
    p = path(sys, "ussusutu")
    r = straighten(sys, p)
    assert is_geodesic(sys, r.geodesic)
    assert any(e.kind == "recurse" for e in r.trace)
    with pytest.raises(CapExceededError):
        straighten(sys, p, depth_cap=0)


def test_double_tracking_bound_values():
    assert double_tracking_bound(1, 0, 0) == 1
    assert double_tracking_bound(1, 0, 2) == 7
    assert double_tracking_bound(2, 3, 1) == 10


def test_correspondence_examples():
    sys = a2()
    p = path(sys, "stst")
    rep = tracking_correspondence(sys, p, p, 0)
    assert rep.a_of == list(range(5)) and rep.reverse_distance == 0 and rep.holds
    m2 = dihedral(2)
    rep = tracking_correspondence(m2, path(m2, "t"), path(m2, "sts"), 0)
    assert rep.a_of == [0, 3]
    assert rep.reverse_distance <= rep.bound_checked
    g = path(sys, "st")
    with pytest.raises(InfeasibleError) as info:
        tracking_correspondence(sys, g, EdgePath(g.end, g.letters[::-1]), 0)
    assert info.value.witness[0] == "start"


def test_correspondence_rejects_bad_inputs():
    d = infinite_dihedral()
    with pytest.raises(InfeasibleError):
        tracking_correspondence(d, path(d, "stst"), path(d, "st"), 1)
    with pytest.raises(InfeasibleError):
        tracking_correspondence(d, path(d, "st"), path(d, "stts"), 2, QuasiGeodesicParams(1, 0))
    with pytest.raises(InvalidInputError):
        tracking_correspondence(d, path(d, "st"), path(d, "st"), -1)


def test_correspondence_monotone(any_system, rng):
    sys = any_system
    for _ in range(40):
        p1 = random_path(sys, rng, 12)
        lam_eps = quasi_geodesic_constants(sys, p1)
        g = straighten(sys, p1).geodesic
        if not len(g):
            continue
        K = tracking_distance(sys, p1, g)
        rep = tracking_correspondence(sys, p1, g, K, QuasiGeodesicParams(1, 0))
        assert rep.holds
        step = math.ceil(lam_eps.lam * (4 * K + 1) + lam_eps.eps) + 1
        for n in range(len(p1) + 1 - step):
            assert rep.a_of[n + step] > rep.a_of[n]


def test_periodic_path_examples():
    d = infinite_dihedral()
    assert periodic_path(d, "st", 0) == path(d, "")
    p = periodic_path(d, "st", 3)
    assert p == path(d, "ststst") and is_geodesic(d, p)
    g = grid()
    p = periodic_path(g, "abcd", 2)
    assert p.letters == g.word("abcdabcd")
    assert is_quasi_geodesic(g, p, quasi_geodesic_constants(g, p))
    with pytest.raises(InvalidInputError):
        periodic_path(d, "ss", 2)


def test_spiral_shape():
    arms = spiral_arms(1)
    assert arms == [7, 7, 7, 7]
    p = spiral_path(1)
    assert len(p) == 4 * round(4 * 1.7)
    assert p.end == p.start
    q = spiral_path(3, per_arm=True)
    assert len(q) == sum(spiral_arms(3, per_arm=True))
    assert q.end != q.start


def test_spiral_per_arm_growth():
    brackets, ks = [], []
    for w in range(2, 6):
        p = spiral_path(w, per_arm=True)
        brackets.append(bracket_report(p.system, p).max)
        r = straighten(p.system, p)
        assert is_geodesic(p.system, r.geodesic)
        ks.append(r.K_achieved)
    assert all(x < y for x, y in zip(brackets, brackets[1:]))
    assert all(x < y for x, y in zip(ks, ks[1:]))


@pytest.mark.parametrize(
    "factory, g",
    [(infinite_dihedral, "st"), (grid, "abc"), (grid, "abacd"), (affine_a2, "stsus"), (affine_a2, "sustu")],
)
def test_periodic_bracket_constant_after_two(factory, g):
    sys = factory()
    bs = [bracket_report(sys, periodic_path(sys, g, k)).max for k in range(1, 9)]
    assert len(set(bs[1:])) == 1
