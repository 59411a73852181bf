import dataclasses
import random
from fractions import Fraction

import pytest

from gridshadow.embedding import (build_embedding, certify_pair, column_span, slope_coefficient, slope_order_violations,
                                  slope_table, term_decomposition, verify_embedding)
from gridshadow.errors import CertificationFailure, ResourceBudgetError
from gridshadow.geometry import ExactPoint, lattice_points_strictly_between, strictly_between
from gridshadow.graphs import Graph, complete_graph, cycle_graph, path_graph, random_graph


@pytest.fixture(scope="module")
def c5():
    return build_embedding(cycle_graph(5))


def line_height(a: ExactPoint, b: ExactPoint, s: int) -> Fraction:
    return a.y + (s - a.x) * Fraction(b.y - a.y) / (b.x - a.x)


def columns(e, i, l):
    xi, xl = e.point(i).x, e.point(l).x
    return range(int(xi) + 1, -int(-xl // 1))


def test_single_vertex():
    e = build_embedding(complete_graph(1))
    assert len(e.points) == 1
    rep = verify_embedding(e, "both")
    assert rep.ok and rep.certificates == {}


def test_point_formula(c5):
    a = c5.assignment
    nM = 5 * a.M
    for i, pt in enumerate(c5.points, 1):
        assert pt.x == Fraction(a.P[i], 2 ** nM)
        assert pt.y * c5.E_prod == i * c5.W
        assert not pt.x_is_integer
    assert c5.W % c5.E_prod == 0


def test_slopes(c5):
    m = slope_table(c5)
    assert len(set(m.values())) == len(m)
    assert slope_order_violations(c5) == []
    for i in range(1, 4):
        assert m[(i, i + 1)] > m[(i + 1, i + 2)]


def test_term_decomposition(c5):
    rng = random.Random(5)
    for i, l in [(1, 2), (1, 3), (2, 5), (4, 5)]:
        cols = columns(c5, i, l)
        for s in [cols[0], cols[-1]] + [rng.choice(cols) for _ in range(5)]:
            t1, t2, t3 = term_decomposition(c5, i, l, s)
            assert t1.denominator == 1
            assert t3.denominator == 1
            assert t1 + t2 + t3 == line_height(c5.point(i), c5.point(l), s)


def test_term_decomposition_rejects_out_of_range(c5):
    with pytest.raises(ValueError):
        term_decomposition(c5, 1, 2, 0)
    with pytest.raises(ValueError):
        term_decomposition(c5, 2, 1, int(c5.point(1).x) + 1)


def test_certify_edge_and_non_edge(c5):
    edge = certify_pair(c5, 1, 2)
    assert edge.is_edge and edge.D % c5.assignment.p[(1, 2)] == 0
    assert edge.D > 2 ** 11
    non = certify_pair(c5, 1, 3)
    assert not non.is_edge and non.D == 1
    a, b = c5.point(1), c5.point(3)
    assert strictly_between(a, b, ExactPoint(non.blocker.x, 0, non.blocker.y))
    assert lattice_points_strictly_between(a, b).witness == non.blocker


def test_k2_edge_certificate():
    e = build_embedding(complete_graph(2))
    assert certify_pair(e, 1, 2).is_edge


def test_edge_denominators_have_no_multiple_in_range(c5):
    for i, l in [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]:
        D = slope_coefficient(c5, i, l).denominator
        assert all(s % D for s in columns(c5, i, l))


def test_c5_both_modes(c5):
    rep = verify_embedding(c5, "both")
    assert rep.ok, [str(f) for f in rep.failures]
    assert rep.counts() == (5, 5)
    assert rep.certificate_adjacency == rep.brute_adjacency


def test_k3_no_blockers():
    rep = verify_embedding(build_embedding(complete_graph(3)), "both")
    assert rep.ok and rep.counts() == (3, 0)
    assert all(rep.brute_adjacency.values())


def test_p3_blocker_only_on_13():
    rep = verify_embedding(build_embedding(path_graph(3)), "both")
    assert rep.ok
    assert rep.brute_adjacency == {(1, 2): True, (1, 3): False, (2, 3): True}


def test_certificate_failure_on_wrong_graph(c5):
    wrong = dataclasses.replace(c5, graph=path_graph(5))
    with pytest.raises(CertificationFailure):
        certify_pair(wrong, 1, 5)


@pytest.mark.parametrize("seed", range(12))
def test_random_graphs_brute_force_agrees(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(2, 6), rng.random(), seed)
    e = build_embedding(g)
    rep = verify_embedding(e, "both")
    assert rep.ok, [str(f) for f in rep.failures]
    recovered = Graph(g.n, [pr for pr, vis in rep.certificate_adjacency.items() if vis])
    assert recovered == g


def test_brute_force_refuses_over_budget():
    e = build_embedding(path_graph(7))
    assert max(column_span(e, 1, l) for l in range(2, 8)) > 2 ** 14
    with pytest.raises(ResourceBudgetError):
        verify_embedding(e, "brute_force")
    assert verify_embedding(e, "certificate").ok


def test_spot_columns(c5):
    rep = verify_embedding(c5, "certificate", spot_columns=20, seed=3)
    assert rep.ok and rep.spot_columns_checked == 200


def test_tampered_y_detected_by_both_routes(c5):
    pts = list(c5.points)
    pts[2] = ExactPoint(pts[2].x_num, pts[2].x_pow2, pts[2].y + 1)
    bad = dataclasses.replace(c5, points=tuple(pts))
    for mode in ("certificate", "brute_force"):
        rep = verify_embedding(bad, mode)
        assert not rep.ok
    checks = {f.check for f in verify_embedding(bad, "brute_force").failures}
    assert "adjacency" in checks and "points" in checks


def test_mode_validation(c5):
    with pytest.raises(ValueError):
        verify_embedding(c5, "fast")
