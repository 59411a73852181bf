"""Point sets X whose induced visibility graph inside X ∪ Z^2 is a given graph.

Vertex i is placed at ``x_i = (P_i / 2**(nM), i * W / E)`` where
``W = prod_{k<j} (P_j - P_k)`` and ``E`` is the product of the primes on
the edges of the graph. For i < l the line through x_i and x_l meets the
integer column s at height ``T1 + T2 + T3`` with T1 and T3 integral, and
T2 = s * Q for a rational Q whose reduced denominator D decides the pair:
D = 1 for non-edges (every column is blocked), and p_il | D > every column
for edges (nothing is blocked).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import prod

from .assignment import AssignmentReport, Failure, PrimeAssignment, build_assignment, pair_order, verify_assignment
from .errors import CertificationFailure, ResourceBudgetError
from .geometry import (ExactPoint, LatticePoint, lattice_points_by_enumeration, lattice_points_strictly_between,
                       orientation, strictly_between)
from .graphs import Graph

#: Default number of integer columns a brute-force check may scan per pair.
BRUTE_FORCE_BUDGET = 1 << 14

MODES = ("certificate", "brute_force", "both")


@dataclass(frozen=True)
class Embedding:
    graph: Graph
    assignment: PrimeAssignment
    points: tuple[ExactPoint, ...]
    W: int
    E_prod: int

    @property
    def n(self) -> int:
        return self.graph.n

    def point(self, i: int) -> ExactPoint:
        return self.points[i - 1]


@dataclass(frozen=True)
class VisibilityCertificate:
    """Proof that pair (i, l) is visible (``kind == "edge"``) or blocked.

    Edge certificates carry the prime p_il dividing D and the column bound
    2^(2n+1) that D exceeds; non-edge certificates carry a lattice point on
    the open segment.
    """

    pair: tuple[int, int]
    D: int
    kind: str
    prime: int | None = None
    range_bound: int | None = None
    blocker: LatticePoint | None = None

    @property
    def is_edge(self) -> bool:
        return self.kind == "edge"


def difference_product(a: PrimeAssignment) -> int:
    return prod(a.P[j] - a.P[k] for k, j in pair_order(a.n))


def edge_product(g: Graph, a: PrimeAssignment) -> int:
    return prod(a.p[e] for e in g.edges())


def construct_points(g: Graph, a: PrimeAssignment) -> tuple[ExactPoint, ...]:
    n, M = a.n, a.M
    W, E = difference_product(a), edge_product(g, a)
    if W % E:
        raise CertificationFailure("edge product does not divide the difference product")
    height = W // E
    return tuple(ExactPoint(a.P[i], n * M, i * height) for i in range(1, n + 1))


def build_embedding(g: Graph, assignment: PrimeAssignment | None = None) -> Embedding:
    a = build_assignment(g.n) if assignment is None else assignment
    if a.n != g.n:
        raise ValueError(f"assignment is for {a.n} vertices, graph has {g.n}")
    pts = construct_points(g, a)
    e = Embedding(g, a, pts, difference_product(a), edge_product(g, a))
    for i in range(1, e.n + 1):
        if e.n > 1 and pts[i - 1].x_is_integer:
            raise CertificationFailure(f"x_{i} is an integer")
    bad = slope_order_violations(e)
    if bad:
        raise CertificationFailure(f"slope ordering fails at {bad[0]}")
    return e


def slope_table(e: Embedding) -> dict[tuple[int, int], Fraction]:
    """Exact slopes m_il of the lines through stored points i < l."""
    out = {}
    for i, l in pair_order(e.n):
        a, b = e.point(i), e.point(l)
        if a.x == b.x:
            raise CertificationFailure(f"points {i} and {l} share an x-coordinate")
        out[(i, l)] = Fraction(b.y - a.y) / (b.x - a.x)
    return out


def slope_order_violations(e: Embedding) -> list[tuple[int, ...]]:
    """Index tuples where m_i(i+1) > m_(i+1)(i+2) or m_il > m_ik (i<l<k) fails."""
    m = slope_table(e)
    n = e.n
    bad: list[tuple[int, ...]] = [(i, i + 1, i + 2) for i in range(1, n - 1) if not m[(i, i + 1)] > m[(i + 1, i + 2)]]
    for i in range(1, n + 1):
        for l in range(i + 1, n + 1):
            for k in range(l + 1, n + 1):
                if not m[(i, l)] > m[(i, k)]:
                    bad.append((i, l, k))
    return bad


def _pair_data(e: Embedding, i: int, l: int):
    a = e.assignment
    gap = a.P[l] - a.P[i]
    if gap <= 0 or e.W % gap:
        raise CertificationFailure(f"P_{l} - P_{i} is not a positive factor of W")
    return a, gap


def term_decomposition(e: Embedding, i: int, l: int, s: int) -> tuple[Fraction, Fraction, Fraction]:
    """Split the height of line x_i x_l at integer column s into (T1, T2, T3).

    T1 = i W / E, T2 = s (l-i) 2^(nM) W / ((P_l - P_i) E) and
    T3 = -P_i (l-i) W / ((P_l - P_i) E), so T1 + T2 + T3 is the height.
    """
    if not 1 <= i < l <= e.n:
        raise ValueError(f"need 1 <= i < l <= n, got ({i}, {l})")
    if not e.point(i).x < s < e.point(l).x:
        raise ValueError(f"column {s} is not strictly between x_{i} and x_{l}")
    a, gap = _pair_data(e, i, l)
    nM = a.n * a.M
    den = gap * e.E_prod
    t1 = Fraction(i * e.W, e.E_prod)
    t2 = Fraction(s * (l - i) * e.W << nM, den)
    t3 = -Fraction(a.P[i] * (l - i) * e.W, den)
    return t1, t2, t3


def slope_coefficient(e: Embedding, i: int, l: int) -> Fraction:
    """Q = (l-i) 2^(nM) W / ((P_l - P_i) E) in lowest terms."""
    a, gap = _pair_data(e, i, l)
    return Fraction(((l - i) * (e.W // gap)) << (a.n * a.M), e.E_prod)


def certify_pair(e: Embedding, i: int, l: int) -> VisibilityCertificate:
    if not 1 <= i < l <= e.n:
        raise ValueError(f"need 1 <= i < l <= n, got ({i}, {l})")
    D = slope_coefficient(e, i, l).denominator
    xi, xl = e.point(i).x, e.point(l).x
    if e.graph.has_edge(i, l):
        p = e.assignment.p[(i, l)]
        bound = 1 << (2 * e.n + 1)
        if D % p:
            raise CertificationFailure(f"edge ({i},{l}): p_il = {p} does not divide D ({D.bit_length()} bits)")
        if D <= bound or xl >= bound:
            raise CertificationFailure(f"edge ({i},{l}): D ({D.bit_length()} bits) does not exceed every column below 2^{2 * e.n + 1}")
        first_multiple = (xi // D + 1) * D
        if first_multiple < xl:
            raise CertificationFailure(f"edge ({i},{l}): column {first_multiple} is a multiple of D")
        return VisibilityCertificate((i, l), D, "edge", prime=p, range_bound=bound)
    if D != 1:
        raise CertificationFailure(f"non-edge ({i},{l}): D has {D.bit_length()} bits, expected D = 1")
    s = xi.numerator // xi.denominator + 1
    if not s < xl:
        raise CertificationFailure(f"non-edge ({i},{l}): no integer column between the endpoints")
    y = sum(term_decomposition(e, i, l, s))
    if y.denominator != 1:
        raise CertificationFailure(f"non-edge ({i},{l}): height at column {s} is not an integer")
    return VisibilityCertificate((i, l), D, "non-edge", blocker=LatticePoint(s, y.numerator))


def certificates(e: Embedding) -> list[VisibilityCertificate]:
    return [certify_pair(e, i, l) for i, l in pair_order(e.n)]


@dataclass
class EmbeddingReport:
    mode: str
    failures: list[Failure] = field(default_factory=list)
    assignment: AssignmentReport | None = None
    certificates: dict[tuple[int, int], VisibilityCertificate] = field(default_factory=dict)
    certificate_adjacency: dict[tuple[int, int], bool] = field(default_factory=dict)
    brute_adjacency: dict[tuple[int, int], bool] = field(default_factory=dict)
    spot_columns_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, check: str, where: tuple, detail: str) -> None:
        self.failures.append(Failure(check, where, detail))

    def counts(self) -> tuple[int, int]:
        """(edge certificates, non-edge certificates)."""
        edges = sum(c.is_edge for c in self.certificates.values())
        return edges, len(self.certificates) - edges


def column_span(e: Embedding, i: int, l: int) -> int:
    """Number of integer columns strictly between x_i and x_l."""
    xi, xl = e.point(i).x, e.point(l).x
    return max(0, -((-xl.numerator) // xl.denominator) - xi.numerator // xi.denominator - 1)


def verify_embedding(e: Embedding, mode: str = "certificate", budget: int = BRUTE_FORCE_BUDGET,
                     spot_columns: int = 0, seed: int = 0) -> EmbeddingReport:
    """Check that the induced visibility graph of the stored points is e.graph.

    ``certificate`` derives every pair from its reduced denominator D and
    re-validates blockers geometrically; ``brute_force`` scans every integer
    column between each pair's endpoints using the stored coordinates only;
    ``both`` runs the two and demands agreement. ``spot_columns`` > 0 adds that
    many random columns per pair, evaluated from the stored coordinates and
    compared with the D-divisibility prediction.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    rep = EmbeddingReport(mode)
    n = e.graph.n
    if e.assignment.n != n or len(e.points) != n:
        rep.fail("shape", (), f"graph has {n} vertices, assignment {e.assignment.n}, points {len(e.points)}")
        return rep
    pairs = pair_order(n)
    if mode != "certificate":
        over = [(pr, column_span(e, *pr)) for pr in pairs if column_span(e, *pr) > budget]
        if over:
            (i, l), span = over[0]
            raise ResourceBudgetError(f"pair ({i},{l}) spans {span} columns, over the brute-force budget {budget}")

    rep.assignment = verify_assignment(e.assignment)
    rep.failures.extend(rep.assignment.failures)
    if rep.assignment.ok:
        if e.W != difference_product(e.assignment):
            rep.fail("products", (), "W is not the product of the differences P_j - P_k")
        if e.E_prod != edge_product(e.graph, e.assignment):
            rep.fail("products", (), "E is not the product of the edge primes")
        if e.W % e.E_prod:
            rep.fail("products", (), "E does not divide W")
        else:
            expected = construct_points(e.graph, e.assignment)
            for i, (got, want) in enumerate(zip(e.points, expected), 1):
                if got != want:
                    rep.fail("points", (i,), "stored point differs from the construction")

    if n >= 2:
        for i, pt in enumerate(e.points, 1):
            if pt.x_is_integer:
                rep.fail("x-integrality", (i,), "x-coordinate is an integer")
    if len(set(e.points)) != n:
        rep.fail("distinct", (), "points are not pairwise distinct")
        return rep
    for i, l, k in combinations(range(1, n + 1), 3):
        if orientation(e.point(i), e.point(l), e.point(k)) == 0:
            rep.fail("collinear", (i, l, k), "three points of X are collinear")
    for pr in pairs:
        for k in range(1, n + 1):
            if k not in pr and strictly_between(e.point(pr[0]), e.point(pr[1]), e.point(k)):
                rep.fail("x-blocker", pr + (k,), f"x_{k} lies on the segment")
    try:
        for bad in slope_order_violations(e):
            rep.fail("slope-order", bad, "slopes not strictly decreasing")
    except CertificationFailure as exc:
        rep.fail("slope-order", (), str(exc))

    if mode in ("certificate", "both"):
        _certificate_pass(e, rep)
    if mode in ("brute_force", "both"):
        _brute_force_pass(e, rep, budget)
    if mode == "both":
        for pr in pairs:
            c, b = rep.certificate_adjacency.get(pr), rep.brute_adjacency.get(pr)
            if c is not None and b is not None and c != b:
                rep.fail("agreement", pr, f"certificate says {'edge' if c else 'non-edge'}, enumeration disagrees")
    if spot_columns:
        _spot_pass(e, rep, spot_columns, seed)
    return rep


def _certificate_pass(e: Embedding, rep: EmbeddingReport) -> None:
    for i, l in pair_order(e.n):
        a, b = e.point(i), e.point(l)
        try:
            cert = certify_pair(e, i, l)
        except CertificationFailure as exc:
            rep.fail("certificate", (i, l), str(exc))
            continue
        rep.certificates[(i, l)] = cert
        rep.certificate_adjacency[(i, l)] = cert.is_edge
        hits = lattice_points_strictly_between(a, b)
        if cert.is_edge:
            if hits.count:
                rep.fail("certificate", (i, l), f"edge certificate but column {hits.witness.x} holds a lattice point")
        else:
            blocker = ExactPoint(cert.blocker.x, 0, cert.blocker.y)
            if not strictly_between(a, b, blocker) or hits.witness != cert.blocker:
                rep.fail("certificate", (i, l), f"blocker at column {cert.blocker.x} is not the first lattice point on the segment")
        if cert.is_edge != e.graph.has_edge(i, l):
            rep.fail("adjacency", (i, l), "certificate kind contradicts the graph")


def _brute_force_pass(e: Embedding, rep: EmbeddingReport, budget: int) -> None:
    for i, l in pair_order(e.n):
        hits = lattice_points_by_enumeration(e.point(i), e.point(l), budget)
        visible = hits.count == 0
        rep.brute_adjacency[(i, l)] = visible
        if visible != e.graph.has_edge(i, l):
            where = f"first blocker at column {hits.witness.x}" if hits.count else "no blocker found"
            rep.fail("adjacency", (i, l), f"enumeration disagrees with the graph: {where}")


def _spot_pass(e: Embedding, rep: EmbeddingReport, per_pair: int, seed: int) -> None:
    rng = random.Random(seed)
    for i, l in pair_order(e.n):
        a, b = e.point(i), e.point(l)
        first = a.x.numerator // a.x.denominator + 1
        last = -((-b.x.numerator) // b.x.denominator) - 1
        if last < first:
            continue
        try:
            D = slope_coefficient(e, i, l).denominator
        except CertificationFailure as exc:
            rep.fail("spot", (i, l), str(exc))
            continue
        k = max(a.x_pow2, b.x_pow2)
        xa, xb = a.scaled_x(k), b.scaled_x(k)
        dX, dy = xb - xa, b.y - a.y
        for _ in range(per_pair):
            s = rng.randint(first, last)
            integral = (a.y * dX + ((s << k) - xa) * dy) % dX == 0
            rep.spot_columns_checked += 1
            if integral != (s % D == 0) or integral == e.graph.has_edge(i, l):
                rep.fail("spot", (i, l, s), "column integrality contradicts the certificate")
                break
