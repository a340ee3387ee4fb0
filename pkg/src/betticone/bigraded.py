"""Bigraded Betti tables over k[x, y], matching graphs, and the
valency certificate for extremality.

A table lives on pairs (homological degree i <= 2, bidegree alpha in
Z^2).  Its matching graph has one vertex per bidegree carrying weight,
an x-edge between vertices that agree in the first coordinate and a
y-edge between vertices that agree in the second.  If every vertex
meets exactly one edge of each kind, the graph is connected, and no
vertex mixes homological degrees, the table spans an extremal ray of
the bigraded cone; the certificate is sufficient only, so the negative
answer is always "inconclusive", never "not extremal".
"""

import itertools
import os
from math import gcd

from .errors import BoundTooLarge, NotFiniteLength

CERT_EXTREMAL = "ExtremalByClaim3"
CERT_INCONCLUSIVE = "Inconclusive"

DEFAULT_MAX_BOX = 6


class BigradedBettiTable:
    """Sparse map (i, (a, b)) -> positive integer count, i in {0, 1, 2}."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        clean = {}
        for (i, alpha), count in dict(entries).items():
            count = int(count)
            if count == 0:
                continue
            if count < 0:
                raise ValueError(f"negative count at ({i}, {alpha})")
            i = int(i)
            if i not in (0, 1, 2):
                raise ValueError(
                    f"homological degree {i} impossible over two variables")
            a, b = alpha
            clean[(i, (int(a), int(b)))] = count
        self.entries = clean

    def entry(self, i, alpha):
        return self.entries.get((i, tuple(alpha)), 0)

    def is_empty(self):
        return not self.entries

    def add(self, other):
        merged = dict(self.entries)
        for key, count in other.entries.items():
            merged[key] = merged.get(key, 0) + count
        return BigradedBettiTable(merged)

    def support(self):
        """All bidegrees carrying any entry."""
        return sorted({alpha for _, alpha in self.entries})

    def gcd_normalized(self):
        g = gcd(*self.entries.values()) if self.entries else 1
        return BigradedBettiTable(
            {key: c // g for key, c in self.entries.items()})

    def swap_xy(self):
        """Mirror image under exchanging the two variables."""
        return BigradedBettiTable(
            {(i, (b, a)): c for (i, (a, b)), c in self.entries.items()})

    def canonical_key(self):
        """Hashable form of the gcd-normalized table (scalar classes)."""
        return frozenset(self.gcd_normalized().entries.items())

    def __eq__(self, other):
        if isinstance(other, BigradedBettiTable):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def __repr__(self):
        body = ", ".join(f"({i},{a}):{c}" for (i, a), c
                         in sorted(self.entries.items()))
        return f"BigradedBettiTable({{{body}}})"


class KPolynomial:
    """Integer Laurent polynomial in s1, s2 given coefficientwise."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        self.coefficients = {
            (int(a), int(b)): int(c)
            for (a, b), c in dict(coefficients).items() if int(c) != 0}

    def is_zero(self):
        return not self.coefficients

    def substitute_s2_one(self):
        """Coefficients of K(s1, 1) as a map a -> integer."""
        out = {}
        for (a, _), c in self.coefficients.items():
            out[a] = out.get(a, 0) + c
        return {a: c for a, c in out.items() if c}

    def substitute_s1_one(self):
        out = {}
        for (_, b), c in self.coefficients.items():
            out[b] = out.get(b, 0) + c
        return {b: c for b, c in out.items() if c}

    def __eq__(self, other):
        if isinstance(other, KPolynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __repr__(self):
        body = " + ".join(f"{c}*s^{a}" for a, c
                          in sorted(self.coefficients.items()))
        return f"KPolynomial({body or '0'})"


class MatchingGraph:
    """Weighted graph on the bidegrees of a table.

    vertices: alpha -> (weight, frozenset of contributing homological
    degrees).  Edges are stored as sorted vertex pairs; two vertices
    are x-adjacent iff they share the first coordinate, y-adjacent iff
    they share the second.
    """

    __slots__ = ("vertices", "x_edges", "y_edges")

    def __init__(self, vertices, x_edges, y_edges):
        self.vertices = dict(vertices)
        self.x_edges = tuple(x_edges)
        self.y_edges = tuple(y_edges)

    def weight(self, alpha):
        return self.vertices[alpha][0]

    def x_valency(self, alpha):
        return sum(1 for e in self.x_edges if alpha in e)

    def y_valency(self, alpha):
        return sum(1 for e in self.y_edges if alpha in e)

    def is_connected(self):
        verts = list(self.vertices)
        if not verts:
            return True
        parent = {v: v for v in verts}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for u, w in self.x_edges + self.y_edges:
            parent[find(u)] = find(w)
        roots = {find(v) for v in verts}
        return len(roots) == 1

    def component_count(self):
        verts = list(self.vertices)
        parent = {v: v for v in verts}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for u, w in self.x_edges + self.y_edges:
            parent[find(u)] = find(w)
        return len({find(v) for v in verts})


def matching_graph(t):
    """Build the weighted matching graph of a bigraded table."""
    weights = {}
    support = {}
    for (i, alpha), count in t.entries.items():
        weights[alpha] = weights.get(alpha, 0) + count
        support.setdefault(alpha, set()).add(i)
    vertices = {alpha: (weights[alpha], frozenset(support[alpha]))
                for alpha in weights}
    ordered = sorted(vertices)
    x_edges = []
    y_edges = []
    for u, w in itertools.combinations(ordered, 2):
        if u[0] == w[0]:
            x_edges.append((u, w))
        if u[1] == w[1]:
            y_edges.append((u, w))
    return MatchingGraph(vertices, x_edges, y_edges)


def k_polynomial(t):
    """K(s1, s2) = sum_i sum_alpha (-1)^i beta_{i,alpha} s^alpha."""
    coeffs = {}
    for (i, alpha), count in t.entries.items():
        term = -count if i % 2 else count
        coeffs[alpha] = coeffs.get(alpha, 0) + term
    return KPolynomial(coeffs)


def finite_length_check(k):
    """True iff K(s1, 1) and K(1, s2) are both the zero polynomial."""
    return not k.substitute_s2_one() and not k.substitute_s1_one()


class CertificateVerdict:
    """Outcome of the valency certificate plus its failure diagnostics.

    failures is a list of (kind, subject, detail) triples with kinds
    'empty', 'x-valency', 'y-valency', 'mixed-support', 'disconnected';
    for valency failures the subject is the vertex and the detail its
    actual valency.
    """

    __slots__ = ("verdict", "failures", "graph")

    def __init__(self, verdict, failures, graph):
        self.verdict = verdict
        self.failures = tuple(failures)
        self.graph = graph

    def is_extremal(self):
        return self.verdict == CERT_EXTREMAL

    def __repr__(self):
        return f"CertificateVerdict({self.verdict}, {list(self.failures)})"


def check_extremality_certificate(t):
    """Apply the sufficient extremality test to a bigraded table.

    Requires the finite length criterion on the K-polynomial (raises
    NotFiniteLength otherwise).  Certifies extremality when the
    matching graph is (1,1)-valent and connected and every vertex draws
    from a single homological degree; any failed condition downgrades
    the verdict to inconclusive, never to a claim of non-extremality.
    """
    if not finite_length_check(k_polynomial(t)):
        raise NotFiniteLength(
            "K-polynomial is not divisible by both (1 - s1) and (1 - s2)")
    graph = matching_graph(t)
    failures = []
    if not graph.vertices:
        failures.append(("empty", None, 0))
    for alpha in sorted(graph.vertices):
        weight, support = graph.vertices[alpha]
        xv = graph.x_valency(alpha)
        yv = graph.y_valency(alpha)
        if xv != 1:
            failures.append(("x-valency", alpha, xv))
        if yv != 1:
            failures.append(("y-valency", alpha, yv))
        if len(support) != 1:
            failures.append(("mixed-support", alpha, sorted(support)))
    if graph.vertices and not graph.is_connected():
        failures.append(("disconnected", None, graph.component_count()))
    verdict = CERT_EXTREMAL if not failures else CERT_INCONCLUSIVE
    return CertificateVerdict(verdict, failures, graph)


def _staircase_antichains(bound_a, bound_b):
    """All nonempty antichains of exponent pairs inside the box.

    An antichain (no generator divides another) is a choice of columns
    a_1 < ... < a_r paired with strictly decreasing b values; these are
    exactly the minimal generating sets of monomial ideals whose
    generators fit in the box.
    """
    a_values = range(bound_a + 1)
    b_values = range(bound_b + 1)
    out = []
    for r in range(1, min(bound_a, bound_b) + 2):
        for cols in itertools.combinations(a_values, r):
            for rows in itertools.combinations(b_values, r):
                gens = tuple(zip(cols, sorted(rows, reverse=True)))
                out.append(gens)
    return out


def _divides_some(point, gens):
    return any(g[0] <= point[0] and g[1] <= point[1] for g in gens)


def seed_catalogue():
    """Presentation-matrix seeds that are not monomial quotients.

    The catalogue holds the two-generator module whose matching graph
    is a heart-shaped octagon; it certifies extremality but no monomial
    quotient produces its table, because any quotient generated in
    degrees (1,0) and (0,1) picks up a relation in degree (1,1) that
    the heart avoids.
    """
    from .module_engine import PresentationMatrix
    heart = PresentationMatrix(
        rows=[(1, 0), (0, 1)],
        cols=[(3, 0), (2, 1), (1, 2), (0, 3)],
        entries=[
            [[(1, (2, 0))], [(1, (1, 1))], [(1, (0, 2))], []],
            [[], [(1, (2, 0))], [(1, (1, 1))], [(1, (0, 2))]],
        ])
    return [("heart", heart)]


def enumerate_box_rays(bound, max_box=None):
    """All distinct certified-extremal rays with support in the box.

    Candidates are the finite length monomial quotients I/J whose table
    support fits in [0, B1] x [0, B2], plus the presentation seeds from
    the catalogue.  Tables failing the valency certificate are dropped;
    survivors are deduplicated up to positive scalar and returned in a
    canonical sorted order.
    """
    from .module_engine import (MonomialPair, bigraded_betti,
                                coker_presentation, dual_module,
                                monomial_quotient)
    from .errors import NotFiniteLength as _NFL

    b1, b2 = int(bound[0]), int(bound[1])
    if max_box is None:
        max_box = int(os.environ.get("BETTICONE_MAX_BOX", DEFAULT_MAX_BOX))
    if b1 > max_box or b2 > max_box:
        raise BoundTooLarge(
            f"box {bound} exceeds the guard {max_box}; raise "
            "BETTICONE_MAX_BOX if you mean it")
    if b1 < 0 or b2 < 0:
        raise ValueError("box corners must be nonnegative")

    def fits(table):
        return all(0 <= a <= b1 and 0 <= b <= b2
                   for a, b in table.support())

    found = {}

    def consider(table):
        if table.is_empty() or not fits(table):
            return
        try:
            verdict = check_extremality_certificate(table)
        except _NFL:
            return
        if verdict.is_extremal():
            key = table.canonical_key()
            found.setdefault(key, table.gcd_normalized())

    antichains = _staircase_antichains(b1, b2)
    for gens_i in antichains:
        for gens_j in antichains:
            # J inside I, and quick finite length screen: J must reach
            # both axes at least as far down as I does.
            if not all(_divides_some(g, gens_i) for g in gens_j):
                continue
            if min(b for _, b in gens_j) > min(b for _, b in gens_i):
                continue
            if min(a for a, _ in gens_j) > min(a for a, _ in gens_i):
                continue
            pair = MonomialPair(gens_i, gens_j)
            module = monomial_quotient(pair)
            if not module.dims:
                continue
            consider(bigraded_betti(module))

    for _, seed in seed_catalogue():
        module = coker_presentation(seed)
        consider(bigraded_betti(module))
        consider(bigraded_betti(dual_module(module)))

    return sorted(found.values(),
                  key=lambda t: sorted(t.entries.items()))


def count_up_to_swap(tables):
    """Number of scalar classes after also identifying x with y."""
    seen = set()
    for t in tables:
        key = tuple(sorted(t.canonical_key()))
        swapped = tuple(sorted(t.swap_xy().canonical_key()))
        seen.add(min(key, swapped))
    return len(seen)


def graph_to_dot(graph):
    """DOT text for a matching graph: x-edges solid, y-edges dashed."""
    lines = ["graph matching {"]
    for alpha in sorted(graph.vertices):
        weight, _ = graph.vertices[alpha]
        name = f"\"{alpha[0]},{alpha[1]}\""
        lines.append(f"  {name} [label=\"({alpha[0]},{alpha[1]}):{weight}\"];")
    for u, w in sorted(graph.x_edges):
        lines.append(f"  \"{u[0]},{u[1]}\" -- \"{w[0]},{w[1]}\""
                     " [style=solid];")
    for u, w in sorted(graph.y_edges):
        lines.append(f"  \"{u[0]},{u[1]}\" -- \"{w[0]},{w[1]}\""
                     " [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def bigraded_to_json_obj(t):
    return {
        "kind": "bigraded",
        "entries": [{"i": i, "deg": [a, b], "b": c}
                    for (i, (a, b)), c in sorted(t.entries.items())],
    }


def bigraded_from_json_obj(obj):
    if obj.get("kind") != "bigraded":
        raise ValueError("expected a bigraded table object")
    entries = {}
    for item in obj["entries"]:
        key = (int(item["i"]), (int(item["deg"][0]), int(item["deg"][1])))
        entries[key] = entries.get(key, 0) + int(item["b"])
    return BigradedBettiTable(entries)
