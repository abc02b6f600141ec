"""Torus complexes over the integers and the surface-complex graph of T^3.

Vertices are primitive, nonzero integer vectors up to sign, i.e. points of
rational projective space, kept in a canonical form whose first nonzero
coordinate is positive.  In the 3-torus such a class is the homology class
of an essential flat torus, and two distinct classes are joined by an edge
when representatives can be made to meet in a single essential curve.
Computationally that happens exactly when the gcd of the 2x2 minors of the
3x2 matrix of representatives is 1, equivalently when the pair extends to
a basis of Z^3.

Two simplex tests coexist:

* `is_finegold_simplex`: a set of classes spans a simplex of the torus
  complex when its matrix of representatives is a submatrix of an element
  of SL(n, Z) (gcd of maximal minors equal to 1; facet-wise for n+1
  vertices).
* the flag rule of the surface-complex graph: every pairwise-adjacent set
  spans.  The two agree on edges but not on triangles, and the triple
  (1,0,0), (0,1,0), (1,1,2) separates them.

`connect_path` produces, for any two distinct classes, a path of at most
two edges together with determinant-1 witness matrices for every edge, so
the output is a self-certifying object rather than a bare assertion.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .exactlin import (
    IntMatrix,
    complete_to_unimodular,
    content,
    det,
    inverse_unimodular,
    minors_gcd,
    xgcd,
)

__all__ = [
    "ProjVector",
    "PathCertificate",
    "ComplexGraph",
    "GRAPH_KINDS",
    "canonicalize",
    "cross_product",
    "is_finegold_simplex",
    "s1_edge",
    "intersection_components",
    "edge_witness",
    "two_hop_path",
    "connect_path",
    "enumerate_vertices",
    "build_graph",
    "bfs_distance",
    "truncation_diameter",
    "farey_neighbors",
    "graph_to_json_dict",
    "graph_to_dot",
]


@dataclass(frozen=True, order=True)
class ProjVector:
    """A primitive integer vector up to sign, in canonical form.

    Canonical means content 1 and positive first nonzero coordinate, so
    each projective class has exactly one representative and equality of
    classes is plain equality.
    """

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        c = self.coords
        if len(c) < 2:
            raise ValueError("vertex vectors need length >= 2")
        for e in c:
            if not isinstance(e, int):
                raise TypeError(f"non-integer coordinate {e!r}")
        if all(e == 0 for e in c):
            raise ValueError("zero vector is not a vertex")
        g = content(c)
        if g != 1:
            raise ValueError(f"vector is not primitive (content {g})")
        first = next(e for e in c if e != 0)
        if first < 0:
            raise ValueError("not canonical: first nonzero coordinate is negative")

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def label(self) -> str:
        return ",".join(str(e) for e in self.coords)


def canonicalize(v: Sequence[int]) -> ProjVector:
    """Canonical representative of the class of v, up to sign.

    Rejects the zero vector and non-primitive vectors (an imprimitive
    vector signals an invalid vertex; it is never rescaled silently).
    """
    c = tuple(v)
    if not c or all(e == 0 for e in c):
        raise ValueError("zero vector is not a vertex")
    first = next(e for e in c if e != 0)
    if first < 0:
        c = tuple(-e for e in c)
    return ProjVector(c)


def cross_product(a: Sequence[int], b: Sequence[int]) -> tuple[int, int, int]:
    """Cross product of two length-3 integer vectors.

    Its entries are the 2x2 minors of the 3x2 matrix (a b), up to sign and
    order, so its content counts minimal intersection components of the
    corresponding flat tori.
    """
    if len(a) != 3 or len(b) != 3:
        raise ValueError("cross product needs length-3 vectors")
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _require_distinct_3(a: ProjVector, b: ProjVector) -> None:
    if len(a) != 3 or len(b) != 3:
        raise ValueError("expected length-3 vertices")
    if a == b:
        raise ValueError("vertices must be distinct projective classes")


def s1_edge(a: ProjVector, b: ProjVector) -> bool:
    """Edge test for the surface-complex graph of the 3-torus.

    True when the tori representing a and b can be isotoped to meet in a
    single component: the gcd of the 2x2 minors of (a b) equals 1.
    Distinct classes are required; distinct essential tori in the 3-torus
    always meet, so a self-edge is meaningless.
    """
    _require_distinct_3(a, b)
    return content(cross_product(a.coords, b.coords)) == 1


def intersection_components(a: ProjVector, b: ProjVector) -> int:
    """Minimal number of intersection components of the two flat tori.

    Computed as the content of the cross product; always >= 1 for distinct
    classes, and equal to 1 exactly when `s1_edge` holds.
    """
    _require_distinct_3(a, b)
    return content(cross_product(a.coords, b.coords))


def is_finegold_simplex(vs: Sequence[ProjVector], n: int | None = None) -> bool:
    """Simplex test of the torus complex over SL(n, Z).

    For k+1 <= n vertices: true when the gcd of the (k+1)x(k+1) minors of
    the n x (k+1) matrix of representatives is 1 (for k+1 == n this is
    |det| == 1; flipping one representative's sign realizes +1 within the
    same classes).  For n+1 vertices: true when all n+1 facets span.
    """
    vs = list(vs)
    if n is None:
        n = len(vs[0]) if vs else 0
    if any(len(v) != n for v in vs):
        raise ValueError(f"all vertices must have length {n}")
    if not 2 <= len(vs) <= n + 1:
        raise ValueError(f"simplex size {len(vs)} out of range for dimension {n}")
    if len(set(vs)) != len(vs):
        raise ValueError("repeated projective class")
    if len(vs) <= n:
        m = IntMatrix.from_columns([v.coords for v in vs])
        return minors_gcd(m, len(vs)) == 1
    return all(
        is_finegold_simplex([v for j, v in enumerate(vs) if j != omit], n)
        for omit in range(len(vs))
    )


def _bezout_coefficients(values: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    # Left fold of xgcd: coefficients c with sum(c_i * values_i) == gcd.
    g = 0
    coeffs: list[int] = []
    for v in values:
        g2, p, q = xgcd(g, v)
        coeffs = [c * p for c in coeffs]
        coeffs.append(q)
        g = g2
    return g, tuple(coeffs)


def edge_witness(a: ProjVector, b: ProjVector) -> IntMatrix:
    """Determinant-1 matrix whose first two columns represent the edge (a, b).

    The third column w solves (a x b) . w == 1, which exists exactly when
    the pair spans an edge; det(a | b | w) == (a x b) . w == 1 exactly.
    """
    _require_distinct_3(a, b)
    c = cross_product(a.coords, b.coords)
    g, w = _bezout_coefficients(c)
    if g != 1:
        raise ValueError(f"not an edge: pair meets in {g} components")
    m = IntMatrix.from_columns([a.coords, b.coords, w])
    if det(m) != 1:
        raise RuntimeError("edge witness failed determinant verification")
    return m


@dataclass(frozen=True)
class PathCertificate:
    """A path of at most two edges, carrying its own proof.

    `waypoints` lists the visited classes (two or three of them);
    `witnesses` holds one determinant-1 matrix per edge whose first two
    columns are the canonical representatives of that edge's endpoints;
    `transform` is the unimodular coordinate change used during
    construction (identity when none was needed).
    """

    waypoints: tuple[ProjVector, ...]
    witnesses: tuple[IntMatrix, ...]
    transform: IntMatrix

    def __post_init__(self) -> None:
        if len(self.waypoints) not in (2, 3):
            raise ValueError("a certificate has two or three waypoints")
        if len(self.witnesses) != len(self.waypoints) - 1:
            raise ValueError("one witness per edge required")
        if self.transform.rows != 3 or self.transform.cols != 3:
            raise ValueError("transform must be 3x3")
        if det(self.transform) != 1:
            raise ValueError("transform must have determinant 1")
        for u, v, w in zip(self.waypoints, self.waypoints[1:], self.witnesses):
            if not s1_edge(u, v):
                raise ValueError(f"({u.label}) -- ({v.label}) is not an edge")
            if det(w) != 1:
                raise ValueError("witness determinant is not 1")
            if w.column(0) != u.coords or w.column(1) != v.coords:
                raise ValueError("witness columns do not match the edge")

    @property
    def num_edges(self) -> int:
        return len(self.witnesses)

    def to_json_dict(self) -> dict:
        return {
            "waypoints": [list(v.coords) for v in self.waypoints],
            "edges": self.num_edges,
            "witnesses": [w.to_lists() for w in self.witnesses],
            "transform": self.transform.to_lists(),
        }


# Cyclic permutation sending e1 -> e3 (and e2 -> e1, e3 -> e2); det +1.
_P_E1_TO_E3 = IntMatrix(((0, 1, 0), (0, 0, 1), (1, 0, 0)))
_E3 = (0, 0, 1)


def _transverse_pair(a: int, b: int) -> tuple[int, int]:
    # (x, y) with a*y - b*x == gcd(a, b) > 0, minimizing |x| and preferring
    # x > 0 on ties; gcd(x, y) == 1 automatically since
    # y*(a/g) - x*(b/g) == 1.
    g, u, v = xgcd(a, b)
    if g == 0:
        raise ValueError("(0, 0) admits no transverse pair")
    x0, y0 = -v, u
    if a == 0:
        return (x0, y0)
    step = abs(a) // g
    x_hi = x0 % step
    best: tuple[tuple[int, int], int, int] | None = None
    for x in (x_hi, x_hi - step):
        y = (g + b * x) // a
        key = (abs(x), 0 if x > 0 else 1)
        if best is None or key < best[0]:
            best = (key, x, y)
    assert best is not None
    return (best[1], best[2])


def two_hop_path(a: ProjVector, b: ProjVector) -> PathCertificate:
    """Constructive two-edge path from a to b, never taking a shortcut.

    A unimodular change of coordinates T sends b to (0,0,1); writing
    T a = (p, q, r), the Euclidean algorithm yields (x, y) with
    p*y - q*x == gcd(p, q), and (x, y, 0) is adjacent to both transformed
    endpoints.  Pulling (x, y, 0) back through T^-1 gives the intermediate
    vertex; witnesses are then completed and verified edge by edge.
    """
    _require_distinct_3(a, b)
    if b.coords == _E3:
        t = IntMatrix.identity(3)
        t_inv = t
    else:
        completion = complete_to_unimodular(b.coords)
        t = _P_E1_TO_E3 @ inverse_unimodular(completion)
        t_inv = inverse_unimodular(t)
    p, q, _ = t.apply(a.coords)
    x, y = _transverse_pair(p, q)
    mid = canonicalize(t_inv.apply((x, y, 0)))
    return PathCertificate(
        waypoints=(a, mid, b),
        witnesses=(edge_witness(a, mid), edge_witness(mid, b)),
        transform=t,
    )


def connect_path(a: ProjVector, b: ProjVector) -> PathCertificate:
    """Certified path of at most two edges between distinct classes.

    One hop when (a, b) is already an edge; otherwise the constructive
    route of `two_hop_path`.  Every witness matrix has determinant exactly
    1 and is verified before the certificate is returned.
    """
    _require_distinct_3(a, b)
    if content(cross_product(a.coords, b.coords)) == 1:
        return PathCertificate(
            waypoints=(a, b),
            witnesses=(edge_witness(a, b),),
            transform=IntMatrix.identity(3),
        )
    return two_hop_path(a, b)


def enumerate_vertices(n: int, height: int) -> list[ProjVector]:
    """All canonical classes of length n with max-norm <= height, in
    lexicographic order."""
    if n < 2:
        raise ValueError("dimension must be >= 2")
    if height < 1:
        raise ValueError("height must be >= 1")
    out = []
    rng = range(-height, height + 1)
    for tup in product(rng, repeat=n):
        first = next((e for e in tup if e != 0), 0)
        if first <= 0:
            continue
        if content(tup) != 1:
            continue
        out.append(ProjVector(tup))
    out.sort()
    return out


GRAPH_KINDS = ("finegold-skeleton", "surface-complex-s1")


@dataclass(frozen=True)
class ComplexGraph:
    """A height-truncated 1-skeleton: vertices in lexicographic order,
    edges as index pairs (i, j) with i < j."""

    kind: str
    height: int
    vertices: tuple[ProjVector, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.kind not in GRAPH_KINDS:
            raise ValueError(f"unknown graph kind {self.kind!r}")
        if self.height < 1:
            raise ValueError("height must be >= 1")
        for v in self.vertices:
            if max(abs(e) for e in v.coords) > self.height:
                raise ValueError(f"vertex ({v.label}) exceeds height {self.height}")
        for i, j in self.edges:
            if not 0 <= i < j < len(self.vertices):
                raise ValueError(f"bad edge ({i}, {j})")

    @property
    def dimension(self) -> int:
        return len(self.vertices[0]) if self.vertices else 0

    def index_of(self, v: ProjVector) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise ValueError(f"vertex ({v.label}) is not in the graph") from None

    def neighbors(self, i: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == i:
                out.append(b)
            elif b == i:
                out.append(a)
        return out

    def degree(self, v: ProjVector) -> int:
        return len(self.neighbors(self.index_of(v)))


def _pair_spans_edge(kind: str, a: ProjVector, b: ProjVector) -> bool:
    if kind == "surface-complex-s1":
        return s1_edge(a, b)
    # Torus-complex 1-skeleton in any dimension: the pair is half of a
    # unimodular matrix.  For n == 3 this coincides with s1_edge.
    m = IntMatrix.from_columns([a.coords, b.coords])
    return minors_gcd(m, 2) == 1


def build_graph(kind: str, height: int, n: int = 3) -> ComplexGraph:
    """Truncation of the chosen 1-skeleton to vertices of max-norm <= height.

    The two kinds produce identical edge sets for n == 3; the
    "finegold-skeleton" kind also accepts other dimensions (n == 2 gives a
    fragment of the Farey graph), while "surface-complex-s1" is defined
    for n == 3 only.  The edge list is sorted and independent of
    evaluation order.
    """
    if kind not in GRAPH_KINDS:
        raise ValueError(f"unknown graph kind {kind!r}")
    if kind == "surface-complex-s1" and n != 3:
        raise ValueError("surface-complex-s1 requires dimension 3")
    vertices = enumerate_vertices(n, height)
    edges = tuple(
        (i, j)
        for i, j in combinations(range(len(vertices)), 2)
        if _pair_spans_edge(kind, vertices[i], vertices[j])
    )
    return ComplexGraph(kind=kind, height=height, vertices=tuple(vertices), edges=edges)


def _adjacency(g: ComplexGraph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in g.vertices]
    for i, j in g.edges:
        adj[i].append(j)
        adj[j].append(i)
    return adj


def _bfs_from(adj: list[list[int]], start: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[start] = 0
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_distance(g: ComplexGraph, a: ProjVector, b: ProjVector) -> int | None:
    """Shortest edge count between a and b inside the truncation.

    None when no path exists within the truncated graph.  Because
    intermediate vertices of true geodesics may exceed the height bound,
    a finite value is an upper bound for the distance in the full complex,
    never an exact claim about it.
    """
    ia, ib = g.index_of(a), g.index_of(b)
    dist = _bfs_from(_adjacency(g), ia)[ib]
    return None if dist < 0 else dist


def truncation_diameter(g: ComplexGraph) -> tuple[int | None, tuple[ProjVector, ProjVector] | None]:
    """Max pairwise BFS distance in the truncation and a realizing pair.

    Returns (None, pair) when some pair is unreachable within the
    truncation.  Deterministic: the lexicographically first realizing pair
    is reported.
    """
    adj = _adjacency(g)
    best = 0
    pair: tuple[ProjVector, ProjVector] | None = None
    for i in range(len(g.vertices)):
        dist = _bfs_from(adj, i)
        for j in range(i + 1, len(g.vertices)):
            if dist[j] < 0:
                return None, (g.vertices[i], g.vertices[j])
            if dist[j] > best:
                best = dist[j]
                pair = (g.vertices[i], g.vertices[j])
    return best, pair


def farey_neighbors(v: ProjVector, height: int) -> list[ProjVector]:
    """Neighbors of a Farey vertex within the height truncation.

    For v = (p, q), these are the canonical (r, s) with max-norm <= height
    and |p*s - q*r| == 1: classes of curves on the 2-torus meeting a curve
    of slope v exactly once.
    """
    if len(v) != 2:
        raise ValueError("farey vertices have length 2")
    p, q = v.coords
    return [
        u for u in enumerate_vertices(2, height)
        if abs(p * u.coords[1] - q * u.coords[0]) == 1
    ]


def graph_to_json_dict(g: ComplexGraph) -> dict:
    return {
        "kind": g.kind,
        "height": g.height,
        "vertices": [list(v.coords) for v in g.vertices],
        "edges": [list(e) for e in g.edges],
    }


def graph_to_dot(g: ComplexGraph) -> str:
    lines = ["graph {"]
    for v in g.vertices:
        lines.append(f'  "{v.label}";')
    for i, j in g.edges:
        lines.append(f'  "{g.vertices[i].label}" -- "{g.vertices[j].label}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
