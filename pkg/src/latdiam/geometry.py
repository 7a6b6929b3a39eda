"""Exact integer computational-geometry kernel.

Everything in here decides with integer arithmetic only: orientation
predicates, 2D and 3D convex hulls, facet merging, edge graphs and
breadth-first distances.  Coordinates stay small (grids up to k = 10), so
plain Python ints are both exact and fast.

Conventions:
  * points are tuples of ints, ``(x, y)`` or ``(x, y, z)``
  * polygons are vertex cycles in counterclockwise order starting at the
    lexicographically least vertex
  * a ``Polytope3`` lists vertices in lexicographic order; facets are
    maximal coplanar faces (coplanar triangles are merged), stored as
    index cycles counterclockwise as seen from outside
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from math import gcd

Point2 = tuple[int, int]
Point3 = tuple[int, int, int]


class DegenerateGeometryError(ValueError):
    """Raised when a point set spans too few dimensions for the requested hull."""


def orient2d(a: Point2, b: Point2, c: Point2) -> int:
    """Sign of the cross product (b-a) x (c-a): +1 ccw, 0 collinear, -1 cw."""
    det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def orient3d(a: Point3, b: Point3, c: Point3, d: Point3) -> int:
    """Sign of det[b-a, c-a, d-a]; +1 when d lies on the ccw side of (a,b,c)."""
    ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    vx, vy, vz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    wx, wy, wz = d[0] - a[0], d[1] - a[1], d[2] - a[2]
    det = (
        ux * (vy * wz - vz * wy)
        - uy * (vx * wz - vz * wx)
        + uz * (vx * wy - vy * wx)
    )
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def hull2d(points) -> tuple[Point2, ...]:
    """Strict convex hull of 2D integer points, counterclockwise.

    Returns exactly the extreme points; collinear boundary points are
    dropped.  The cycle starts at the lexicographically least vertex.
    Raises DegenerateGeometryError if fewer than 3 extreme points exist.
    """
    pts = sorted(set(map(tuple, points)))
    if len(pts) < 3:
        raise DegenerateGeometryError("need at least 3 distinct points for a 2D hull")
    lower: list[Point2] = []
    for p in pts:
        while len(lower) >= 2 and orient2d(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point2] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orient2d(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    cycle = lower[:-1] + upper[:-1]
    if len(cycle) < 3:
        raise DegenerateGeometryError("points are collinear")
    return tuple(cycle)


@dataclass(frozen=True)
class Polytope3:
    """A full-dimensional 3D lattice polytope as vertices, facets and edges.

    vertices: lexicographically sorted extreme points.
    facets:   maximal planar faces as vertex-index cycles, counterclockwise
              seen from outside, each starting at its least index.
    edges:    sorted (i, j) index pairs with i < j.
    planes:   outward facet planes aligned with ``facets``; a plane is a
              primitive integer normal n and offset c with the polytope in
              n . x <= c.
    """

    vertices: tuple[Point3, ...]
    facets: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    planes: tuple[tuple[Point3, int], ...]

    def vertex_index(self) -> dict[Point3, int]:
        return {p: i for i, p in enumerate(self.vertices)}


def _first_simplex(pts: list[Point3]):
    """First four affinely independent points in lexicographic scan order."""
    p0, p1 = pts[0], pts[1]
    p2 = None
    for q in pts[2:]:
        ux, uy, uz = p1[0] - p0[0], p1[1] - p0[1], p1[2] - p0[2]
        vx, vy, vz = q[0] - p0[0], q[1] - p0[1], q[2] - p0[2]
        if (uy * vz - uz * vy, uz * vx - ux * vz, ux * vy - uy * vx) != (0, 0, 0):
            p2 = q
            break
    if p2 is None:
        raise DegenerateGeometryError("points are collinear")
    p3 = None
    for q in pts:
        if q in (p0, p1, p2):
            continue
        if orient3d(p0, p1, p2, q) != 0:
            p3 = q
            break
    if p3 is None:
        raise DegenerateGeometryError("points are coplanar")
    return p0, p1, p2, p3


def _plane_through(a: Point3, b: Point3, c: Point3):
    """Raw (non-primitive) normal of the plane through a, b, c and its offset."""
    ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    vx, vy, vz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    n = (uy * vz - uz * vy, uz * vx - ux * vz, ux * vy - uy * vx)
    return n, n[0] * a[0] + n[1] * a[1] + n[2] * a[2]


def _primitive_plane(n: Point3, c: int):
    g = gcd(gcd(abs(n[0]), abs(n[1])), abs(n[2]))
    return (n[0] // g, n[1] // g, n[2] // g), c // g


def hull3d(points) -> Polytope3:
    """Exact 3D convex hull with coplanar triangles merged into facets.

    Incremental insertion in lexicographic order with strict visibility,
    followed by a per-plane 2D hull pass that produces the maximal facets.
    The edge set contains the true 1-faces only, never triangulation
    diagonals.  Raises DegenerateGeometryError on rank-deficient input.
    """
    pts = sorted(set(map(tuple, points)))
    if len(pts) < 4:
        raise DegenerateGeometryError("need at least 4 distinct points for a 3D hull")
    p0, p1, p2, p3 = _first_simplex(pts)
    seed = {p0, p1, p2, p3}
    # Reference point 4*g where g is the centroid of the seed simplex; it is
    # strictly interior to every intermediate hull, so it orients faces.
    ref = (
        p0[0] + p1[0] + p2[0] + p3[0],
        p0[1] + p1[1] + p2[1] + p3[1],
        p0[2] + p1[2] + p2[2] + p3[2],
    )

    faces: dict[int, tuple] = {}  # id -> (a, b, c, nx, ny, nz, off)
    edge_faces: dict[frozenset, set[int]] = {}
    next_id = 0

    def add_face(a: Point3, b: Point3, c: Point3) -> None:
        nonlocal next_id
        n, off = _plane_through(a, b, c)
        # flip so the interior reference point is strictly behind the face
        side = n[0] * ref[0] + n[1] * ref[1] + n[2] * ref[2] - 4 * off
        if side > 0:
            b, c = c, b
            n = (-n[0], -n[1], -n[2])
            off = -off
        faces[next_id] = (a, b, c, n[0], n[1], n[2], off)
        for e in (frozenset((a, b)), frozenset((b, c)), frozenset((a, c))):
            edge_faces.setdefault(e, set()).add(next_id)
        next_id += 1

    def drop_face(fid: int) -> None:
        a, b, c = faces[fid][:3]
        for e in (frozenset((a, b)), frozenset((b, c)), frozenset((a, c))):
            edge_faces[e].discard(fid)
            if not edge_faces[e]:
                del edge_faces[e]
        del faces[fid]

    add_face(p0, p1, p2)
    add_face(p0, p1, p3)
    add_face(p0, p2, p3)
    add_face(p1, p2, p3)

    for p in pts:
        if p in seed:
            continue
        px, py, pz = p
        visible = [
            fid
            for fid, f in faces.items()
            if f[3] * px + f[4] * py + f[5] * pz > f[6]
        ]
        if not visible:
            continue  # inside or on the current hull: not a vertex
        dead = set(visible)
        horizon = []
        for fid in visible:
            a, b, c = faces[fid][:3]
            for e in (frozenset((a, b)), frozenset((b, c)), frozenset((a, c))):
                others = edge_faces[e] - dead
                if others:
                    horizon.append(e)
        for fid in visible:
            drop_face(fid)
        for e in horizon:
            x, y = e
            add_face(x, y, p)

    # merge coplanar triangles into maximal facets
    groups: dict[tuple, set[Point3]] = {}
    for a, b, c, nx, ny, nz, off in faces.values():
        key = _primitive_plane((nx, ny, nz), off)
        groups.setdefault(key, set()).update((a, b, c))

    facet_cycles = []
    facet_planes = {}
    for (n, off), members in groups.items():
        axis = max(range(3), key=lambda i: abs(n[i]))
        keep = [i for i in range(3) if i != axis]
        proj = {(q[keep[0]], q[keep[1]]): q for q in members}
        cycle2d = hull2d(proj.keys())
        cycle = [proj[q] for q in cycle2d]
        v0, v1, v2 = cycle[0], cycle[1], cycle[2]
        m, _ = _plane_through(v0, v1, v2)
        if m[0] * n[0] + m[1] * n[1] + m[2] * n[2] < 0:
            cycle.reverse()
        facet_cycles.append(tuple(cycle))
        facet_planes[tuple(cycle)] = (n, off)

    vertices = tuple(sorted({q for cycle in facet_cycles for q in cycle}))
    index = {q: i for i, q in enumerate(vertices)}

    indexed = []
    for cycle in facet_cycles:
        idx = tuple(index[q] for q in cycle)
        start = idx.index(min(idx))
        indexed.append((idx[start:] + idx[:start], facet_planes[cycle]))
    indexed.sort(key=lambda t: t[0])

    edge_count: Counter = Counter()
    for idx, _ in indexed:
        for i, j in zip(idx, idx[1:] + idx[:1]):
            edge_count[(i, j) if i < j else (j, i)] += 1
    bad = [e for e, c in edge_count.items() if c != 2]
    if bad:
        raise AssertionError(f"hull surface is not edge-manifold at {bad}")
    edges = tuple(sorted(edge_count))
    if len(vertices) - len(edges) + len(indexed) != 2:
        raise AssertionError("hull violates the Euler relation")

    return Polytope3(
        vertices=vertices,
        facets=tuple(f for f, _ in indexed),
        edges=edges,
        planes=tuple(pl for _, pl in indexed),
    )


def contains_point(p: Polytope3, q: Point3) -> bool:
    """True iff q satisfies every facet inequality (boundary included)."""
    x, y, z = q
    return all(n[0] * x + n[1] * y + n[2] * z <= c for n, c in p.planes)


def edge_graph(p: Polytope3) -> dict[int, list[int]]:
    """Adjacency map of the polytope's vertices along its edges."""
    adj: dict[int, list[int]] = {i: [] for i in range(len(p.vertices))}
    for i, j in p.edges:
        adj[i].append(j)
        adj[j].append(i)
    for nbrs in adj.values():
        nbrs.sort()
    return adj


def graph_distance(adj, s, t, cutoff: int | None = None):
    """Breadth-first distance from s to t, or None when unreachable.

    Works on any mapping node -> iterable of neighbors.  With ``cutoff``
    the search stops early and returns None for distances beyond it.
    """
    if s == t:
        return 0
    seen = {s}
    frontier = deque([(s, 0)])
    while frontier:
        node, d = frontier.popleft()
        if cutoff is not None and d >= cutoff:
            return None
        for nxt in adj[node]:
            if nxt in seen:
                continue
            if nxt == t:
                return d + 1
            seen.add(nxt)
            frontier.append((nxt, d + 1))
    return None


def graph_diameter(adj) -> int:
    """Largest breadth-first distance between any two nodes.

    Raises ValueError on a disconnected graph (polytope graphs never are).
    """
    best = 0
    nodes = list(adj)
    for s in nodes:
        dist = {s: 0}
        frontier = deque([s])
        far = 0
        while frontier:
            node = frontier.popleft()
            for nxt in adj[node]:
                if nxt not in dist:
                    dist[nxt] = dist[node] + 1
                    far = max(far, dist[nxt])
                    frontier.append(nxt)
        if len(dist) != len(nodes):
            raise ValueError("graph is disconnected")
        best = max(best, far)
    return best
