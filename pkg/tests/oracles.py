"""Brute-force reference implementations used to validate the fast paths.

These deliberately avoid the package's hull code.  Vertices are found by
Caratheodory-style containment tests, facets and edges by enumerating all
supporting planes through point triples.  Everything is exact integer
arithmetic, so oracle and implementation must agree bit for bit.
"""

from itertools import combinations
from math import gcd


def det3(u, v, w):
    return (
        u[0] * (v[1] * w[2] - v[2] * w[1])
        - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0])
    )


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def point_in_tetra(q, a, b, c, d):
    """Exact containment of q in the (possibly degenerate) tetra a,b,c,d."""
    vol = det3(sub(b, a), sub(c, a), sub(d, a))
    if vol == 0:
        return False
    parts = [
        det3(sub(b, q), sub(c, q), sub(d, q)),
        det3(sub(q, a), sub(c, a), sub(d, a)),
        det3(sub(b, a), sub(q, a), sub(d, a)),
        det3(sub(b, a), sub(c, a), sub(q, a)),
    ]
    if vol < 0:
        parts = [-p for p in parts]
    return all(p >= 0 for p in parts)


def rank3(points):
    """True when the point set affinely spans 3-space."""
    pts = list(points)
    a = pts[0]
    for b, c, d in combinations(pts[1:], 3):
        if det3(sub(b, a), sub(c, a), sub(d, a)) != 0:
            return True
    return False


def oracle_vertices(points):
    """Extreme points of a rank-3 set: q is a vertex iff no 4-subset of the
    others contains it."""
    pts = sorted(set(map(tuple, points)))
    out = []
    for q in pts:
        others = [p for p in pts if p != q]
        inside = any(
            point_in_tetra(q, a, b, c, d) for a, b, c, d in combinations(others, 4)
        )
        if not inside:
            out.append(q)
    return tuple(out)


def _primitive(n):
    g = gcd(gcd(abs(n[0]), abs(n[1])), abs(n[2]))
    return tuple(x // g for x in n)


def oracle_supporting_planes(points):
    """All facet planes, found by brute force over point triples.

    Returns a dict mapping a canonical (normal, offset), with the point set
    on the side n.x <= c, to the tuple of input points lying on the plane.
    """
    pts = sorted(set(map(tuple, points)))
    planes = {}
    for a, b, c in combinations(pts, 3):
        n = (
            (b[1] - a[1]) * (c[2] - a[2]) - (b[2] - a[2]) * (c[1] - a[1]),
            (b[2] - a[2]) * (c[0] - a[0]) - (b[0] - a[0]) * (c[2] - a[2]),
            (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]),
        )
        if n == (0, 0, 0):
            continue
        off = n[0] * a[0] + n[1] * a[1] + n[2] * a[2]
        sides = [n[0] * p[0] + n[1] * p[1] + n[2] * p[2] - off for p in pts]
        if all(s <= 0 for s in sides):
            pass
        elif all(s >= 0 for s in sides):
            n = (-n[0], -n[1], -n[2])
            off = -off
            sides = [-s for s in sides]
        else:
            continue
        g = gcd(gcd(abs(n[0]), abs(n[1])), abs(n[2]))
        key = ((n[0] // g, n[1] // g, n[2] // g), off // g)
        planes[key] = tuple(p for p, s in zip(pts, sides) if s == 0)
    return planes


def oracle_edges(points):
    """Hull edges: extreme pairs of >= 2 point intersections of two distinct
    supporting planes."""
    planes = oracle_supporting_planes(points)
    members = list(planes.values())
    edges = set()
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            common = sorted(set(members[i]) & set(members[j]))
            if len(common) < 2:
                continue
            # common points are collinear; take the extremes along the line
            edges.add((common[0], common[-1]))
    return tuple(sorted(edges))


def oracle_vertices_2d(points):
    """Extreme points of a 2D point set by triangle containment tests."""
    pts = sorted(set(map(tuple, points)))

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def in_triangle(q, a, b, c):
        area = cross(a, b, c)
        if area == 0:
            return False
        s1, s2, s3 = cross(q, a, b), cross(q, b, c), cross(q, c, a)
        if area < 0:
            s1, s2, s3 = -s1, -s2, -s3
        return s1 >= 0 and s2 >= 0 and s3 >= 0

    def on_segment(q, a, b):
        if cross(a, b, q) != 0:
            return False
        return (
            min(a[0], b[0]) <= q[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= q[1] <= max(a[1], b[1])
        )

    out = []
    for q in pts:
        others = [p for p in pts if p != q]
        inside = any(
            in_triangle(q, a, b, c) for a, b, c in combinations(others, 3)
        ) or any(on_segment(q, a, b) for a, b in combinations(others, 2))
        if not inside:
            out.append(q)
    return tuple(out)
