"""Exact convex hulls of integer point sets and their face lattices.

``hull`` works inside the affine hull of the input.  The points are projected
onto the lexicographically first set of pivot coordinates of their difference
vectors, which is injective on the affine hull, and facets are found there by
the double description method applied to the cone of valid inequalities
``{(a, b) : a . q <= b for every point q}``.  Facet normals are lifted back with
zeros off the pivot coordinates; the affine hull itself is reported as a list
of equations.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .linalg import affine_rank, dot, inverse, nullspace, primitive, rank, rref

Point = tuple[int, ...]


@dataclass(frozen=True)
class Facet:
    normal: tuple[int, ...]
    offset: int  # normal . x <= offset on the polytope


@dataclass(frozen=True)
class LatticePolytope:
    vertices: tuple[Point, ...]
    affine_dim: int
    facets: tuple[Facet, ...]
    equations: tuple[Facet, ...]  # normal . x == offset on the affine hull
    incidence: tuple[int, ...]  # incidence[f] = bitmask of vertices on facet f

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0]) if self.vertices else 0

    def vertex_index(self) -> dict[Point, int]:
        return {p: a for a, p in enumerate(self.vertices)}

    def contains(self, x: Sequence) -> bool:
        return all(dot(e.normal, x) == e.offset for e in self.equations) and all(
            dot(f.normal, x) <= f.offset for f in self.facets
        )

    def closure(self, mask: int) -> int:
        """Vertex set of the smallest face containing the vertices in ``mask``."""
        out = (1 << len(self.vertices)) - 1
        if mask == 0:
            return 0
        for inc in self.incidence:
            if mask & ~inc == 0:
                out &= inc
        return out

    def is_face(self, mask: int) -> bool:
        return mask == 0 or self.closure(mask) == mask

    def face_dim(self, mask: int) -> int:
        pts = [self.vertices[a] for a in range(len(self.vertices)) if mask >> a & 1]
        return affine_rank(pts) if pts else -1

    def edges(self) -> set[tuple[int, int]]:
        """Pairs of vertex indices spanning an edge."""
        out = set()
        if self.affine_dim == 1:
            return {(0, 1)} if len(self.vertices) == 2 else set()
        for a, b in combinations(range(len(self.vertices)), 2):
            m = (1 << a) | (1 << b)
            if self.closure(m) == m:
                out.add((a, b))
        return out

    def translate(self, shift: Sequence[int]) -> "LatticePolytope":
        return hull([tuple(x + s for x, s in zip(p, shift)) for p in self.vertices])

    def to_json(self, faces: bool = False) -> dict:
        out: dict = {
            "vertices": [list(p) for p in self.vertices],
            "affine_dim": self.affine_dim,
            "facets": [{"normal": list(f.normal), "offset": f.offset} for f in self.facets],
            "equations": [{"normal": list(f.normal), "offset": f.offset} for f in self.equations],
        }
        if faces:
            fl = face_lattice(self)
            out["faces"] = [fl.vertex_list(m) for m in fl.faces]
        return out


def _affine_frame(points: list[Point]) -> tuple[list[int], list[Facet]]:
    p0 = points[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    if not diffs or rank(diffs) == 0:
        n = len(p0)
        eqs = [Facet(tuple(int(a == b) for a in range(n)), p0[b]) for b in range(n)]
        return [], eqs
    R, piv = rref(diffs)
    eqs = []
    for vec in nullspace(R):
        nv = primitive(vec)
        eqs.append(Facet(nv, dot(nv, p0)))
    eqs.sort(key=lambda f: (f.normal, f.offset))
    return piv, eqs


def _positive_lead(v: tuple[int, ...]) -> tuple[int, ...]:
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


def _dd_facets(q: list[tuple[int, ...]]) -> list[tuple[tuple[int, ...], int]]:
    """Facets (a, b) of the full-dimensional polytope conv(q) in Z^d, a.x <= b."""
    d = len(q[0])
    m = len(q)
    # greedy lexicographic choice of d+1 affinely independent points
    basis = [0]
    for a in range(1, m):
        trial = basis + [a]
        if affine_rank([q[x] for x in trial]) == len(trial) - 1:
            basis = trial
            if len(basis) == d + 1:
                break
    M = [list(q[x]) + [-1] for x in basis]
    Minv = inverse(M)
    rays: list[tuple[int, ...]] = []
    zeros: list[int] = []
    # columns of -M^{-1}: ray c is tight on all initial constraints except basis[c]
    for c in range(d + 1):
        r = primitive([-Minv[x][c] for x in range(d + 1)])
        rays.append(r)
        zeros.append(sum(1 << basis[x] for x in range(d + 1) if x != c))
    done = set(basis)

    def val(r: tuple[int, ...], a: int) -> int:
        return dot(q[a], r[:d]) - r[d]

    for a in range(m):
        if a in done:
            continue
        done.add(a)
        vals = [val(r, a) for r in rays]
        pos = [x for x, s in enumerate(vals) if s > 0]
        if not pos:
            zeros = [z | (1 << a) if vals[x] == 0 else z for x, z in enumerate(zeros)]
            continue
        neg = [x for x, s in enumerate(vals) if s < 0]
        keep = [x for x, s in enumerate(vals) if s <= 0]
        new_rays = [rays[x] for x in keep]
        new_zeros = [zeros[x] | (1 << a) if vals[x] == 0 else zeros[x] for x in keep]
        for p in pos:
            for n_ in neg:
                z = zeros[p] & zeros[n_]
                if z.bit_count() < d - 1:
                    continue
                if any(
                    x != p and x != n_ and z & ~zeros[x] == 0 for x in range(len(rays))
                ):
                    continue
                vp, vn = vals[p], vals[n_]
                r = primitive([vp * y - vn * x for x, y in zip(rays[p], rays[n_])])
                new_rays.append(r)
                new_zeros.append(z | (1 << a))
        rays, zeros = new_rays, new_zeros
    out = []
    for r in rays:
        a_ = r[:d]
        if any(a_):
            out.append((tuple(a_), r[d]))
    return out


def hull(points: Iterable[Sequence[int]]) -> LatticePolytope:
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise ValueError("hull of an empty point set")
    piv, eqs = _affine_frame(pts)
    dim = len(piv)
    n = len(pts[0])
    if dim == 0:
        return LatticePolytope((pts[0],), 0, (), tuple(eqs), ())
    q = [tuple(p[c] for c in piv) for p in pts]
    if dim == 1:
        lo, hi = min(x[0] for x in q), max(x[0] for x in q)
        raw = [((1,), hi), ((-1,), -lo)]
    else:
        raw = _dd_facets(q)
    facets = []
    for a, b in raw:
        normal = [0] * n
        for c, x in zip(piv, a):
            normal[c] = x
        facets.append(Facet(tuple(normal), b))
    facets = sorted(set(facets), key=lambda f: (_positive_lead(f.normal), f.normal, f.offset))
    # vertices: points whose tight facet normals have full rank
    verts = []
    for p, qq in zip(pts, q):
        tight = [f.normal for f in facets if dot(f.normal, p) == f.offset]
        if rank([[t[c] for c in piv] for t in tight]) == dim:
            verts.append(p)
    incidence = tuple(
        sum(1 << a for a, p in enumerate(verts) if dot(f.normal, p) == f.offset) for f in facets
    )
    return LatticePolytope(tuple(verts), dim, tuple(facets), tuple(eqs), incidence)


def minkowski_sum(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    if P.ambient_dim != Q.ambient_dim:
        raise ValueError("Minkowski sum of polytopes in different ambient spaces")
    return hull(tuple(a + b for a, b in zip(p, r)) for p in P.vertices for r in Q.vertices)


def minkowski_sum_all(polys: Sequence[LatticePolytope]) -> LatticePolytope:
    acc = polys[0]
    for P in polys[1:]:
        acc = minkowski_sum(acc, P)
    return acc


# face lattices


class FaceLatticeTooLarge(ValueError):
    pass


def face_lattice_gate() -> tuple[int, int]:
    """Size limits for full face-lattice enumeration; override with TORIC_FACE_LATTICE_GATE="dim,verts"."""
    raw = os.environ.get("TORIC_FACE_LATTICE_GATE")
    if raw:
        a, b = raw.split(",")
        return int(a), int(b)
    return 8, 64


@dataclass(frozen=True)
class FaceLattice:
    polytope: LatticePolytope
    faces: tuple[int, ...]  # vertex bitmasks, sorted by (dim, mask)
    dims: tuple[int, ...]

    @property
    def f_vector(self) -> tuple[int, ...]:
        """Face counts for dimensions 0..dim (the empty face is not counted)."""
        top = self.polytope.affine_dim
        return tuple(sum(1 for x in self.dims if x == k) for k in range(top + 1))

    def faces_of_dim(self, k: int) -> list[int]:
        return [m for m, x in zip(self.faces, self.dims) if x == k]

    def vertex_list(self, mask: int) -> list[int]:
        return [a for a in range(len(self.polytope.vertices)) if mask >> a & 1]

    def as_poset(self):
        from ..poset import Poset

        down = []
        for b, mb in enumerate(self.faces):
            down.append(sum(1 << a for a, ma in enumerate(self.faces) if ma & ~mb == 0))
        return Poset(tuple(self.faces), tuple(down))


def face_lattice(P: LatticePolytope, force: bool = False) -> FaceLattice:
    max_dim, max_verts = face_lattice_gate()
    if not force and (P.affine_dim > max_dim or len(P.vertices) > max_verts):
        raise FaceLatticeTooLarge(
            f"face lattice of a {P.affine_dim}-polytope with {len(P.vertices)} vertices exceeds the gate"
        )
    full = (1 << len(P.vertices)) - 1
    faces = {full}
    frontier = [full]
    while frontier:
        nxt = []
        for f in frontier:
            for inc in P.incidence:
                g = f & inc
                if g not in faces:
                    faces.add(g)
                    nxt.append(g)
        frontier = nxt
    faces.add(0)
    dims = {m: P.face_dim(m) for m in faces}
    order = sorted(faces, key=lambda m: (dims[m], m))
    return FaceLattice(P, tuple(order), tuple(dims[m] for m in order))
