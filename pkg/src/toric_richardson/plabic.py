"""Plabic graphs, perfect orientations, and the two family constructors.

Vertices are tuples: ``("b", label)`` for a boundary leaf and ``("i", id)`` for
an internal vertex.  ``rotation`` lists each internal vertex's neighbours in
the cyclic order that, walked around a tree, meets the boundary labels in
increasing cyclic order; ``disk_embedding_ok`` checks exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Literal

from .errors import MixedRank

Color = Literal["black", "white"]
Vertex = tuple[str, int]
Edge = tuple[Vertex, Vertex]


def B(label: int) -> Vertex:
    return ("b", label)


def V(ident: int) -> Vertex:
    return ("i", ident)


@dataclass(frozen=True)
class PlabicGraph:
    boundary: tuple[int, ...]
    colors: dict  # internal id -> Color
    edges: tuple[Edge, ...]
    rotation: dict = field(default_factory=dict, compare=False)  # internal Vertex -> tuple of neighbours

    @property
    def vertices(self) -> list[Vertex]:
        return [B(b) for b in self.boundary] + [V(i) for i in sorted(self.colors)]

    def neighbours(self) -> dict[Vertex, list[Vertex]]:
        adj: dict[Vertex, list[Vertex]] = {x: [] for x in self.vertices}
        for x, y in self.edges:
            adj[x].append(y)
            adj[y].append(x)
        return adj

    def components(self) -> list[list[Vertex]]:
        adj = self.neighbours()
        seen: set[Vertex] = set()
        out = []
        for s in self.vertices:
            if s in seen:
                continue
            comp, stack = [], [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def validate(self) -> None:
        adj = self.neighbours()
        for b in self.boundary:
            if len(adj[B(b)]) != 1:
                raise ValueError(f"boundary vertex {b} has degree {len(adj[B(b)])}")
        for x, y in self.edges:
            if x[0] == "b" and y[0] == "b":
                raise ValueError("edge between two boundary vertices")

    def swap_colors(self) -> "PlabicGraph":
        flip = {"black": "white", "white": "black"}
        return PlabicGraph(self.boundary, {i: flip[c] for i, c in self.colors.items()}, self.edges, dict(self.rotation))

    def relabel(self, boundary_map: dict[int, int], id_offset: int = 0) -> "PlabicGraph":
        def f(x: Vertex) -> Vertex:
            return B(boundary_map[x[1]]) if x[0] == "b" else V(x[1] + id_offset)

        return PlabicGraph(
            tuple(boundary_map[b] for b in self.boundary),
            {i + id_offset: c for i, c in self.colors.items()},
            tuple((f(x), f(y)) for x, y in self.edges),
            {f(x): tuple(f(y) for y in nb) for x, nb in self.rotation.items()},
        )


def disjoint_union(graphs: Iterable[PlabicGraph]) -> PlabicGraph:
    boundary: list[int] = []
    colors: dict = {}
    edges: list[Edge] = []
    rotation: dict = {}
    offset = 0
    for g in graphs:
        h = g.relabel({b: b for b in g.boundary}, offset)
        boundary.extend(h.boundary)
        colors.update(h.colors)
        edges.extend(h.edges)
        rotation.update(h.rotation)
        offset += (max(g.colors) + 1) if g.colors else 0
    return PlabicGraph(tuple(sorted(boundary)), colors, tuple(edges), rotation)


def star(labels: Iterable[int], color: Color = "white") -> PlabicGraph:
    labels = tuple(labels)
    c = V(0)
    return PlabicGraph(labels, {0: color}, tuple((c, B(b)) for b in labels), {c: tuple(B(b) for b in labels)})


# perfect orientations


@dataclass(frozen=True)
class PerfectOrientation:
    forward: tuple[bool, ...]  # forward[e]: edge e points from edges[e][0] to edges[e][1]
    source_set: tuple[int, ...]


def _component_orientations(G: PlabicGraph, comp: list[Vertex], edge_ids: list[int]) -> list[dict[int, bool]]:
    internal = [x for x in comp if x[0] == "i"]
    if not internal:
        return [{e: True} for e in edge_ids] + [{e: False} for e in edge_ids]
    incident: dict[Vertex, list[int]] = {x: [] for x in internal}
    for e in edge_ids:
        for x in G.edges[e]:
            if x[0] == "i":
                incident[x].append(e)
    out: list[dict[int, bool]] = []

    def rec(pos: int, assign: dict[int, bool]) -> None:
        if pos == len(internal):
            out.append(dict(assign))
            return
        x = internal[pos]
        white = G.colors[x[1]] == "white"
        for special in incident[x]:
            trial = {}
            ok = True
            for e in incident[x]:
                into = (e == special) if white else (e != special)
                fwd = into == (G.edges[e][1] == x)
                if e in assign and assign[e] != fwd:
                    ok = False
                    break
                trial[e] = fwd
            if not ok:
                continue
            added = [e for e in trial if e not in assign]
            assign.update(trial)
            rec(pos + 1, assign)
            for e in added:
                del assign[e]

    rec(0, {})
    return out


def perfect_orientations(G: PlabicGraph) -> list[PerfectOrientation]:
    edge_comp: dict[Vertex, int] = {}
    comps = G.components()
    for c, comp in enumerate(comps):
        for x in comp:
            edge_comp[x] = c
    per_comp_edges: list[list[int]] = [[] for _ in comps]
    for e, (x, _) in enumerate(G.edges):
        per_comp_edges[edge_comp[x]].append(e)
    choices = [
        _component_orientations(G, comp, ids) for comp, ids in zip(comps, per_comp_edges) if ids
    ]
    out = []
    for combo in product(*choices):
        fwd = [False] * len(G.edges)
        for part in combo:
            for e, f in part.items():
                fwd[e] = f
        sources = []
        for e, (x, y) in enumerate(G.edges):
            tail = x if fwd[e] else y
            if tail[0] == "b":
                sources.append(tail[1])
        out.append(PerfectOrientation(tuple(fwd), tuple(sorted(sources))))
    out.sort(key=lambda o: (o.source_set, o.forward))
    return out


def positroid_from_graph(G: PlabicGraph) -> frozenset[tuple[int, ...]]:
    sets = {o.source_set for o in perfect_orientations(G)}
    if len({len(s) for s in sets}) > 1:
        raise MixedRank(f"source sets of sizes {sorted({len(s) for s in sets})}")
    return frozenset(sets)


def is_forest(G: PlabicGraph) -> bool:
    parent: dict[Vertex, Vertex] = {x: x for x in G.vertices}

    def find(x: Vertex) -> Vertex:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in G.edges:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[rx] = ry
    return True


def disk_embedding_ok(G: PlabicGraph) -> bool:
    """Trees only: the boundary walk visits labels in increasing cyclic order and
    components occupy pairwise non-crossing label sets."""
    if not is_forest(G):
        return False
    adj = G.neighbours()
    comp_labels = []
    for comp in G.components():
        labels = sorted(x[1] for x in comp if x[0] == "b")
        if not labels:
            continue
        comp_labels.append(labels)
        if len(labels) == 1:
            continue
        start = B(labels[0])
        walk: list[int] = []
        prev, cur = start, adj[start][0]
        for _ in range(4 * len(G.edges) + 4):
            if cur[0] == "b":
                walk.append(cur[1])
                if cur == start:
                    break
                prev, cur = cur, adj[cur][0]
                continue
            rot = G.rotation.get(cur) or tuple(adj[cur])
            if set(rot) != set(adj[cur]):
                return False
            nxt = rot[(rot.index(prev) + 1) % len(rot)]
            prev, cur = cur, nxt
        if walk[-1:] != [labels[0]] or walk[:-1] != labels[1:]:
            return False
    for a in range(len(comp_labels)):
        for b in range(a + 1, len(comp_labels)):
            A, Bs = set(comp_labels[a]), set(comp_labels[b])
            merged = sorted(A | Bs)
            runs = sum(1 for x, y in zip(merged, merged[1:] + merged[:1]) if (x in A) != (y in A))
            if runs > 2:
                return False
    return True


# constructors


def family_star_graph(n: int, k: int) -> PlabicGraph:
    """Black vertex on boundary 1..k, white vertex on k+1..n, joined iff k is odd."""
    if n % 2 or n < 4:
        raise ValueError("n must be even and at least 4")
    if not 1 <= k <= n - 1:
        raise ValueError("k out of range")
    blk, wht = V(0), V(1)
    edges: list[Edge] = [(blk, B(b)) for b in range(1, k + 1)] + [(wht, B(b)) for b in range(k + 1, n + 1)]
    rot_b = [B(b) for b in range(1, k + 1)]
    rot_w = [B(b) for b in range(k + 1, n + 1)]
    if k % 2:
        edges.append((blk, wht))
        rot_b.append(wht)
        rot_w.append(blk)
    return PlabicGraph(tuple(range(1, n + 1)), {0: "black", 1: "white"}, tuple(edges), {blk: tuple(rot_b), wht: tuple(rot_w)})


def _two_adic(k: int) -> tuple[int, int]:
    l = 0
    while k % 2 == 0:
        k //= 2
        l += 1
    return l, k


def hypercube_graph(n: int, k: int) -> PlabicGraph:
    """The forest G_k(n) on boundary [2^n]."""
    N = 1 << n
    if not 1 <= k <= N - 1:
        raise ValueError(f"k must lie in 1..{N - 1}")
    l, kk = _two_adic(k)
    if l > 0:
        size = 1 << (n - l)
        base = hypercube_graph(n - l, kk)
        copies = [base.relabel({b: c * size + b for b in base.boundary}) for c in range(1 << l)]
        return disjoint_union(copies)
    if k == 1:
        return star(range(1, N + 1), "white")
    L = k.bit_length()  # 2^(L-1) < k < 2^L
    if L == n:
        return hypercube_graph(n, N - k).swap_colors()
    inner = hypercube_graph(L, k)
    legs = 1 << (n - L)
    next_id = (max(inner.colors) + 1) if inner.colors else 0
    colors = dict(inner.colors)
    promoted: dict[int, Vertex] = {}
    for b in inner.boundary:
        promoted[b] = V(next_id)
        colors[next_id] = "white"
        next_id += 1

    def f(x: Vertex) -> Vertex:
        return promoted[x[1]] if x[0] == "b" else x

    edges = [(f(x), f(y)) for x, y in inner.edges]
    rotation = {x: tuple(f(y) for y in nb) for x, nb in inner.rotation.items()}
    adj = inner.neighbours()
    for b in inner.boundary:
        c = b - 1
        labels = range(c * legs + 1, (c + 1) * legs + 1)
        for lab in labels:
            edges.append((promoted[b], B(lab)))
        rotation[promoted[b]] = (f(adj[B(b)][0]),) + tuple(B(lab) for lab in labels)
    return PlabicGraph(tuple(range(1, N + 1)), colors, tuple(edges), rotation)
