"""JSON, DOT and OFF writers with JSON readers for round-tripping."""

from __future__ import annotations

import json
import math
from typing import Any

from .classify import ToricVerdict
from .mrgraph import WiringGraph
from .perm import BruhatInterval, CoverEdge, Permutation
from .plabic import PlabicGraph, perfect_orientations
from .poly import Poly
from .polytope.hull import Facet, LatticePolytope, face_lattice
from .positroid import Constituent


def dumps(obj: Any) -> str:
    """Canonical JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def perm_from_json(x: list[int]) -> Permutation:
    return Permutation(tuple(x))


# intervals


def interval_to_json(I: BruhatInterval) -> dict:
    return {
        "v": I.v.to_list(),
        "w": I.w.to_list(),
        "ranks": [[u.to_list() for u in r] for r in I.ranks],
        "covers": [
            {"lower": e.lower.to_list(), "upper": e.upper.to_list(), "i": e.i, "j": e.j} for e in I.covers
        ],
    }


def interval_from_json(d: dict) -> BruhatInterval:
    return BruhatInterval(
        perm_from_json(d["v"]),
        perm_from_json(d["w"]),
        tuple(tuple(perm_from_json(u) for u in r) for r in d["ranks"]),
        tuple(CoverEdge(perm_from_json(c["lower"]), perm_from_json(c["upper"]), c["i"], c["j"]) for c in d["covers"]),
    )


def hasse_dot(I: BruhatInterval) -> str:
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for r, layer in enumerate(I.ranks):
        names = " ".join(f'"{u}"' for u in layer)
        lines.append(f"  {{ rank=same; {names} }}  // rank {r}")
    for e in I.covers:
        lines.append(f'  "{e.lower}" -> "{e.upper}" [label="({e.i} {e.j})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# verdicts


def verdict_from_json(d: dict) -> ToricVerdict:
    def dec(x):
        if x is None:
            return None
        if isinstance(x, list) and x and all(isinstance(y, int) for y in x):
            return perm_from_json(x)
        if isinstance(x, list):
            return tuple(dec(y) for y in x)
        return x

    return ToricVerdict(
        perm_from_json(d["v"]),
        perm_from_json(d["w"]),
        d["d"],
        d["is_toric"],
        d["by_two_crown"],
        d["by_lattice"],
        d["by_interval_poset_lattice"],
        d["by_r_poly"],
        dec(d["witness"]),
        d["is_hypercube"],
        dec(d["lattice_witness"]),
    )


# minors and constituents


def minor_poly_from_json(d: dict) -> Poly:
    acc = Poly()
    for t in d["terms"]:
        acc = acc + Poly.monomial({int(k[1:]): e for k, e in t["exp"].items()}, t["sign"])
    return acc


def constituent_to_json(C: Constituent) -> dict:
    return {"n": C.n, **C.to_json()}


def constituent_from_json(d: dict) -> Constituent:
    return Constituent(d["n"], d["k"], frozenset(tuple(b) for b in d["bases"]))


def wiring_dot(G: WiringGraph) -> str:
    """Wires run left to right; chip j sits at x = j."""
    lines = ["graph wiring {", "  node [shape=point];"]
    ell = len(G.chips)
    for wire in range(1, G.n + 1):
        lines.append(f'  "L{wire}" [shape=plaintext, label="{wire}", pos="0,{wire}!"];')
        lines.append(f'  "R{wire}" [shape=plaintext, label="{wire}", pos="{ell + 1},{wire}!"];')
    for wire in range(1, G.n + 1):
        prev = f'"L{wire}"'
        for c in G.chips:
            if c.wire in (wire, wire - 1):
                node = f'"c{c.position}w{wire}"'
                lines.append(f'  {node} [pos="{c.position},{wire}!"];')
                lines.append(f"  {prev} -- {node};")
                prev = node
        lines.append(f'  {prev} -- "R{wire}";')
    for c in G.chips:
        a, b = f'"c{c.position}w{c.wire}"', f'"c{c.position}w{c.wire + 1}"'
        if c.kind == "bridge":
            lines.append(f'  {b} -- {a} [label="t{c.position}", color=blue];')
        else:
            lines.append(f'  {a} -- {b} [label="-1", style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# polytopes


def polytope_to_json(P: LatticePolytope, faces: bool = False) -> dict:
    return P.to_json(faces=faces)


def polytope_from_json(d: dict) -> LatticePolytope:
    verts = [tuple(p) for p in d["vertices"]]
    facets = tuple(Facet(tuple(f["normal"]), f["offset"]) for f in d["facets"])
    eqs = tuple(Facet(tuple(f["normal"]), f["offset"]) for f in d["equations"])
    inc = tuple(
        sum(1 << a for a, p in enumerate(verts) if sum(x * y for x, y in zip(f.normal, p)) == f.offset) for f in facets
    )
    return LatticePolytope(tuple(verts), d["affine_dim"], facets, eqs, inc)


def _cyclic_facet(P: LatticePolytope, mask: int, edges: set[tuple[int, int]]) -> list[int]:
    members = [a for a in range(len(P.vertices)) if mask >> a & 1]
    adj = {a: [b for b in members if (min(a, b), max(a, b)) in edges] for a in members}
    cycle = [members[0]]
    prev = None
    while len(cycle) < len(members):
        cur = cycle[-1]
        nxt = next(b for b in sorted(adj[cur]) if b != prev and b not in cycle)
        prev = cur
        cycle.append(nxt)
    return cycle


def polytope_off(P: LatticePolytope) -> str:
    """OFF text for a polytope of affine dimension 3, written in three of its coordinates."""
    if P.affine_dim != 3:
        raise ValueError(f"OFF export needs a 3-dimensional polytope, got dimension {P.affine_dim}")
    from .polytope.linalg import rref

    p0 = P.vertices[0]
    _, piv = rref([[a - b for a, b in zip(p, p0)] for p in P.vertices[1:]])
    edges = P.edges()
    faces = [_cyclic_facet(P, m, edges) for m in P.incidence]
    lines = ["OFF", f"{len(P.vertices)} {len(faces)} {len(edges)}"]
    for p in P.vertices:
        lines.append(" ".join(str(p[c]) for c in piv))
    for f in faces:
        lines.append(" ".join(str(x) for x in [len(f)] + f))
    return "\n".join(lines) + "\n"


def read_off(text: str) -> tuple[list[tuple[int, ...]], list[list[int]]]:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if rows[0] != ["OFF"]:
        raise ValueError("not an OFF file")
    nv, nf = int(rows[1][0]), int(rows[1][1])
    verts = [tuple(int(x) for x in r) for r in rows[2 : 2 + nv]]
    faces = [[int(x) for x in r[1:]] for r in rows[2 + nv : 2 + nv + nf]]
    return verts, faces


def face_lattice_json(P: LatticePolytope) -> dict:
    fl = face_lattice(P)
    return {"f_vector": list(fl.f_vector), "faces": [fl.vertex_list(m) for m in fl.faces]}


# plabic graphs


def _vkey(x: tuple) -> str:
    return f"{x[0]}{x[1]}"


def _vparse(s: str) -> tuple:
    return (s[0], int(s[1:]))


def plabic_to_json(G: PlabicGraph, orientations: bool = False) -> dict:
    out: dict = {
        "boundary": list(G.boundary),
        "colors": {str(i): c for i, c in sorted(G.colors.items())},
        "edges": [[_vkey(x), _vkey(y)] for x, y in G.edges],
        "rotation": {_vkey(x): [_vkey(y) for y in nb] for x, nb in sorted(G.rotation.items())},
    }
    if orientations:
        out["orientations"] = [
            {"forward": list(o.forward), "sources": list(o.source_set)} for o in perfect_orientations(G)
        ]
    return out


def plabic_from_json(d: dict) -> PlabicGraph:
    return PlabicGraph(
        tuple(d["boundary"]),
        {int(i): c for i, c in d["colors"].items()},
        tuple((_vparse(x), _vparse(y)) for x, y in d["edges"]),
        {_vparse(x): tuple(_vparse(y) for y in nb) for x, nb in d["rotation"].items()},
    )


def plabic_dot(G: PlabicGraph) -> str:
    """Boundary leaves placed clockwise on a circle; internal vertices left to the layout engine."""
    N = len(G.boundary)
    lines = ["graph plabic {", '  layout=neato; node [shape=circle, label=""];']
    for a, b in enumerate(G.boundary):
        ang = math.pi / 2 - 2 * math.pi * a / N
        lines.append(f'  "b{b}" [shape=plaintext, label="{b}", pos="{3 * math.cos(ang):.3f},{3 * math.sin(ang):.3f}!"];')
    for i, c in sorted(G.colors.items()):
        lines.append(f'  "i{i}" [style=filled, fillcolor={c}, width=0.2];')
    for x, y in G.edges:
        lines.append(f'  "{_vkey(x)}" -- "{_vkey(y)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
