"""Moment polytopes of toric Bruhat intervals in MR coordinates, and their structure checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from ..classify import is_toric
from ..errors import InconsistentFace, NoSolution, NotToric
from ..mrgraph import ReducedWord, WiringGraph, default_reduced_word, flag_minor_toric, graph_for
from ..perm import BruhatInterval, CoverEdge, Permutation, interval
from ..positroid import Constituent, constituent, indicator
from .hull import FaceLatticeTooLarge, LatticePolytope, face_lattice, hull, minkowski_sum_all
from .linalg import solve_integer

Vec = tuple[int, ...]
Subset = tuple[int, ...]


def _add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _scale(c, a: Sequence) -> tuple:
    return tuple(c * x for x in a)


@dataclass
class MomentData:
    """Everything the structure checks need for one toric interval and one reduced word."""

    v: Permutation
    w: Permutation
    word: ReducedWord
    graph: WiringGraph
    interval: BruhatInterval
    m: dict[int, dict[Subset, Vec]]  # k -> I -> m_I

    @property
    def n(self) -> int:
        return self.v.n

    @property
    def d(self) -> int:
        return self.graph.d

    def constituent(self, k: int) -> Constituent:
        return constituent(self.interval, k)

    def X(self, u: Permutation) -> Vec:
        acc = (0,) * self.d
        for k in range(1, self.n):
            acc = _add(acc, self.m[k][u.prefix(k)])
        return acc

    @cached_property
    def labels(self) -> dict[Permutation, Vec]:
        return {u: self.X(u) for u in self.interval.elements}


def moment_data(v: Permutation, w: Permutation, word: Optional[ReducedWord] = None) -> MomentData:
    if not is_toric(v, w):
        raise NotToric(f"[{v},{w}] is not toric")
    word = word if word is not None else default_reduced_word(w)
    G = graph_for(v, w, word)
    I = interval(v, w)
    m: dict[int, dict[Subset, Vec]] = {}
    for k in range(1, v.n + 1):
        mk = {}
        for B in constituent(I, k).sorted_bases():
            mono = flag_minor_toric(G, B)
            if mono is None:
                raise AssertionError(f"no NI path collection for basis {B} of M_{k}")
            if mono.sign != 1 or any(e > 1 for e in mono.exponents):
                raise AssertionError(f"minor for {B} is not a squarefree monic monomial")
            mk[B] = mono.exponents
        m[k] = mk
    return MomentData(v, w, word, G, I, m)


def summand_polytope(v: Permutation, w: Permutation, word: Optional[ReducedWord], k: int, data: Optional[MomentData] = None) -> LatticePolytope:
    data = data or moment_data(v, w, word)
    return hull(data.m[k].values())


@dataclass(frozen=True)
class LabeledPolytope:
    polytope: LatticePolytope
    labels: dict  # Permutation -> vertex index

    def vertex_of(self, u: Permutation) -> Vec:
        return self.polytope.vertices[self.labels[u]]


def moment_polytope(v: Permutation, w: Permutation, word: Optional[ReducedWord] = None, data: Optional[MomentData] = None) -> LabeledPolytope:
    data = data or moment_data(v, w, word)
    return label_points(data.labels)


def label_points(points: dict[Permutation, Sequence[int]]) -> LabeledPolytope:
    P = hull(points.values())
    idx = P.vertex_index()
    labels = {}
    for u, x in points.items():
        if tuple(x) not in idx:
            raise AssertionError(f"X_{u} = {tuple(x)} is not a vertex")
        labels[u] = idx[tuple(x)]
    if len(set(labels.values())) != len(labels) or len(labels) != len(P.vertices):
        raise AssertionError("vertex labelling is not a bijection")
    return LabeledPolytope(P, labels)


def moment_polytope_as_sum(data: MomentData) -> LatticePolytope:
    return minkowski_sum_all([hull(data.m[k].values()) for k in range(1, data.n)])


# face lattice vs. interval


@dataclass(frozen=True)
class Report:
    ok: bool
    item: Optional[str] = None
    detail: str = ""
    checked: int = 0

    def __bool__(self) -> bool:
        return self.ok


def face_lattice_vs_interval(points: dict[Permutation, Sequence[int]], I: BruhatInterval) -> Report:
    """Certify Int[v,w] ~ face lattice via (i) subintervals are faces of the right dimension,
    (ii) face counts match subinterval counts by dimension, (iii) edges are the Hasse edges."""
    P = hull(points.values())
    idx = P.vertex_index()
    for u in I.elements:
        if tuple(points[u]) not in idx:
            return Report(False, "i", f"[{u},{u}] is not a vertex")
    vid = {u: idx[tuple(points[u])] for u in I.elements}
    if len(set(vid.values())) != len(vid):
        return Report(False, "i", "two interval elements share a vertex")
    els = I.elements
    counts: dict[int, int] = {}
    checked = 0
    for a, x in enumerate(els):
        for b in range(len(els)):
            if not I.up_masks[a] >> b & 1:
                continue
            y = els[b]
            sub = I.up_masks[a] & I.down_masks[b]
            mask = sum(1 << vid[els[c]] for c in range(len(els)) if sub >> c & 1)
            length = I.rank_of[y] - I.rank_of[x]
            if not P.is_face(mask):
                return Report(False, "i", f"[{x},{y}] is not a face")
            if P.face_dim(mask) != length:
                return Report(False, "i", f"[{x},{y}] spans a face of dimension {P.face_dim(mask)} not {length}")
            counts[length] = counts.get(length, 0) + 1
            checked += 1
    try:
        fl = face_lattice(P)
        fv = fl.f_vector
        want = tuple(counts.get(r, 0) for r in range(P.affine_dim + 1))
        if fv != want:
            return Report(False, "ii", f"f-vector {fv} but subinterval counts {want}")
    except FaceLatticeTooLarge:
        pass
    edges = P.edges()
    hasse = {tuple(sorted((vid[e.lower], vid[e.upper]))) for e in I.covers}
    if edges != hasse:
        return Report(False, "iii", "1-skeleton differs from the Hasse diagram")
    return Report(True, checked=checked)


# affine equivalences


@dataclass(frozen=True)
class AffineMap:
    A: tuple[tuple[int, ...], ...]  # rows
    b: tuple[int, ...]

    def __call__(self, x: Sequence[int]) -> Vec:
        return tuple(sum(a * y for a, y in zip(row, x)) + c for row, c in zip(self.A, self.b))

    def columns(self) -> list[Vec]:
        return [tuple(row[c] for row in self.A) for c in range(len(self.A[0]))] if self.A else []


def _solve_rows(sources: list[Vec], targets: list[Vec]) -> AffineMap:
    """Integer (A, b) with A s + b = t for each pair, row by row."""
    design = [list(s) + [1] for s in sources]
    rows, offs = [], []
    for r in range(len(targets[0])):
        sol = solve_integer(design, [t[r] for t in targets])
        if sol is None:
            raise NoSolution(f"no integer affine map for output coordinate {r + 1}")
        rows.append(tuple(sol[:-1]))
        offs.append(sol[-1])
    return AffineMap(tuple(rows), tuple(offs))


def affine_equivalence(data: MomentData, k: int) -> tuple[AffineMap, AffineMap]:
    """(A, b) with A e_I + b = m_I and its left inverse (C, d) with C m_I + d = e_I."""
    bases = sorted(data.m[k])
    e = [indicator(B, data.n) for B in bases]
    mI = [data.m[k][B] for B in bases]
    if data.d == 0:
        fwd = AffineMap(tuple(), tuple())
    else:
        fwd = _solve_rows(e, mI)
    back = _solve_rows(mI, e)
    for x, y in zip(e, mI):
        if fwd(x) != y or back(y) != x:
            raise NoSolution("affine maps fail vertexwise verification")
    return fwd, back


def joint_projection(data: MomentData) -> tuple[tuple[tuple[int, ...], ...], dict[int, Vec]]:
    """One integer C with per-k offsets d^(k): C m_I + d^(k) = e_I for every k and I in M_k."""
    ks = list(range(1, data.n + 1))
    rows_design: list[list[int]] = []
    targets: list[tuple[int, Subset]] = []
    for k in ks:
        for B in sorted(data.m[k]):
            rows_design.append(list(data.m[k][B]) + [int(k == kk) for kk in ks])
            targets.append((k, B))
    C_rows = []
    offsets: dict[int, list[int]] = {k: [] for k in ks}
    for r in range(1, data.n + 1):
        rhs = [int(r in B) for _, B in targets]
        sol = solve_integer(rows_design, rhs)
        if sol is None:
            raise NoSolution(f"no joint integer projection for coordinate {r}")
        C_rows.append(tuple(sol[: data.d]))
        for a, k in enumerate(ks):
            offsets[k].append(sol[data.d + a])
    return tuple(C_rows), {k: tuple(v) for k, v in offsets.items()}


def minkowski_of_transformed(data: MomentData) -> Report:
    """X_u = sum_k (A^(k) e_{u[k]} + b^(k)) and the hulls agree."""
    maps = {k: affine_equivalence(data, k)[0] for k in range(1, data.n)}
    for u in data.interval.elements:
        acc = (0,) * data.d
        for k, f in maps.items():
            acc = _add(acc, f(indicator(u.prefix(k), data.n)) if data.d else ())
        if data.d and acc != data.labels[u]:
            return Report(False, "vertex", f"X_{u} mismatch")
    if data.d:
        summands = []
        for k, f in maps.items():
            summands.append(hull(f(indicator(B, data.n)) for B in data.m[k]))
        S = minkowski_sum_all(summands)
        if set(S.vertices) != set(hull(data.labels.values()).vertices):
            return Report(False, "hull", "Minkowski sum of transformed positroid polytopes differs")
    return Report(True, checked=len(data.interval))


# edges and 2-faces


def edge_transposition(e: CoverEdge) -> tuple[int, int]:
    return e.i, e.j


def edge_vector_check(data: MomentData) -> Report:
    maps = None
    for e in data.interval.covers:
        i, j = e.i, e.j
        u, u2 = e.lower, e.upper
        diffs = set()
        for k in range(1, data.n):
            dk = _sub(data.m[k][u2.prefix(k)], data.m[k][u.prefix(k)])
            if i <= k < j:
                diffs.add(dk)
            elif any(dk):
                return Report(False, "support", f"cover {u}->{u2} moves m at k={k}")
        if len(diffs) != 1:
            return Report(False, "constant", f"cover {u}->{u2}: m-differences differ across k")
        (delta,) = diffs
        X = _sub(data.labels[u2], data.labels[u])
        if X != _scale(j - i, delta):
            return Report(False, "scale", f"cover {u}->{u2}: X difference is not (j-i) * m difference")
        if any(x % (j - i) for x in X):
            return Report(False, "divisible", f"cover {u}->{u2}")
        if data.d:
            if maps is None:
                maps = {k: affine_equivalence(data, k)[0] for k in range(1, data.n)}
            cols = maps[i].columns()
            pred = _scale(j - i, _sub(cols[u(j) - 1], cols[u(i) - 1]))
            if X != pred:
                return Report(False, "a-vectors", f"cover {u}->{u2}: (j-i)(a_u(j) - a_u(i)) mismatch")
    return Report(True, checked=len(data.interval.covers))


@dataclass(frozen=True)
class TwoFace:
    bottom: Permutation
    atoms: tuple[CoverEdge, CoverEdge]
    top: Permutation
    tops: tuple[CoverEdge, CoverEdge]  # tops[a] is the edge from atoms[a] to top


def two_faces(I: BruhatInterval) -> list[TwoFace]:
    out = []
    rank = I.rank_of
    for u in I.elements:
        ups = I.upper_covers[u]
        by_top: dict[Permutation, list[CoverEdge]] = {}
        for e in ups:
            for f in I.upper_covers[e.upper]:
                by_top.setdefault(f.upper, []).append(e)
        for top, es in sorted(by_top.items()):
            if len(es) != 2:
                raise AssertionError(f"length-2 interval [{u},{top}] is not a diamond")
            a1, a2 = sorted(es)
            t1 = next(f for f in I.upper_covers[a1.upper] if f.upper == top)
            t2 = next(f for f in I.upper_covers[a2.upper] if f.upper == top)
            out.append(TwoFace(u, (a1, a2), top, (t1, t2)))
    return out


def two_face_rule(face: TwoFace) -> tuple[str, Optional[tuple[int, int]], Fraction]:
    """Classify a 2-face.

    Edges are numbered 0, 1 (bottom to atoms[0], atoms[1]) and 2, 3 (atoms[0],
    atoms[1] to top); edge 0 is opposite edge 3 and edge 1 opposite edge 2.  A
    trapezoid on indices i<j<k has exactly one edge labelled (i k); that edge
    equals ``ratio`` times its opposite edge, both oriented upward, where ratio
    is the quotient of the two labels' spans.  Returns (kind, (long, opposite), ratio).
    """
    edges = (*face.atoms, *face.tops)
    s1 = {face.atoms[0].i, face.atoms[0].j}
    s2 = {face.atoms[1].i, face.atoms[1].j}
    if not s1 & s2:
        return ("parallelogram", None, Fraction(1))
    idx = sorted(s1 | s2)
    if len(idx) != 3:
        raise InconsistentFace("two atoms use the same transposition")
    i, k = idx[0], idx[2]
    longs = [a for a, e in enumerate(edges) if (e.i, e.j) == (i, k)]
    if len(longs) != 1:
        raise InconsistentFace(f"unexpected trapezoid configuration over {face.bottom}")
    L = longs[0]
    O = 3 - L
    span = lambda e: e.j - e.i
    return ("trapezoid", (L, O), Fraction(span(edges[L]), span(edges[O])))


def _predict_top(face: TwoFace, X: dict) -> tuple[tuple, str]:
    kind, pair, ratio = two_face_rule(face)
    u = face.bottom
    a0, a1 = face.atoms[0].upper, face.atoms[1].upper
    E0, E1 = _sub(X[a0], X[u]), _sub(X[a1], X[u])
    if kind == "parallelogram":
        return _add(X[a1], E0), kind
    L, O = pair
    if L == 0:  # bottom->a0 is long, opposite a1->top
        return _add(X[a1], _scale(1 / ratio, E0)), kind
    if L == 1:
        return _add(X[a0], _scale(1 / ratio, E1)), kind
    if L == 2:  # a0->top is long, opposite bottom->a1
        return _add(X[a0], _scale(ratio, E1)), kind
    return _add(X[a1], _scale(ratio, E0)), kind


def trapezoid_standard_form(face: TwoFace, X: dict) -> bool:
    """The two trapezoid equations in their standard orientation, for a face whose atoms are labelled (i j) and (j k)
    with the (i j) atom covered by a (j k) edge; other faces pass vacuously."""
    for a, b in ((0, 1), (1, 0)):
        e0, e1 = face.atoms[a], face.atoms[b]
        t0, t1 = face.tops[a], face.tops[b]
        i, j, k = e0.i, e0.j, e1.j
        if e0.j == e1.i and (t0.i, t0.j) == (j, k) and (t1.i, t1.j) == (i, k):
            break
    else:
        return True
    u, u1, u2, u3 = face.bottom, e0.upper, e1.upper, face.top
    lhs1 = _sub(X[u3], X[u1])
    rhs1 = _add(_scale(Fraction(k - j, j - i), _sub(X[u1], X[u])), _sub(X[u2], X[u]))
    lhs2 = _sub(X[u3], X[u2])
    rhs2 = _scale(Fraction(k - i, j - i), _sub(X[u1], X[u]))
    return lhs1 == rhs1 and lhs2 == rhs2


def two_face_check(data: MomentData) -> Report:
    X = data.labels
    faces = two_faces(data.interval)
    for f in faces:
        try:
            pred, kind = _predict_top(f, X)
        except InconsistentFace as exc:
            return Report(False, "config", str(exc))
        if pred != X[f.top]:
            return Report(False, kind, f"2-face [{f.bottom},{f.top}] violates the {kind} relation")
        if kind == "trapezoid" and not trapezoid_standard_form(f, X):
            return Report(False, "trapezoid", f"2-face [{f.bottom},{f.top}] violates the (i j),(j k) equations")
    return Report(True, checked=len(faces))


def reconstruct_from_atoms(I: BruhatInterval, x_v: Sequence[int], atoms: dict[Permutation, Sequence[int]]) -> dict[Permutation, tuple]:
    X: dict[Permutation, tuple] = {I.v: tuple(Fraction(c) for c in x_v)}
    for u in I.ranks[1] if I.d >= 1 else ():
        X[u] = tuple(Fraction(c) for c in atoms[u])
    faces_by_top: dict[Permutation, list[TwoFace]] = {}
    for f in two_faces(I):
        faces_by_top.setdefault(f.top, []).append(f)
    for r in range(2, I.d + 1):
        for top in I.ranks[r]:
            preds = set()
            for f in faces_by_top[top]:
                preds.add(_predict_top(f, X)[0])
            if len(preds) != 1:
                raise InconsistentFace(f"2-faces give {len(preds)} different positions for {top}")
            X[top] = preds.pop()
    out = {}
    for u, x in X.items():
        if any(c.denominator != 1 for c in x):
            raise InconsistentFace(f"non-integral reconstructed vertex for {u}")
        out[u] = tuple(int(c) for c in x)
    return out


# Bruhat interval polytope


def bip_vertex(u: Permutation) -> Vec:
    """sum_{k<n} e_{u[k]}: coordinate u(p) equals n - p."""
    n = u.n
    x = [0] * n
    for p in range(1, n + 1):
        x[u(p) - 1] = n - p
    return tuple(x)


def bruhat_interval_polytope(I: BruhatInterval) -> LatticePolytope:
    return hull(bip_vertex(u) for u in I.elements)


def bip_edge_check(I: BruhatInterval) -> Report:
    P = bruhat_interval_polytope(I)
    idx = P.vertex_index()
    for e in I.covers:
        u = e.lower
        diff = _sub(bip_vertex(e.upper), bip_vertex(u))
        want = [0] * I.n
        want[u(e.j) - 1] += e.j - e.i
        want[u(e.i) - 1] -= e.j - e.i
        if diff != tuple(want):
            return Report(False, "edge", f"{u}->{e.upper}")
        if bip_vertex(u) not in idx:
            return Report(False, "vertex", str(u))
    positroids = [hull(indicator(B, I.n) for B in constituent(I, k).bases) for k in range(1, I.n)]
    S = minkowski_sum_all(positroids)
    if set(S.vertices) != set(P.vertices):
        return Report(False, "minkowski", "P(v,w) differs from the sum of positroid polytopes")
    return Report(True, checked=len(I.covers))
