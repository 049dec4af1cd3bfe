"""The eight end-to-end checks, shared by ``verify-all`` and the acceptance tests."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Optional

from .classify import classify_toric, is_toric
from .errors import DisagreementBug, MultipleCollections
from .families import (
    even_family,
    even_family_a_vector_check,
    even_family_minor_check,
    even_family_structures,
    hypercube_constituent,
    hypercube_perms,
    is_dyadic,
    random_nonmembers,
)
from .mrgraph import (
    ReducedWord,
    default_reduced_word,
    edge_plucker_failures,
    flag_minor,
    graph_for,
    incidence_plucker_failures,
    symbolic_minors,
)
from .perm import Permutation, all_intervals, interval, interval_poset, length
from .poly import ZERO
from .plabic import disk_embedding_ok, family_star_graph, hypercube_graph, is_forest, positroid_from_graph
from .polytope.hull import face_lattice, hull
from .polytope.moment import (
    affine_equivalence,
    bip_edge_check,
    edge_vector_check,
    face_lattice_vs_interval,
    joint_projection,
    label_points,
    minkowski_of_transformed,
    moment_data,
    moment_polytope_as_sum,
    reconstruct_from_atoms,
    two_face_check,
)
from .poset import Poset, is_isomorphic
from .positroid import constituent

Pair = tuple[Permutation, Permutation]

P = Permutation.parse

# exponent vectors listed for the two worked examples, keyed by k then by basis
BASE_CASE_SUMMANDS = {
    1: {(1,): "0000", (2,): "1000", (3,): "0001", (4,): "0011"},
    2: {(1, 3): "0000", (1, 4): "0010", (2, 3): "1000", (2, 4): "1010"},
    3: {(1, 2, 3): "0000", (1, 2, 4): "0010", (1, 3, 4): "0110", (2, 3, 4): "1110"},
}
CROWN_SUMMANDS = {
    1: {(2,): "000", (3,): "010", (4,): "001"},
    2: {(1, 2): "000", (1, 3): "010", (1, 4): "001", (2, 3): "110", (2, 4): "101"},
    3: {(1, 2, 4): "000", (1, 3, 4): "010", (2, 3, 4): "110"},
}
EXAMPLE_WORD = ReducedWord((1, 2, 3, 2, 1))


@dataclass
class CheckResult:
    number: int
    title: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0
    counts: dict = field(default_factory=dict)

    def line(self, timing: bool = True) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        clock = f" [{self.seconds:.1f}s]" if timing else ""
        return f"{status} criterion {self.number}: {self.title}{clock}{extra}"

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "ok": self.ok,
            "detail": self.detail,
            "counts": self.counts,
        }


def _timed(number: int, title: str, body: Callable[[], tuple[bool, str, dict]]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail, counts = body()
    except (AssertionError, MultipleCollections, ValueError) as exc:
        ok, detail, counts = False, f"{type(exc).__name__}: {exc}", {}
    return CheckResult(number, title, ok, detail, time.perf_counter() - t0, counts)


# interval samples


def sampled_intervals(n: int, count: int, seed: int) -> list[Pair]:
    pool = all_intervals(n)
    rng = random.Random(seed)
    return sorted(rng.sample(pool, min(count, len(pool))))


def toric_intervals(n: int) -> list[Pair]:
    return [(v, w) for v, w in all_intervals(n) if is_toric(v, w)]


def sampled_toric_intervals(n: int, count: int, seed: int) -> list[Pair]:
    pool = toric_intervals(n)
    rng = random.Random(seed)
    return sorted(rng.sample(pool, min(count, len(pool))))


def structure_set(sn: int, seed: int, sample: int = 25) -> list[Pair]:
    return toric_intervals(sn) + sampled_toric_intervals(sn + 1, sample, seed)


def _exps(s: str) -> tuple[int, ...]:
    return tuple(int(c) for c in s)


# criteria


def check_classification(sn: int = 4, seed: int = 0, sample: int = 500) -> CheckResult:
    def body():
        pairs = all_intervals(sn) + sampled_intervals(sn + 1, sample, seed)
        toric = 0
        for v, w in pairs:
            try:
                toric += classify_toric(v, w).is_toric
            except DisagreementBug as exc:
                return False, str(exc), {}
        return True, f"{len(pairs)} intervals, {toric} toric, all four tests agree", {"intervals": len(pairs), "toric": toric}

    return _timed(1, "classification tests agree", body)


def _summands_match(v: Permutation, w: Permutation, listed: dict) -> Optional[str]:
    data = moment_data(v, w, EXAMPLE_WORD)
    for k, want in listed.items():
        got = {B: x for B, x in data.m[k].items()}
        if got != {B: _exps(s) for B, s in want.items()}:
            return f"summand k={k} differs: {got}"
    return None


def _face_poset(Pol) -> Poset:
    return face_lattice(Pol).as_poset()


def check_base_case() -> CheckResult:
    def body():
        v, w = P("1324"), P("4231")
        bad = _summands_match(v, w, BASE_CASE_SUMMANDS)
        if bad:
            return False, bad, {}
        data = moment_data(v, w, EXAMPLE_WORD)
        S = moment_polytope_as_sum(data)
        fv = face_lattice(S).f_vector
        if fv != (16, 32, 24, 8, 1):
            return False, f"f-vector {fv}", {}
        if not is_isomorphic(_face_poset(S), interval_poset(interval(v, w)).as_poset()):
            return False, "face lattice not isomorphic to Int[1324,4231]", {}
        return True, "summands match, f=(16,32,24,8,1), face lattice = Int", {"f_vector": list(fv)}

    return _timed(2, "base case [1324,4231]", body)


def check_crown() -> CheckResult:
    def body():
        v, w = P("2143"), P("4231")
        bad = _summands_match(v, w, CROWN_SUMMANDS)
        if bad:
            return False, bad, {}
        data = moment_data(v, w, EXAMPLE_WORD)
        S = hull(data.labels.values())
        fl = face_lattice(S)
        fv = fl.f_vector
        if fv[:3] != (10, 16, 8):
            return False, f"f-vector {fv}", {}
        if any(m.bit_count() != 4 for m in fl.faces_of_dim(2)):
            return False, "a two-face is not a quadrilateral", {}
        degree = [0] * len(S.vertices)
        for a, b in S.edges():
            degree[a] += 1
            degree[b] += 1
        if 4 not in degree:
            return False, f"vertex degrees {sorted(degree)}", {}
        if not is_isomorphic(fl.as_poset(), interval_poset(interval(v, w)).as_poset()):
            return False, "face lattice not isomorphic to Int[2143,4231]", {}
        return True, "summands match, 10 vertices, 16 edges, 8 quadrilaterals, a 4-valent vertex", {
            "f_vector": list(fv),
            "max_degree": max(degree),
        }

    return _timed(3, "4-crown [2143,4231]", body)


def lgv_soundness(v: Permutation, w: Permutation, word: Optional[ReducedWord] = None) -> Optional[str]:
    from itertools import combinations

    G = graph_for(v, w, word)
    minors = symbolic_minors(G)
    I = interval(v, w)
    for k in range(1, v.n + 1):
        bases = constituent(I, k).bases
        for S in combinations(range(1, v.n + 1), k):
            terms = flag_minor(G, S)
            lgv = sum((t.as_poly() for t in terms), start=ZERO)
            if lgv != minors([x - 1 for x in S]):
                return f"[{v},{w}] I={S}: LGV and determinant differ"
            if len({t.exponents for t in terms}) != len(terms):
                return f"[{v},{w}] I={S}: repeated LGV term"
            if bool(terms) != (S in bases):
                return f"[{v},{w}] I={S}: support differs from the constituent"
            if terms and (len(terms) != 1 or terms[0].sign != 1 or max(terms[0].exponents, default=0) > 1):
                return f"[{v},{w}] I={S}: toric minor is not a unique squarefree monic monomial"
    return None


def check_lgv(sn: int = 4, seed: int = 0, sample: int = 25) -> CheckResult:
    def body():
        pairs = structure_set(sn, seed, sample)
        for v, w in pairs:
            bad = lgv_soundness(v, w)
            if bad:
                return False, bad, {}
        for v, w in ((P("1324"), P("4231")), (P("2143"), P("4231"))):
            G = graph_for(v, w, EXAMPLE_WORD)
            bad_rel = incidence_plucker_failures(G)
            if bad_rel:
                return False, f"[{v},{w}]: incidence relation {bad_rel[0]} is nonzero", {}
            I = interval(v, w)
            bad_edge = edge_plucker_failures(G, I.covers)
            if bad_edge:
                return False, f"[{v},{w}]: two-term identity fails at {bad_edge[0]}", {}
        return True, f"{len(pairs)} toric intervals; incidence relations vanish on both examples", {"intervals": len(pairs)}

    return _timed(4, "LGV soundness", body)


def structure_suite(v: Permutation, w: Permutation, word: Optional[ReducedWord] = None) -> Optional[str]:
    data = moment_data(v, w, word)
    tag = f"[{v},{w}]"
    for k in range(1, data.n):
        affine_equivalence(data, k)
    joint_projection(data)
    label_points(data.labels)
    for name, rep in (
        ("edges", edge_vector_check(data)),
        ("two-faces", two_face_check(data)),
        ("face lattice", face_lattice_vs_interval(data.labels, data.interval)),
        ("minkowski", minkowski_of_transformed(data)),
        ("interval polytope", bip_edge_check(data.interval)),
    ):
        if not rep.ok:
            return f"{tag} {name}: {rep.item} {rep.detail}"
    I = data.interval
    atoms = {u: data.labels[u] for u in (I.ranks[1] if I.d else ())}
    if reconstruct_from_atoms(I, data.labels[v], atoms) != data.labels:
        return f"{tag}: reconstruction from atoms differs"
    if data.d and set(moment_polytope_as_sum(data).vertices) != set(hull(data.labels.values()).vertices):
        return f"{tag}: Minkowski sum of summands differs from the hull of the X_u"
    return None


def check_structure(sn: int = 4, seed: int = 0, sample: int = 25) -> CheckResult:
    def body():
        pairs = structure_set(sn, seed, sample)
        for v, w in pairs:
            bad = structure_suite(v, w)
            if bad:
                return False, bad, {}
        return True, f"{len(pairs)} toric intervals", {"intervals": len(pairs)}

    return _timed(5, "moment polytope structure", body)


def check_even_family(ns: tuple[int, ...] = (4, 6, 8), points: int = 20, seed: int = 0) -> CheckResult:
    def body():
        for n in ns:
            for rep in (even_family_minor_check(n), even_family_a_vector_check(n), even_family_structures(n, seed, points)):
                if not rep.ok:
                    return False, "; ".join(rep.details), {}
            fam = even_family(n)
            I = interval(fam.v, fam.w)
            for k in range(1, n):
                G = family_star_graph(n, k)
                if not (is_forest(G) and disk_embedding_ok(G)):
                    return False, f"n={n} k={k}: star graph is not a planar forest", {}
                if positroid_from_graph(G) != constituent(I, k).bases:
                    return False, f"n={n} k={k}: star graph positroid differs", {}
        return True, f"n in {list(ns)}", {}

    return _timed(6, "even family", body)


def check_hypercube(seed: int = 0, nonmembers: int = 1000, big: bool = True) -> CheckResult:
    def body():
        f2 = hypercube_perms(2)
        I2 = interval(f2.v, f2.w)
        if (f2.v, f2.w) != (P("1324"), P("4231")):
            return False, "n=2 family is not the base case", {}
        if not is_isomorphic(Poset.from_leq(I2.elements, lambda a, b: I2.leq(a, b)), Poset.boolean(4)):
            return False, "n=2 interval is not Boolean", {}
        counts: dict = {}
        if big:
            f3 = hypercube_perms(3)
            I3 = interval(f3.v, f3.w)
            sizes = I3.rank_sizes
            counts["n3_size"] = len(I3.elements)
            if len(I3.elements) != 4096 or sizes != tuple(comb(12, r) for r in range(13)):
                return False, f"n=3 interval has {len(I3.elements)} elements, ranks {sizes}", counts
            if not all(is_dyadic(u, 3) for u in I3.elements):
                return False, "an interval member is not dyadic", counts
            outs = random_nonmembers(3, nonmembers, seed)
            if any(is_dyadic(u, 3) for u in outs):
                return False, "a non-member is dyadic", counts
            for k in range(1, 8):
                if hypercube_constituent(3, k, "filter").bases != constituent(I3, k).bases:
                    return False, f"n=3 k={k}: floor/ceil filter differs from enumeration", counts
        for n in (1, 2, 3) if big else (1, 2):
            for k in range(1, 1 << n):
                G = hypercube_graph(n, k)
                if positroid_from_graph(G) != hypercube_constituent(n, k).bases or not disk_embedding_ok(G):
                    return False, f"n={n} k={k}: graph positroid differs", counts
        for k in range(1, 16):
            rec = hypercube_constituent(4, k, "recursive").bases
            if rec != hypercube_constituent(4, k, "filter").bases:
                return False, f"n=4 k={k}: decomposition differs from the filter", counts
            comp = hypercube_constituent(4, 16 - k, "recursive").complement().bases
            if comp != rec:
                return False, f"n=4 k={k}: complement law fails", counts
            G = hypercube_graph(4, k)
            if positroid_from_graph(G) != rec or not disk_embedding_ok(G):
                return False, f"n=4 k={k}: graph positroid differs", counts
        return True, "n=2 Boolean, n=3 4096 elements, graphs match for n<=4", counts

    return _timed(7, "hypercube family", body)


def alternative_word(word: ReducedWord) -> Optional[ReducedWord]:
    """Apply the first commutation or braid move available in ``word``."""
    a = list(word.letters)
    for p in range(len(a) - 1):
        if abs(a[p] - a[p + 1]) >= 2:
            return ReducedWord(tuple(a[:p] + [a[p + 1], a[p]] + a[p + 2 :]))
    for p in range(len(a) - 2):
        if a[p] == a[p + 2] and abs(a[p] - a[p + 1]) == 1:
            return ReducedWord(tuple(a[:p] + [a[p + 1], a[p], a[p + 1]] + a[p + 3 :]))
    return None


def check_word_independence(seed: int = 0, count: int = 12) -> CheckResult:
    def body():
        pool = [(v, w) for v, w in sampled_toric_intervals(5, 4 * count, seed) if length(w) >= 3]
        done = 0
        for v, w in pool:
            w1 = default_reduced_word(w)
            w2 = alternative_word(w1)
            if w2 is None:
                continue
            d1, d2 = moment_data(v, w, w1), moment_data(v, w, w2)
            if d1.d < 2:
                continue
            L1, L2 = _face_poset(hull(d1.labels.values())), _face_poset(hull(d2.labels.values()))
            if not is_isomorphic(L1, L2):
                return False, f"[{v},{w}]: words {w1.letters} and {w2.letters} give different face lattices", {}
            done += 1
            if done >= count:
                break
        if done < 5:
            return False, f"only {done} intervals had two usable words", {}
        return True, f"{done} intervals, two words each", {"intervals": done}

    return _timed(8, "reduced-word independence", body)


def run_all(sn: int = 4, seed: int = 0, big: bool = True) -> list[CheckResult]:
    return [
        check_classification(sn, seed),
        check_base_case(),
        check_crown(),
        check_lgv(sn, seed),
        check_structure(sn, seed),
        check_even_family(seed=seed),
        check_hypercube(seed, big=big),
        check_word_independence(seed),
    ]
