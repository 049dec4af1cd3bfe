"""Reduced words, positive distinguished subexpressions and MR wiring graphs.

The MR matrix is the product ``g = g_1 ... g_l`` where ``g_j`` is ``y_i(t_j)``
(identity plus ``t_j`` at entry ``(i+1, i)``) for a bridge position and the
signed simple reflection with block ``[[0, -1], [1, 0]]`` on rows/columns
``i, i+1`` for a crossing position.

Paths are read off the product directly: level ``j`` of the graph is the state
after the first ``j`` factors, and each nonzero entry ``g_j[a][b]`` is an edge
from wire ``a`` at level ``j-1`` to wire ``b`` at level ``j``.  Sources sit on the
left (level 0) and sinks on the right (level ``l``).  Two paths are disjoint in
the wiring diagram exactly when they never occupy the same wire at the same
level, so the determinant expansion below is the LGV sum over these families.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Literal, Optional, Sequence

from .errors import MultipleCollections, NonemptyIntervalRequired
from .perm import Permutation, length
from .poly import FlagMinors, Poly, PolyMatrix, ONE, ZERO, identity_matrix, matmul

Subset = tuple[int, ...]


@dataclass(frozen=True)
class ReducedWord:
    letters: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def product(self, n: int) -> Permutation:
        return Permutation.from_word(self.letters, n)

    @classmethod
    def parse(cls, text: str | Sequence[int]) -> "ReducedWord":
        if isinstance(text, str):
            parts = [p for p in text.replace(",", " ").split() if p]
            if len(parts) == 1 and len(parts[0]) > 1:
                parts = list(parts[0])
            return cls(tuple(int(p) for p in parts))
        return cls(tuple(int(x) for x in text))


def default_reduced_word(w: Permutation) -> ReducedWord:
    """Move the largest misplaced value right by adjacent swaps until sorted.

    >>> default_reduced_word(Permutation.parse("4231")).letters
    (1, 2, 3, 2, 1)
    """
    win = list(w.window)
    applied: list[int] = []
    for m in range(len(win), 0, -1):
        p = win.index(m) + 1
        for i in range(p, m):
            win[i - 1], win[i] = win[i], win[i - 1]
            applied.append(i)
    return ReducedWord(tuple(reversed(applied)))


def is_reduced_word_for(word: ReducedWord, w: Permutation) -> bool:
    return len(word) == length(w) and word.product(w.n) == w


@dataclass(frozen=True)
class PDS:
    """Rightmost reduced subexpression for ``v`` inside a reduced word for ``w``."""

    jplus: tuple[int, ...]
    jcirc: tuple[int, ...]


def pds(v: Permutation, word: ReducedWord) -> PDS:
    u = list(v.window)
    jplus = []
    for j in range(len(word), 0, -1):
        i = word.letters[j - 1]
        if u[i - 1] > u[i]:
            u[i - 1], u[i] = u[i], u[i - 1]
            jplus.append(j)
    if u != sorted(u):
        raise NonemptyIntervalRequired(f"{v} is not below the product of word {list(word.letters)}")
    jplus.sort()
    jp = set(jplus)
    return PDS(tuple(jplus), tuple(j for j in range(1, len(word) + 1) if j not in jp))


@dataclass(frozen=True)
class Chip:
    position: int  # 1-indexed position j in the word
    wire: int  # the letter i_j; the chip joins wires i and i+1
    kind: Literal["bridge", "crossing"]


@dataclass(frozen=True)
class WiringGraph:
    n: int
    v: Permutation
    w: Permutation
    word: ReducedWord
    chips: tuple[Chip, ...]

    @property
    def bridges(self) -> tuple[int, ...]:
        """J-circle: positions carrying a parameter t_j, in increasing order."""
        return tuple(c.position for c in self.chips if c.kind == "bridge")

    @property
    def crossings(self) -> tuple[int, ...]:
        return tuple(c.position for c in self.chips if c.kind == "crossing")

    @property
    def d(self) -> int:
        return len(self.bridges)


def build_graph(v: Permutation, word: ReducedWord, w: Optional[Permutation] = None) -> WiringGraph:
    n = v.n
    prod = word.product(n)
    if w is not None and prod != w:
        raise ValueError(f"word {list(word.letters)} does not multiply to {w}")
    if len(word) != length(prod):
        raise ValueError(f"word {list(word.letters)} is not reduced")
    p = pds(v, word)
    plus = set(p.jplus)
    chips = tuple(
        Chip(j, i, "crossing" if j in plus else "bridge") for j, i in enumerate(word.letters, start=1)
    )
    return WiringGraph(n, v, prod, word, chips)


def graph_for(v: Permutation, w: Permutation, word: Optional[ReducedWord] = None) -> WiringGraph:
    return build_graph(v, word if word is not None else default_reduced_word(w), w)


# matrices


def chip_matrix(n: int, chip: Chip) -> PolyMatrix:
    m = identity_matrix(n)
    i = chip.wire - 1
    if chip.kind == "bridge":
        m[i + 1][i] = Poly.var(chip.position)
    else:
        m[i][i] = ZERO
        m[i + 1][i + 1] = ZERO
        m[i][i + 1] = Poly.const(-1)
        m[i + 1][i] = ONE
    return m


def symbolic_matrix(G: WiringGraph) -> PolyMatrix:
    g = identity_matrix(G.n)
    for chip in G.chips:
        g = matmul(g, chip_matrix(G.n, chip))
    return g


def symbolic_minors(G: WiringGraph) -> FlagMinors:
    """Flag minors of the MR matrix; rows I (1-indexed subset) via ``minor(I)``."""
    return FlagMinors(symbolic_matrix(G))


def symbolic_flag_minor(G: WiringGraph, I: Iterable[int], minors: Optional[FlagMinors] = None) -> Poly:
    minors = minors or symbolic_minors(G)
    return minors([x - 1 for x in I])


# paths


@dataclass(frozen=True)
class PathCollection:
    sources: Subset
    # paths[a] lists the wire occupied at levels 0..l by the path starting at sources[a]
    paths: tuple[tuple[int, ...], ...]
    bridges_used: tuple[int, ...]
    sign: int
    matching_sign: int
    crossing_sign: int

    @property
    def sinks(self) -> tuple[int, ...]:
        return tuple(p[-1] for p in self.paths)


@dataclass(frozen=True)
class MRMonomial:
    """``sign * prod t_j^exponents[j]`` with exponents indexed like ``bridges``."""

    bridges: tuple[int, ...]
    exponents: tuple[int, ...]
    sign: int = 1

    def as_poly(self) -> Poly:
        return Poly.monomial(zip(self.bridges, self.exponents), self.sign)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j for j, e in zip(self.bridges, self.exponents) if e)

    def bits(self) -> str:
        return "".join(str(e) for e in self.exponents)

    def to_json(self) -> dict:
        return {"sign": self.sign, "exp": {f"t{j}": e for j, e in zip(self.bridges, self.exponents) if e}}


def _perm_sign(seq: Sequence[int]) -> int:
    s = 1
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                s = -s
    return s


def _reachable_sinks(G: WiringGraph, k: int) -> list[set[int]]:
    """reach[j] = wires at level j from which some sink in [k] is reachable."""
    ell = len(G.chips)
    reach: list[set[int]] = [set() for _ in range(ell + 1)]
    reach[ell] = set(range(1, k + 1))
    for j in range(ell, 0, -1):
        chip = G.chips[j - 1]
        i = chip.wire
        nxt = reach[j]
        cur = set()
        for x in range(1, G.n + 1):
            if chip.kind == "bridge":
                targets = {x} | ({i} if x == i + 1 else set())
            else:
                targets = {i + 1} if x == i else ({i} if x == i + 1 else {x})
            if targets & nxt:
                cur.add(x)
        reach[j - 1] = cur
    return reach


def ni_path_collections(G: WiringGraph, I: Iterable[int]) -> list[PathCollection]:
    """All vertex-disjoint path families from left sources I to right sinks [k]."""
    src = tuple(sorted(I))
    k = len(src)
    ell = len(G.chips)
    reach = _reachable_sinks(G, k)
    if any(s not in reach[0] for s in src):
        return []
    out: list[PathCollection] = []

    # occ: wire -> index into src of the path on it
    def rec(j: int, occ: dict[int, int], trails: list[list[int]], used: list[int], csign: int) -> None:
        if j == ell:
            if set(occ) != set(range(1, k + 1)):
                return
            ends = [trails[a][-1] for a in range(k)]
            ms = _perm_sign(ends)
            out.append(
                PathCollection(src, tuple(tuple(t) for t in trails), tuple(used), ms * csign, ms, csign)
            )
            return
        chip = G.chips[j]
        i = chip.wire
        r = reach[j + 1]
        if chip.kind == "crossing":
            new = dict(occ)
            sign = csign
            a, b = occ.get(i), occ.get(i + 1)
            new.pop(i, None)
            new.pop(i + 1, None)
            if a is not None:
                new[i + 1] = a
                sign = -sign
            if b is not None:
                new[i] = b
            if all(x in r for x in new):
                for x, a2 in new.items():
                    trails[a2].append(x)
                rec(j + 1, new, trails, used, sign)
                for a2 in new.values():
                    trails[a2].pop()
            return
        # bridge: stay put, or (if wire i is free) the path on i+1 drops to i
        options = [dict(occ)]
        if i + 1 in occ and i not in occ:
            moved = dict(occ)
            moved[i] = moved.pop(i + 1)
            options.append(moved)
        for opt_no, new in enumerate(options):
            if not all(x in r for x in new):
                continue
            for x, a2 in new.items():
                trails[a2].append(x)
            if opt_no:
                used.append(chip.position)
            rec(j + 1, new, trails, used, csign)
            if opt_no:
                used.pop()
            for a2 in new.values():
                trails[a2].pop()

    rec(0, {s: a for a, s in enumerate(src)}, [[s] for s in src], [], 1)
    out.sort(key=lambda pc: pc.bridges_used)
    return out


def _monomial(G: WiringGraph, pc: PathCollection) -> MRMonomial:
    used = set(pc.bridges_used)
    return MRMonomial(G.bridges, tuple(1 if j in used else 0 for j in G.bridges), pc.sign)


def flag_minor(G: WiringGraph, I: Iterable[int]) -> list[MRMonomial]:
    return [_monomial(G, pc) for pc in ni_path_collections(G, I)]


def flag_minor_poly(G: WiringGraph, I: Iterable[int]) -> Poly:
    acc = ZERO
    for m in flag_minor(G, I):
        acc = acc + m.as_poly()
    return acc


def flag_minor_toric(G: WiringGraph, I: Iterable[int]) -> Optional[MRMonomial]:
    I = tuple(sorted(I))
    pcs = ni_path_collections(G, I)
    if not pcs:
        return None
    if len(pcs) > 1:
        raise MultipleCollections(f"{len(pcs)} NI path collections for I={list(I)}")
    return _monomial(G, pcs[0])


def all_flag_minors(G: WiringGraph) -> dict[Subset, list[MRMonomial]]:
    """Nonzero LGV expansions for every k-subset, k = 1..n."""
    out = {}
    for k in range(1, G.n + 1):
        for I in combinations(range(1, G.n + 1), k):
            terms = flag_minor(G, I)
            if terms:
                out[I] = terms
    return out


def minors_json(G: WiringGraph, I: Iterable[int]) -> dict:
    I = tuple(sorted(I))
    return {"I": list(I), "terms": [m.to_json() for m in flag_minor(G, I)]}


# relations among minors


def incidence_plucker(minors: FlagMinors, I: Subset, J: Subset) -> Poly:
    """E_{I,J} = sum over j in J - I of sgn(j, I, J) * Delta_{I+j} * Delta_{J-j}."""
    Iset, Jset = set(I), set(J)
    acc = ZERO
    for j in sorted(Jset - Iset):
        a = minors([x - 1 for x in sorted(Iset | {j})])
        if not a.terms:
            continue
        b = minors([x - 1 for x in sorted(Jset - {j})])
        if not b.terms:
            continue
        e = sum(1 for x in J if x < j) + sum(1 for x in I if x > j)
        acc = acc + (a * b if e % 2 == 0 else -(a * b))
    return acc


def incidence_plucker_failures(G: WiringGraph) -> list[tuple[Subset, Subset]]:
    """Pairs (I, J), |I| = r - 1 and |J| = s + 1 with 1 <= r <= s < n, whose relation is not identically zero."""
    minors = symbolic_minors(G)
    n = G.n
    bad = []
    for r in range(1, n + 1):
        for s in range(r, n):
            for I in combinations(range(1, n + 1), r - 1):
                for J in combinations(range(1, n + 1), s + 1):
                    if incidence_plucker(minors, I, J).terms:
                        bad.append((I, J))
    return bad


def edge_plucker_failures(G: WiringGraph, covers: Iterable) -> list[tuple]:
    """Two-term identity Delta_{u[k]} Delta_{u'[k+1]} = Delta_{u'[k]} Delta_{u[k+1]} for each cover
    u < u' = u (i j) and each i <= k with k + 1 < j."""
    minors = symbolic_minors(G)

    def D(S: Subset) -> Poly:
        return minors([x - 1 for x in S])

    bad = []
    for e in covers:
        u, up = e.lower, e.upper
        for k in range(e.i, e.j - 1):
            if D(u.prefix(k)) * D(up.prefix(k + 1)) != D(up.prefix(k)) * D(u.prefix(k + 1)):
                bad.append((e, k))
    return bad


def fz_failures(G: WiringGraph) -> list[tuple[int, int, str]]:
    """For i < j: v(i) > v(j) forces Delta_{v[i] - v(i) + v(j)} = 0, and v(i) < v(j) forces Delta_{v[i]} != 0."""
    minors = symbolic_minors(G)
    v = G.v
    bad = []
    for i in range(1, G.n + 1):
        for j in range(i + 1, G.n + 1):
            if v(i) > v(j):
                S = tuple(sorted((set(v.prefix(i)) - {v(i)}) | {v(j)}))
                if minors([x - 1 for x in S]).terms:
                    bad.append((i, j, "nonzero"))
            elif not minors([x - 1 for x in v.prefix(i)]).terms:
                bad.append((i, j, "zero"))
    return bad
