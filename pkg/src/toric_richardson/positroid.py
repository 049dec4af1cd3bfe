"""Constituent positroids of Bruhat intervals."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .perm import BruhatInterval, Permutation, all_intervals, interval

Subset = tuple[int, ...]


@dataclass(frozen=True)
class Constituent:
    n: int
    k: int
    bases: frozenset[Subset]
    source_interval: Optional[tuple[Permutation, Permutation]] = None

    def sorted_bases(self) -> list[Subset]:
        return sorted(self.bases)

    def __contains__(self, I: object) -> bool:
        return I in self.bases

    def __len__(self) -> int:
        return len(self.bases)

    def complement(self) -> "Constituent":
        full = set(range(1, self.n + 1))
        return Constituent(self.n, self.n - self.k, frozenset(tuple(sorted(full - set(B))) for B in self.bases))

    def to_json(self) -> dict:
        return {"k": self.k, "bases": [list(b) for b in self.sorted_bases()]}


def constituent(I: BruhatInterval, k: int) -> Constituent:
    if not 1 <= k <= I.n:
        raise ValueError(f"k={k} out of range 1..{I.n}")
    return Constituent(I.n, k, frozenset(u.prefix(k) for u in I.elements), (I.v, I.w))


def constituents(I: BruhatInterval) -> list[Constituent]:
    """M_1, ..., M_{n-1}."""
    return [constituent(I, k) for k in range(1, I.n)]


def verify_matroid(C: Constituent | Iterable[Subset]) -> bool:
    """Brute-force basis exchange: for A, B and a in A - B there is b in B - A with A - a + b a basis."""
    bases = C.bases if isinstance(C, Constituent) else frozenset(tuple(sorted(b)) for b in C)
    if not bases:
        return False
    sets = [frozenset(b) for b in bases]
    if len({len(s) for s in sets}) != 1:
        return False
    lookup = set(sets)
    for A in sets:
        for B in sets:
            for a in A - B:
                if not any((A - {a}) | {b} in lookup for b in B - A):
                    return False
    return True


def _shifted_key(a: int, n: int):
    return lambda x: (x - a) % n


@dataclass(frozen=True)
class GrassmannNecklace:
    entries: tuple[Subset, ...]

    def distinct(self) -> int:
        return len(set(self.entries))


def grassmann_necklace(C: Constituent) -> GrassmannNecklace:
    """I_a is the lexicographically smallest basis under the order a < a+1 < ... < a-1."""
    n = C.n
    out = []
    for a in range(1, n + 1):
        key = _shifted_key(a, n)
        best = min(C.bases, key=lambda B: sorted(key(x) for x in B))
        out.append(tuple(sorted(best)))
    return GrassmannNecklace(tuple(out))


def indicator(I: Iterable[int], n: int) -> tuple[int, ...]:
    s = set(I)
    return tuple(1 if x in s else 0 for x in range(1, n + 1))


def positroid_polytope(C: Constituent):
    from .polytope.hull import hull

    return hull([indicator(B, C.n) for B in C.sorted_bases()])


def constituent_tuple(I: BruhatInterval) -> tuple[frozenset[Subset], ...]:
    return tuple(c.bases for c in constituents(I))


def constituents_determine_interval(n: int, pairs: Optional[list[tuple[Permutation, Permutation]]] = None) -> bool:
    """Injectivity of [v,w] -> (M_1, ..., M_{n-1}) on all intervals of S_n (or the given sample)."""
    seen: dict[tuple, tuple[Permutation, Permutation]] = {}
    for v, w in pairs if pairs is not None else all_intervals(n):
        key = constituent_tuple(interval(v, w))
        if key in seen and seen[key] != (v, w):
            return False
        seen[key] = (v, w)
    return True


def single_constituent_collision(n: int, k: int) -> Optional[tuple]:
    """Two distinct intervals with the same M_k, if any (lexicographically first pair)."""
    seen: dict[frozenset, tuple[Permutation, Permutation]] = {}
    for v, w in all_intervals(n):
        key = constituent(interval(v, w), k).bases
        if key in seen:
            return (seen[key], (v, w))
        seen[key] = (v, w)
    return None
