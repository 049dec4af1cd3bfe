"""Finite posets as down-set bitmasks and a meet/join lattice test."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Hashable, Optional, Sequence


@dataclass(frozen=True)
class Poset:
    """``down[b]`` has bit ``a`` set iff ``labels[a] <= labels[b]``."""

    labels: tuple[Hashable, ...]
    down: tuple[int, ...]

    @classmethod
    def from_leq(cls, labels: Sequence[Hashable], leq: Callable[[Hashable, Hashable], bool]) -> "Poset":
        labels = tuple(labels)
        down = []
        for y in labels:
            m = 0
            for a, x in enumerate(labels):
                if leq(x, y):
                    m |= 1 << a
            down.append(m)
        return cls(labels, tuple(down))

    @classmethod
    def boolean(cls, r: int) -> "Poset":
        subsets = sorted(range(1 << r), key=lambda s: (s.bit_count(), s))
        return cls.from_leq(subsets, lambda x, y: x & ~y == 0)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def up(self) -> tuple[int, ...]:
        n = len(self.labels)
        up = [0] * n
        for b, m in enumerate(self.down):
            for a in range(n):
                if m >> a & 1:
                    up[a] |= 1 << b
        return tuple(up)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.down[b] >> a & 1)


@dataclass(frozen=True)
class LatticeCheck:
    ok: bool
    witness: Optional[tuple[Hashable, Hashable, str]] = None  # (x, y, "meet" | "join")

    def __bool__(self) -> bool:
        return self.ok


def is_lattice(P: Poset) -> LatticeCheck:
    """Every pair needs a meet and a join.

    The common lower bounds of ``a, b`` form ``down[a] & down[b]``; a meet exists
    iff that set is the down-set of one of its own elements.  Pairs are scanned in
    index order, meet before join, so the witness is deterministic.
    """
    n = len(P)
    down = P.down
    up = P.up
    down_set = set(down)
    up_set = set(up)
    for a, b in combinations(range(n), 2):
        lo = down[a] & down[b]
        if lo not in down_set:
            return LatticeCheck(False, (P.labels[a], P.labels[b], "meet"))
        hi = up[a] & up[b]
        if hi not in up_set:
            return LatticeCheck(False, (P.labels[a], P.labels[b], "join"))
    return LatticeCheck(True)


def is_isomorphic(P: Poset, Q: Poset) -> bool:
    """Brute-force isomorphism with rank/degree refinement; fine for posets up to a few dozen elements."""
    n = len(P)
    if n != len(Q):
        return False

    def invariants(R: Poset) -> list[tuple[int, int]]:
        up = R.up
        return [(R.down[a].bit_count(), up[a].bit_count()) for a in range(n)]

    ip, iq = invariants(P), invariants(Q)
    if sorted(ip) != sorted(iq):
        return False
    cands = [[b for b in range(n) if iq[b] == ip[a]] for a in range(n)]
    order = sorted(range(n), key=lambda a: len(cands[a]))
    image = [-1] * n
    used = [False] * n

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        a = order[pos]
        for b in cands[a]:
            if used[b]:
                continue
            ok = True
            for prev in order[:pos]:
                c = image[prev]
                if P.leq(prev, a) != Q.leq(c, b) or P.leq(a, prev) != Q.leq(b, c):
                    ok = False
                    break
            if ok:
                image[a] = b
                used[b] = True
                if extend(pos + 1):
                    return True
                used[b] = False
                image[a] = -1
        return False

    return extend(0)


def product_poset(P: Poset, Q: Poset) -> Poset:
    labels = list(product(range(len(P)), range(len(Q))))
    return Poset.from_leq(labels, lambda x, y: P.leq(x[0], y[0]) and Q.leq(x[1], y[1]))
