"""Permutations, Bruhat order, Bruhat intervals and R-polynomials.

Permutations are stored in one-line notation, 1-indexed as seen by the
caller.  All enumeration orders are lexicographic on the one-line window so
that every derived output is byte-stable.

>>> w = Permutation.parse("4231")
>>> w.length()
5
>>> bruhat_leq(Permutation.parse("1324"), w)
True
>>> interval(Permutation.parse("1324"), w).rank_sizes
(1, 4, 6, 4, 1)
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import NonemptyIntervalRequired


@dataclass(frozen=True, order=True)
class Permutation:
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        win = tuple(int(x) for x in self.window)
        if sorted(win) != list(range(1, len(win) + 1)):
            raise ValueError(f"not a permutation in one-line notation: {self.window!r}")
        object.__setattr__(self, "window", win)

    # construction
    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        """The simple transposition s_i = (i i+1) in S_n."""
        return cls.identity(n).swap(i, i + 1)

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Permutation":
        return cls.identity(n).swap(i, j)

    @classmethod
    def parse(cls, text: str | Sequence[int]) -> "Permutation":
        """Accept ``"1324"``, ``"1,3,2,4"``, ``"1 3 2 4"`` or a sequence of ints."""
        if not isinstance(text, str):
            return cls(tuple(text))
        s = text.strip().strip("[]()")
        if "," in s or " " in s:
            parts = [p for p in s.replace(",", " ").split() if p]
            return cls(tuple(int(p) for p in parts))
        return cls(tuple(int(c) for c in s))

    @classmethod
    def from_word(cls, letters: Iterable[int], n: int) -> "Permutation":
        """Product s_{i_1} s_{i_2} ... acting on positions (right multiplication)."""
        p = cls.identity(n)
        for i in letters:
            p = p.swap(i, i + 1)
        return p

    # basic structure
    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        return self.window[i - 1]

    def __len__(self) -> int:
        return len(self.window)

    def __iter__(self) -> Iterator[int]:
        return iter(self.window)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        if other.n != self.n:
            raise ValueError("permutations of different sizes")
        return Permutation(tuple(self.window[x - 1] for x in other.window))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for pos, val in enumerate(self.window, start=1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    def swap(self, i: int, j: int) -> "Permutation":
        """Right multiplication by the transposition (i j): swap positions i and j."""
        win = list(self.window)
        win[i - 1], win[j - 1] = win[j - 1], win[i - 1]
        return Permutation(tuple(win))

    def length(self) -> int:
        return length(self)

    def prefix(self, k: int) -> tuple[int, ...]:
        """The sorted set u[k] = {u(1), ..., u(k)}."""
        return tuple(sorted(self.window[:k]))

    def descents(self) -> list[int]:
        """Right descents: all i with u(i) > u(i+1)."""
        w = self.window
        return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.window, start=1))

    def to_list(self) -> list[int]:
        return list(self.window)

    def __str__(self) -> str:
        if self.n < 10:
            return "".join(str(x) for x in self.window)
        return ",".join(str(x) for x in self.window)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def length(p: Permutation) -> int:
    w = p.window
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Tableau criterion: sorted prefixes of u are dominated by those of w."""
    if u.n != w.n:
        raise ValueError(f"cannot compare S_{u.n} with S_{w.n}")
    uw, ww = u.window, w.window
    for k in range(1, u.n):
        for a, b in zip(sorted(uw[:k]), sorted(ww[:k])):
            if a > b:
                return False
    return True


@dataclass(frozen=True, order=True)
class CoverEdge:
    """``upper = lower * (i j)`` with length one more than ``lower``."""

    lower: Permutation
    upper: Permutation
    i: int
    j: int


def _is_cover_swap(win: Sequence[int], i: int, j: int) -> bool:
    # positions 1-indexed, i < j; swapping raises length by exactly one
    a, b = win[i - 1], win[j - 1]
    if a > b:
        return False
    return not any(a < win[m] < b for m in range(i, j - 1))


def covers_above(u: Permutation, ceiling: Optional[Permutation] = None) -> list[CoverEdge]:
    out = []
    win = u.window
    for i in range(1, u.n):
        for j in range(i + 1, u.n + 1):
            if _is_cover_swap(win, i, j):
                up = u.swap(i, j)
                if ceiling is None or bruhat_leq(up, ceiling):
                    out.append(CoverEdge(u, up, i, j))
    return out


def covers_below(u: Permutation, floor: Optional[Permutation] = None) -> list[CoverEdge]:
    out = []
    win = u.window
    for i in range(1, u.n):
        for j in range(i + 1, u.n + 1):
            if win[i - 1] > win[j - 1]:
                lo = u.swap(i, j)
                if _is_cover_swap(lo.window, i, j) and (floor is None or bruhat_leq(floor, lo)):
                    out.append(CoverEdge(lo, u, i, j))
    return out


@dataclass(frozen=True)
class BruhatInterval:
    v: Permutation
    w: Permutation
    ranks: tuple[tuple[Permutation, ...], ...]
    covers: tuple[CoverEdge, ...]

    @property
    def d(self) -> int:
        return len(self.ranks) - 1

    @property
    def n(self) -> int:
        return self.v.n

    @cached_property
    def elements(self) -> tuple[Permutation, ...]:
        """Rank by rank, lexicographic within each rank."""
        return tuple(u for r in self.ranks for u in r)

    @cached_property
    def index(self) -> dict[Permutation, int]:
        return {u: a for a, u in enumerate(self.elements)}

    @cached_property
    def rank_of(self) -> dict[Permutation, int]:
        return {u: r for r, layer in enumerate(self.ranks) for u in layer}

    @property
    def rank_sizes(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.ranks)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, u: object) -> bool:
        return u in self.index

    @cached_property
    def lower_covers(self) -> dict[Permutation, list[CoverEdge]]:
        out: dict[Permutation, list[CoverEdge]] = {u: [] for u in self.elements}
        for e in self.covers:
            out[e.upper].append(e)
        return out

    @cached_property
    def upper_covers(self) -> dict[Permutation, list[CoverEdge]]:
        out: dict[Permutation, list[CoverEdge]] = {u: [] for u in self.elements}
        for e in self.covers:
            out[e.lower].append(e)
        return out

    @cached_property
    def down_masks(self) -> tuple[int, ...]:
        """Bit a of down_masks[b] is set iff elements[a] <= elements[b]."""
        idx = self.index
        masks = [0] * len(self.elements)
        for b, u in enumerate(self.elements):
            m = 1 << b
            for e in self.lower_covers[u]:
                m |= masks[idx[e.lower]]
            masks[b] = m
        return tuple(masks)

    @cached_property
    def up_masks(self) -> tuple[int, ...]:
        idx = self.index
        masks = [0] * len(self.elements)
        for a in range(len(self.elements) - 1, -1, -1):
            u = self.elements[a]
            m = 1 << a
            for e in self.upper_covers[u]:
                m |= masks[idx[e.upper]]
            masks[a] = m
        return tuple(masks)

    def leq(self, a: Permutation, b: Permutation) -> bool:
        idx = self.index
        return bool(self.down_masks[idx[b]] >> idx[a] & 1)

    def subinterval_mask(self, a: Permutation, b: Permutation) -> int:
        idx = self.index
        return self.up_masks[idx[a]] & self.down_masks[idx[b]]

    def subinterval(self, a: Permutation, b: Permutation) -> "BruhatInterval":
        return interval(a, b)

    def is_hypercube(self) -> bool:
        from math import comb

        return self.rank_sizes == tuple(comb(self.d, r) for r in range(self.d + 1))


def interval(v: Permutation, w: Permutation) -> BruhatInterval:
    if not bruhat_leq(v, w):
        raise NonemptyIntervalRequired(f"{v} is not below {w} in Bruhat order")
    ranks: list[tuple[Permutation, ...]] = [(v,)]
    covers: list[CoverEdge] = []
    for _ in range(length(w) - length(v)):
        nxt: set[Permutation] = set()
        for u in ranks[-1]:
            for e in covers_above(u, w):
                covers.append(e)
                nxt.add(e.upper)
        ranks.append(tuple(sorted(nxt)))
    covers.sort(key=lambda e: (e.lower, e.upper))
    return BruhatInterval(v, w, tuple(ranks), tuple(covers))


def all_permutations(n: int) -> list[Permutation]:
    from itertools import permutations

    return [Permutation(p) for p in permutations(range(1, n + 1))]


def all_intervals(n: int) -> list[tuple[Permutation, Permutation]]:
    """Every pair v <= w in S_n, lexicographic in (v, w)."""
    perms = all_permutations(n)
    return [(v, w) for v in perms for w in perms if bruhat_leq(v, w)]


# R-polynomials


@dataclass(frozen=True)
class RPolynomial:
    """Polynomial in q with integer coefficients, ascending degree."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q: int) -> int:
        return sum(c * q**e for e, c in enumerate(self.coeffs))

    def coeff(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def __str__(self) -> str:
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c:
                mon = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
                coef = str(c) if (abs(c) != 1 or e == 0) else ("-" if c < 0 else "")
                terms.append(f"{coef}{mon}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _padd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    m = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(m)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


_R_MEMO: dict[tuple[tuple[int, ...], tuple[int, ...]], tuple[int, ...]] = {}
_R_LOCK = threading.Lock()


def _r_rec(u: tuple[int, ...], w: tuple[int, ...]) -> tuple[int, ...]:
    key = (u, w)
    hit = _R_MEMO.get(key)
    if hit is not None:
        return hit
    if u == w:
        res: tuple[int, ...] = (1,)
    elif not bruhat_leq(Permutation(u), Permutation(w)):
        res = ()
    else:
        s = next(i for i in range(len(w) - 1) if w[i] > w[i + 1])
        ws = list(w)
        ws[s], ws[s + 1] = ws[s + 1], ws[s]
        us = list(u)
        us[s], us[s + 1] = us[s + 1], us[s]
        ws_t, us_t = tuple(ws), tuple(us)
        if u[s] > u[s + 1]:
            res = _r_rec(us_t, ws_t)
        else:
            a = _r_rec(us_t, ws_t)
            b = _r_rec(u, ws_t)
            # q*a + (q-1)*b
            res = _padd(_padd((0,) + a, (0,) + b), tuple(-c for c in b))
    with _R_LOCK:
        _R_MEMO[key] = res
    return res


def r_polynomial(v: Permutation, w: Permutation) -> RPolynomial:
    if not bruhat_leq(v, w):
        raise NonemptyIntervalRequired(f"{v} is not below {w} in Bruhat order")
    return RPolynomial(_r_rec(v.window, w.window))


# Int[v, w]


@dataclass(frozen=True)
class IntervalPoset:
    """Subintervals of a Bruhat interval ordered by containment, with the empty set adjoined.

    Each subinterval is stored as the bitmask of its elements inside the parent
    interval, so containment is bitmask inclusion.  ``members[0]`` is the empty set.
    """

    parent: BruhatInterval
    members: tuple[Optional[tuple[Permutation, Permutation]], ...]
    masks: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def leq(self, a: int, b: int) -> bool:
        return self.masks[a] & ~self.masks[b] == 0

    @property
    def top(self) -> int:
        return max(range(len(self.masks)), key=lambda a: self.masks[a].bit_count())

    def as_poset(self):
        from .poset import Poset

        n = len(self.masks)
        down = []
        for b in range(n):
            mb = self.masks[b]
            m = 0
            for a in range(n):
                if self.masks[a] & ~mb == 0:
                    m |= 1 << a
            down.append(m)
        labels = ["empty" if x is None else f"[{x[0]},{x[1]}]" for x in self.members]
        return Poset(tuple(labels), tuple(down))


def interval_poset(I: BruhatInterval) -> IntervalPoset:
    members: list[Optional[tuple[Permutation, Permutation]]] = [None]
    masks = [0]
    els = I.elements
    for a, x in enumerate(els):
        up = I.up_masks[a]
        for b, y in enumerate(els):
            if up >> b & 1:
                members.append((x, y))
                masks.append(up & I.down_masks[b])
    return IntervalPoset(I, tuple(members), tuple(masks))
