"""Deliberately naive reference implementations used only as test oracles."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations


def bubble_word(w: tuple[int, ...]) -> list[int]:
    """A reduced word for w, read off by bubble-sorting w to the identity."""
    a = list(w)
    letters = []
    changed = True
    while changed:
        changed = False
        for i in range(len(a) - 1):
            if a[i] > a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                letters.append(i + 1)
                changed = True
    return letters[::-1]


def word_product(letters, n: int) -> tuple[int, ...]:
    a = list(range(1, n + 1))
    for i in letters:
        a[i - 1], a[i] = a[i], a[i - 1]
    return tuple(a)


@lru_cache(maxsize=None)
def subword_down_set(w: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """Everything below w: products of all subwords of one reduced word."""
    word = bubble_word(w)
    n = len(w)
    out = set()
    for r in range(len(word) + 1):
        for pos in combinations(range(len(word)), r):
            out.add(word_product([word[p] for p in pos], n))
    return frozenset(out)


def leq(u, w) -> bool:
    return tuple(u) in subword_down_set(tuple(w))


def inversions(u) -> int:
    return sum(1 for i, j in combinations(range(len(u)), 2) if u[i] > u[j])


def interval_members(v, w) -> list[tuple[int, ...]]:
    n = len(v)
    return sorted(u for u in permutations(range(1, n + 1)) if leq(v, u) and leq(u, w))


def rank_sizes(v, w) -> tuple[int, ...]:
    base = inversions(v)
    d = inversions(w) - base
    c = [0] * (d + 1)
    for u in interval_members(v, w):
        c[inversions(u) - base] += 1
    return tuple(c)


def is_lattice_naive(elems, le) -> bool:
    for a, b in combinations(elems, 2):
        lower = [x for x in elems if le(x, a) and le(x, b)]
        if not [m for m in lower if all(le(x, m) for x in lower)]:
            return False
        upper = [x for x in elems if le(a, x) and le(b, x)]
        if not [m for m in upper if all(le(m, x) for x in upper)]:
            return False
    return True


def has_s3_subinterval(v, w) -> bool:
    elems = interval_members(v, w)
    for a in elems:
        for b in elems:
            if inversions(b) - inversions(a) == 3 and leq(a, b):
                sub = [x for x in elems if leq(a, x) and leq(x, b)]
                if len(sub) == 6:
                    return True
    return False


# polynomials as coefficient lists, lowest degree first


def _padd(p, q):
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _pmul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


@lru_cache(maxsize=None)
def r_poly_left(u: tuple[int, ...], w: tuple[int, ...]) -> tuple[int, ...]:
    """R_{u,w} by the recursion on a left descent s of w (values i, i+1 out of order)."""
    if not leq(u, w):
        return (0,)
    if u == w:
        return (1,)
    pos = {x: p for p, x in enumerate(w)}
    i = next(i for i in range(1, len(w)) if pos[i] > pos[i + 1])

    def left(x):
        return tuple(i + 1 if y == i else i if y == i + 1 else y for y in x)

    upos = {x: p for p, x in enumerate(u)}
    sw, su = left(w), left(u)
    if upos[i] > upos[i + 1]:
        return r_poly_left(su, sw)
    return tuple(_padd(_pmul([0, 1], list(r_poly_left(su, sw))), _pmul([-1, 1], list(r_poly_left(u, sw)))))


def poly_eval(p, q: int) -> int:
    return sum(c * q**e for e, c in enumerate(p))
