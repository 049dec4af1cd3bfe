"""The even-n family [s_2 s_4 ... s_{n-2}, (1 n)] and the hypercube family [v_n, w_n]."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional

from .classify import is_toric
from .mrgraph import MRMonomial, ReducedWord, WiringGraph, build_graph, flag_minor_toric, symbolic_matrix
from .perm import Permutation, bruhat_leq, length
from .polytope.hull import face_lattice, hull
from .polytope.linalg import solve_rational
from .positroid import Constituent, indicator

Subset = tuple[int, ...]


# even family


@dataclass(frozen=True)
class EvenFamily:
    n: int
    v: Permutation
    w: Permutation
    word: ReducedWord

    @property
    def d(self) -> int:
        return 3 * self.n // 2 - 2

    def graph(self) -> WiringGraph:
        return build_graph(self.v, self.word, self.w)


def even_family(n: int) -> EvenFamily:
    if n < 4 or n % 2:
        raise ValueError(f"n must be even and at least 4, got {n}")
    v = Permutation.from_word(range(2, n - 1, 2), n)
    w = Permutation.transposition(1, n, n)
    word = ReducedWord(tuple(range(1, n)) + tuple(range(n - 2, 0, -1)))
    fam = EvenFamily(n, v, w, word)
    if word.product(n) != w or len(word) != length(w) or not is_toric(v, w):
        raise AssertionError("even family construction failed")
    return fam


def even_family_bases(n: int, k: int) -> frozenset[Subset]:
    """[k] minus i plus j for i <= k < j, together with [k] itself when k is odd."""
    base = set(range(1, k + 1))
    out = {tuple(sorted((base - {i}) | {j})) for i in range(1, k + 1) for j in range(k + 1, n + 1)}
    if k % 2:
        out.add(tuple(range(1, k + 1)))
    return frozenset(out)


def _single_minor(n: int, i: int) -> Counter:
    """Exponents of the 1x1 minor Delta_i in the t variables."""
    c: Counter = Counter()
    if i == 1:
        return c
    q = (i + 1) // 2
    for j in range(q - 1):
        c[2 * n - 3 - 2 * j] += 1
    if i % 2 == 0:
        c[2 * q - 1] += 1
    return c


def even_family_minor(n: int, k: int, i: Optional[int] = None, j: Optional[int] = None) -> MRMonomial:
    """Closed-form MR monomial for Delta_{[k] - i + j}; with i, j omitted, Delta_{v[k]} = 1."""
    fam = even_family(n)
    bridges = fam.graph().bridges
    if i is None or j is None:
        return MRMonomial(bridges, (0,) * len(bridges))
    if not (1 <= i <= k < j <= n):
        raise ValueError(f"need 1 <= i <= k < j <= n, got i={i}, k={k}, j={j}")
    c: Counter = Counter()
    for q in range(i + 1, k + 1):
        c[q - 1] += 1
    c.update(_single_minor(n, j))
    c.subtract(_single_minor(n, k if k % 2 else k + 1))
    if any(e < 0 for e in c.values()):
        raise AssertionError(f"quotient formula leaves a denominator for i={i}, k={k}, j={j}")
    bad = [x for x, e in c.items() if e and x not in bridges]
    if bad:
        raise AssertionError(f"closed form uses non-bridge parameters {bad}")
    return MRMonomial(bridges, tuple(c.get(b, 0) for b in bridges))


def even_family_a_vectors(n: int, k: int) -> tuple[list[dict[int, int]], dict[int, int]]:
    """Closed-form (a_1..a_n, b) in MR coordinates, as sparse maps t-index -> coefficient.

    Readings adopted: the dummy index in the k = 1 case is q (m = 2q or 2q - 1) and
    the odd-k sum runs to m.  e_0 is zero.
    """

    def e(l: int) -> dict[int, int]:
        return {} if l == 0 else {l: 1}

    def add(*vs: dict[int, int], sign: tuple[int, ...] = ()) -> dict[int, int]:
        out: Counter = Counter()
        for idx, vec in enumerate(vs):
            s = sign[idx] if idx < len(sign) else 1
            for key, val in vec.items():
                out[key] += s * val
        return {key: val for key, val in out.items() if val}

    def a1(m: int) -> dict[int, int]:
        if m == 1:
            return {}
        q = (m + 1) // 2
        acc = add(*[e(2 * n - 3 - 2 * j) for j in range(q - 1)])
        if m % 2 == 0:
            acc = add(acc, e(2 * q - 1))
        return acc

    if k == 1:
        return [a1(m) for m in range(1, n + 1)], {}
    if k % 2 == 0:
        tail = add(*[{l: l} for l in range(1, k)])
        a = []
        for m in range(1, n + 1):
            if m <= k - 1:
                a.append(add(*[e(l) for l in range(m, k)], sign=tuple(-1 for _ in range(m, k))))
            elif m == k:
                a.append({})
            else:
                a.append(add(a1(m), a1(k + 1), tail, sign=(1, -1, 1)))
        return a, {}
    b = add(*[{j: -(k - j)} for j in range(1, k + 1)])
    pref = add(*[e(l - 1) for l in range(1, k + 1)])
    a = []
    for m in range(1, n + 1):
        if m <= k:
            a.append(add(*[e(l - 1) for l in range(1, m + 1)]))
        else:
            a.append(add(a1(m), a1(k), pref, sign=(1, -1, 1)))
    return a, b


def _simplex_product_f(a: int, b: int) -> list[int]:
    """f-vector (dims 0..a+b) of the product of an a-simplex and a b-simplex."""
    return [
        sum(comb(a + 1, p + 1) * comb(b + 1, i - p + 1) for p in range(0, i + 1) if 0 <= i - p <= b and p <= a)
        for i in range(a + b + 1)
    ]


def _pyramid_f(f: list[int]) -> list[int]:
    ext = [1] + f  # prepend the empty face
    return [ext[i + 1] + ext[i] if i + 1 < len(ext) else ext[i] for i in range(len(f) + 1)]


def even_family_expected_f(n: int, k: int) -> tuple[int, ...]:
    f = _simplex_product_f(k - 1, n - k - 1)
    return tuple(_pyramid_f(f) if k % 2 else f)


@dataclass(frozen=True)
class FamilyReport:
    ok: bool
    details: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def _z_normal_form(g: list[list[Fraction]], w: Permutation) -> Optional[list[list[Fraction]]]:
    """Right-multiply by an upper triangular matrix so that column c has the Schubert-cell shape:
    pivot at row w(c) equal to the pattern value, zero at earlier pivot rows and below the pivot."""
    n = len(g)
    target = {1: Fraction(1), n: Fraction(-1)}
    out = [[Fraction(0)] * n for _ in range(n)]
    for c in range(1, n + 1):
        rows = [w(cc) for cc in range(1, c)] + [w(c)]
        rhs = [Fraction(0)] * (c - 1) + [target.get(c, Fraction(-1))]
        A = [[g[r - 1][cc] for cc in range(c)] for r in rows]
        sol = solve_rational(A, rhs)
        if sol is None:
            return None
        for r in range(n):
            out[r][c - 1] = sum(g[r][cc] * sol[cc] for cc in range(c))
        if any(out[r][c - 1] != 0 for r in range(w(c), n) if r + 1 not in rows):
            return None
    return out


def z_coordinates(M: list[list[Fraction]]) -> dict[int, Fraction]:
    n = len(M)
    z = {n - 1: M[0][0]}
    for r in range(2, n + 1):
        if n - r >= 1:
            z[n - r] = M[r - 1][0]
    for c in range(2, n):
        z[n + c - 2] = (-1) ** (c - 1) * M[0][c - 1]
    return z


def z_relations_hold(n: int, z: dict[int, Fraction]) -> bool:
    if z[n - 1] != z[n - 2] * z[n]:
        return False
    for i in range(2, n - 2, 2):
        if z[i] * z[2 * n - 2 - i] != z[i + 1] * z[2 * n - 3 - i]:
            return False
    return all(x != 0 for x in z.values())


def even_family_structures(n: int, seed: int = 0, points: int = 20) -> FamilyReport:
    fam = even_family(n)
    G = fam.graph()
    details = []
    ok = True
    from .perm import interval
    from .positroid import constituent

    I = interval(fam.v, fam.w)
    for k in range(1, n):
        C = constituent(I, k)
        if C.bases != even_family_bases(n, k):
            ok = False
            details.append(f"k={k}: constituent differs from the closed-form basis list")
        P = hull(indicator(B, n) for B in C.bases)
        fv = face_lattice(P).f_vector
        want = even_family_expected_f(n, k)
        if fv != want:
            ok = False
            details.append(f"k={k}: f-vector {fv} expected {want}")
    g = symbolic_matrix(G)
    rng = random.Random(seed)
    for _ in range(points):
        pt = {j: Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9)) for j in G.bridges}
        gv = [[Fraction(e.evaluate(pt)) for e in row] for row in g]
        M = _z_normal_form(gv, fam.w)
        if M is None:
            ok = False
            details.append("MR matrix does not reduce to the Schubert-cell normal form")
            break
        if not z_relations_hold(n, z_coordinates(M)):
            ok = False
            details.append(f"z-relations fail at {pt}")
            break
    if ok:
        details.append(f"n={n}: constituents, f-vectors and z-relations at {points} points verified")
    return FamilyReport(ok, tuple(details))


def even_family_minor_check(n: int) -> FamilyReport:
    """Closed-form minors against the unique LGV collection for every I in every M_k."""
    fam = even_family(n)
    G = fam.graph()
    bad = []
    for k in range(1, n):
        for B in sorted(even_family_bases(n, k)):
            lgv = flag_minor_toric(G, B)
            if B == fam.v.prefix(k):
                closed = even_family_minor(n, k)
            else:
                i = next(x for x in range(1, k + 1) if x not in B)
                j = next(x for x in B if x > k)
                closed = even_family_minor(n, k, i, j)
            if lgv is None or lgv.exponents != closed.exponents or lgv.sign != 1:
                bad.append(f"k={k} I={B}")
    return FamilyReport(not bad, tuple(bad) or (f"n={n}: closed forms agree with LGV",))


def even_family_a_vector_check(n: int) -> FamilyReport:
    fam = even_family(n)
    G = fam.graph()
    bad = []
    for k in range(1, n):
        a, b = even_family_a_vectors(n, k)
        for B in sorted(even_family_bases(n, k)):
            acc: Counter = Counter(b)
            for x in B:
                acc.update(a[x - 1])
            pred = tuple(acc.get(j, 0) for j in G.bridges)
            stray = [j for j, e in acc.items() if e and j not in G.bridges]
            m = flag_minor_toric(G, B)
            if stray or m is None or pred != m.exponents:
                bad.append(f"k={k} I={B}")
    return FamilyReport(not bad, tuple(bad) or (f"n={n}: closed-form a-vectors reproduce every m_I",))


# x-chart formulas of the even family


def even_family_x_minor(n: int, I: Subset) -> Optional[Counter]:
    """Exponents in x_1..x_{3n/2-2} of the nonzero flag minors in the x chart (x_0 = 1)."""
    k = len(I)
    if k == n:
        return Counter()
    base = tuple(range(1, k + 1))
    c: Counter = Counter()
    if I == base:
        if k % 2 == 0:
            return None
        if k == 1:
            c.update([n - 2, n - 1])
        else:
            c.update([n - k, n + (k - 3) // 2])
    else:
        missing = [x for x in base if x not in I]
        extra = [x for x in I if x > k]
        if len(missing) != 1 or len(extra) != 1:
            return None
        i, j = missing[0], extra[0]
        c[n - j] += 1
        if i == 2:
            c[n - 1] += 1
        elif i >= 3 and i % 2:
            c[n + (i - 3) // 2] += 1
        elif i >= 4:
            c[n - (i + 4) // 2] -= 1
            c[n + (i - 4) // 2] += 1
            c[n - (i + 2) // 2] += 1
    c.pop(0, None)
    return c


def even_family_x_a_vectors(n: int, k: int) -> tuple[list[Counter], Counter]:
    """The x-chart (a^{(k)}, b^{(k)}) including the B_k correction term."""

    def e(l: int) -> Counter:
        return Counter() if l == 0 else Counter({l: 1})

    def Bk() -> Counter:
        c = e(n - 1)
        for l in range(1, (k - 1) // 2 + 1):
            c.update(e(n + l - 1))
        for l in range(2, k // 2 + 1):
            c.update(e(n + l - 2))
            c.update(e(n - l - 1))
            c.subtract(e(n - l - 2))
        return c

    a: list[Counter] = []
    if k == 1:
        for i in range(1, n + 1):
            a.append(e(n - 2) + e(n - 1) if i == 1 else e(n - i))
        return a, Counter()
    if k == 2:
        for i in range(1, n + 1):
            a.append(Counter() if i == 2 else e(n - i))
        return a, Counter()
    odd = k % 2 == 1
    for i in range(1, n + 1):
        c: Counter = Counter()
        if i == 1:
            pass
        elif i == 2:
            c.subtract(e(n - 1))
        elif i % 2 and i <= (k if odd else k - 1):
            c.subtract(e(n + (i - 3) // 2))
        elif i % 2 == 0 and i <= (k - 1 if odd else k):
            c.subtract(e(n + (i - 4) // 2))
            c.subtract(e(n - (i + 2) // 2))
            c.update(e(n - (i + 4) // 2))
        else:
            c.update(e(n - i))
            if odd:
                c.subtract(e(n - k))
                c.subtract(e(n + (k - 3) // 2))
            else:
                c.update(Bk())
        a.append(c)
    b = Counter()
    if odd:
        b.update(e(n - k))
        b.update(e(n + (k - 3) // 2))
        b.update(Bk())
    return a, b


def even_family_x_chart_check(n: int) -> FamilyReport:
    """Internal consistency of the x-chart formulas: A e_I + b equals the minor exponents for all I."""
    bad = []
    for k in range(1, n):
        a, b = even_family_x_a_vectors(n, k)
        for B in sorted(even_family_bases(n, k)):
            want = even_family_x_minor(n, B)
            acc = Counter(b)
            for x in B:
                acc.update(a[x - 1])
            acc = Counter({key: v for key, v in acc.items() if v})
            if want is None or acc != Counter({key: v for key, v in want.items() if v}):
                bad.append(f"k={k} I={B}")
    return FamilyReport(not bad, tuple(bad) or (f"n={n}: x-chart a-vectors reproduce the x-chart minors",))


# hypercube family


@dataclass(frozen=True)
class HypercubeFamily:
    n: int
    v: Permutation
    w: Permutation

    @property
    def rank(self) -> int:
        return self.n * (1 << (self.n - 1))


def hypercube_perms(n: int) -> HypercubeFamily:
    if n < 1:
        raise ValueError("n must be positive")
    v = [1, 2]
    for m in range(1, n):
        half = 1 << m
        v = [x for a in v for x in (a, a + half)]
    return HypercubeFamily(n, Permutation(tuple(v)), Permutation(tuple(reversed(v))))


def basic_intervals(n: int, j: int) -> list[range]:
    size = 1 << j
    return [range(c * size + 1, (c + 1) * size + 1) for c in range(1 << (n - j))]


def is_dyadic(u: Permutation, n: int) -> bool:
    if u.n != 1 << n:
        raise ValueError(f"expected a permutation of size {1 << n}")
    for j in range(n + 1):
        for S in basic_intervals(n, j):
            for T in basic_intervals(n, n - j):
                hits = sum(1 for a in S if u(a) in T)
                if hits != 1:
                    return False
    return True


def satisfies_floor_ceil(I: Subset, n: int) -> bool:
    k = len(I)
    s = set(I)
    for j in range(n + 1):
        lo, hi = k // (1 << j), -(-k // (1 << j))
        for T in basic_intervals(n, n - j):
            c = sum(1 for x in T if x in s)
            if not lo <= c <= hi:
                return False
    return True


def _constituent_filter(n: int, k: int) -> frozenset[Subset]:
    return frozenset(I for I in combinations(range(1, (1 << n) + 1), k) if satisfies_floor_ceil(I, n))


def _constituent_recursive(n: int, k: int) -> frozenset[Subset]:
    N = 1 << n
    l, kk = 0, k
    while kk % 2 == 0:
        kk //= 2
        l += 1
    if l > 0:
        size = 1 << (n - l)
        inner = sorted(_constituent_recursive(n - l, kk))
        parts: list[list[Subset]] = [[tuple(c * size + x for x in I) for I in inner] for c in range(1 << l)]
        out = [()]
        for choice in parts:
            out = [a + b for a in out for b in choice]
        return frozenset(out)
    if k == 1:
        return frozenset((x,) for x in range(1, N + 1))
    L = k.bit_length()
    if L == n:
        full = set(range(1, N + 1))
        return frozenset(tuple(sorted(full - set(I))) for I in _constituent_recursive(n, N - k))
    legs = 1 << (n - L)
    out_sets = []
    for J in _constituent_recursive(L, k):
        options = [range((c - 1) * legs + 1, c * legs + 1) for c in J]
        acc = [()]
        for opt in options:
            acc = [a + (x,) for a in acc for x in opt]
        out_sets.extend(acc)
    return frozenset(out_sets)


def hypercube_constituent(n: int, k: int, method: str = "auto") -> Constituent:
    if not 1 <= k < 1 << n:
        raise ValueError("k out of range")
    if method == "auto":
        method = "filter" if n <= 3 else "recursive"
    bases = _constituent_filter(n, k) if method == "filter" else _constituent_recursive(n, k)
    return Constituent(1 << n, k, bases)


def random_nonmembers(n: int, count: int, seed: int) -> list[Permutation]:
    fam = hypercube_perms(n)
    rng = random.Random(seed)
    N = 1 << n
    out: list[Permutation] = []
    while len(out) < count:
        win = list(range(1, N + 1))
        rng.shuffle(win)
        u = Permutation(tuple(win))
        if not (bruhat_leq(fam.v, u) and bruhat_leq(u, fam.w)):
            out.append(u)
    return out
