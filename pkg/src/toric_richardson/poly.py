"""Sparse multivariate polynomials over the integers.

A monomial is a sorted tuple of ``(variable, exponent)`` pairs with positive
exponents; a polynomial maps monomials to nonzero ints.  Variables are plain
ints (the MR parameter index ``j`` of ``t_j``).

>>> t1, t3 = Poly.var(1), Poly.var(3)
>>> str((t1 + t3) * (t1 - t3))
't1^2 - t3^2'
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple[tuple[int, int], ...]
Scalar = Union[int, Fraction]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i][0] == b[j][0]:
            out.append((a[i][0], a[i][1] + b[j][1]))
            i += 1
            j += 1
        elif a[i][0] < b[j][0]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


class Poly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}

    # constructors
    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(): c})

    @classmethod
    def var(cls, j: int) -> "Poly":
        return cls({((j, 1),): 1})

    @classmethod
    def monomial(cls, exps: Mapping[int, int] | Iterable[tuple[int, int]], coeff: int = 1) -> "Poly":
        items = exps.items() if isinstance(exps, Mapping) else exps
        mono = tuple(sorted((v, e) for v, e in items if e))
        return cls({mono: coeff})

    # arithmetic
    def __add__(self, other: "Poly | int") -> "Poly":
        other = _lift(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly | int") -> "Poly":
        return self + (-_lift(other))

    def __rsub__(self, other: "Poly | int") -> "Poly":
        return _lift(other) - self

    def __mul__(self, other: "Poly | int") -> "Poly":
        other = _lift(other)
        if not self.terms or not other.terms:
            return Poly()
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        out = Poly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set[int]:
        return {v for m in self.terms for v, _ in m}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def evaluate(self, point: Mapping[int, Scalar]) -> Scalar:
        total: Scalar = 0
        for m, c in self.terms.items():
            val: Scalar = c
            for v, e in m:
                val = val * point[v] ** e
            total += val
        return total

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda mc: (-sum(e for _, e in mc[0]), mc[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            body = "*".join(f"t{v}" if e == 1 else f"t{v}^{e}" for v, e in m)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}*{body}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"


def _lift(x: "Poly | int") -> Poly:
    return x if isinstance(x, Poly) else Poly.const(int(x))


ZERO = Poly()
ONE = Poly.const(1)

PolyMatrix = list[list[Poly]]


def identity_matrix(n: int) -> PolyMatrix:
    return [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]


def matmul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for r in range(n):
        row = []
        for c in range(p):
            acc = ZERO
            for x in range(m):
                if a[r][x].terms and b[x][c].terms:
                    acc = acc + a[r][x] * b[x][c]
            row.append(acc)
        out.append(row)
    return out


class FlagMinors:
    """All minors on rows ``I`` and the first ``|I|`` columns, by memoised Laplace expansion.

    The minor for ``I`` (sorted 0-indexed rows) expands along its last column
    into minors of ``I`` minus one row; no division ever happens.
    """

    def __init__(self, matrix: Sequence[Sequence[Poly]]):
        self.m = [list(r) for r in matrix]
        self.n = len(self.m)
        self._memo: dict[tuple[int, ...], Poly] = {(): ONE}

    def __call__(self, rows: Sequence[int]) -> Poly:
        key = tuple(sorted(rows))
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        c = len(key) - 1
        acc = ZERO
        for pos, r in enumerate(key):
            entry = self.m[r][c]
            if not entry.terms:
                continue
            sub = self(key[:pos] + key[pos + 1 :])
            if not sub.terms:
                continue
            term = entry * sub
            acc = acc + (term if (pos + c) % 2 == 0 else -term)
        self._memo[key] = acc
        return acc


def det(matrix: Sequence[Sequence[Poly]]) -> Poly:
    return FlagMinors(matrix)(range(len(matrix)))
