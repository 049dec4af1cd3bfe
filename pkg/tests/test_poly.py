import random

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from toric_richardson.poly import ONE, ZERO, FlagMinors, Poly, det, identity_matrix, matmul

T = sympy.symbols("t1:8")


def to_sympy(p: Poly):
    expr = sympy.Integer(0)
    for mono, c in p.terms.items():
        term = sympy.Integer(c)
        for var, e in mono:
            term *= T[var - 1] ** e
        expr += term
    return sympy.expand(expr)


def rand_poly(rng):
    acc = ZERO
    for _ in range(rng.randint(0, 3)):
        exps = {rng.randint(1, 4): rng.randint(1, 2) for _ in range(rng.randint(0, 2))}
        acc = acc + Poly.monomial(exps, rng.randint(-3, 3))
    return acc


polys = st.integers(0, 10_000).map(lambda s: rand_poly(random.Random(s)))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys)
def test_against_sympy(a, b):
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(a - b) == sympy.expand(to_sympy(a) - to_sympy(b))


def test_monomial_and_str():
    m = Poly.var(1) * Poly.var(3)
    assert m.is_monomial() and str(m) == "t1*t3"
    assert str(ZERO) == "0"
    assert (Poly.var(2) ** 3).evaluate({2: 2}) == 8


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 4))
def test_det_and_flag_minors_against_sympy(seed, n):
    rng = random.Random(seed)
    m = [[rand_poly(rng) for _ in range(n)] for _ in range(n)]
    sm = sympy.Matrix([[to_sympy(x) for x in row] for row in m])
    assert to_sympy(det(m)) == sympy.expand(sm.det())
    fm = FlagMinors(m)
    for k in range(1, n + 1):
        rows = sorted(rng.sample(range(n), k))
        want = sympy.expand(sm.extract(rows, list(range(k))).det())
        assert to_sympy(fm(rows)) == want


def test_matmul_identity():
    rng = random.Random(1)
    m = [[rand_poly(rng) for _ in range(3)] for _ in range(3)]
    assert matmul(identity_matrix(3), m) == m
