import random
from itertools import combinations

import pytest

from toric_richardson.classify import is_toric
from toric_richardson.families import (
    even_family,
    even_family_a_vector_check,
    even_family_bases,
    even_family_expected_f,
    even_family_minor,
    even_family_minor_check,
    even_family_structures,
    even_family_x_chart_check,
    hypercube_constituent,
    hypercube_perms,
    is_dyadic,
    random_nonmembers,
    satisfies_floor_ceil,
)
from toric_richardson.mrgraph import flag_minor_toric
from toric_richardson.perm import Permutation, bruhat_leq, interval, length
from toric_richardson.polytope.hull import face_lattice, hull
from toric_richardson.positroid import constituent, indicator

P = Permutation.parse


def test_even_family_permutations():
    f4 = even_family(4)
    assert f4.v == P("1324") and f4.w == P("4231")
    f6 = even_family(6)
    assert f6.v == P("132546") and f6.w == P("623451") and f6.d == 7
    assert length(f6.w) - length(f6.v) == 7
    with pytest.raises(ValueError):
        even_family(5)


def test_even_family_graph_shape():
    G = even_family(6).graph()
    assert G.bridges == (1, 2, 3, 4, 5, 7, 9)
    f8 = even_family(8)
    assert f8.v == P("13254768") and f8.w == P("82345671") and f8.d == 10


def _mono(n, k, i=None, j=None):
    m = even_family_minor(n, k, i, j)
    return {b: e for b, e in zip(m.bridges, m.exponents) if e}


def test_even_family_minor_examples():
    assert _mono(6, 1, 1, 2) == {1: 1}
    assert _mono(6, 1, 1, 3) == {9: 1}
    assert _mono(6, 1, 1, 4) == {3: 1, 9: 1}
    assert _mono(6, 4, 2, 6) == {2: 1, 3: 1, 5: 1}
    assert _mono(6, 3) == {}


def test_even_family_minor_matches_lgv_directly():
    G = even_family(6).graph()
    m = flag_minor_toric(G, (1, 3, 4, 6))
    assert {b: e for b, e in zip(m.bridges, m.exponents) if e} == {2: 1, 3: 1, 5: 1}
    with pytest.raises(ValueError):
        even_family_minor(6, 2, 3, 4)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_even_family_closed_forms(n):
    assert even_family_minor_check(n)
    assert even_family_a_vector_check(n)
    assert even_family_x_chart_check(n)


@pytest.mark.parametrize("n", [4, 6])
def test_even_family_structures(n):
    rep = even_family_structures(n, seed=1, points=5)
    assert rep, rep.details


def test_even_family_polytope_examples():
    sq = hull(indicator(B, 4) for B in even_family_bases(4, 2))
    assert face_lattice(sq).f_vector == (4, 4, 1) == even_family_expected_f(4, 2)
    simplex = hull(indicator(B, 4) for B in even_family_bases(4, 1))
    assert face_lattice(simplex).f_vector == (4, 6, 4, 1) == even_family_expected_f(4, 1)


def test_even_family_bases_are_the_constituents():
    fam = even_family(6)
    I = interval(fam.v, fam.w)
    for k in range(1, 6):
        assert constituent(I, k).bases == even_family_bases(6, k)


def test_hypercube_perms():
    assert hypercube_perms(1).v == P("12") and hypercube_perms(1).w == P("21")
    h2 = hypercube_perms(2)
    assert (h2.v, h2.w) == (P("1324"), P("4231"))
    h3 = hypercube_perms(3)
    assert h3.v == Permutation((1, 5, 3, 7, 2, 6, 4, 8))
    assert h3.w == Permutation((8, 4, 6, 2, 7, 3, 5, 1))
    assert length(h3.w) - length(h3.v) == h3.rank == 12
    assert is_toric(h3.v, h3.w)


def test_is_dyadic_examples():
    assert is_dyadic(P("1324"), 2)
    assert not is_dyadic(P("1234"), 2)
    with pytest.raises(ValueError):
        is_dyadic(P("123"), 2)


def test_dyadic_characterises_n2_interval():
    from itertools import permutations

    h = hypercube_perms(2)
    for u in permutations(range(1, 5)):
        u = Permutation(u)
        inside = bruhat_leq(h.v, u) and bruhat_leq(u, h.w)
        assert inside == is_dyadic(u, 2)


def test_dyadic_nonmembers_n3():
    for u in random_nonmembers(3, 200, seed=5):
        assert not is_dyadic(u, 3)


def test_hypercube_constituent_examples():
    assert hypercube_constituent(2, 2).bases == {(1, 3), (1, 4), (2, 3), (2, 4)}
    h = hypercube_perms(2)
    I = interval(h.v, h.w)
    for k in range(1, 4):
        assert hypercube_constituent(2, k).bases == constituent(I, k).bases


@pytest.mark.parametrize("n", [2, 3])
def test_filter_and_recursion_agree(n):
    for k in range(1, 1 << n):
        assert hypercube_constituent(n, k, "filter") == hypercube_constituent(n, k, "recursive")


def test_n4_recursion_against_filter_sample():
    rng = random.Random(2)
    for k in (3, 5, 6, 7, 9, 11, 13):
        rec = hypercube_constituent(4, k).bases
        assert all(satisfies_floor_ceil(B, 4) for B in rng.sample(sorted(rec), min(50, len(rec))))
        # a random k-subset satisfying the filter must be reached by the recursion
        hits = 0
        for _ in range(3000):
            S = tuple(sorted(rng.sample(range(1, 17), k)))
            if satisfies_floor_ceil(S, 4):
                assert S in rec
                hits += 1
        assert hits > 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_complement_symmetry(n):
    N = 1 << n
    for k in range(1, N):
        comp = {tuple(sorted(set(range(1, N + 1)) - set(B))) for B in hypercube_constituent(n, k).bases}
        assert comp == hypercube_constituent(n, N - k).bases


def test_disconnected_specialisation():
    # for k = 2^l k', each basis meets every block of size 2^(n-l) in exactly k' elements
    n = 4
    for k in (2, 4, 6, 8, 12):
        l = (k & -k).bit_length() - 1
        kk = k >> l
        size = 1 << (n - l)
        for B in hypercube_constituent(n, k).bases:
            assert all(sum(1 for x in B if c * size < x <= (c + 1) * size) == kk for c in range(1 << l))


# Published summand listings for n=3 (S_8): "exponent support:basis", supports in hex-like digits 1..9,A,B,C.
# The k=5 list prints basis 13568 twice; its second occurrence (support 35A) is 23567, the one basis
# otherwise absent, and is corrected here.  See test_published_k5_listing_has_one_duplicate.
N8_SUMMANDS = {
    1: "148:1 14:2 15:3 1:4 27:5 2:6 3:7 0:8",
    2: "2478:15 248:16 348:17 48:18 247:25 24:26 34:27 4:28 257:35 25:36 35:37 5:38 27:45 2:46 3:47 0:48",
    3: "25678:135 2568:136 3568:137 568:138 2678:145 268:146 368:147 68:148 2567:235 256:236 356:237 56:238 "
    "267:245 26:246 36:247 6:248 3478:157 478:158 348:167 48:168 347:257 47:258 34:267 4:268 357:357 57:358 "
    "35:367 5:368 37:457 7:458 3:467 0:468",
    4: "3578:1357 578:1358 358:1367 58:1368 378:1457 78:1458 38:1467 8:1468 357:2357 57:2358 35:2367 5:2368 "
    "37:2457 7:2458 3:2467 0:2468",
    5: "3579B:12357 579B:12358 359B:12367 59B:12368 379B:12457 79B:12458 39B:12467 9B:12468 3789:13457 789:13458 "
    "389:13467 89:13468 358A:13567 58A:13568 578:13578 58:13678 38A:14567 8A:14568 78:14578 8:14678 379:23457 "
    "79:23458 39:23467 9:23468 35A:23567 5A:23568 57:23578 5:23678 3A:24567 A:24568 7:24578 0:24678",
    6: "35AB:123567 5AB:123568 57B:123578 5B:123678 3AB:124567 AB:124568 7B:124578 B:124678 38A:134567 8A:134568 "
    "78:134578 8:134678 3A:234567 A:234568 7:234578 0:234678",
    7: "3AC:1234567 AC:1234568 7C:1234578 C:1234678 5B:1235678 B:1245678 8:1345678 0:2345678",
}

N8_NECKLACES = {
    1: "1 2 3 4 5 6 7 8",
    2: "15 25 35 45 15 16 17 18",
    3: "135 235 357 457 157 167 137 138",
    4: "1357 2357 1357 1457 1357 1367 1357 1358",
    5: "12357 23457 13457 14567 13567 13678 13578 12358",
    6: "123567 234567 134567 124567 123567 123678 123578 123568",
    7: "1234567 2345678 1345678 1245678 1235678 1234678 1234578 1234568",
}


def _n8_points(k):
    out = {}
    for item in N8_SUMMANDS[k].split():
        supp, label = item.split(":")
        vec = [0] * 12
        if supp != "0":
            for c in supp:
                vec[int(c, 16) - 1] = 1
        out[tuple(int(c) for c in label)] = tuple(vec)
    return out


def test_published_k5_listing_has_one_duplicate():
    published = N8_SUMMANDS[5].replace("35A:23567", "35A:13568").split()
    labels = [x.split(":")[1] for x in published]
    assert len(labels) - len(set(labels)) == 1
    missing = hypercube_constituent(3, 5).bases - {tuple(int(c) for c in l) for l in labels}
    assert missing == {(2, 3, 5, 6, 7)}


@pytest.mark.parametrize("k", range(1, 8))
def test_n8_listing_matches_constituent(k):
    assert set(_n8_points(k)) == hypercube_constituent(3, k).bases


@pytest.mark.parametrize("k", range(1, 8))
def test_n8_necklaces(k):
    from toric_richardson.positroid import grassmann_necklace

    want = tuple(tuple(int(c) for c in x) for x in N8_NECKLACES[k].split())
    assert grassmann_necklace(hypercube_constituent(3, k)).entries == want


@pytest.fixture(scope="module")
def n8_moment_data():
    from toric_richardson.polytope.moment import moment_data

    h = hypercube_perms(3)
    return moment_data(h.v, h.w)


@pytest.mark.parametrize("k", range(1, 8))
def test_n8_summands_integrally_affinely_equivalent(n8_moment_data, k):
    # the published points live in another chart; match them to the computed ones basis by basis
    from toric_richardson.polytope.moment import _solve_rows

    pts = _n8_points(k)
    keys = sorted(pts)
    src = [pts[B] for B in keys]
    tgt = [n8_moment_data.m[k][B] for B in keys]
    fwd, back = _solve_rows(src, tgt), _solve_rows(tgt, src)
    assert [fwd(x) for x in src] == tgt and [back(y) for y in tgt] == src
