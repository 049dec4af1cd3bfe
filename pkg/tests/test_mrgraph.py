import random
from itertools import combinations

import pytest

from toric_richardson.classify import is_toric
from toric_richardson.errors import MultipleCollections
from toric_richardson.mrgraph import (
    ReducedWord,
    build_graph,
    default_reduced_word,
    edge_plucker_failures,
    flag_minor,
    flag_minor_poly,
    flag_minor_toric,
    fz_failures,
    graph_for,
    incidence_plucker,
    incidence_plucker_failures,
    is_reduced_word_for,
    minors_json,
    ni_path_collections,
    pds,
    symbolic_matrix,
    symbolic_minors,
)
from toric_richardson.perm import Permutation, all_intervals, all_permutations, interval
from toric_richardson.poly import ONE, ZERO, Poly
from toric_richardson.positroid import constituent
from toric_richardson.serialize import minor_poly_from_json

P = Permutation.parse
W = ReducedWord((1, 2, 3, 2, 1))
t = Poly.var


@pytest.fixture(scope="module")
def base():
    return build_graph(P("1324"), W, P("4231"))


@pytest.fixture(scope="module")
def crown():
    return build_graph(P("2143"), W, P("4231"))


def test_default_word():
    assert default_reduced_word(Permutation.identity(4)).letters == ()
    assert default_reduced_word(P("4231")).letters == (1, 2, 3, 2, 1)
    assert default_reduced_word(P("1324")).letters == (2,)
    for w in all_permutations(5):
        assert is_reduced_word_for(default_reduced_word(w), w)


def test_pds():
    r = pds(P("1324"), W)
    assert r.jplus == (4,) and r.jcirc == (1, 2, 3, 5)
    assert pds(Permutation.identity(4), W).jplus == ()
    assert pds(P("4231"), W).jplus == (1, 2, 3, 4, 5)
    with pytest.raises(ValueError):
        pds(P("4321"), W)


def test_graph_shape(base):
    assert base.bridges == (1, 2, 3, 5) and base.crossings == (4,) and base.d == 4
    bare = build_graph(Permutation.identity(3), ReducedWord(()))
    assert bare.chips == ()
    one = build_graph(P("132"), ReducedWord((2,)))
    assert one.bridges == () and one.crossings == (1,)


def test_base_case_matrix(base):
    g = symbolic_matrix(base)
    want = [
        [ONE, ZERO, ZERO, ZERO],
        [t(1), ZERO, Poly.const(-1), ZERO],
        [t(5), ONE, -t(2), ZERO],
        [t(3) * t(5), t(3), ZERO, ONE],
    ]
    assert g == want


def test_crown_matrix(crown):
    g = symbolic_matrix(crown)
    m1 = Poly.const(-1)
    want = [
        [ZERO, m1, ZERO, ZERO],
        [ONE, -t(1), ZERO, ZERO],
        [t(2), ZERO, ZERO, m1],
        [t(4), ZERO, ONE, ZERO],
    ]
    assert g == want


def test_empty_word_matrix():
    g = symbolic_matrix(build_graph(Permutation.identity(3), ReducedWord(())))
    assert g == [[ONE if a == b else ZERO for b in range(3)] for a in range(3)]


def test_path_collections(base):
    pcs = ni_path_collections(base, (1, 3))
    assert len(pcs) == 1 and pcs[0].bridges_used == ()
    pcs = ni_path_collections(base, (2, 4))
    assert len(pcs) == 1 and pcs[0].bridges_used == (1, 3)
    assert ni_path_collections(base, (3, 4)) == []


def test_flag_minor_examples(base, crown):
    assert flag_minor_poly(base, (1,)) == ONE
    assert flag_minor_poly(base, (2, 4)) == t(1) * t(3)
    assert flag_minor(base, (3, 4)) == []
    assert flag_minor_toric(base, (1, 4)).as_poly() == t(3)
    assert flag_minor_toric(base, (1, 3)).as_poly() == ONE
    m = flag_minor_toric(crown, (2, 4))
    assert m.bits() == "101" and m.as_poly() == t(1) * t(4)


def test_multiple_collections_on_non_toric():
    G = graph_for(Permutation.identity(3), Permutation.longest(3))
    found = False
    for k in (1, 2):
        for I in combinations(range(1, 4), k):
            try:
                flag_minor_toric(G, I)
            except MultipleCollections:
                found = True
    assert found


def _check_lgv(v, w, word=None):
    G = graph_for(v, w, word)
    minors = symbolic_minors(G)
    I = interval(v, w)
    for k in range(1, v.n + 1):
        bases = constituent(I, k).bases
        for S in combinations(range(1, v.n + 1), k):
            terms = flag_minor(G, S)
            assert len({x.exponents for x in terms}) == len(terms)
            assert flag_minor_poly(G, S) == minors([x - 1 for x in S])
            assert bool(terms) == (S in bases)


def test_lgv_equals_determinant_all_s4():
    for v, w in all_intervals(4):
        _check_lgv(v, w)


def test_lgv_equals_determinant_s5_sample():
    rng = random.Random(5)
    pool = all_intervals(5)
    for v, w in rng.sample(pool, 30):
        _check_lgv(v, w)


def test_toric_minors_are_squarefree_monic():
    for v, w in all_intervals(4):
        if not is_toric(v, w):
            continue
        G = graph_for(v, w)
        for k in range(1, 5):
            for S in constituent(interval(v, w), k).bases:
                m = flag_minor_toric(G, S)
                assert m.sign == 1 and set(m.exponents) <= {0, 1}


def test_incidence_plucker(base, crown):
    for G in (base, crown):
        assert incidence_plucker_failures(G) == []
    mins = symbolic_minors(base)
    # r = s = 2 gives the single three-term relation of Gr(2,4)
    assert incidence_plucker(mins, (1,), (2, 3, 4)) == ZERO


def test_two_term_identity(base, crown):
    for G, (v, w) in ((base, ("1324", "4231")), (crown, ("2143", "4231"))):
        assert edge_plucker_failures(G, interval(P(v), P(w)).covers) == []


def test_two_term_identity_needs_k_plus_one_below_j(crown):
    # with k + 1 = j the third term of the relation survives and the two-term form can fail
    I = interval(P("2143"), P("4231"))
    mins = symbolic_minors(crown)

    def D(S):
        return mins([x - 1 for x in S])

    bad = 0
    for e in I.covers:
        k = e.j - 1
        if e.i <= k and D(e.lower.prefix(k)) * D(e.upper.prefix(k + 1)) != D(e.upper.prefix(k)) * D(e.lower.prefix(k + 1)):
            bad += 1
    assert bad > 0


def test_opposite_cell_conditions():
    for v, w in all_intervals(4):
        assert fz_failures(graph_for(v, w)) == []
    rng = random.Random(2)
    for v, w in rng.sample(all_intervals(5), 40):
        assert fz_failures(graph_for(v, w)) == []


def test_minors_json_round_trip(base):
    doc = minors_json(base, (2, 4))
    assert doc == {"I": [2, 4], "terms": [{"sign": 1, "exp": {"t1": 1, "t3": 1}}]}
    assert minor_poly_from_json(doc) == flag_minor_poly(base, (2, 4))


def test_bad_word():
    with pytest.raises(ValueError):
        build_graph(P("1324"), ReducedWord((1, 2, 3)), P("4231"))
    with pytest.raises(ValueError):
        build_graph(P("1324"), ReducedWord((1, 1, 2)))
