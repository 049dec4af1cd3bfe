import pytest

from toric_richardson.errors import MixedRank
from toric_richardson.families import even_family, hypercube_constituent
from toric_richardson.perm import interval
from toric_richardson.plabic import (
    B,
    V,
    PlabicGraph,
    disjoint_union,
    disk_embedding_ok,
    family_star_graph,
    hypercube_graph,
    is_forest,
    perfect_orientations,
    positroid_from_graph,
    star,
)
from toric_richardson.positroid import constituent


def test_white_star():
    G = star(range(1, 6), "white")
    orients = perfect_orientations(G)
    assert len(orients) == 5
    assert sorted(o.source_set for o in orients) == [(a,) for a in range(1, 6)]


def test_black_star():
    G = star(range(1, 6), "black")
    assert sorted(positroid_from_graph(G)) == sorted(tuple(x for x in range(1, 6) if x != a) for a in range(1, 6))


def test_disjoint_stars_multiply():
    G = disjoint_union([star((1, 2)), star((3, 4))])
    assert len(perfect_orientations(G)) == 4
    assert positroid_from_graph(G) == {(1, 3), (1, 4), (2, 3), (2, 4)}


def test_perfect_orientation_degrees():
    G = hypercube_graph(3, 3)
    for o in perfect_orientations(G):
        incoming = {x: 0 for x in G.vertices}
        outgoing = {x: 0 for x in G.vertices}
        for (x, y), f in zip(G.edges, o.forward):
            a, b = (x, y) if f else (y, x)
            outgoing[a] += 1
            incoming[b] += 1
        for i, c in G.colors.items():
            if c == "white":
                assert incoming[V(i)] == 1
            else:
                assert outgoing[V(i)] == 1


def test_forest_checks():
    assert is_forest(star(range(1, 4)))
    hexagon = PlabicGraph(
        (1,),
        {i: "white" if i % 2 else "black" for i in range(6)},
        tuple((V(i), V((i + 1) % 6)) for i in range(6)) + ((V(0), B(1)),),
    )
    assert not is_forest(hexagon)
    assert not disk_embedding_ok(hexagon)


def test_source_count_is_constant():
    # white vertices take one incoming edge, black ones one outgoing; the count of
    # boundary sources is then forced, so every orientation has the same rank
    G = PlabicGraph((1, 2, 3), {0: "white", 1: "black"}, ((V(0), B(1)), (V(0), V(1)), (V(1), B(2)), (V(1), B(3))))
    assert len({len(o.source_set) for o in perfect_orientations(G)}) == 1
    assert positroid_from_graph(star((1, 2), "black")) == {(1,), (2,)}


def test_mixed_rank_error(monkeypatch):
    import toric_richardson.plabic as pl

    fake = [pl.PerfectOrientation((True,), (1,)), pl.PerfectOrientation((False,), ())]
    monkeypatch.setattr(pl, "perfect_orientations", lambda G: fake)
    with pytest.raises(MixedRank):
        pl.positroid_from_graph(star((1,)))


@pytest.mark.parametrize("n", [4, 6])
def test_family_star_graphs(n):
    fam = even_family(n)
    I = interval(fam.v, fam.w)
    for k in range(1, n):
        G = family_star_graph(n, k)
        internal_edges = [e for e in G.edges if e[0][0] == "i" and e[1][0] == "i"]
        assert len(G.colors) == 2 and len(internal_edges) == (k % 2)
        assert is_forest(G) and disk_embedding_ok(G)
        assert positroid_from_graph(G) == constituent(I, k).bases


def test_family_star_positroid_shapes():
    n = 6
    for k in range(1, n):
        bases = positroid_from_graph(family_star_graph(n, k))
        exch = {tuple(sorted((set(range(1, k + 1)) - {i}) | {j})) for i in range(1, k + 1) for j in range(k + 1, n + 1)}
        want = exch | ({tuple(range(1, k + 1))} if k % 2 else set())
        assert bases == want


def test_hypercube_graph_examples():
    G = hypercube_graph(3, 1)
    assert len(G.colors) == 1 and G.colors[0] == "white" and len(G.edges) == 8
    G = hypercube_graph(5, 10)
    comps = [c for c in G.components() if any(x[0] == "b" for x in c)]
    assert len(comps) == 2
    halves = sorted(sorted(x[1] for x in c if x[0] == "b") for c in comps)
    assert halves == [list(range(1, 17)), list(range(17, 33))]
    G = hypercube_graph(4, 4)
    comps = G.components()
    assert len(comps) == 4 and all(sum(1 for x in c if x[0] == "b") == 4 for c in comps)
    assert all(c == "white" for c in G.colors.values())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hypercube_graphs_match_constituents(n):
    for k in range(1, 1 << n):
        G = hypercube_graph(n, k)
        assert is_forest(G) and disk_embedding_ok(G)
        assert positroid_from_graph(G) == hypercube_constituent(n, k).bases


def test_color_swap_is_complement():
    for k in range(1, 8):
        G = hypercube_graph(3, k)
        comp = {tuple(sorted(set(range(1, 9)) - set(S))) for S in positroid_from_graph(G)}
        assert positroid_from_graph(G.swap_colors()) == comp


def test_disk_embedding_rejects_bad_rotation():
    G = star((1, 2, 3))
    bad = PlabicGraph(G.boundary, G.colors, G.edges, {V(0): (B(1), B(3), B(2))})
    assert disk_embedding_ok(G) and not disk_embedding_ok(bad)
