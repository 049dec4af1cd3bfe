import json

from toric_richardson.families import hypercube_constituent
from toric_richardson.mrgraph import graph_for, minors_json
from toric_richardson.perm import Permutation, interval
from toric_richardson.plabic import hypercube_graph, perfect_orientations
from toric_richardson.polytope.hull import hull
from toric_richardson.serialize import (
    constituent_from_json,
    constituent_to_json,
    dumps,
    face_lattice_json,
    interval_from_json,
    interval_to_json,
    minor_poly_from_json,
    plabic_from_json,
    plabic_to_json,
    polytope_from_json,
    wiring_dot,
)
from toric_richardson.mrgraph import flag_minor
from toric_richardson.poly import ZERO

P = Permutation.parse


def through_text(doc):
    return json.loads(dumps(doc))


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}\n'


def test_interval_round_trip():
    I = interval(P("2143"), P("4231"))
    J = interval_from_json(through_text(interval_to_json(I)))
    assert J.v == I.v and J.w == I.w and J.ranks == I.ranks and J.covers == I.covers


def test_constituent_round_trip():
    C = hypercube_constituent(3, 5)
    assert constituent_from_json(through_text(constituent_to_json(C))) == C


def test_plabic_round_trip():
    for k in (1, 3, 6):
        G = hypercube_graph(3, k)
        doc = through_text(plabic_to_json(G, orientations=True))
        H = plabic_from_json(doc)
        assert H == G and H.rotation == G.rotation
        assert len(doc["orientations"]) == len(perfect_orientations(G))


def test_polytope_round_trip():
    Q = hull([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1), (2, 2, 1)])
    assert polytope_from_json(through_text(Q.to_json())) == Q
    fl = face_lattice_json(Q)
    assert fl["f_vector"] == [4, 4, 1]


def test_minor_round_trip():
    G = graph_for(P("2143"), P("4231"))
    for S in [(2,), (2, 4), (1, 3, 4)]:
        doc = through_text(minors_json(G, S))
        want = sum((m.as_poly() for m in flag_minor(G, S)), ZERO)
        assert minor_poly_from_json(doc) == want


def test_wiring_dot_mentions_every_bridge():
    G = graph_for(P("1324"), P("4231"))
    text = wiring_dot(G)
    assert all(f'label="t{j}"' in text for j in G.bridges)
