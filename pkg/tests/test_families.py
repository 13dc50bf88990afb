import math

import pytest

from cayleydim.cayley import ConnectionSet, build_cayley, enumerate_connection_sets
from cayleydim.families import (
    AS_STATED,
    PROOF_CONSISTENT,
    Prediction,
    complete_bipartite,
    cycle,
    cyclic_step,
    hypercube,
    mobius_ladder,
    parse_family,
    predict_characterization,
    predict_circulant_involution,
    predict_cubic_bipartite,
    predict_cyclic_involution,
    predict_mobius,
    predict_prism,
    prism,
)
from cayleydim.errors import ParseError
from cayleydim.graph import is_bipartite, is_isomorphic, is_regular
from cayleydim.groups import AbelianGroup
from cayleydim.metricdim import DimensionResult, metric_dimension

from conftest import brute_dimension


def test_prism_shapes():
    g = prism(2, 3)
    assert (g.vertex_count, g.edge_count) == (6, 9)
    assert is_isomorphic(prism(1, 7), cycle(7))
    assert is_regular(prism(2, 5), 3)
    with pytest.raises(ValueError):
        prism(2, 2)


def test_mobius_shapes():
    g = mobius_ladder(6, "vertices")
    # steps {1, 3, 5} on Z6 join exactly the vertices of opposite parity
    expected = {(u, v) for u in range(6) for v in range(u + 1, 6) if (u - v) % 2}
    assert set(g.edges()) == expected
    assert is_isomorphic(g, complete_bipartite(3, 3))
    for conv in ("vertices", "rungs"):
        assert is_regular(mobius_ladder(8, conv), 3)
    z8 = AbelianGroup((8,))
    assert mobius_ladder(4, "rungs").adjacency == build_cayley(z8, ConnectionSet.of(z8, [1, 7, 4])).adjacency
    with pytest.raises(ValueError):
        mobius_ladder(7, "vertices")
    with pytest.raises(ValueError):
        mobius_ladder(8, "spokes")


def test_hypercube_shapes():
    q3 = hypercube(3)
    assert (q3.vertex_count, q3.edge_count) == (8, 12)
    assert is_regular(q3, 3) and is_bipartite(q3)
    assert hypercube(1).edges() == [(0, 1)]
    assert is_isomorphic(hypercube(2), cycle(4))


def test_predict_prism():
    assert predict_prism(2, 5).value == "2"
    assert predict_prism(3, 4).value == "3"
    assert predict_prism(1, 7).kind == "none"


def test_predict_mobius():
    assert predict_mobius(10).value == "3"
    assert predict_mobius(12).value == "3..4"
    assert predict_mobius(6).kind == "none"


def test_prediction_invariants():
    with pytest.raises(ValueError):
        Prediction.interval(4, 3, "x", AS_STATED)
    with pytest.raises(ValueError):
        Prediction("exact", "x", AS_STATED, 2, 3)
    p = Prediction.interval(3, 4, "x", AS_STATED)
    assert p.consistent_with(DimensionResult(4, (), 5))
    assert not p.consistent_with(DimensionResult(2, (), 5))
    assert p.consistent_with(DimensionResult(None, (), 3))
    assert not p.consistent_with(DimensionResult(None, (), 4))
    assert Prediction.interval(3, None, "x", AS_STATED).consistent_with(DimensionResult(None, (), 3))
    assert Prediction.not2("x", AS_STATED).consistent_with(DimensionResult(None, (), 3))
    assert not Prediction.exact(2, "x", AS_STATED).consistent_with(DimensionResult(None, (), 3))
    assert Prediction.none("x", AS_STATED).consistent_with(DimensionResult(7, (), 9))


def test_predict_cyclic_involution_examples():
    p = predict_cyclic_involution(10, 2)
    assert p.as_stated.value == p.proof_consistent.value == "2"
    p = predict_cyclic_involution(8, 1)
    assert p.proof_consistent.value == "3"
    assert p.as_stated.value == "not 2"
    p = predict_cyclic_involution(6, 1)
    assert p.as_stated.value == "2"
    assert p.proof_consistent.value == "4"
    z6 = AbelianGroup((6,))
    assert brute_dimension(build_cayley(z6, ConnectionSet.of(z6, [1, 5, 3])))[0] == 4
    with pytest.raises(ValueError):
        predict_cyclic_involution(12, 2)  # {2, 10, 6} does not generate Z12
    with pytest.raises(ValueError):
        predict_cyclic_involution(10, 5)


def test_variants_tagged():
    p = predict_cyclic_involution(14, 4)
    assert p.as_stated.variant == AS_STATED
    assert p.proof_consistent.variant == PROOF_CONSISTENT


@pytest.mark.parametrize("n", range(6, 31, 2))
def test_cyclic_involution_predictions_match_solver(n):
    group = AbelianGroup((n,))
    for i in range(1, n // 2):
        if math.gcd(i, n // 2) != 1:
            continue
        conn = ConnectionSet.of(group, [i, -i, n // 2])
        res = metric_dimension(build_cayley(group, conn))
        assert predict_cyclic_involution(n, i).proof_consistent.consistent_with(res)


def test_predict_characterization_examples():
    z10 = AbelianGroup((10,))
    p = predict_characterization(z10, ConnectionSet.of(z10, [2, 8, 5]))
    assert p.as_stated.value == p.proof_consistent.value == "2"
    z2z4 = AbelianGroup((2, 4))
    sets = list(enumerate_connection_sets(z2z4, 3, generating_only=True))
    assert sets
    for conn in sets:
        p = predict_characterization(z2z4, conn)
        assert p.as_stated.kind == p.proof_consistent.kind == "not2"
    z7 = AbelianGroup((7,))
    p = predict_characterization(z7, ConnectionSet.of(z7, [1, 6]))
    assert p.proof_consistent.value == "2"
    assert "cycle-case" in p.proof_consistent.flags
    assert p.as_stated.kind == "not2"


def test_characterization_on_product_form_cyclic_group():
    # Z2xZ3 is cyclic; (0,1) has order 3 so S corresponds to step i = 2 in Z6
    g = AbelianGroup((2, 3))
    conn = ConnectionSet.of(g, [(0, 1), (0, 2), (1, 0)])
    assert cyclic_step(g, conn) == 2
    assert predict_characterization(g, conn).proof_consistent.value == "2"
    assert metric_dimension(build_cayley(g, conn)).dim == 2


def test_characterization_small_orders_make_no_claim():
    z4 = AbelianGroup((4,))
    p = predict_characterization(z4, ConnectionSet.of(z4, [1, 3]))
    assert p.as_stated.kind == p.proof_consistent.kind == "none"


def test_predict_cubic_bipartite():
    assert predict_cubic_bipartite(hypercube(3)).value == ">=3"
    assert predict_cubic_bipartite(prism(2, 5)).kind == "none"


@pytest.mark.parametrize("n", range(3, 16))
def test_prism_dimension_instancewise(n):
    assert metric_dimension(prism(2, n)).dim == (2 if n % 2 else 3)


@pytest.mark.parametrize("n", range(6, 25, 2))
def test_circulant_involution_instancewise(n):
    expected = predict_circulant_involution(n)
    assert metric_dimension(mobius_ladder(n, "vertices")).dim == int(expected.value)


def test_parse_family():
    assert parse_family("prism:2,5").vertex_count == 10
    assert parse_family("mobius:8", "rungs").vertex_count == 16
    assert parse_family("hypercube:3").edge_count == 12
    assert parse_family("cycle:6").edge_count == 6
    assert parse_family("complete:4").edge_count == 6
    for bad in ("prism:2", "wheel:5", "cycle:x", "cycle:2"):
        with pytest.raises(ParseError):
            parse_family(bad)
