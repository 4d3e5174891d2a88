"""Smoke tests for the hlag extension module (run with PYTHONPATH at the build dir)."""

import math

import hlag


def test_graph_basics():
    g = hlag.Graph.colex_initial_segment(3, 8)
    assert g.r == 3 and g.n == 5 and len(g) == 8
    assert g.edges[-1] == [1, 4, 5]
    assert g.has_edge([1, 2, 3])
    assert not g.has_edge([3, 4, 5])
    parsed = hlag.Graph.parse(g.to_json())
    assert parsed == g

    try:
        hlag.Graph(3, 4, [[1, 2, 5]])
    except ValueError as err:
        assert "out of range" in str(err)
    else:
        raise AssertionError("vertex out of range must raise")


def test_colex():
    assert hlag.colex_unrank(3, 1) == [1, 2, 3]
    assert hlag.colex_unrank(3, 17) == [1, 5, 6]
    assert hlag.colex_rank([1, 5, 6]) == 17
    assert hlag.colex_compare([2, 4, 6], [1, 5, 6]) == -1


def test_structure():
    g = hlag.Graph.colex_initial_segment(3, 8)
    assert hlag.link(g, [5]) == [[1, 2], [1, 3], [2, 3], [1, 4]]
    assert hlag.link(g, [4, 5]) == [[1]]
    assert hlag.link_difference(g, 1, 4) == [[2, 5], [3, 5]]
    assert hlag.is_left_compressed(g)
    assert hlag.max_clique_order(g) == 4

    messy = hlag.Graph(3, 5, [[1, 2, 4], [1, 3, 5]])
    squeezed = hlag.compress(messy)
    assert squeezed.edges == [[1, 2, 3], [1, 2, 4]]


def test_solver():
    g = hlag.Graph.colex_initial_segment(3, 8)
    value = hlag.evaluate(g, [0.25, 0.25, 0.25, 0.125, 0.125])
    assert math.isclose(value, 17 / 256, rel_tol=0, abs_tol=1e-15)

    est = hlag.maximize(g)
    assert est["value"] >= 17 / 256 - 1e-12
    assert est["kkt_residual"] <= 1e-8
    assert est["converged"]

    assert math.isclose(hlag.complete_lagrangian(4, 3), 1 / 16)
    assert math.isclose(hlag.brute_force_oracle(hlag.Graph.complete(4, 3), 16), 1 / 16)

    stepped = hlag.baum_eagon_step(hlag.Graph.complete(3, 2), [0.5, 0.3, 0.2])
    assert math.isclose(stepped[0], 0.25 / 0.62, abs_tol=1e-12)


def test_enumeration_and_verification():
    graphs = hlag.enumerate_left_compressed(3, 4, 2)
    assert len(graphs) == 1
    assert graphs[0].edges == [[1, 2, 3], [1, 2, 4]]

    verdict = hlag.verify_conjecture1(3, 5, 4, 7)
    assert verdict["verdict"] == "holds"
    assert verdict["margin"] <= 1e-6

    cex = hlag.remark_counterexample(3, 5)
    assert cex["value"] == "17/256"
    assert cex["benchmark"] == "1/16"
    assert cex["graph"] == hlag.Graph.colex_initial_segment(3, 8)

    cert = hlag.theorem3_matching(hlag.Graph.colex_initial_segment(3, 7), 5)
    assert cert["complete"] and cert["source_count"] == 0


def main():
    tests = [
        test_graph_basics,
        test_colex,
        test_structure,
        test_solver,
        test_enumeration_and_verification,
    ]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"hlag {hlag.__version__}: {len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
