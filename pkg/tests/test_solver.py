"""Exact alliance solver against pinned values, the oracle, and invariants."""

import math

import pytest

from zdalliance import (AllianceProblem, BudgetExceeded, CapacityError,
                        build_graph, build_ring, domination_number,
                        oracle_solve, solve, spectrum)

PINNED = {
    "Z12": {-4: 2, -3: 2, -2: 2, -1: 3, 0: 4, 1: 5},
    "Z2 x Z4": {-3: 2, -2: 2, -1: 2, 0: 3, 1: 4},
    "Z9": {-1: 1, 0: 2, 1: 2},
    "Z8": {-2: 1, -1: 2, 0: 2, 1: 3},
}


def G(expr):
    return build_graph(build_ring(expr))


def test_single_values():
    assert solve(AllianceProblem(G("Z12"), -1)).size == 3
    assert solve(AllianceProblem(G("Z9"), 1)).size == 2
    assert solve(AllianceProblem(G("Z4"), 0)).size == 1
    sol = solve(AllianceProblem(G("Z8"), 2))
    assert not sol.feasible and sol.size is None and sol.witness is None


@pytest.mark.parametrize("expr", sorted(PINNED))
def test_pinned_spectra(expr):
    g = G(expr)
    for k, want in PINNED[expr].items():
        sol = solve(AllianceProblem(g, k))
        assert sol.feasible and sol.size == want, (expr, k)


def test_domination():
    g = G("Z8")
    size, witness = domination_number(g)
    assert size == 1
    assert witness == g.mask_of_elements([4])
    assert domination_number(G("Z12"))[0] == 2
    assert domination_number(G("Z2 x Z4"))[0] == 2


def test_witness_is_valid_and_optimal_size():
    for expr in ["Z12", "Z2 x Z4", "Z16", "Z2 x Z2 x Z3", "Z27"]:
        g = G(expr)
        for k in range(-g.max_degree, g.min_degree + 1):
            sol = solve(AllianceProblem(g, k))
            assert sol.feasible
            assert sol.witness.bit_count() == sol.size
            assert g.is_global_defensive_alliance(sol.witness, k)


def test_solver_is_deterministic():
    g = G("Z2 x Z2 x Z3")
    a = solve(AllianceProblem(g, 0))
    b = solve(AllianceProblem(g, 0))
    assert (a.feasible, a.size, a.witness) == (b.feasible, b.size, b.witness)


def test_feasible_iff_k_at_most_min_degree():
    for expr in ["Z12", "Z8", "Z2 x Z4", "Z2 x Z2 x Z3", "Z25"]:
        g = G(expr)
        for k in range(-g.max_degree, g.max_degree + 1):
            sol = solve(AllianceProblem(g, k))
            assert sol.feasible == (k <= g.min_degree), (expr, k)


def test_spectrum_shape_and_monotonicity():
    g = G("Z12")
    sp = spectrum(g)
    assert sorted(sp) == list(range(-g.max_degree, g.max_degree + 1))
    sizes = [sp[k].size for k in range(-g.max_degree, g.min_degree + 1)]
    assert all(a <= b for a, b in zip(sizes, sizes[1:]))
    assert all(not sp[k].feasible
               for k in range(g.min_degree + 1, g.max_degree + 1))


def test_solution_at_least_domination_number():
    for expr in ["Z12", "Z2 x Z4", "Z16", "Z30"]:
        g = G(expr)
        gamma = domination_number(g)[0]
        for k in range(-g.max_degree, g.min_degree + 1):
            assert solve(AllianceProblem(g, k)).size >= gamma


@pytest.mark.parametrize("expr", ["Z12", "Z2 x Z4", "Z8", "Z9", "Z16",
                                  "Z2 x Z2 x Z3", "Z3 x Z5", "Id(Z3, 1)",
                                  "Z2 x Z9", "Z30"])
def test_oracle_agreement_all_k(expr):
    g = G(expr)
    for k in range(-g.max_degree, g.max_degree + 1):
        fast = solve(AllianceProblem(g, k))
        slow = oracle_solve(AllianceProblem(g, k))
        assert (fast.feasible, fast.size) == (slow.feasible, slow.size), \
            (expr, k)


def test_complete_graph_closed_form():
    # multiples of p in Z_{p^2} induce K_{p-1}
    for p, n in [(5, 4), (7, 6)]:
        g = G(f"Z{p * p}")
        assert g.vertex_count == n
        for k in range(1 - n, n):
            sol = solve(AllianceProblem(g, k))
            assert sol.size == math.ceil((n + k + 1) / 2)


def test_node_budget_exhaustion():
    g = G("Z2 x Z27")
    with pytest.raises(BudgetExceeded):
        solve(AllianceProblem(g, 1), node_budget=5)


def test_time_budget_exhaustion():
    g = G("Z2 x Z27")
    with pytest.raises(BudgetExceeded):
        solve(AllianceProblem(g, 1), time_budget=0.0)


def test_oracle_vertex_cap():
    g = G("Z81")
    assert g.vertex_count == 26
    with pytest.raises(CapacityError):
        oracle_solve(AllianceProblem(g, 0))
    # the cap is adjustable
    small = G("Z12")
    oracle_solve(AllianceProblem(small, 0), max_vertices=7)
    with pytest.raises(CapacityError):
        oracle_solve(AllianceProblem(small, 0), max_vertices=6)


def test_oracle_counts_subsets():
    sol = oracle_solve(AllianceProblem(G("Z8"), 0))
    assert sol.feasible and sol.size == 2
    assert sol.nodes >= 3  # at least all singletons before any pair


def test_solution_str():
    g = G("Z8")
    assert "size 2" in str(solve(AllianceProblem(g, 0)))
    assert "infeasible" in str(solve(AllianceProblem(g, 2)))
