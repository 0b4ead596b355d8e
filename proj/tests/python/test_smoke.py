"""Smoke tests for the python bindings."""

import pytest

try:
    import fbtlab as m
except ImportError:
    import _fbtlab as m

TRIANGLE = [(1, 2), (1, 3), (2, 3)]
CBT7 = [(1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7)]


def test_graph_basics():
    g = m.RootedGraph(3, 1, TRIANGLE)
    assert g.vertex_count == 3
    assert g.degree(1) == 2
    assert g.has_edge(2, 3)
    assert not m.is_full_binary_tree(g)
    assert m.is_full_binary_tree(m.RootedGraph(7, 1, CBT7))


def test_solve_dv_triangle():
    inst = m.DeletionInstance(m.RootedGraph(3, 1, TRIANGLE), m.Variant.DV, 2)
    status, solution, stats = m.solve_dv(inst)
    assert status == m.SolveStatus.SAT
    deleted, weight = solution
    assert deleted == [2, 3]
    assert weight == 2
    assert m.verify_dv(inst, deleted, weight)
    assert stats.nodes_expanded >= 1

    tight = m.DeletionInstance(m.RootedGraph(3, 1, TRIANGLE), m.Variant.DV, 1)
    status, solution, _ = m.solve_dv(tight)
    assert status == m.SolveStatus.UNSAT
    assert solution is None


def test_solver_matches_oracle_de():
    inst = m.DeletionInstance(m.RootedGraph(3, 1, TRIANGLE), m.Variant.DE, 2)
    status, solution, _ = m.solve_de(inst, optimize=True)
    oracle = m.brute_force_de(inst)
    assert status == m.SolveStatus.SAT
    assert solution[1] == oracle[1] == 1
    assert m.verify_de(inst, solution[0], solution[1])


def test_lnes_pipeline():
    cnf = m.gen_224(4, 7)
    ok, violations = m.validate_224(cnf)
    assert ok, violations
    chain, p = m.sat224_to_lnes(cnf)
    assert p == 4
    ok, violations = m.validate_chain(chain)
    assert ok, violations

    zeta = m.brute_force_lnes(chain)
    if zeta is not None:
        assert m.check_near_exact(chain, zeta)
        tau = m.restrict_to_main(chain, zeta)
        assert m.check_224(cnf, tau)
        assert m.extend_to_chain(4, tau)[:4] == tau


def test_mcis_reduction_round_trip():
    mcis = m.McisInstance(4, [(1, 3)], [[1, 2], [3, 4]])
    reduced, rmap = m.mcis_to_fbtdv(mcis)
    ok, violations = m.audit_dv_reduction(reduced, rmap, mcis)
    assert ok, violations
    assert rmap.budget == 4

    mis = m.brute_force_mcis(mcis)
    assert mis is not None
    deleted, weight = m.forward_dv_solution(mcis, mis, rmap)
    assert weight == 4
    assert m.verify_dv(reduced, deleted, weight)
    assert m.lift_dv_solution(rmap, deleted, weight) == mis


def test_de_reduction_certificate():
    cnf = m.gen_224(4, 3)
    chain, _ = m.sat224_to_lnes(cnf)
    reduced, rmap = m.lnes_to_fbtde(chain)
    ok, violations = m.audit_de_reduction(reduced, rmap)
    assert ok, violations
    assert rmap.budget == 112

    zeta = m.brute_force_lnes(chain)
    if zeta is not None:
        deleted, weight = m.forward_de_solution(chain, zeta, rmap)
        assert weight == 112
        assert m.verify_de(reduced, deleted, weight)
        assert m.lift_de_solution(rmap, deleted, weight) == zeta


def test_planted_and_formats():
    inst, planted = m.gen_planted(m.Variant.DE, 16, 3, 5)
    edges, weight = planted
    assert weight == 3
    assert m.verify_de(inst, edges, weight)
    status, solution, _ = m.solve_de(inst, node_limit=10_000_000)
    assert status == m.SolveStatus.SAT
    assert solution[1] <= 3

    text = m.write_fbt(inst)
    again = m.parse_fbt(text)
    assert m.write_fbt(again) == text


def test_errors_surface_as_exceptions():
    with pytest.raises(Exception):
        m.RootedGraph(2, 1, [(1, 1)])  # self-loop
    with pytest.raises(Exception):
        m.parse_fbt("p fbt dv 2 1\nr 1\nk 0\ne 1 1\n")
