import pytest

from wellcov import oracle
from wellcov import recognizers as rec
from wellcov.errors import FamilyError, InputError, PreconditionError
from wellcov.formats import to_graph6
from wellcov.generate import canonical_form, connected_graphs
from wellcov.graph import Graph, complete_graph, cycle_graph, path_graph, star_graph, t10_graph
from wellcov.verdict import TrianglePartition

from conftest import RELATING_FIXTURES, girth5_outside_pc

TWO_TRIANGLES = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)])
# C5 on 0..4 with a pendant path 0-5-6
C5_TAIL = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)])


def witness(v):
    return v.certificate.vertices.to_list()


class TestShedding:
    def test_c5free_examples(self):
        assert rec.shed_c5free(path_graph(4), 1)
        v = rec.shed_c5free(cycle_graph(4), 0)
        assert not v and witness(v) == [2]
        assert rec.shed_c5free(star_graph(3), 0)
        with pytest.raises(FamilyError, match="no C5"):
            rec.shed_c5free(cycle_graph(5), 0)

    def test_mwis(self):
        assert rec.brute_force_mwis(path_graph(3), [1, 5, 1]).to_list() == [1]
        assert rec.mwis(Graph(3), [2, 1, 4]).to_list() == [0, 1, 2]
        assert sum([0, 0, 0][i] for i in rec.mwis(path_graph(3), [0, 0, 0])) == 0

    def test_clawfree_examples(self):
        v = rec.shed_clawfree(cycle_graph(5), 0)
        assert v and v.notes["max_weight"] == 1
        K3_tail = Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3)])
        assert rec.shed_clawfree(K3_tail, 0)
        assert rec.shed_clawfree(path_graph(3), 1)
        with pytest.raises(FamilyError, match="claw-free"):
            rec.shed_clawfree(star_graph(3), 1)

    def test_c46free_examples(self):
        v = rec.shed_c46free(path_graph(3), 1)
        assert v and v.notes["flow"] == 0
        v = rec.shed_c46free(path_graph(5), 2)
        assert not v and witness(v) == [0, 4] and v.notes["flow"] == 2
        spider = Graph(5, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)])
        assert rec.shed_c46free(spider, 0)
        with pytest.raises(FamilyError):
            rec.shed_c46free(cycle_graph(6), 0)

    def test_bounded_alpha_examples(self):
        v = rec.shed_bounded_alpha(cycle_graph(4), 0, 2)
        assert not v and witness(v) == [2]
        assert rec.shed_bounded_alpha(cycle_graph(5), 0, 2)
        assert rec.shed_bounded_alpha(path_graph(3), 1, 2)
        with pytest.raises(PreconditionError):
            rec.shed_bounded_alpha(cycle_graph(5), 0, 3)
        with pytest.raises(InputError):
            rec.shed_bounded_alpha(cycle_graph(5), 0, 1)


class TestGirthFive:
    def test_pc_family(self):
        v = rec.recognize_pc_family(complete_graph(2))
        assert v and v.certificate.P.to_list() == [0, 1] and v.certificate.pendant_edges == ((0, 1),)
        v = rec.recognize_pc_family(cycle_graph(5))
        assert v and v.certificate.P.to_list() == [] and len(v.certificate.basic_cycles) == 1
        assert not rec.recognize_pc_family(cycle_graph(7))
        assert not rec.recognize_pc_family(girth5_outside_pc())

    def test_stems_and_leaves(self):
        K2 = complete_graph(2)
        assert rec.shed_girth5_wc(K2, 0) and rec.shed_girth5_wc(K2, 1)
        v = rec.shed_girth5_wc(path_graph(4), 0)
        assert not v and witness(v) == [2]
        assert rec.shed_girth5_wc(path_graph(4), 1)

    def test_cycle_vertices(self):
        # degree-2 vertices whose cycle neighbours have nothing off the cycle shed
        assert all(rec.shed_girth5_wc(cycle_graph(5), v) for v in range(5))
        assert oracle.is_well_covered_oracle(C5_TAIL)
        assert rec.shed_girth5_wc(C5_TAIL, 0).notes["case"] == "cycle, degree >= 3"
        assert rec.shed_girth5_wc(C5_TAIL, 0)
        assert rec.shed_girth5_wc(C5_TAIL, 2)
        v = rec.shed_girth5_wc(C5_TAIL, 1)
        assert not v and witness(v) == [3, 5]
        assert not rec.shed_girth5_wc(C5_TAIL, 4)

    def test_outside_pc_nothing_sheds(self):
        for G in (cycle_graph(7), girth5_outside_pc()):
            for v in G.vertices():
                verdict = rec.shed_girth5_wc(G, v)
                assert not verdict and verdict.notes["case"] == "outside PC"

    def test_requires_well_covered(self):
        with pytest.raises(PreconditionError):
            rec.shed_girth5_wc(path_graph(3), 0)

    def test_agrees_with_oracle(self):
        for G in connected_graphs(9, "girth5"):
            if not oracle.is_well_covered_oracle(G):
                continue
            for v in G.vertices():
                assert rec.shed_girth5_wc(G, v).answer == oracle.is_shedding_oracle(G, v).answer


class TestWellCoveredAndW2:
    def test_wc_bounded_alpha(self):
        v = rec.wc_bounded_alpha(star_graph(3), 3)
        assert not v and witness(v) == [0]
        assert rec.wc_bounded_alpha(cycle_graph(4), 2)
        assert rec.wc_bounded_alpha(cycle_graph(5), 2)

    def test_w2_bounded_alpha(self):
        assert rec.w2_bounded_alpha(cycle_graph(5), 2)
        v = rec.w2_bounded_alpha(cycle_graph(4), 2)
        assert not v and v.certificate.vertex == 2 and v.notes["reason"] == "non-shedding vertex"
        assert rec.w2_bounded_alpha(TWO_TRIANGLES, 2)

    def test_vertex_deletion(self):
        v = rec.w2_via_vertex_deletion(path_graph(3))
        assert not v and v.notes["reason"] == "P3"
        assert rec.w2_via_vertex_deletion(complete_graph(2))
        assert rec.w2_via_vertex_deletion(cycle_graph(5))
        v = rec.w2_via_vertex_deletion(Graph(2, []))
        assert not v and v.notes["reason"] == "isolated vertex"

    def test_via_shedding(self):
        v = rec.w2_via_shedding(cycle_graph(7))
        assert not v and v.certificate.vertex == 0
        assert rec.w2_via_shedding(cycle_graph(5))
        assert not rec.w2_via_shedding(cycle_graph(4))

    def test_structural(self):
        assert rec.w2_girth5(cycle_graph(5)) and rec.w2_girth5(complete_graph(2))
        assert not rec.w2_girth5(cycle_graph(7))
        assert rec.w2_c3c5free(complete_graph(2))
        assert not rec.w2_c3c5free(cycle_graph(4)) and not rec.w2_c3c5free(path_graph(4))
        with pytest.raises(FamilyError, match="connected"):
            rec.w2_c3c5free(Graph(2))

    def test_triangle_partitions(self):
        assert rec.w2_c45free(complete_graph(2))
        v = rec.w2_c45free(complete_graph(3))
        assert v.certificate == TrianglePartition(((0, 1, 2),))
        v = rec.w2_c45free(TWO_TRIANGLES)
        assert v.certificate == TrianglePartition(((0, 1, 2), (3, 4, 5)))
        assert not rec.w2_c45free(path_graph(4))

    def test_dispatch_routes(self):
        assert rec.dispatch_w2(cycle_graph(5)).algorithm == "girth5"
        v = rec.dispatch_w2(cycle_graph(4))
        assert not v and v.algorithm == "c3c5free"
        assert rec.dispatch_w2(TWO_TRIANGLES).algorithm == "c45free"
        v = rec.dispatch_w2(Graph(5, [(0, 1), (2, 3), (3, 4), (2, 4)]))
        assert v and v.algorithm == "components" and v.notes["routes"] == ["girth5", "c45free"]

    def test_t10_is_the_only_shedding_free_graph(self):
        T = t10_graph()
        assert oracle.is_well_covered_oracle(T)
        assert not any(oracle.is_shedding_oracle(T, v) for v in T.vertices())
        assert not rec.w2_c45free(T) and not rec.dispatch_w2(T)
        found = [
            G
            for G in connected_graphs(10, "c45free", n_min=7)
            if oracle.is_well_covered_oracle(G) and not any(oracle.is_shedding_oracle(G, v) for v in G.vertices())
        ]
        assert [G.n for G in found] == [7, 10]
        assert to_graph6(found[1]) == "ICOf?_H@W"
        assert canonical_form(T) == canonical_form(found[1])

    def test_well_covered_dispatch(self):
        assert rec.well_covered(complete_graph(4)).algorithm == "trivial"
        assert rec.well_covered(cycle_graph(7)).algorithm == "bounded-alpha"


class TestRelating:
    def test_fixtures_against_oracles(self):
        for name, (G, (relating, x_sheds, y_sheds)) in RELATING_FIXTURES.items():
            assert oracle.is_relating_oracle(G, 0, 1).answer is relating, name
            if x_sheds is not None:
                assert oracle.is_shedding_oracle(G, 0).answer is x_sheds, name
            assert oracle.is_shedding_oracle(G, 1).answer is y_sheds, name

    @pytest.mark.parametrize(
        "name, clause",
        [
            ("common neighbour", "N(x) and N(y) disjoint"),
            ("leaf endpoint", "d(y) >= 2"),
            ("four-cycle", "no C4 subgraph"),
            ("five-cycle", "no C5 subgraph"),
            ("two six-cycles", "no C6 subgraph"),
        ],
    )
    def test_fixtures_refused(self, name, clause):
        G = RELATING_FIXTURES[name][0]
        with pytest.raises(PreconditionError) as info:
            rec.relating_via_shedding(G, 0, 1)
        assert info.value.clause == clause

    def test_positive_and_negative(self):
        P6 = path_graph(6)
        v = rec.relating_via_shedding(P6, 2, 3)
        assert v and v.certificate.first.to_list() == [0, 4] and v.certificate.second.to_list() == [1, 5]
        P5 = path_graph(5)
        v = rec.relating_via_shedding(P5, 1, 2)
        assert not v and v.certificate.vertex == 1
        assert not oracle.is_relating_oracle(P5, 1, 2)
        assert oracle.is_relating_oracle(P6, 2, 3)


@pytest.mark.slow
def test_girth5_degree_two_cycle_vertices_up_to_eleven():
    from wellcov.generate import _grow, family

    level = list(connected_graphs(10, "girth5", n_min=10))
    graphs = list(connected_graphs(10, "girth5")) + _grow(level, family("girth5"))
    checked = 0
    for G in graphs:
        if not oracle.is_well_covered_oracle(G):
            continue
        for v in G.vertices():
            verdict = rec.shed_girth5_wc(G, v)
            if verdict.notes.get("case") == "cycle, degree 2":
                checked += 1
                assert verdict.answer == oracle.is_shedding_oracle(G, v).answer
    assert checked > 0
