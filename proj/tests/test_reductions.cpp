#include "doctest.h"

#include <set>

#include "roomassign/errors.hpp"
#include "roomassign/exact.hpp"
#include "roomassign/reductions.hpp"
#include "support.hpp"

using namespace roomassign;
using namespace testing_support;

namespace {

std::vector<player_id> flat(const preference_list& l) {
    std::vector<player_id> out;
    for (const auto& g : l) {
        REQUIRE(g.size() == 1);
        out.push_back(g[0]);
    }
    return out;
}

digraph arcs(int m, std::initializer_list<std::pair<int, int>> list) {
    digraph d(m);
    for (auto [u, v] : list) d.add_arc(u, v);
    return d;
}

graph edges(int m, std::initializer_list<std::pair<int, int>> list) {
    graph g(m);
    for (auto [u, v] : list) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("blue triangles are chained across origin blocks") {
    auto t = blue_triangle_layout(6);
    REQUIRE(t.size() == 4);
    CHECK(t[0] == triple{6, 7, 8});
    CHECK(t[1] == triple{9, 10, 11});
    CHECK(t[2] == triple{13, 14, 15});
    CHECK(t[3] == triple{16, 17, 12});
    for (int m : {3, 6, 9, 12}) {
        std::multiset<int> seen;
        for (const auto& tri : blue_triangle_layout(m)) seen.insert(tri.begin(), tri.end());
        CHECK(seen.size() == static_cast<std::size_t>(2 * m));
        CHECK(std::set<int>(seen.begin(), seen.end()).size() == static_cast<std::size_t>(2 * m));
        CHECK(*seen.begin() == m);
        CHECK(*seen.rbegin() == 3 * m - 1);
    }
    // No union of origin blocks other than all of them is closed under the triangles.
    const int m = 12;
    for (int mask = 1; mask < (1 << (m / 3)) - 1; ++mask) {
        bool closed = true;
        for (const auto& tri : blue_triangle_layout(m)) {
            std::set<int> blocks;
            for (int p : tri) blocks.insert((p % m) / 3);
            bool any = false;
            bool all = true;
            for (int b : blocks) {
                any = any || (mask >> b & 1);
                all = all && (mask >> b & 1);
            }
            if (any && !all) closed = false;
        }
        CHECK_FALSE(closed);
    }
    CHECK_THROWS_AS(blue_triangle_layout(4), std::invalid_argument);
    CHECK_THROWS_AS(blue_triangle_layout(0), std::invalid_argument);
}

TEST_CASE("worst-mode verification construction on a triangle") {
    auto r = verification_instance_worst(edges(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(r.inst.n == 9);
    CHECK(r.inst.mode == comparison_mode::worst);
    CHECK(r.inst.prefs.strict());
    CHECK(r.inst.prefs.complete());
    CHECK(validate_instance(r.inst).ok());
    CHECK(flat(r.inst.prefs.list_of(0)) == std::vector<player_id>{1, 2, 3, 6, 4, 5, 7, 8});
    // copy 3 sits in blue triangle (3, 4, 5), gray with 0 and 6
    CHECK(flat(r.inst.prefs.list_of(3)) == std::vector<player_id>{4, 5, 0, 6, 1, 2, 7, 8});
    // copy 6 sits in blue triangle (7, 8, 6), gray with 0 and 3
    CHECK(flat(r.inst.prefs.list_of(6)) == std::vector<player_id>{7, 8, 0, 3, 1, 2, 4, 5});
    REQUIRE(r.distinguished.has_value());
    CHECK(*r.distinguished == assignment{{{0, 3, 6}, {1, 4, 7}, {2, 5, 8}}});
    REQUIRE(r.provenance.size() == 9);
    CHECK(r.provenance[0] == player_origin{0, 0});
    CHECK(r.provenance[4] == player_origin{1, 1});
    CHECK(r.provenance[8] == player_origin{2, 2});
    auto v = verify_poa(r.inst, *r.distinguished);
    REQUIRE_FALSE(v.is_pareto_optimal());
    CHECK(oracle_dominates(oracle_values(r.inst, v.witness()->rooms), oracle_values(r.inst, r.distinguished->rooms)));
}

TEST_CASE("best-mode verification construction on a directed triangle") {
    auto r = verification_instance_best(arcs(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(r.inst.mode == comparison_mode::best);
    CHECK(validate_instance(r.inst).ok());
    CHECK(flat(r.inst.prefs.list_of(0)) == std::vector<player_id>{1, 3, 6, 2, 4, 5, 7, 8});
    CHECK(flat(r.inst.prefs.list_of(3)) == std::vector<player_id>{4, 6, 0, 5, 1, 2, 7, 8});
    CHECK(flat(r.inst.prefs.list_of(6)) == std::vector<player_id>{7, 0, 3, 8, 1, 2, 4, 5});
    CHECK(flat(r.inst.prefs.list_of(8)) == std::vector<player_id>{6, 2, 5, 7, 0, 1, 3, 4});
    CHECK_FALSE(verify_poa(r.inst, *r.distinguished, verify_method::brute).is_pareto_optimal());
    auto other = verification_instance_best(arcs(3, {{0, 2}, {2, 1}, {1, 0}}));
    CHECK_FALSE(verify_poa(other.inst, *other.distinguished).is_pareto_optimal());
}

TEST_CASE("verification constructions agree with the oracle on 6 vertices") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 40; ++round) {
        auto g = graph_from_mask(6, static_cast<std::uint32_t>(draw_below(rng, 1U << 15)));
        if (g.min_degree() < 2) continue;
        auto r = verification_instance_worst(g);
        CHECK(verify_poa(r.inst, *r.distinguished).is_pareto_optimal() == !oracle_triangle_cover(g));
    }
    for (int round = 0; round < 40; ++round) {
        auto d = random_precondition_digraph(rng, 6, round % 2 == 0);
        auto r = verification_instance_best(d);
        CHECK(verify_poa(r.inst, *r.distinguished).is_pareto_optimal() == !oracle_directed_cover(d));
    }
}

TEST_CASE("verification construction preconditions") {
    CHECK_THROWS_AS(verification_instance_worst(graph_from_mask(4, 0x3F)), precondition_error);
    CHECK_THROWS_AS(verification_instance_worst(edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}})), precondition_error);
    CHECK_THROWS_AS(verification_instance_best(arcs(3, {{0, 1}, {1, 2}})), precondition_error);
    // antiparallel arcs are rejected
    CHECK_THROWS_AS(verification_instance_best(arcs(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}})), precondition_error);
    CHECK_THROWS_AS(poa_instance_ties_best(arcs(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}})), precondition_error);
}

TEST_CASE("feasibility construction") {
    auto k3 = feasibility_instance(edges(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(k3.rooms == room_spec({3}));
    CHECK(k3.prefs.complete());
    CHECK(find_feasible(k3).has_value());
    auto path = feasibility_instance(edges(3, {{0, 1}, {1, 2}}));
    CHECK_FALSE(path.prefs.complete());
    CHECK(rank_of(path, 1, 0) == 1);
    CHECK(rank_of(path, 1, 2) == 2);
    CHECK_FALSE(rank_of(path, 0, 2).has_value());
    CHECK_FALSE(find_feasible(path).has_value());
    auto four = feasibility_instance(graph_from_mask(4, 0x3F));
    CHECK(four.rooms == room_spec({4}));
    CHECK(validate_instance(four).ok());
    CHECK_FALSE(find_feasible(four).has_value());
    CHECK_THROWS_AS(feasibility_instance(graph(1)), precondition_error);

    std::mt19937_64 rng(32);
    for (int round = 0; round < 30; ++round) {
        graph g(9);
        for (int u = 0; u < 9; ++u) {
            for (int v = u + 1; v < 9; ++v) {
                if (draw_unit(rng) < 0.45) g.add_edge(u, v);
            }
        }
        CHECK(find_feasible(feasibility_instance(g)).has_value() == triangle_cover(g).has_value());
    }
}

TEST_CASE("bin packing construction") {
    auto inst = poa_instance_binpack({{2, 3}, 5});
    CHECK(inst.n == 5);
    CHECK(inst.rooms == room_spec({5}));
    CHECK(inst.mode == comparison_mode::best);
    CHECK(rank_of(inst, 0, 1) == 1);
    CHECK(rank_of(inst, 1, 0) == 1);
    CHECK(rank_of(inst, 2, 3) == 1);
    CHECK(rank_of(inst, 3, 4) == 1);
    CHECK(rank_of(inst, 4, 2) == 1);
    CHECK(rank_of(inst, 4, 0) == 2);
    CHECK(flat(inst.prefs.list_of(3)) == std::vector<player_id>{4, 0, 1, 2});

    auto three = poa_instance_binpack({{2, 2, 2}, 3});
    CHECK(three.rooms == room_spec({3, 3}));
    CHECK_FALSE(find_unanimous_best(three).has_value());

    CHECK_THROWS_AS(poa_instance_binpack({{1, 2}, 3}), precondition_error);
    CHECK_THROWS_AS(poa_instance_binpack({{2, 2}, 3}), precondition_error);
    CHECK_THROWS_AS(poa_instance_binpack({{2, 2}, 1}), precondition_error);
    CHECK_THROWS_AS(poa_instance_binpack({{6000, 6000}, 6000}), precondition_error);
}

TEST_CASE("two-level tie constructions") {
    auto d = arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    auto best = poa_instance_ties_best(d);
    CHECK(best.mode == comparison_mode::best);
    CHECK_FALSE(best.prefs.strict());
    CHECK(rank_of(best, 0, 1) == 1);
    CHECK(rank_of(best, 0, 2) == 2);
    CHECK(find_unanimous_best(best).has_value());

    auto worst = poa_instance_ties_worst(graph_from_mask(6, 0x7FFF));
    CHECK(worst.mode == comparison_mode::worst);
    CHECK(worst.prefs.max_rank(0) == 1);
    CHECK(find_unanimous_best(worst).has_value());

    auto c6 = poa_instance_ties_worst(edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}));
    CHECK(rank_of(c6, 0, 3) == 2);
    CHECK_FALSE(find_unanimous_best(c6).has_value());

    CHECK_THROWS_AS(poa_instance_ties_worst(edges(3, {{0, 1}, {1, 2}})), precondition_error);
    CHECK_THROWS_AS(poa_instance_ties_best(arcs(3, {{0, 1}, {1, 2}})), precondition_error);

    std::mt19937_64 rng(33);
    for (int round = 0; round < 20; ++round) {
        auto dg = random_precondition_digraph(rng, 9, round % 2 == 0);
        CHECK(find_unanimous_best(poa_instance_ties_best(dg)).has_value() == directed_triangle_cover(dg).has_value());
    }
}

TEST_CASE("matching gadget layout") {
    hypergraph3 h{2, 2, 2, {}};
    h.add_edge(0, 1, 1);
    h.add_edge(1, 0, 0);
    auto g = dtc_from_3dm(h);
    CHECK(g.graph.vertex_count() == 6 + 18);
    CHECK(g.graph.arc_count() == 42);
    CHECK(hypergraph_vertex(h, 0, 1) == 1);
    CHECK(hypergraph_vertex(h, 1, 0) == 2);
    CHECK(hypergraph_vertex(h, 2, 1) == 5);
    CHECK(gadget_vertex(h, 0, gadget_role::a) == 6);
    CHECK(gadget_vertex(h, 1, gadget_role::w2) == 23);
    CHECK(g.origin[3].hyperedge == -1);
    CHECK(g.origin[3].vertex == 3);
    CHECK(g.origin[16].hyperedge == 1);
    CHECK(g.origin[16].role == gadget_role::b);
    CHECK_THROWS_AS(gadget_vertex(h, 0, gadget_role::original), std::invalid_argument);
    CHECK_THROWS_AS(hypergraph_vertex(h, 3, 0), std::invalid_argument);

    // black triangles of edge 0 touch u=0, v=1 (vertex 3) and w=1 (vertex 5)
    auto black = gadget_black_triangles(h, 0);
    std::set<int> originals;
    for (const auto& t : black) {
        for (int x : t) {
            if (x < 6) originals.insert(x);
        }
    }
    CHECK(originals == std::set<int>{0, 3, 5});
    for (const auto& t : gadget_gray_triangles(h, 0)) {
        for (int x : t) CHECK(x >= 6);
    }
    CHECK(directed_triangle_cover(g.graph).has_value());
    CHECK(perfect_3dm(h).has_value());
}
