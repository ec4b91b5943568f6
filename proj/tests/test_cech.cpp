#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tcs/cech.hpp"
#include "tcs/family.hpp"
#include "tcs/membership.hpp"
#include "tcs/snf.hpp"
#include "tcs/tree.hpp"

using namespace tcs;

TEST_CASE("smith normal form") {
    SECTION("identity and zero") {
        auto r = smith_normal_form(identity_matrix(3));
        CHECK(r.rank == 3);
        CHECK(r.diagonal == std::vector<long long>{1, 1, 1});
        auto z = smith_normal_form(IntMatrix(2, std::vector<long long>(2, 0)));
        CHECK(z.rank == 0);
    }
    SECTION("diag(2,3) normalizes to diag(1,6)") {
        auto r = smith_normal_form({{2, 0}, {0, 3}});
        CHECK(r.diagonal == std::vector<long long>{1, 6});
    }
    SECTION("U*A*V = D with a divisibility chain, rank matching the oracle") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 60; ++trial) {
            IntMatrix a(6, std::vector<long long>(6));
            for (auto& row : a)
                for (auto& v : row) v = static_cast<long long>(rng() % 11) - 5;
            auto r = smith_normal_form(a);
            CHECK(r.rank == bareiss_rank(a));
            IntMatrix d = matmul(matmul(r.u, a), r.v);
            for (std::size_t i = 0; i < d.size(); ++i)
                for (std::size_t j = 0; j < d[i].size(); ++j)
                    CHECK(d[i][j] == (i == j ? r.diagonal[i] : 0));
            for (std::size_t i = 0; i + 1 < r.diagonal.size(); ++i) {
                if (r.diagonal[i + 1] == 0) continue;
                REQUIRE(r.diagonal[i] != 0);
                CHECK(r.diagonal[i + 1] % r.diagonal[i] == 0);
            }
        }
    }
}

TEST_CASE("contraction graphs") {
    SECTION("the ladder beyond a short subtree contracts to one point") {
        auto lad = make_family("ladder");
        RootedTree t = build_tree(*lad, 5, TreeKind::normal);
        auto cg = contraction_graph(*lad, t, 1, 5);
        CHECK(cg.contracted_components.size() == 1);
        CHECK(is_connected(cg.graph));
        CHECK(h1_rank(cg.graph) == 1);
    }
    SECTION("a finite graph beyond its diameter is unchanged") {
        auto k4 = make_family("finite:K4");
        RootedTree t = build_tree(*k4, 5);
        auto cg = contraction_graph(*k4, t, 7, 9);
        CHECK(cg.contracted_components.empty());
        CHECK(cg.graph.vertex_count() == 4);
        CHECK(cg.graph.edge_count() == 6);
    }
    SECTION("removing the double-ladder root leaves one component") {
        // v'_0 bridges the two sides of ball - {v_0}.
        auto dl = make_family("double_ladder");
        RootedTree t = build_tree(*dl, 4, TreeKind::normal);
        auto cg = contraction_graph(*dl, t, 0, 4);
        CHECK(cg.contracted_components.size() == 1);
    }
    SECTION("too shallow a ball is an error") {
        auto lad = make_family("ladder");
        RootedTree t = build_tree(*lad, 3, TreeKind::normal);
        CHECK_THROWS(contraction_graph(*lad, t, 2, 3));
    }
}

TEST_CASE("h1_rank") {
    CHECK(h1_rank(named_finite_graph("P3")) == 0);
    CHECK(h1_rank(named_finite_graph("C5")) == 1);
    CHECK_THROWS(h1_rank(FiniteGraph({0, 1}, {})));
    auto lad = make_family("ladder");
    RootedTree t = build_tree(*lad, 6, TreeKind::normal);
    auto idx = chord_index(*lad, lad->ball(6), t);
    auto cg = contraction_graph(*lad, t, 2, 6);
    CHECK(h1_rank(cg.graph) ==
          static_cast<int>(chords_meeting(lad->ball(6), t, idx, 2).size()));
}

TEST_CASE("covers") {
    SECTION("a single vertex graph is covered by one star") {
        auto k1 = make_family("finite:K1");
        RootedTree t = build_tree(*k1, 1);
        Cover c = build_cover(*k1, t, 0, 2, 1);
        CHECK(c.sets.size() == 1);
    }
    SECTION("a path with everything inside: stars and segment chains") {
        auto k2 = make_family("finite:K2");
        RootedTree t = build_tree(*k2, 2);
        Cover c = build_cover(*k2, t, 1, 2, 2);
        CHECK(c.sets.size() == 4);  // 2 stars + 2 segments on the single edge
        auto b = betti1(nerve(c.sets));
        CHECK(b.betti == 0);
    }
    SECTION("the ladder cover has one end set") {
        auto lad = make_family("ladder");
        RootedTree t = build_tree(*lad, 4, TreeKind::normal);
        Cover c = build_cover(*lad, t, 1, 2, 4);
        int blobs = 0;
        for (const auto& label : c.labels)
            if (label.rfind("end-component:", 0) == 0) ++blobs;
        CHECK(blobs == 1);
    }
    SECTION("the cover covers: every model cell lies in some set") {
        auto lad = make_family("ladder");
        RootedTree t = build_tree(*lad, 4, TreeKind::normal);
        int n = 1, m = 2, depth = 4;
        Cover c = build_cover(*lad, t, n, m, depth);
        const FiniteGraph& g = lad->ball(depth);
        std::set<Cell> covered;
        for (const auto& s : c.sets) covered.insert(s.begin(), s.end());
        std::set<VertexId> tn = subtree_vertices(g, t, n);
        for (VertexId v : g.vertices()) CHECK(covered.count(vertex_cell(v)) == 1);
        for (const EdgeRec& e : g.edges()) {
            bool meets = tn.count(e.tail) || tn.count(e.head);
            for (int i = 1; i <= 2 * m + 1; ++i) {
                INFO("edge " << e.id << " atom " << i << " meets " << meets);
                CHECK(covered.count(atom_cell(e.id, i)) == (meets ? 1u : 1u));
            }
        }
    }
}

TEST_CASE("nerves of hand-built covers") {
    SECTION("two disjoint sets give two vertices and no edge") {
        SimplicialComplex k = nerve({{vertex_cell(0)}, {vertex_cell(1)}});
        CHECK(k.vertex_count == 2);
        CHECK(k.edges.empty());
    }
    SECTION("three sets with a common point give a filled triangle") {
        Cell shared = vertex_cell(0);
        SimplicialComplex k =
            nerve({{shared, vertex_cell(1)}, {shared, vertex_cell(2)}, {shared, vertex_cell(3)}});
        CHECK(k.edges.size() == 3);
        REQUIRE(k.triangles.size() == 1);
        CHECK(betti1(k).betti == 0);
    }
    SECTION("four arcs overlapping cyclically give a hollow square") {
        auto arc = [](int a, int b) { return std::set<Cell>{vertex_cell(a), vertex_cell(b)}; };
        SimplicialComplex k = nerve({arc(0, 1), arc(1, 2), arc(2, 3), arc(3, 0)});
        CHECK(k.edges.size() == 4);
        CHECK(k.triangles.empty());
        CHECK(betti1(k).betti == 1);
    }
    SECTION("boundary matrices compose to zero") {
        Cell shared = vertex_cell(0);
        SimplicialComplex k =
            nerve({{shared, vertex_cell(1)}, {shared, vertex_cell(2)}, {shared, vertex_cell(3)}});
        IntMatrix prod = matmul(k.boundary1(), k.boundary2());
        for (const auto& row : prod)
            for (long long v : row) CHECK(v == 0);
    }
}

TEST_CASE("betti numbers of simple complexes") {
    SimplicialComplex ring;
    ring.vertex_count = 3;
    ring.edges = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(betti1(ring).betti == 1);
    SimplicialComplex filled = ring;
    filled.triangles = {{0, 1, 2}};
    CHECK(betti1(filled).betti == 0);
}

TEST_CASE("nerve rank equals contraction rank equals chords meeting the subtree") {
    for (const char* name : {"ladder", "double_ladder", "binary_tree_doubled"}) {
        auto fam = make_family(name);
        for (int n : {0, 2, 3}) {
            int depth = n + 2;
            RootedTree t = build_tree(*fam, depth, TreeKind::normal);
            const FiniteGraph& g = fam->ball(depth);
            ChordIndex idx = chord_index(*fam, g, t);
            int rank = h1_rank(contraction_graph(*fam, t, n, depth).graph);
            int meet = static_cast<int>(chords_meeting(g, t, idx, n).size());
            for (int m : {2, 3}) {
                auto b = betti1(nerve(build_cover(*fam, t, n, m, depth).sets));
                INFO(name << " n=" << n << " m=" << m);
                CHECK(b.betti == rank);
                CHECK(rank == meet);
                CHECK(b.torsion.empty());
            }
        }
    }
}

TEST_CASE("restriction maps on chord coordinates") {
    auto lad = make_family("ladder");
    int depth = 7;
    const FiniteGraph& g = lad->ball(depth);
    RootedTree t = build_tree(*lad, depth, TreeKind::normal);
    ChordIndex idx = chord_index(*lad, g, t);

    SECTION("kept and dropped chords") {
        // A chord fully inside T_n survives; one meeting only deeper
        // levels is dropped.
        std::map<int, long long> unit{{idx.size() - 1, 1}};
        auto low = restrict_coordinates(unit, g, t, idx, 0);
        CHECK(low.empty());
        auto high = restrict_coordinates(unit, g, t, idx, 2 * depth);
        CHECK(high == unit);
        CHECK(restrict_coordinates({}, g, t, idx, 3).empty());
    }
    SECTION("projections compose and assemble into a compatible family") {
        std::mt19937_64 rng(51);
        std::map<int, long long> coords;
        for (int k = 0; k < idx.size(); ++k)
            coords[k] = static_cast<long long>(rng() % 9) - 4;
        for (int n = 0; n + 1 <= 6; ++n) {
            auto two_step = restrict_coordinates(
                restrict_coordinates(coords, g, t, idx, n + 1), g, t, idx, n);
            CHECK(two_step == restrict_coordinates(coords, g, t, idx, n));
        }
        auto levels = inverse_limit_element(coords, g, t, idx, 6);
        CHECK(levels.size() == 7);
    }
    SECTION("restriction commutes with taking chord coordinates") {
        // Dropping a function's deep chords then reading coordinates is
        // reading coordinates then projecting.
        EdgeFunction fc = fundamental_circuit(g, t, idx, 1) +
                          fundamental_circuit(g, t, idx, idx.size() - 1) * 2;
        auto coords = chord_coordinates(fc, idx);
        for (int n : {0, 1, 3}) {
            auto projected = restrict_coordinates(coords, g, t, idx, n);
            std::vector<int> keep = chords_meeting(g, t, idx, n);
            std::set<int> keep_set(keep.begin(), keep.end());
            for (const auto& [k, v] : coords) {
                if (keep_set.count(k))
                    CHECK(projected.at(k) == v);
                else
                    CHECK(projected.count(k) == 0);
            }
        }
    }
}
