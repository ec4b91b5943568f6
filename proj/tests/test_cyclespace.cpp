#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tcs/cuts.hpp"
#include "tcs/edge_function.hpp"
#include "tcs/family.hpp"
#include "tcs/membership.hpp"
#include "tcs/standard_chains.hpp"
#include "tcs/tree.hpp"

using namespace tcs;

namespace {

// The oriented circuit function of the double-ladder square at index n:
// +e_n, +f_{n+1}, -e'_n, -f_n.
EdgeFunction square_circuit(long long n) {
    using F = DoubleLadderFamily;
    return EdgeFunction::finite({{F::e_edge(n), 1},
                                 {F::f_edge(n + 1), 1},
                                 {F::ep_edge(n), -1},
                                 {F::f_edge(n), -1}});
}

ThinFamily square_thin_family() {
    ThinFamily tf;
    tf.term = [](long long n) { return square_circuit(n); };
    tf.support = [](EdgeId e) -> std::vector<long long> {
        EdgeTag tag = DoubleLadderFamily().edge_tag(e);
        if (tag.kind == 'f') return {tag.index - 1, tag.index};
        return {tag.index};
    };
    for (long long n = -12; n <= 12; ++n) tf.sample_pool.push_back(n);
    return tf;
}

}  // namespace

TEST_CASE("edge functions are antisymmetric by construction") {
    EdgeFunction f = EdgeFunction::finite({{3, 5}});
    CHECK(f({3, true}) == 5);
    CHECK(f({3, false}) == -5);
    CHECK(f({4, true}) == 0);
}

TEST_CASE("thin sums") {
    auto dl = make_family("double_ladder");
    const FiniteGraph& g = dl->ball(5);

    SECTION("the square family sums to the stile difference") {
        EdgeFunction psi = thin_sum(square_thin_family(), g);
        EdgeFunction expect = named_edge_function(dl, "psi");
        CHECK(psi.equals_on(g, expect));
    }

    SECTION("empty and cancelling families") {
        ThinFamily empty;
        CHECK(thin_sum(empty).is_zero_on(g));
        ThinFamily opposite;
        opposite.finite_terms = {square_circuit(0), square_circuit(0) * -1};
        CHECK(thin_sum(opposite).is_zero_on(g));
    }

    SECTION("a wrong support declaration is an error, not a wrong sum") {
        ThinFamily bad = square_thin_family();
        bad.support = [](EdgeId e) -> std::vector<long long> {
            EdgeTag tag = DoubleLadderFamily().edge_tag(e);
            return {tag.index};  // misses the second rung contributor
        };
        CHECK_THROWS_AS(thin_sum(bad, g), ThinnessViolation);
    }
}

TEST_CASE("cut sums") {
    auto dl = make_family("double_ladder");
    RootedTree t = build_tree(*dl, 5);
    EdgeFunction phi = named_edge_function(dl, "stiles-forward");
    EdgeFunction psi = named_edge_function(dl, "psi");

    Cut rightward;
    rightward.edges = {{DoubleLadderFamily::e_edge(1), true},
                       {DoubleLadderFamily::ep_edge(1), true}};
    CHECK(cut_sum(phi, rightward) == 1);
    CHECK(cut_sum(psi, rightward) == 0);
    CHECK(cut_sum(phi, Cut{}) == 0);

    // Additivity in the function argument.
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        std::map<EdgeId, long long> a, b;
        for (const EdgeRec& e : dl->ball(3).edges()) {
            a[e.id] = static_cast<long long>(rng() % 7) - 3;
            b[e.id] = static_cast<long long>(rng() % 7) - 3;
        }
        EdgeFunction fa = EdgeFunction::finite(a), fb = EdgeFunction::finite(b);
        for (const Cut& c : tree_cuts(*dl, t, 5, 3))
            CHECK(cut_sum(fa + fb, c) == cut_sum(fa, c) + cut_sum(fb, c));
    }
}

TEST_CASE("membership by cuts") {
    auto dl = make_family("double_ladder");
    RootedTree t = build_tree(*dl, 6);

    SECTION("the one-way stile sum is rejected with a unit witness") {
        auto v = membership_by_cuts(named_edge_function(dl, "stiles-forward"), *dl, t, 6, 4);
        REQUIRE_FALSE(v.passes);
        CHECK(v.witness_sum == 1);
        CHECK(cut_sum(named_edge_function(dl, "stiles-forward"), *v.witness) == 1);
    }

    SECTION("the stile difference and the zero function pass") {
        CHECK(membership_by_cuts(named_edge_function(dl, "psi"), *dl, t, 6, 4).passes);
        CHECK(membership_by_cuts(EdgeFunction::zero(), *dl, t, 6, 4).passes);
    }

    SECTION("fundamental circuits pass at every depth") {
        auto lad = make_family("ladder");
        for (int depth : {4, 6}) {
            RootedTree tl = build_tree(*lad, depth);
            ChordIndex idx = chord_index(*lad, lad->ball(depth), tl);
            for (int k = 0; k < idx.size(); ++k) {
                EdgeFunction fc = fundamental_circuit(lad->ball(depth), tl, idx, k);
                CHECK(membership_by_cuts(fc, *lad, tl, depth, 3).passes);
            }
        }
    }
}

TEST_CASE("chord coordinates and reconstruction") {
    auto dl = make_family("double_ladder");
    const FiniteGraph& g = dl->ball(6);
    RootedTree t = build_tree(*dl, 6);
    ChordIndex idx = chord_index(*dl, g, t);

    SECTION("fundamental circuits have unit coordinates") {
        for (int k = 0; k < std::min(4, idx.size()); ++k) {
            auto coords = chord_coordinates(fundamental_circuit(g, t, idx, k), idx);
            REQUIRE(coords.size() == 1);
            CHECK(coords.at(k) == 1);
        }
        CHECK(chord_coordinates(EdgeFunction::zero(), idx).empty());
    }

    SECTION("psi reads off as -1 on every primed chord") {
        auto coords = chord_coordinates(named_edge_function(dl, "psi"), idx);
        REQUIRE(static_cast<int>(coords.size()) == idx.size());
        for (const auto& [k, v] : coords) {
            (void)k;
            CHECK(v == -1);
        }
    }

    SECTION("membership by reconstruction agrees with the cut test") {
        CHECK(membership_by_reconstruction(named_edge_function(dl, "psi"), *dl, 6).passes());
        auto v = membership_by_reconstruction(named_edge_function(dl, "stiles-forward"), *dl, 6);
        REQUIRE_FALSE(v.passes());
        CHECK(v.kind == ReconstructionVerdict::Kind::tree_edge_mismatch);
        CHECK(v.expected == 1);
        CHECK(v.reconstructed == 0);
        CHECK(dl->edge_tag(v.edge).kind == 'e');
    }

    SECTION("integer circuit combinations reconstruct exactly") {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 25; ++trial) {
            std::map<int, long long> coords;
            for (int k = 0; k < idx.size(); ++k)
                if (rng() % 2) coords[k] = static_cast<long long>(rng() % 9) - 4;
            EdgeFunction phi = reconstruct_from_chords(g, t, idx, coords);
            CHECK(membership_by_reconstruction(phi, *dl, 6).passes());
        }
    }
}

TEST_CASE("thinness of the circuit family is growth-checked, not assumed") {
    // On the ladder, take the tree consisting of both stiles joined by the
    // first rung; the chords are the remaining rungs, and every one of
    // their circuits runs through the first stile edges.  All-ones chord
    // coordinates then pile up on those edges, which the growth check
    // reports with its trace.
    auto lad = make_family("ladder");
    auto rail_tree = [&lad](int depth) {
        std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
        for (int k = 0; k <= depth; ++k) {
            if (k > 0) {
                parent[LadderFamily::u(k)] = {LadderFamily::u(k - 1), LadderFamily::t_edge(k - 1)};
                parent[LadderFamily::w(k)] = {LadderFamily::w(k - 1), LadderFamily::e_edge(k - 1)};
            }
        }
        parent[LadderFamily::w(0)] = {LadderFamily::u(0), LadderFamily::f_edge(0)};
        RootedTree t(LadderFamily::u(0), std::move(parent));
        t.validate(lad->ball(depth));
        return t;
    };
    EdgeFunction all_rungs = EdgeFunction::symbolic("all-rungs", [&lad](EdgeId e) {
        return lad->edge_tag(e).kind == 'f' && lad->edge_tag(e).index > 0 ? 1 : 0;
    });
    auto v = membership_by_reconstruction(all_rungs, *lad, 6, rail_tree);
    REQUIRE_FALSE(v.passes());
    CHECK(v.kind == ReconstructionVerdict::Kind::thinness);
    REQUIRE(v.growth.size() == 3);
    CHECK(v.growth[0] < v.growth[1]);
    CHECK(v.growth[1] < v.growth[2]);
}

TEST_CASE("oriented circuits are cut-orthogonal") {
    auto dl = make_family("double_ladder");
    RootedTree t = build_tree(*dl, 5);
    for (long long n = -3; n <= 3; ++n)
        for (const Cut& c : tree_cuts(*dl, t, 5, 3)) CHECK(cut_sum(square_circuit(n), c) == 0);
}

TEST_CASE("mod 2 projection") {
    EdgeFunction circ = square_circuit(0);
    CHECK(mod2(circ * 2).values().empty());
    auto ind = mod2(circ).values();
    CHECK(ind.size() == 4);
    for (const auto& [e, v] : ind) {
        (void)e;
        CHECK(v == 1);
    }
    auto dl = make_family("double_ladder");
    EdgeFunction psi2 = mod2(named_edge_function(dl, "psi"));
    for (const EdgeRec& e : dl->ball(4).edges()) {
        char kind = dl->edge_tag(e.id).kind;
        CHECK(psi2.natural(e.id) == (kind == 'f' ? 0 : 1));
    }
}
