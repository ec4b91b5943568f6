#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tcs/chains.hpp"
#include "tcs/family.hpp"
#include "tcs/standard_chains.hpp"
#include "tcs/tree.hpp"
#include "tcs/walks.hpp"

using namespace tcs;

TEST_CASE("boundary of chains") {
    auto dl = make_family("double_ladder");
    const FiniteGraph& g = dl->ball(4);

    Walk open = tree_path_walk(g, build_tree(*dl, 4), DoubleLadderFamily::v(0),
                               DoubleLadderFamily::v(2));
    Chain1 c;
    c.add(1, open);
    auto b = boundary(g, c);
    REQUIRE(b.size() == 2);
    CHECK(b.at(DoubleLadderFamily::v(0)) == -1);
    CHECK(b.at(DoubleLadderFamily::v(2)) == 1);

    CHECK(boundary(g, double_ladder_square(1)).empty());
    Chain1 scaled;
    scaled.add(-3, open);
    CHECK(boundary(g, scaled).at(DoubleLadderFamily::v(0)) == 3);
}

TEST_CASE("the edge image of chains") {
    auto dl = make_family("double_ladder");
    const FiniteGraph& g = dl->ball(7);

    SECTION("the square family images to the stile difference") {
        EdgeFunction f = f_hom(g, double_ladder_square_family(6));
        for (int n = -6; n <= 5; ++n) {
            CHECK(f.natural(DoubleLadderFamily::e_edge(n)) == 1);
            CHECK(f.natural(DoubleLadderFamily::ep_edge(n)) == -1);
        }
        for (int n = -6; n <= 6; ++n) CHECK(f.natural(DoubleLadderFamily::f_edge(n)) == 0);
    }
    SECTION("the ray loop chain maps to zero") {
        auto lad = make_family("ladder");
        const FiniteGraph& gl = lad->ball(5);
        RootedTree t = build_tree(*lad, 5);
        ChordIndex idx = chord_index(*lad, gl, t);
        ChordRay ray = make_canonical_ray(*lad, idx, 0, 8);
        Chain1 c;
        c.add(1, rho_walk(*lad, 5, t, idx, ray).walk);
        CHECK(f_hom(gl, c).is_zero_on(gl));
    }
    SECTION("the empty chain maps to zero, open chains are rejected") {
        CHECK(f_hom(g, Chain1{}).values().empty());
        Chain1 open;
        open.add(1, Walk{DoubleLadderFamily::v(0), {{DoubleLadderFamily::e_edge(0), true}}});
        CHECK_THROWS(f_hom(g, open));
    }
    SECTION("additivity") {
        Chain1 a = double_ladder_square(0);
        Chain1 b = double_ladder_square(1);
        EdgeFunction fa = f_hom(g, a), fb = f_hom(g, b), fab = f_hom(g, a + b);
        CHECK(fab.equals_on(g, fa + fb));
    }
}

TEST_CASE("subdivision into single-edge passes") {
    auto dl = make_family("double_ladder");
    const FiniteGraph& g = dl->ball(4);

    SECTION("a closed 4-walk becomes four passes via three splits") {
        Chain1 square = double_ladder_square(0);
        auto [singles, cert] = subdivide_chain(g, square);
        CHECK(singles.terms.size() == 4);
        CHECK(cert.items.size() == 3);
        for (const auto& [coeff, w] : singles.terms) {
            (void)coeff;
            CHECK(w.steps.size() == 1);
        }
        CHECK(replay_certificate(g, square, cert, singles));
        // Subdivision preserves both the boundary and the edge image.
        CHECK(boundary(g, singles) == boundary(g, square));
        CHECK(f_hom(g, singles).equals_on(g, f_hom(g, square)));
    }
    SECTION("single-edge chains are fixed points") {
        Chain1 c;
        c.add(2, Walk{DoubleLadderFamily::v(0), {{DoubleLadderFamily::e_edge(0), true}}});
        auto [out, cert] = subdivide_chain(g, c);
        CHECK(out.terms.size() == 1);
        CHECK(cert.items.empty());
    }
    SECTION("an immediate backtrack splits into opposite passes") {
        Walk w{DoubleLadderFamily::v(0),
               {{DoubleLadderFamily::e_edge(0), true}, {DoubleLadderFamily::e_edge(0), false}}};
        Chain1 c;
        c.add(1, w);
        auto [out, cert] = subdivide_chain(g, c);
        REQUIRE(out.terms.size() == 2);
        CHECK(out.terms[0].second.steps[0] == OrientedEdge{DoubleLadderFamily::e_edge(0), true});
        CHECK(out.terms[1].second.steps[0] == OrientedEdge{DoubleLadderFamily::e_edge(0), false});
        CHECK(replay_certificate(g, c, cert, out));
    }
}

TEST_CASE("boundary certificates") {
    auto dl = make_family("double_ladder");
    const FiniteGraph& g = dl->ball(4);
    Chain1 empty;

    SECTION("a chain minus itself certifies and replays to nothing") {
        Chain1 z = double_ladder_square(0);
        Chain1 minus;
        minus.add(-1, z.terms[0].second);
        Chain1 both = z + minus;
        auto res = certify_boundary(g, both);
        REQUIRE(std::holds_alternative<BoundaryCertificate>(res));
        CHECK(replay_certificate(g, both, std::get<BoundaryCertificate>(res), empty));
    }

    SECTION("the same circuit from two base vertices bounds") {
        Walk sq = double_ladder_square(0).terms[0].second;
        Walk rebased{DoubleLadderFamily::v(1),
                     {sq.steps[1], sq.steps[2], sq.steps[3], sq.steps[0]}};
        rebased.validate(g);
        Chain1 c;
        c.add(1, sq);
        c.add(-1, rebased);
        auto res = certify_boundary(g, c);
        REQUIRE(std::holds_alternative<BoundaryCertificate>(res));
        CHECK(replay_certificate(g, c, std::get<BoundaryCertificate>(res), empty));
    }

    SECTION("a single circuit walk is refused with a unit witness") {
        Chain1 c = double_ladder_square(2);
        auto res = certify_boundary(g, c);
        REQUIRE(std::holds_alternative<NotABoundary>(res));
        auto nb = std::get<NotABoundary>(res);
        CHECK((nb.value == 1 || nb.value == -1));
        CHECK(f_hom(g, c).natural(nb.edge) == nb.value);
    }

    SECTION("certificates do not replay against tampered targets") {
        Chain1 z = double_ladder_square(0);
        Chain1 both = z;
        Chain1 minus;
        minus.add(-1, z.terms[0].second);
        both = both + minus;
        auto res = certify_boundary(g, both);
        auto cert = std::get<BoundaryCertificate>(res);
        Chain1 wrong;
        wrong.add(1, z.terms[0].second);
        CHECK_FALSE(replay_certificate(g, both, cert, wrong));
        // Damaging an item invalidates the replay arithmetic.
        if (!cert.items.empty()) {
            cert.items.front().coeff += 1;
            CHECK_FALSE(replay_certificate(g, both, cert, empty));
        }
    }

    SECTION("stationary walks are absorbed by empty-loop splices") {
        Walk point{DoubleLadderFamily::v(0), {}};
        Chain1 c;
        c.add(2, point);
        auto res = certify_boundary(g, c);
        REQUIRE(std::holds_alternative<BoundaryCertificate>(res));
        CHECK(replay_certificate(g, c, std::get<BoundaryCertificate>(res), empty));
    }

    SECTION("open chains are a precondition violation") {
        Chain1 open;
        open.add(1, Walk{DoubleLadderFamily::v(0), {{DoubleLadderFamily::e_edge(0), true}}});
        CHECK_THROWS(certify_boundary(g, open));
    }
}

TEST_CASE("image well-definedness under certified boundaries") {
    auto dl = make_family("double_ladder");
    const FiniteGraph& g = dl->ball(4);
    Chain1 z = double_ladder_square(0);
    // b: a certified boundary (square minus its rebased copy).
    Walk sq = double_ladder_square(1).terms[0].second;
    Walk rebased{DoubleLadderFamily::v(2), {sq.steps[1], sq.steps[2], sq.steps[3], sq.steps[0]}};
    Chain1 b;
    b.add(1, sq);
    b.add(-1, rebased);
    REQUIRE(std::holds_alternative<BoundaryCertificate>(certify_boundary(g, b)));
    CHECK(f_hom(g, z + b).equals_on(g, f_hom(g, z)));
}

TEST_CASE("standard representation validation") {
    auto dl = make_family("double_ladder");
    const FiniteGraph& g = dl->ball(7);

    SECTION("the square family is a valid representation") {
        CHECK(validate_standard_representation(g, double_ladder_square_family(6), 20).valid());
    }
    SECTION("the empty family is valid") {
        SymbolicChain sc;
        sc.term = [](long long) { return Chain1{}; };
        sc.support = [](VertexId) { return std::vector<long long>{}; };
        sc.index_pool = [](int) { return std::vector<long long>{}; };
        CHECK(validate_standard_representation(g, sc, 10).valid());
    }
    SECTION("the telescoping line family fails local finiteness at the origin") {
        auto zl = make_family("zline");
        auto v = validate_standard_representation(zl->ball(25), line_cancelling_boundary_family(),
                                                  20);
        REQUIRE_FALSE(v.valid());
        CHECK(v.kind == RepresentationVerdict::Kind::not_locally_finite);
        CHECK(v.vertex == 0);
        // The growth trace climbs with the sample budget.
        REQUIRE(v.growth.size() >= 3);
        CHECK(v.growth.back() > v.growth.front());
    }
    SECTION("a non-cycle term is reported by index") {
        SymbolicChain sc = double_ladder_square_family(6);
        sc.term = [](long long j) {
            Chain1 c = double_ladder_square(j);
            if (j == 2) c.terms[0].second.steps.pop_back();  // break closure
            return c;
        };
        auto v = validate_standard_representation(g, sc, 10);
        REQUIRE_FALSE(v.valid());
        CHECK(v.kind == RepresentationVerdict::Kind::not_cycles);
        CHECK(v.index == 2);
    }
    SECTION("a support hole is reported as a violation") {
        SymbolicChain sc = double_ladder_square_family(6);
        sc.support = [](VertexId x) {
            long long n = DoubleLadderFamily::index_of_vertex(x);
            return std::vector<long long>{n};  // drops the n-1 contributor
        };
        auto v = validate_standard_representation(g, sc, 10);
        REQUIRE_FALSE(v.valid());
        CHECK(v.kind == RepresentationVerdict::Kind::support_violation);
    }
}

TEST_CASE("cyclomatic oracle") {
    CHECK(h1_dimension_f2(named_finite_graph("K1")) == 0);
    CHECK(h1_dimension_f2(named_finite_graph("P3")) == 0);
    CHECK(h1_dimension_f2(named_finite_graph("C5")) == 1);
    CHECK(h1_dimension_f2(named_finite_graph("K4")) == 3);
    FiniteGraph disconnected({0, 1}, {});
    CHECK_THROWS(h1_dimension_f2(disconnected));
}
