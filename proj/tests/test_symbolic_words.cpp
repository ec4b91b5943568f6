#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tcs/family.hpp"
#include "tcs/symbolic_words.hpp"
#include "tcs/tree.hpp"

using namespace tcs;

namespace {

struct LadderContext {
    FamilyPtr fam = make_family("ladder");
    RootedTree tree;
    ChordIndex idx;
    ChordRay ray;

    explicit LadderContext(int depth = 25) {
        tree = build_tree(*fam, depth);
        idx = chord_index(*fam, fam->ball(depth), tree);
        ray = make_canonical_ray(*fam, idx, 0, depth + 5);
    }
};

Letter fwd(int k) { return {k, true}; }
Letter bwd(int k) { return {k, false}; }

}  // namespace

TEST_CASE("ray construction and certificates") {
    LadderContext ctx;
    CHECK(ctx.ray.length() == 25);
    CHECK(validate_ray(*ctx.fam, ctx.ray, 6));

    auto dl = make_family("double_ladder");
    RootedTree t = build_tree(*dl, 8);
    ChordIndex idx = chord_index(*dl, dl->ball(8), t);
    for (int branch : {0, 1}) {
        ChordRay ray = make_canonical_ray(*dl, idx, branch, 12);
        CHECK(ray.length() >= 7);
        CHECK(validate_ray(*dl, ray, 5));
    }
    // A ray whose witnesses sit on the wrong side fails its certificate.
    ChordRay fake = make_canonical_ray(*dl, idx, 0, 12);
    for (auto& v : fake.witness_points) v = DoubleLadderFamily::vp(-2);
    CHECK_FALSE(validate_ray(*dl, fake, 5));
}

TEST_CASE("restriction of symbolic words unfolds atoms in order") {
    LadderContext ctx;
    SymbolicWord wrho = ray_loop_word(ctx.ray);
    SymbolicWord fig = out_and_back_word(ctx.ray);

    CHECK(restrict_word(wrho, {0, 1}) == FiniteWord{fwd(0), fwd(1), bwd(0), bwd(1)});
    CHECK(restrict_prefix(fig, 2) == FiniteWord{fwd(0), fwd(1), fwd(2), bwd(2), bwd(1), bwd(0)});
    CHECK(restrict_word(fig, {}).empty());
    CHECK(restrict_word(embed_singles(ctx.ray, {fwd(3), bwd(5)}), {3, 4}) == FiniteWord{fwd(3)});

    // Asking beyond the built ray is an error, not a truncation.
    ChordRay shorty = ctx.ray;
    shorty.chord_indices.resize(3);
    shorty.witness_points.resize(3);
    SymbolicWord w(shorty, {RayAtom{true, 0, true}});
    CHECK_THROWS(restrict_prefix(w, 10));
}

TEST_CASE("equivalence via reduced prefix restrictions") {
    LadderContext ctx;
    SymbolicWord fig = out_and_back_word(ctx.ray);
    SymbolicWord wrho = ray_loop_word(ctx.ray);
    SymbolicWord empty(ctx.ray, {});

    SECTION("the out-and-back word is indistinguishable from the empty word") {
        auto v = equivalent(fig, empty, 20);
        CHECK(v.equivalent);
        CHECK(v.depth == 20);
    }
    SECTION("the ray loop word is distinguished at n = 1") {
        // At n = 0 the restriction +0 -0 still cancels; from n = 1 on the
        // interleaved restriction is reduced and nonempty.
        auto v = equivalent(wrho, empty, 20);
        REQUIRE_FALSE(v.equivalent);
        CHECK(v.witness_depth == 1);
        CHECK(v.left == FiniteWord{fwd(0), fwd(1), bwd(0), bwd(1)});
        CHECK(v.right.empty());
    }
    SECTION("reflexivity") { CHECK(equivalent(fig, fig, 15).equivalent); }
}

TEST_CASE("depth-bounded reducedness") {
    LadderContext ctx;
    SECTION("the ray loop word is reduced: later chords shield each letter") {
        for (int depth : {2, 5, 10}) CHECK(is_reduced_symbolic(ray_loop_word(ctx.ray), depth));
    }
    SECTION("the out-and-back word is nowhere permanent") {
        auto v = is_reduced_symbolic(out_and_back_word(ctx.ray), 8);
        REQUIRE_FALSE(v.reduced);
        CHECK(v.position >= 0);
    }
    SECTION("single letters are reduced") {
        CHECK(is_reduced_symbolic(embed_singles(ctx.ray, {fwd(0)}), 10));
    }
}

TEST_CASE("inverse system elements") {
    LadderContext ctx;
    SECTION("the out-and-back word projects to the identity everywhere") {
        for (const FiniteWord& w : inverse_system_element(out_and_back_word(ctx.ray), 10))
            CHECK(w.empty());
    }
    SECTION("a single letter is a constant sequence from its level on") {
        auto seq = inverse_system_element(embed_singles(ctx.ray, {fwd(0)}), 6);
        for (const FiniteWord& w : seq) CHECK(w == FiniteWord{fwd(0)});
    }
    SECTION("the ray loop word has strictly growing reduced restrictions") {
        auto seq = inverse_system_element(ray_loop_word(ctx.ray), 8);
        CHECK(seq[0].empty());  // +0 -0 cancels
        for (int n = 1; n <= 8; ++n) CHECK(seq[n].size() == 2 * (n + 1));
    }
}

TEST_CASE("letter use bounds") {
    LadderContext ctx;
    SECTION("the ray loop word uses each letter at most once") {
        for (const auto& [l, b] : letter_use_bound(ray_loop_word(ctx.ray), 8)) {
            (void)l;
            CHECK(b == 1);
        }
    }
    SECTION("a doubled finite word uses letters twice") {
        FiniteWord u{fwd(0), fwd(2)};
        FiniteWord uu = u;
        uu.insert(uu.end(), u.begin(), u.end());
        auto bounds = letter_use_bound(embed_singles(ctx.ray, uu), 5);
        CHECK(bounds.at(fwd(0)) == 2);
        CHECK(bounds.at(fwd(2)) == 2);
    }
    SECTION("empty word") {
        CHECK(letter_use_bound(SymbolicWord(ctx.ray, {}), 5).empty());
    }
}

TEST_CASE("ascending interval counts") {
    LadderContext ctx;
    SymbolicWord wrho = ray_loop_word(ctx.ray);
    SECTION("the ray loop word scores one for every k") {
        for (int k = 0; k <= 10; ++k) {
            CHECK(n_plus(wrho, k) == 1);
            CHECK(n_plus(wrho.inverted(), k) == 0);
            CHECK(n_net(wrho, k) == 1);
        }
    }
    SECTION("finite words embedded as singles score zero") {
        SymbolicWord w = embed_singles(ctx.ray, {fwd(0), fwd(1), fwd(2), bwd(0)});
        for (int k = 0; k <= 5; ++k) CHECK(n_net(w, k) == 0);
    }
    SECTION("the out-and-back word scores n+ = 1 but is not reduced") {
        SymbolicWord fig = out_and_back_word(ctx.ray);
        CHECK(n_plus(fig, 0) == 1);
        CHECK(n_net(fig, 0) == 0);  // it coincides with its own inverse word
        CHECK_FALSE(is_reduced_symbolic(fig, 6).reduced);
    }
    SECTION("start offsets gate the count") {
        SymbolicWord late(ctx.ray, {RayAtom{true, 4, true}});
        CHECK(n_plus(late, 2) == 0);
        CHECK(n_plus(late, 4) == 1);
        CHECK(n_plus(late, 9) == 1);
    }
    SECTION("a single letter continued by an ascending atom is one interval") {
        SymbolicWord seam(ctx.ray, {SymAtom(fwd(2)), SymAtom(RayAtom{true, 3, true})});
        CHECK(n_plus(seam, 2) == 1);  // the seam run e_{i_2} then the tail
        CHECK(n_plus(seam, 3) == 1);  // the atom tail alone
        CHECK(n_plus(seam, 1) == 0);
        SymbolicWord gap(ctx.ray, {SymAtom(fwd(2)), SymAtom(RayAtom{true, 4, true})});
        CHECK(n_plus(gap, 2) == 0);  // offsets must be consecutive
        SymbolicWord desc_seeded(ctx.ray,
                                 {SymAtom(RayAtom{false, 2, true}), SymAtom(RayAtom{true, 3, true})});
        CHECK(n_plus(desc_seeded, 2) == 1);  // the descending atom's last letter opens the run
    }
}

TEST_CASE("interval additivity past the split threshold") {
    LadderContext ctx;
    std::mt19937_64 rng(11);
    auto random_piece = [&](bool allow_empty) {
        std::vector<SymAtom> atoms;
        int n = static_cast<int>(rng() % 3) + (allow_empty ? 0 : 1);
        for (int i = 0; i < n; ++i) {
            switch (rng() % 3) {
                case 0:
                    atoms.emplace_back(Letter{static_cast<int>(rng() % 6), rng() % 2 == 0});
                    break;
                case 1:
                    atoms.emplace_back(RayAtom{true, static_cast<int>(rng() % 4), rng() % 2 == 0});
                    break;
                default:
                    atoms.emplace_back(RayAtom{false, static_cast<int>(rng() % 4), rng() % 2 == 0});
                    break;
            }
        }
        return atoms;
    };
    for (int trial = 0; trial < 200; ++trial) {
        // w1 ends in a single letter (or is empty); w2 arbitrary.
        std::vector<SymAtom> a1 = random_piece(true);
        if (!a1.empty() || rng() % 2)
            a1.emplace_back(Letter{static_cast<int>(rng() % 6), rng() % 2 == 0});
        SymbolicWord w1(ctx.ray, a1);
        SymbolicWord w2(ctx.ray, random_piece(true));
        SymbolicWord w = concat(w1, w2);
        int k = subdivide_threshold(w1);
        for (int l = k; l <= k + 8; ++l)
            CHECK(n_net(w, l) == n_net(w1, l) + n_net(w2, l));
    }
    SECTION("threshold values follow the last letter") {
        SymbolicWord endsingle(ctx.ray, {SymAtom(Letter{3, true})});
        CHECK(subdivide_threshold(endsingle) == 4);
        SymbolicWord endasc(ctx.ray, {SymAtom(RayAtom{true, 0, true})});
        CHECK(subdivide_threshold(endasc) == 0);
        SymbolicWord enddesc(ctx.ray, {SymAtom(RayAtom{false, 2, false})});
        CHECK(subdivide_threshold(enddesc) == 3);
        CHECK(subdivide_threshold(SymbolicWord(ctx.ray, {})) == 0);
    }
}

TEST_CASE("three-term identity for junction splits") {
    // On finite words every interval count vanishes, so the identity is
    // immediate; the content is that the split pieces recombine exactly.
    LadderContext ctx;
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        FiniteWord w2, w0;
        while (static_cast<int>(w2.size()) < 6) {
            Letter l{static_cast<int>(rng() % 4), rng() % 2 == 0};
            if (w2.empty() || l != w2.back().inverse()) w2.push_back(l);
        }
        while (static_cast<int>(w0.size()) < 6) {
            Letter l{static_cast<int>(rng() % 4), rng() % 2 == 0};
            if (w0.empty() || l != w0.back().inverse()) w0.push_back(l);
        }
        auto s = cancellation_split(w2, w0);
        FiniteWord w20 = multiply(w2, w0);
        for (int k = 0; k <= 4; ++k) {
            auto embed = [&](const FiniteWord& u) { return embed_singles(ctx.ray, u); };
            long long lhs = n_net(embed(w2), k) + n_net(embed(w0), k) - n_net(embed(w20), k);
            CHECK(lhs == 0);
        }
        // The split pieces lift to symbolic words whose interval counts
        // also balance: w2 = left·cancelled, w0 = cancelled^- · right.
        SymbolicWord left = embed_singles(ctx.ray, s.left);
        SymbolicWord mid = embed_singles(ctx.ray, s.cancelled);
        SymbolicWord right = embed_singles(ctx.ray, s.right);
        for (int k = 0; k <= 4; ++k) {
            CHECK(n_net(concat(left, mid), k) == n_net(left, k) + n_net(mid, k));
            CHECK(n_net(concat(mid.inverted(), right), k) ==
                  -n_net(mid, k) + n_net(right, k));
        }
    }
}
