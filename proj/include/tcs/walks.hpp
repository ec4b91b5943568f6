// Chord traces of walks, Euler tours, loop realization of chord
// coordinates, the ray loop, and homotopy move generators.

#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "tcs/edge_function.hpp"
#include "tcs/family.hpp"
#include "tcs/graph.hpp"
#include "tcs/symbolic_words.hpp"
#include "tcs/tree.hpp"
#include "tcs/words.hpp"

namespace tcs {

// The word of chord passes of a walk, in traversal order; tree edges and
// edges outside the chord enumeration are skipped.
inline FiniteWord trace(const Walk& w, const RootedTree& t, const ChordIndex& idx) {
    FiniteWord out;
    for (const OrientedEdge& s : w.steps) {
        if (t.is_tree_edge(s.edge)) continue;
        auto k = idx.index_of(s.edge);
        if (!k) continue;
        out.push_back({*k, s.forward});
    }
    return out;
}

// Closed walk from the root traversing every tree edge exactly once in
// each direction and nothing else; children are visited in id order.
inline Walk euler_tour(const FiniteGraph& g, const RootedTree& t) {
    std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> children;
    for (const auto& [v, pe] : t.parents()) children[pe.first].push_back({v, pe.second});
    for (auto& [v, cs] : children) std::sort(cs.begin(), cs.end());

    Walk w;
    w.start = t.root();
    // Iterative DFS over the tree.
    struct Frame {
        VertexId v;
        std::size_t next = 0;
    };
    std::vector<Frame> stack{{t.root(), 0}};
    while (!stack.empty()) {
        VertexId v = stack.back().v;
        auto it = children.find(v);
        if (it == children.end() || stack.back().next >= it->second.size()) {
            stack.pop_back();
            if (!stack.empty()) {
                // step back up to the parent
                EdgeId e = t.parent(v).second;
                w.steps.push_back({e, g.edge(e).tail == v});
            }
            continue;
        }
        auto [child, e] = it->second[stack.back().next++];
        w.steps.push_back({e, g.edge(e).tail == v});
        stack.push_back({child, 0});
    }
    return w;
}

// Euler tour with, at the first tour visit of each supported chord's base
// vertex (the chord's tail), |coeff| spliced copies of that chord's
// fundamental circuit walk, reversed for negative coefficients.  The net
// traversal of the result equals the chord-coordinate reconstruction.
inline Walk realize_as_loop(const FiniteGraph& g, const RootedTree& t, const ChordIndex& idx,
                            const std::map<int, long long>& coords) {
    struct Splice {
        long long count;
        Walk circuit;
    };
    std::map<VertexId, std::vector<Splice>> at;  // base vertex -> splices, chord order
    for (const auto& [k, c] : coords) {
        if (c == 0) continue;
        if (k < 0 || k >= idx.size())
            throw std::invalid_argument("chord coordinate outside the working ball");
        Walk circuit = fundamental_circuit_walk(g, t, idx, k);
        if (c < 0) circuit = reversed_walk(g, circuit);
        at[circuit.start].push_back({c < 0 ? -c : c, std::move(circuit)});
    }

    Walk tour = euler_tour(g, t);
    Walk out;
    out.start = tour.start;
    std::set<VertexId> pending;
    for (const auto& [v, s] : at) {
        (void)s;
        pending.insert(v);
    }
    for (std::size_t i = 0; i <= tour.steps.size(); ++i) {
        VertexId v = tour.vertex_at(g, i);
        if (pending.count(v)) {
            pending.erase(v);
            for (const Splice& sp : at[v])
                for (long long rep = 0; rep < sp.count; ++rep)
                    out.steps.insert(out.steps.end(), sp.circuit.steps.begin(),
                                     sp.circuit.steps.end());
        }
        if (i < tour.steps.size()) out.steps.push_back(tour.steps[i]);
    }
    if (!pending.empty())
        throw std::logic_error("euler tour missed a splice vertex");
    return out;
}

// ---------------------------------------------------------------------------
// The ray loop: traverse the ray chords forward in ascending order, return
// along the tree, traverse them backward in ascending order, return to the
// start.  Its trace is the ray loop word; every edge nets to zero.

struct RayLoop {
    Walk walk;
    SymbolicWord word;
};

inline RayLoop rho_walk(const LeveledFamily& fam, int depth, const RootedTree& t,
                        const ChordIndex& idx, const ChordRay& ray) {
    const FiniteGraph& g = fam.ball(depth);
    // Last ray chord whose endpoints lie in ball(depth-1).  The ray may
    // have been built from a deeper ball; chords beyond this one stop it.
    int K = -1;
    for (int j = 0; j < ray.length(); ++j) {
        if (ray.index(j) >= idx.size()) break;
        const EdgeRec& e = g.edge(idx.edge(ray.index(j)));
        if (fam.level(e.tail) <= depth - 1 && fam.level(e.head) <= depth - 1)
            K = j;
        else
            break;
    }
    if (K < 1) throw std::invalid_argument("ray too short inside ball(depth-1)");

    auto chord_oe = [&](int j) { return OrientedEdge{idx.edge(ray.index(j)), true}; };
    Walk w;
    w.start = g.tail(chord_oe(0));
    for (int j = 0; j <= K; ++j) {
        if (j > 0) {
            Walk link = tree_path_walk(g, t, g.head(chord_oe(j - 1)), g.tail(chord_oe(j)));
            w.steps.insert(w.steps.end(), link.steps.begin(), link.steps.end());
        }
        w.steps.push_back(chord_oe(j));
    }
    // Return along the tree to the head of the first chord, then run the
    // inverse passes in ascending order.
    Walk back = tree_path_walk(g, t, g.head(chord_oe(K)), g.head(chord_oe(0)));
    w.steps.insert(w.steps.end(), back.steps.begin(), back.steps.end());
    for (int j = 0; j <= K; ++j) {
        if (j > 0) {
            Walk link = tree_path_walk(g, t, g.tail(chord_oe(j - 1)), g.head(chord_oe(j)));
            w.steps.insert(w.steps.end(), link.steps.begin(), link.steps.end());
        }
        w.steps.push_back(chord_oe(j).reversed());
    }
    Walk home = tree_path_walk(g, t, g.tail(chord_oe(K)), w.start);
    w.steps.insert(w.steps.end(), home.steps.begin(), home.steps.end());
    w.validate(g);
    return {std::move(w), ray_loop_word(ray)};
}

// ---------------------------------------------------------------------------
// Randomized homotopy moves: immediate backtracks and tree detours.  Both
// moves are null-homotopic insertions, so the reduced trace is preserved.

inline Walk homotopy_variant(const FiniteGraph& g, const RootedTree& t, const Walk& w,
                             unsigned long long seed, int moves = 4) {
    std::mt19937_64 rng(seed);
    Walk out = w;
    for (int m = 0; m < moves; ++m) {
        std::uniform_int_distribution<std::size_t> pos_dist(0, out.steps.size());
        std::size_t pos = pos_dist(rng);
        VertexId v = out.vertex_at(g, pos);
        if (rng() % 2 == 0) {
            // Backtrack over a random incident edge.
            const auto& inc = g.incident(v);
            if (inc.empty()) continue;
            EdgeId e = inc[rng() % inc.size()];
            OrientedEdge oe{e, g.edge(e).tail == v};
            out.steps.insert(out.steps.begin() + pos, {oe, oe.reversed()});
        } else {
            // Tree detour: out to a random vertex and straight back.
            const auto& vs = g.vertices();
            VertexId target = vs[rng() % vs.size()];
            Walk there = tree_path_walk(g, t, v, target);
            Walk around = concat_walks(g, there, reversed_walk(g, there));
            out.steps.insert(out.steps.begin() + pos, around.steps.begin(), around.steps.end());
        }
    }
    out.validate(g);
    return out;
}

}  // namespace tcs
