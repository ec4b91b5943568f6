// Two independent membership tests for the oriented cycle space: the cut
// criterion and reconstruction from chord coordinates.
//
// A Violates verdict is definitive; a Passes verdict is qualified by the
// depth and size bound it was checked at.

#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "tcs/cuts.hpp"
#include "tcs/edge_function.hpp"
#include "tcs/family.hpp"
#include "tcs/graph.hpp"
#include "tcs/tree.hpp"

namespace tcs {

// Oriented fundamental circuit of chord k: +1 on the chord's natural
// orientation, +-1 along the tree path closing it, 0 elsewhere.
inline EdgeFunction fundamental_circuit(const FiniteGraph& g, const RootedTree& t,
                                        const ChordIndex& idx, int k) {
    return net_traversal(fundamental_circuit_walk(g, t, idx, k));
}

inline std::map<int, long long> chord_coordinates(const EdgeFunction& phi, const ChordIndex& idx) {
    std::map<int, long long> coords;
    for (int k = 0; k < idx.size(); ++k) {
        long long v = phi.natural(idx.edge(k));
        if (v != 0) coords[k] = v;
    }
    return coords;
}

inline EdgeFunction reconstruct_from_chords(const FiniteGraph& g, const RootedTree& t,
                                            const ChordIndex& idx,
                                            const std::map<int, long long>& coords) {
    EdgeFunction acc = EdgeFunction::zero();
    for (const auto& [k, c] : coords)
        acc = acc + fundamental_circuit(g, t, idx, k) * c;
    return acc;
}

struct MembershipVerdict {
    bool passes = true;
    int depth = 0;
    int size_bound = 0;
    std::optional<Cut> witness;       // present iff !passes
    long long witness_sum = 0;

    explicit operator bool() const { return passes; }
};

// The cut criterion at finite depth: sum phi over every enumerated finite
// oriented cut.  The witness is normalized so its sum is positive.
inline MembershipVerdict membership_by_cuts(const EdgeFunction& phi, const LeveledFamily& fam,
                                            const RootedTree& t, int depth, int size_bound) {
    MembershipVerdict v;
    v.depth = depth;
    v.size_bound = size_bound;
    for (const Cut& c : tree_cuts(fam, t, depth, size_bound)) {
        long long s = cut_sum(phi, c);
        if (s == 0) continue;
        Cut w = c;
        if (s < 0) {
            for (OrientedEdge& oe : w.edges) oe = oe.reversed();
            s = -s;
        }
        v.passes = false;
        v.witness = std::move(w);
        v.witness_sum = s;
        return v;
    }
    return v;
}

struct ReconstructionVerdict {
    enum class Kind { passes, tree_edge_mismatch, thinness };
    Kind kind = Kind::passes;
    int depth = 0;
    EdgeId edge = 0;             // offending tree edge, for either failure kind
    long long expected = 0;      // phi's value there (mismatch case)
    long long reconstructed = 0;
    std::vector<long long> growth;  // per-depth supporting-circuit counts (thinness case)

    bool passes() const { return kind == Kind::passes; }
    explicit operator bool() const { return passes(); }
};

// Reconstruction test: form the thin sum of fundamental circuits weighted
// by phi's chord values and compare with phi on the tree edges of
// ball(depth-1).  A tree edge whose set of supporting circuits keeps
// growing over the last three depths is reported as a thinness violation
// with its growth trace rather than silently summed.
inline ReconstructionVerdict membership_by_reconstruction(
    const EdgeFunction& phi, const LeveledFamily& fam, int depth,
    const std::function<RootedTree(int)>& tree_at_depth) {
    if (depth < 3) throw std::invalid_argument("depth must be >= 3");
    ReconstructionVerdict out;
    out.depth = depth;

    // Supporting circuits per tree edge at the last three depths.
    std::map<EdgeId, std::vector<long long>> counts;
    std::map<EdgeId, long long> reconstructed;
    for (int d = depth - 2; d <= depth; ++d) {
        const FiniteGraph& g = fam.ball(d);
        RootedTree t = tree_at_depth(d);
        ChordIndex idx = chord_index(fam, g, t);
        std::map<EdgeId, long long> contrib;
        std::map<EdgeId, long long> support_count;
        for (int k = 0; k < idx.size(); ++k) {
            long long c = phi.natural(idx.edge(k));
            if (c == 0) continue;
            Walk cw = fundamental_circuit_walk(g, t, idx, k);
            EdgeFunction fc = net_traversal(cw);
            for (const auto& [e, val] : fc.values()) {
                if (!t.is_tree_edge(e)) continue;
                contrib[e] += c * val;
                support_count[e] += 1;
            }
        }
        for (const EdgeRec& e : g.edges()) {
            if (!t.is_tree_edge(e.id)) continue;
            counts[e.id].push_back(support_count.count(e.id) ? support_count[e.id] : 0);
            if (d == depth) reconstructed[e.id] = contrib.count(e.id) ? contrib[e.id] : 0;
        }
    }

    const FiniteGraph& inner = fam.ball(depth - 1);
    RootedTree t_top = tree_at_depth(depth);
    for (const EdgeRec& e : inner.edges()) {
        if (!t_top.is_tree_edge(e.id)) continue;
        const auto& trace = counts[e.id];
        if (trace.size() == 3 && trace[0] < trace[1] && trace[1] < trace[2]) {
            out.kind = ReconstructionVerdict::Kind::thinness;
            out.edge = e.id;
            out.growth = trace;
            return out;
        }
        long long got = reconstructed.count(e.id) ? reconstructed[e.id] : 0;
        long long want = phi.natural(e.id);
        if (got != want) {
            out.kind = ReconstructionVerdict::Kind::tree_edge_mismatch;
            out.edge = e.id;
            out.expected = want;
            out.reconstructed = got;
            return out;
        }
    }
    return out;
}

inline ReconstructionVerdict membership_by_reconstruction(const EdgeFunction& phi,
                                                          const LeveledFamily& fam, int depth,
                                                          TreeKind kind = TreeKind::canonical) {
    return membership_by_reconstruction(
        phi, fam, depth, [&fam, kind](int d) { return build_tree(fam, d, kind); });
}

}  // namespace tcs
