// Finite oriented cuts derived from tree-order down-closed separators.
//
// For a down-closed S (in the tree order) and a component C of G - S, the
// oriented cut E(C, V\C) consists of the finitely many edges from C to S,
// directed out of C.  At finite depth a component of ball(depth) - S is
// accepted only if it is stable, i.e. unchanged when recomputed one ball
// deeper; the emitted crossing edges are then a genuine finite cut of the
// infinite graph.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "tcs/edge_function.hpp"
#include "tcs/family.hpp"
#include "tcs/graph.hpp"
#include "tcs/tree.hpp"

namespace tcs {

struct Cut {
    std::vector<VertexId> removed;         // the separator S
    std::vector<VertexId> side;            // the component C inside the working ball
    std::vector<OrientedEdge> edges;       // crossing edges, directed out of C
};

inline long long cut_sum(const EdgeFunction& phi, const Cut& c) {
    long long s = 0;
    for (const OrientedEdge& oe : c.edges) s += phi(oe);
    return s;
}

// All down-closed subsets of the tree order with size <= size_bound whose
// vertices all satisfy `eligible`.  (Nonempty down-closed sets contain the
// root.)
inline std::vector<std::set<VertexId>> enumerate_down_closed(
    const RootedTree& t, const std::function<bool(VertexId)>& eligible, int size_bound) {
    std::vector<std::set<VertexId>> out;
    if (size_bound < 1 || !eligible(t.root())) return out;
    // Child lists.
    std::map<VertexId, std::vector<VertexId>> children;
    for (const auto& [v, pe] : t.parents())
        if (eligible(v)) children[pe.first].push_back(v);
    std::set<std::set<VertexId>> seen;
    std::vector<std::set<VertexId>> queue{{t.root()}};
    seen.insert(queue.front());
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::set<VertexId> s = queue[i];
        out.push_back(s);
        if (static_cast<int>(s.size()) >= size_bound) continue;
        for (VertexId v : s) {
            auto it = children.find(v);
            if (it == children.end()) continue;
            for (VertexId c : it->second) {
                if (s.count(c)) continue;
                std::set<VertexId> ext = s;
                ext.insert(c);
                if (seen.insert(ext).second) queue.push_back(ext);
            }
        }
    }
    return out;
}

// Oriented cuts of the family from every down-closed S of size <= size_bound
// inside ball(depth-1), one per stable component of ball(depth) - S,
// deduplicated by crossing-edge set.
inline std::vector<Cut> tree_cuts(const LeveledFamily& fam, const RootedTree& t, int depth,
                                  int size_bound) {
    if (size_bound < 1) throw std::invalid_argument("size bound must be >= 1");
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    const FiniteGraph& g = fam.ball(depth);
    const FiniteGraph& g_next = fam.ball(depth + 1);
    auto eligible = [&](VertexId v) { return fam.level(v) <= depth - 1; };

    std::vector<Cut> cuts;
    std::set<std::vector<OrientedEdge>> dedup;
    for (const std::set<VertexId>& S : enumerate_down_closed(t, eligible, size_bound)) {
        auto comps = components(g, S);
        auto comps_next = components(g_next, S);
        // Stability: every component of the deeper ball must restrict to
        // exactly one component of the working ball.
        std::vector<std::vector<VertexId>> projected;
        for (const auto& cn : comps_next) {
            std::vector<VertexId> r;
            for (VertexId v : cn)
                if (g.has_vertex(v)) r.push_back(v);
            if (!r.empty()) projected.push_back(std::move(r));
        }
        std::sort(projected.begin(), projected.end());
        std::vector<std::vector<VertexId>> sorted_comps = comps;
        std::sort(sorted_comps.begin(), sorted_comps.end());
        if (projected != sorted_comps) continue;  // unstable at this depth

        for (const auto& comp : comps) {
            std::set<VertexId> in_comp(comp.begin(), comp.end());
            Cut c;
            c.removed.assign(S.begin(), S.end());
            c.side = comp;
            for (const EdgeRec& e : g.edges()) {
                bool tail_in = in_comp.count(e.tail) != 0;
                bool head_in = in_comp.count(e.head) != 0;
                if (tail_in && S.count(e.head)) c.edges.push_back({e.id, true});
                else if (head_in && S.count(e.tail)) c.edges.push_back({e.id, false});
            }
            std::sort(c.edges.begin(), c.edges.end());
            if (c.edges.empty()) continue;
            if (dedup.insert(c.edges).second) cuts.push_back(std::move(c));
        }
    }
    return cuts;
}

}  // namespace tcs
