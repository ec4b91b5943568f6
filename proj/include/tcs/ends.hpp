// Finite-depth approximation of the ends of a leveled family.
//
// Working inside ball(depth+1), the level-k classes (1 <= k <= depth) are
// the components of the subgraph induced on vertices of level >= k.  Each
// level-(k+1) class is contained in exactly one level-k class, which gives
// a component tree; the branches alive at level `depth` are the finite
// surrogate for the ends.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "tcs/family.hpp"
#include "tcs/graph.hpp"

namespace tcs {

struct EndApproximation {
    int depth = 0;
    // classes[k-1] = components at level k, each a sorted vertex set.
    std::vector<std::vector<std::vector<VertexId>>> classes;
    // parent[k-1][i] = index of the level-(k-1) class containing classes[k-1][i]
    // (empty for k = 1).
    std::vector<std::vector<int>> parent;

    int branch_count(int k) const {
        if (k < 1 || k > depth) throw std::out_of_range("level out of range");
        return static_cast<int>(classes[k - 1].size());
    }
    int persistent_branch_count() const { return branch_count(depth); }

    // Chain of class indices, level depth down to 1, for a persistent branch.
    std::vector<int> branch_chain(int branch) const {
        std::vector<int> chain(depth);
        int idx = branch;
        for (int k = depth; k >= 1; --k) {
            chain[k - 1] = idx;
            if (k > 1) idx = parent[k - 1][idx];
        }
        return chain;
    }

    bool contains(int k, int class_index, VertexId v) const {
        const auto& cls = classes[k - 1][class_index];
        return std::binary_search(cls.begin(), cls.end(), v);
    }
};

inline EndApproximation end_approximations(const LeveledFamily& fam, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    const FiniteGraph& g = fam.ball(depth + 1);
    EndApproximation out;
    out.depth = depth;
    out.classes.resize(depth);
    out.parent.resize(depth);
    for (int k = 1; k <= depth; ++k) {
        std::set<VertexId> removed;
        for (VertexId v : g.vertices())
            if (fam.level(v) < k) removed.insert(v);
        out.classes[k - 1] = components(g, removed);
        if (k > 1) {
            // Locate the containing class one level down; membership of the
            // minimum vertex suffices because classes only refine.
            for (const auto& cls : out.classes[k - 1]) {
                int found = -1;
                for (std::size_t i = 0; i < out.classes[k - 2].size(); ++i) {
                    if (std::binary_search(out.classes[k - 2][i].begin(),
                                           out.classes[k - 2][i].end(), cls.front())) {
                        found = static_cast<int>(i);
                        break;
                    }
                }
                if (found < 0) throw std::logic_error("component tree property violated");
                // Refinement check: the whole class must sit inside.
                for (VertexId v : cls)
                    if (!out.contains(k - 1, found, v))
                        throw std::logic_error("component tree property violated");
                out.parent[k - 1].push_back(found);
            }
        }
    }
    return out;
}

}  // namespace tcs
