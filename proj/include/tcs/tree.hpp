// Rooted spanning trees, the induced tree order, chord enumeration and
// fundamental circuits.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "tcs/family.hpp"
#include "tcs/graph.hpp"

namespace tcs {

class RootedTree {
public:
    RootedTree() = default;
    RootedTree(VertexId root, std::map<VertexId, std::pair<VertexId, EdgeId>> parent)
        : root_(root), parent_(std::move(parent)) {}

    VertexId root() const { return root_; }
    const std::map<VertexId, std::pair<VertexId, EdgeId>>& parents() const { return parent_; }

    bool contains(VertexId v) const { return v == root_ || parent_.count(v) != 0; }

    std::pair<VertexId, EdgeId> parent(VertexId v) const {
        auto it = parent_.find(v);
        if (it == parent_.end()) throw std::invalid_argument("vertex has no parent");
        return it->second;
    }

    bool is_tree_edge(EdgeId e) const {
        if (tree_edges_.empty() && !parent_.empty()) build_edge_set();
        return tree_edges_.count(e) != 0;
    }

    int depth(VertexId v) const {
        int d = 0;
        while (v != root_) {
            v = parent(v).first;
            ++d;
        }
        return d;
    }

    // Root-to-v vertex chain, root first.
    std::vector<VertexId> root_path(VertexId v) const {
        std::vector<VertexId> path;
        while (true) {
            path.push_back(v);
            if (v == root_) break;
            v = parent(v).first;
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    // Sanity check against the host graph: spanning, parents adjacent via
    // the claimed edges, acyclic by construction of parent chains.
    void validate(const FiniteGraph& g) const {
        if (!g.has_vertex(root_)) throw std::invalid_argument("root not in graph");
        if (parent_.size() + 1 != g.vertex_count())
            throw std::invalid_argument("tree does not span the graph");
        for (const auto& [v, pe] : parent_) {
            const EdgeRec& e = g.edge(pe.second);
            if (!((e.tail == v && e.head == pe.first) || (e.head == v && e.tail == pe.first)))
                throw std::invalid_argument("parent edge does not join vertex and parent");
        }
        for (const auto& [v, pe] : parent_) {
            (void)pe;
            depth(v);  // throws on broken chains; cycles impossible in a parent map reaching root
        }
    }

private:
    void build_edge_set() const {
        for (const auto& [v, pe] : parent_) {
            (void)v;
            tree_edges_.insert(pe.second);
        }
    }

    VertexId root_ = 0;
    std::map<VertexId, std::pair<VertexId, EdgeId>> parent_;
    mutable std::set<EdgeId> tree_edges_;
};

// Tree order: u <= v iff u lies on the root-to-v parent chain.
inline bool tree_le(const RootedTree& t, VertexId u, VertexId v) {
    while (true) {
        if (v == u) return true;
        if (v == t.root()) return false;
        v = t.parent(v).first;
    }
}

inline VertexId tree_lca(const RootedTree& t, VertexId u, VertexId v) {
    int du = t.depth(u), dv = t.depth(v);
    while (du > dv) {
        u = t.parent(u).first;
        --du;
    }
    while (dv > du) {
        v = t.parent(v).first;
        --dv;
    }
    while (u != v) {
        u = t.parent(u).first;
        v = t.parent(v).first;
    }
    return u;
}

// The unique tree path from u to v as a walk.
inline Walk tree_path_walk(const FiniteGraph& g, const RootedTree& t, VertexId u, VertexId v) {
    VertexId m = tree_lca(t, u, v);
    Walk up;  // u down-to m (towards root)
    up.start = u;
    for (VertexId x = u; x != m;) {
        auto [p, e] = t.parent(x);
        bool fwd = g.edge(e).tail == x;  // traversing x -> p
        up.steps.push_back({e, fwd});
        x = p;
    }
    std::vector<OrientedEdge> down;  // m up-to v
    for (VertexId x = v; x != m;) {
        auto [p, e] = t.parent(x);
        bool fwd = g.edge(e).tail == p;  // traversing p -> x
        down.push_back({e, fwd});
        x = p;
    }
    std::reverse(down.begin(), down.end());
    up.steps.insert(up.steps.end(), down.begin(), down.end());
    return up;
}

// Build the declared spanning tree of ball(depth) from the family's parent
// rule; verifies the spanning property.
inline RootedTree build_tree(const LeveledFamily& fam, int depth,
                             TreeKind kind = TreeKind::canonical) {
    const FiniteGraph& g = fam.ball(depth);
    std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
    for (VertexId v : g.vertices()) {
        if (v == fam.root()) continue;
        auto pe = fam.tree_parent(v, kind);
        if (!g.has_vertex(pe.first) || !g.has_edge(pe.second))
            throw std::logic_error("family tree rule leaves the ball (not restriction-stable)");
        parent[v] = pe;
    }
    RootedTree t(fam.root(), std::move(parent));
    t.validate(g);
    return t;
}

// Id-ordered DFS spanning tree of an arbitrary connected finite graph.
// DFS trees of connected graphs are normal.
inline RootedTree dfs_spanning_tree(const FiniteGraph& g, std::optional<VertexId> root = {}) {
    if (g.vertices().empty()) throw std::invalid_argument("empty graph");
    VertexId r = root.value_or(g.vertices().front());
    std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
    std::set<VertexId> seen{r};
    std::vector<VertexId> stack{r};
    while (!stack.empty()) {
        VertexId u = stack.back();
        bool advanced = false;
        for (EdgeId e : g.incident(u)) {
            VertexId w = g.other_end(e, u);
            if (seen.count(w)) continue;
            parent[w] = {u, e};
            seen.insert(w);
            stack.push_back(w);
            advanced = true;
            break;
        }
        if (!advanced) stack.pop_back();
    }
    RootedTree t(r, std::move(parent));
    t.validate(g);
    return t;
}

// Normality check: every non-tree edge must join tree-comparable vertices.
// Returns a violating chord if there is one.
inline std::optional<EdgeId> normality_violation(const FiniteGraph& g, const RootedTree& t) {
    for (const EdgeRec& e : g.edges()) {
        if (t.is_tree_edge(e.id)) continue;
        if (!tree_le(t, e.tail, e.head) && !tree_le(t, e.head, e.tail)) return e.id;
    }
    return std::nullopt;
}

inline bool is_normal(const FiniteGraph& g, const RootedTree& t) {
    return !normality_violation(g, t).has_value();
}

// Stable enumeration e_0, e_1, ... of the chords (non-tree edges), ordered
// by (level of the higher endpoint, edge id).  With a restriction-stable
// tree, deeper balls only append chords.
struct ChordIndex {
    std::vector<EdgeId> chords;
    std::map<EdgeId, int> position;

    int size() const { return static_cast<int>(chords.size()); }
    EdgeId edge(int k) const {
        if (k < 0 || k >= size()) throw std::out_of_range("chord index out of range");
        return chords[k];
    }
    std::optional<int> index_of(EdgeId e) const {
        auto it = position.find(e);
        if (it == position.end()) return std::nullopt;
        return it->second;
    }
};

template <typename LevelFn>
ChordIndex chord_index(const FiniteGraph& g, const RootedTree& t, LevelFn level) {
    std::vector<std::pair<std::pair<int, EdgeId>, EdgeId>> keyed;
    for (const EdgeRec& e : g.edges()) {
        if (t.is_tree_edge(e.id)) continue;
        int lvl = std::max(level(e.tail), level(e.head));
        keyed.push_back({{lvl, e.id}, e.id});
    }
    std::sort(keyed.begin(), keyed.end());
    ChordIndex idx;
    for (const auto& [key, e] : keyed) {
        (void)key;
        idx.position[e] = static_cast<int>(idx.chords.size());
        idx.chords.push_back(e);
    }
    return idx;
}

inline ChordIndex chord_index(const LeveledFamily& fam, const FiniteGraph& g, const RootedTree& t) {
    return chord_index(g, t, [&fam](VertexId v) { return fam.level(v); });
}

// The closed walk of the fundamental circuit of chord k: the chord in its
// natural direction followed by the tree path from its head back to its
// tail.  Based at the chord's tail.
inline Walk fundamental_circuit_walk(const FiniteGraph& g, const RootedTree& t,
                                     const ChordIndex& idx, int k) {
    EdgeId c = idx.edge(k);
    const EdgeRec& e = g.edge(c);
    Walk w;
    w.start = e.tail;
    w.steps.push_back({c, true});
    Walk back = tree_path_walk(g, t, e.head, e.tail);
    w.steps.insert(w.steps.end(), back.steps.begin(), back.steps.end());
    return w;
}

}  // namespace tcs
