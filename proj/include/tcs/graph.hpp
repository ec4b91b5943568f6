// Finite multigraphs with oriented edges, plus combinatorial walks.
//
// Vertices and edges carry opaque 64-bit ids.  Multi-edges are allowed,
// loops are not.  Every edge has a natural direction tail -> head; an
// OrientedEdge is an edge id together with a flag saying whether it is
// traversed in that natural direction.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcs {

using VertexId = std::int64_t;
using EdgeId = std::int64_t;

struct OrientedEdge {
    EdgeId edge = 0;
    bool forward = true;  // true = natural direction

    OrientedEdge reversed() const { return {edge, !forward}; }

    friend bool operator==(const OrientedEdge& a, const OrientedEdge& b) {
        return a.edge == b.edge && a.forward == b.forward;
    }
    friend bool operator<(const OrientedEdge& a, const OrientedEdge& b) {
        return a.edge != b.edge ? a.edge < b.edge : a.forward < b.forward;
    }
};

struct EdgeRec {
    EdgeId id = 0;
    VertexId tail = 0;
    VertexId head = 0;
};

class FiniteGraph {
public:
    FiniteGraph() = default;

    FiniteGraph(std::vector<VertexId> vertices, std::vector<EdgeRec> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw std::invalid_argument("duplicate vertex id");
        std::sort(edges_.begin(), edges_.end(),
                  [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const EdgeRec& e = edges_[i];
            if (i > 0 && edges_[i - 1].id == e.id)
                throw std::invalid_argument("duplicate edge id");
            if (e.tail == e.head)
                throw std::invalid_argument("loop edge not allowed");
            if (!has_vertex(e.tail) || !has_vertex(e.head))
                throw std::invalid_argument("edge endpoint not declared");
            edge_pos_[e.id] = i;
            incident_[e.tail].push_back(e.id);
            incident_[e.head].push_back(e.id);
        }
        for (auto& [v, ids] : incident_) std::sort(ids.begin(), ids.end());
    }

    bool has_vertex(VertexId v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }
    bool has_edge(EdgeId e) const { return edge_pos_.count(e) != 0; }

    const EdgeRec& edge(EdgeId e) const {
        auto it = edge_pos_.find(e);
        if (it == edge_pos_.end()) throw std::out_of_range("unknown edge id " + std::to_string(e));
        return edges_[it->second];
    }

    // Source vertex of an oriented traversal.
    VertexId tail(const OrientedEdge& oe) const {
        const EdgeRec& e = edge(oe.edge);
        return oe.forward ? e.tail : e.head;
    }
    VertexId head(const OrientedEdge& oe) const {
        const EdgeRec& e = edge(oe.edge);
        return oe.forward ? e.head : e.tail;
    }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<EdgeRec>& edges() const { return edges_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<EdgeId>& incident(VertexId v) const {
        static const std::vector<EdgeId> empty;
        auto it = incident_.find(v);
        return it == incident_.end() ? empty : it->second;
    }

    std::size_t degree(VertexId v) const { return incident(v).size(); }

    VertexId other_end(EdgeId e, VertexId v) const {
        const EdgeRec& r = edge(e);
        if (r.tail == v) return r.head;
        if (r.head == v) return r.tail;
        throw std::invalid_argument("vertex not an endpoint of edge");
    }

private:
    std::vector<VertexId> vertices_;
    std::vector<EdgeRec> edges_;
    std::map<EdgeId, std::size_t> edge_pos_;
    std::map<VertexId, std::vector<EdgeId>> incident_;
};

// A walk: start vertex plus a sequence of oriented edge traversals.
// Consistency (each step starting where the previous one ended) is
// checked by validate(), not enforced on construction.
struct Walk {
    VertexId start = 0;
    std::vector<OrientedEdge> steps;

    std::size_t length() const { return steps.size(); }

    VertexId vertex_at(const FiniteGraph& g, std::size_t i) const {
        if (i == 0) return start;
        return g.head(steps[i - 1]);
    }
    VertexId end_vertex(const FiniteGraph& g) const { return vertex_at(g, steps.size()); }
    bool is_closed(const FiniteGraph& g) const { return end_vertex(g) == start; }

    void validate(const FiniteGraph& g) const {
        if (!g.has_vertex(start)) throw std::invalid_argument("walk start not in graph");
        VertexId at = start;
        for (const OrientedEdge& s : steps) {
            if (g.tail(s) != at) throw std::invalid_argument("walk step does not continue");
            at = g.head(s);
        }
    }

    friend bool operator==(const Walk& a, const Walk& b) {
        return a.start == b.start && a.steps == b.steps;
    }
    friend bool operator<(const Walk& a, const Walk& b) {
        return a.start != b.start ? a.start < b.start : a.steps < b.steps;
    }
};

inline Walk reversed_walk(const FiniteGraph& g, const Walk& w) {
    Walk r;
    r.start = w.end_vertex(g);
    r.steps.reserve(w.steps.size());
    for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) r.steps.push_back(it->reversed());
    return r;
}

inline Walk concat_walks(const FiniteGraph& g, const Walk& a, const Walk& b) {
    if (a.end_vertex(g) != b.start) throw std::invalid_argument("walks do not concatenate");
    Walk c = a;
    c.steps.insert(c.steps.end(), b.steps.begin(), b.steps.end());
    return c;
}

// Connected components of g after deleting `removed`, ordered by minimum
// vertex id; vertices inside each component are sorted.
inline std::vector<std::vector<VertexId>> components(const FiniteGraph& g,
                                                     const std::set<VertexId>& removed = {}) {
    std::vector<std::vector<VertexId>> out;
    std::set<VertexId> seen;
    for (VertexId v : g.vertices()) {
        if (removed.count(v) || seen.count(v)) continue;
        std::vector<VertexId> comp;
        std::queue<VertexId> q;
        q.push(v);
        seen.insert(v);
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            comp.push_back(u);
            for (EdgeId e : g.incident(u)) {
                VertexId w = g.other_end(e, u);
                if (removed.count(w) || seen.count(w)) continue;
                seen.insert(w);
                q.push(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

inline bool is_connected(const FiniteGraph& g) {
    if (g.vertices().empty()) return true;
    return components(g).size() == 1;
}

}  // namespace tcs
