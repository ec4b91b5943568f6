// Finite-depth nerve machinery: contraction graphs, discretized covers,
// nerves to dimension 2, integral first homology via Smith normal form,
// and the level restriction maps on chord coordinates.
//
// T_n denotes the subtree of the chosen spanning tree induced by the
// vertices of tree-depth <= n.  These constructions assume a normal tree:
// normality guarantees that every component of ball - T_n hangs off the
// tree by a single tree edge, which is what makes the contraction rank
// count chords.

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "tcs/family.hpp"
#include "tcs/graph.hpp"
#include "tcs/membership.hpp"
#include "tcs/snf.hpp"
#include "tcs/tree.hpp"

namespace tcs {

// ---------------------------------------------------------------------------
// Contraction graphs.

struct ContractionGraph {
    FiniteGraph graph;
    // Original vertex -> contraction vertex (identity on T_n, a synthetic
    // negative id per outside component).
    std::map<VertexId, VertexId> vertex_map;
    std::vector<std::vector<VertexId>> contracted_components;
    // Edges of the ball that became loops (both ends in one component).
    std::vector<EdgeId> deleted_loops;
};

inline std::set<VertexId> subtree_vertices(const FiniteGraph& g, const RootedTree& t, int n) {
    std::set<VertexId> tn;
    for (VertexId v : g.vertices())
        if (t.depth(v) <= n) tn.insert(v);
    return tn;
}

// ball(depth) with every component outside T_n contracted to a point;
// multi-edges retained, loops deleted.
inline ContractionGraph contraction_graph(const LeveledFamily& fam, const RootedTree& t, int n,
                                          int depth) {
    if (depth < n + 2) throw std::invalid_argument("depth must be at least n + 2");
    const FiniteGraph& g = fam.ball(depth);
    std::set<VertexId> tn = subtree_vertices(g, t, n);

    ContractionGraph out;
    std::set<VertexId> outside;
    for (VertexId v : g.vertices())
        if (!tn.count(v)) outside.insert(v);
    out.contracted_components = components(g, tn);  // components of g - T_n

    for (VertexId v : tn) out.vertex_map[v] = v;
    VertexId synthetic = -1;
    for (const auto& comp : out.contracted_components) {
        for (VertexId v : comp) out.vertex_map[v] = synthetic;
        --synthetic;
    }

    std::vector<VertexId> vs(tn.begin(), tn.end());
    for (VertexId s = -1; s > synthetic; --s) vs.push_back(s);
    std::vector<EdgeRec> es;
    for (const EdgeRec& e : g.edges()) {
        VertexId a = out.vertex_map.at(e.tail);
        VertexId b = out.vertex_map.at(e.head);
        if (a == b) {
            out.deleted_loops.push_back(e.id);
            continue;
        }
        es.push_back({e.id, a, b});
    }
    out.graph = FiniteGraph(std::move(vs), std::move(es));
    return out;
}

// Cyclomatic rank of a connected graph.
inline int h1_rank(const FiniteGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("h1_rank expects a connected graph");
    return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + 1;
}

// Chords with at least one endpoint of tree-depth <= n.
inline std::vector<int> chords_meeting(const FiniteGraph& g, const RootedTree& t,
                                       const ChordIndex& idx, int n) {
    std::vector<int> out;
    for (int k = 0; k < idx.size(); ++k) {
        const EdgeRec& e = g.edge(idx.edge(k));
        if (t.depth(e.tail) <= n || t.depth(e.head) <= n) out.push_back(k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Discretized covers and nerves.

// Cells of the combinatorial model: vertex points and edge atoms.  Each
// edge meeting T_n is split into 2m+1 atoms, numbered from the tail.
struct Cell {
    enum class Type { vertex, atom };
    Type type = Type::vertex;
    long long id = 0;   // vertex id or edge id
    int index = 0;      // atom index (1-based from the tail)

    friend bool operator<(const Cell& a, const Cell& b) {
        return std::tie(a.type, a.id, a.index) < std::tie(b.type, b.id, b.index);
    }
    friend bool operator==(const Cell& a, const Cell& b) {
        return a.type == b.type && a.id == b.id && a.index == b.index;
    }
};

inline Cell vertex_cell(VertexId v) { return {Cell::Type::vertex, v, 0}; }
inline Cell atom_cell(EdgeId e, int i) { return {Cell::Type::atom, e, i}; }

struct Cover {
    std::vector<std::set<Cell>> sets;
    std::vector<std::string> labels;
};

// The discretized cover: a star per T_n vertex (its point plus the nearest
// atom of every incident edge), m overlapping segments per edge meeting
// T_n (consecutive segments share one atom), and one set per component
// beyond T_n (its points, its internal edges' atoms, and the
// component-side end atom of each crossing edge).  Trimming the component
// sets to that end atom keeps every intersection connected, so the nerve
// reproduces the contraction graph: each crossing edge becomes its own
// strip from a star to a component set.
inline Cover build_cover(const LeveledFamily& fam, const RootedTree& t, int n, int m, int depth) {
    if (m < 2) throw std::invalid_argument("need at least two segments per edge");
    const FiniteGraph& g = fam.ball(depth);
    std::set<VertexId> tn = subtree_vertices(g, t, n);
    auto comps = components(g, tn);
    std::map<VertexId, int> comp_of;
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (VertexId v : comps[i]) comp_of[v] = static_cast<int>(i);

    const int atoms = 2 * m + 1;
    Cover cover;

    std::map<VertexId, std::set<Cell>> stars;
    for (VertexId v : tn) stars[v].insert(vertex_cell(v));
    std::vector<std::set<Cell>> blobs(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (VertexId v : comps[i]) blobs[i].insert(vertex_cell(v));

    for (const EdgeRec& e : g.edges()) {
        bool tail_in = tn.count(e.tail) != 0;
        bool head_in = tn.count(e.head) != 0;
        if (!tail_in && !head_in) {
            // Interior to a component: all atoms go to its blob.
            int c = comp_of.at(e.tail);
            for (int i = 1; i <= atoms; ++i) blobs[c].insert(atom_cell(e.id, i));
            continue;
        }
        if (tail_in) stars[e.tail].insert(atom_cell(e.id, 1));
        if (head_in) stars[e.head].insert(atom_cell(e.id, atoms));
        if (!tail_in || !head_in) {
            int c = comp_of.at(tail_in ? e.head : e.tail);
            blobs[c].insert(atom_cell(e.id, tail_in ? atoms : 1));
        }
        // Segments cover every edge that meets T_n.
        for (int s = 1; s <= m; ++s) {
            std::set<Cell> seg;
            for (int i = 2 * s - 1; i <= 2 * s + 1; ++i) seg.insert(atom_cell(e.id, i));
            cover.sets.push_back(std::move(seg));
            cover.labels.push_back("seg:" + std::to_string(e.id) + ":" + std::to_string(s));
        }
    }
    for (VertexId v : tn) {
        cover.sets.push_back(stars[v]);
        cover.labels.push_back("star:" + std::to_string(v));
    }
    for (std::size_t i = 0; i < blobs.size(); ++i) {
        cover.sets.push_back(blobs[i]);
        cover.labels.push_back("end-component:" + std::to_string(comps[i].front()));
    }
    return cover;
}

// ---------------------------------------------------------------------------
// Simplicial complexes to dimension 2.

struct SimplicialComplex {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;          // i < j
    std::vector<std::array<int, 3>> triangles;       // i < j < k

    IntMatrix boundary1() const {
        IntMatrix d(vertex_count, std::vector<long long>(edges.size(), 0));
        for (std::size_t c = 0; c < edges.size(); ++c) {
            d[edges[c].first][c] = -1;
            d[edges[c].second][c] = 1;
        }
        return d;
    }

    IntMatrix boundary2() const {
        std::map<std::pair<int, int>, int> edge_pos;
        for (std::size_t c = 0; c < edges.size(); ++c) edge_pos[edges[c]] = static_cast<int>(c);
        IntMatrix d(edges.size(), std::vector<long long>(triangles.size(), 0));
        for (std::size_t c = 0; c < triangles.size(); ++c) {
            auto [i, j, k] = triangles[c];
            d[edge_pos.at({j, k})][c] += 1;
            d[edge_pos.at({i, k})][c] -= 1;
            d[edge_pos.at({i, j})][c] += 1;
        }
        return d;
    }
};

// Nerve of a cover, built to dimension 2: one vertex per set, an edge per
// intersecting pair, a triangle per triple with common intersection.
inline SimplicialComplex nerve(const std::vector<std::set<Cell>>& sets) {
    SimplicialComplex k;
    k.vertex_count = static_cast<int>(sets.size());
    // Invert: for each cell the sets containing it; pairs and triples are
    // witnessed by shared cells.
    std::map<Cell, std::vector<int>> holders;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (const Cell& c : sets[i]) holders[c].push_back(static_cast<int>(i));
    std::set<std::pair<int, int>> edges;
    std::set<std::array<int, 3>> triangles;
    for (const auto& [cell, hs] : holders) {
        (void)cell;
        for (std::size_t a = 0; a < hs.size(); ++a)
            for (std::size_t b = a + 1; b < hs.size(); ++b) {
                edges.insert({hs[a], hs[b]});
                for (std::size_t c = b + 1; c < hs.size(); ++c)
                    triangles.insert({hs[a], hs[b], hs[c]});
            }
    }
    k.edges.assign(edges.begin(), edges.end());
    k.triangles.assign(triangles.begin(), triangles.end());
    return k;
}

struct Betti1Result {
    int betti = 0;
    std::vector<long long> torsion;  // invariant factors of d2 exceeding 1
};

// Integral first Betti number: dim ker d1 - rank d2, with the torsion of
// the quotient read off the Smith form of d2.  Checks d1 * d2 = 0.
inline Betti1Result betti1(const SimplicialComplex& k) {
    IntMatrix d1 = k.boundary1();
    IntMatrix d2 = k.boundary2();
    if (!d1.empty() && !d2.empty() && !d2[0].empty()) {
        IntMatrix prod = matmul(d1, d2);
        for (const auto& row : prod)
            for (long long v : row)
                if (v != 0) throw std::logic_error("boundary composition is nonzero");
    }
    int rank1 = d1.empty() || d1[0].empty() ? 0 : smith_normal_form(d1).rank;
    SNFResult s2;
    int rank2 = 0;
    if (!d2.empty() && !d2[0].empty()) {
        s2 = smith_normal_form(d2);
        rank2 = s2.rank;
    }
    Betti1Result r;
    r.betti = static_cast<int>(k.edges.size()) - rank1 - rank2;
    for (long long d : s2.diagonal)
        if (d > 1) r.torsion.push_back(d);
    return r;
}

// ---------------------------------------------------------------------------
// Level restriction maps on chord coordinates.

// Projection keeping the chords with an endpoint in T_n.
inline std::map<int, long long> restrict_coordinates(const std::map<int, long long>& coords,
                                                     const FiniteGraph& g, const RootedTree& t,
                                                     const ChordIndex& idx, int n) {
    std::vector<int> keep = chords_meeting(g, t, idx, n);
    std::set<int> keep_set(keep.begin(), keep.end());
    std::map<int, long long> out;
    for (const auto& [k, v] : coords)
        if (keep_set.count(k)) out[k] = v;
    return out;
}

// The compatible family of restrictions of a coordinate vector to each
// level n = 0..depth; compatibility of consecutive projections verified.
inline std::vector<std::map<int, long long>> inverse_limit_element(
    const std::map<int, long long>& coords, const FiniteGraph& g, const RootedTree& t,
    const ChordIndex& idx, int depth) {
    std::vector<std::map<int, long long>> levels;
    for (int n = 0; n <= depth; ++n) levels.push_back(restrict_coordinates(coords, g, t, idx, n));
    for (int n = 0; n + 1 <= depth; ++n)
        if (restrict_coordinates(levels[n + 1], g, t, idx, n) != levels[n])
            throw std::logic_error("restriction maps do not compose");
    return levels;
}

}  // namespace tcs
