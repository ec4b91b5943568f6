// Finite-character homology on combinatorial 1-chains: boundaries, the
// edge-counting homomorphism, subdivision into single-edge passes, and
// machine-checkable boundary certificates.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "tcs/edge_function.hpp"
#include "tcs/family.hpp"
#include "tcs/graph.hpp"
#include "tcs/tree.hpp"
#include "tcs/walks.hpp"

namespace tcs {

// A finite integer combination of walks.
struct Chain1 {
    std::vector<std::pair<long long, Walk>> terms;

    Chain1& add(long long coeff, Walk w) {
        terms.emplace_back(coeff, std::move(w));
        return *this;
    }

    friend Chain1 operator+(const Chain1& a, const Chain1& b) {
        Chain1 c = a;
        c.terms.insert(c.terms.end(), b.terms.begin(), b.terms.end());
        return c;
    }
};

// Canonical formal sum: like walks combined, zero coefficients dropped.
inline std::map<Walk, long long> formal_sum(const Chain1& c) {
    std::map<Walk, long long> m;
    for (const auto& [coeff, w] : c.terms) m[w] += coeff;
    for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
    return m;
}

// Signed endpoint counts: head +1, start -1 per walk, scaled by the
// coefficients.  Closed walks contribute nothing.
inline std::map<VertexId, long long> boundary(const FiniteGraph& g, const Chain1& c) {
    std::map<VertexId, long long> b;
    for (const auto& [coeff, w] : c.terms) {
        b[w.start] -= coeff;
        b[w.end_vertex(g)] += coeff;
    }
    for (auto it = b.begin(); it != b.end();)
        it = it->second == 0 ? b.erase(it) : std::next(it);
    return b;
}

inline bool is_cycle(const FiniteGraph& g, const Chain1& c) { return boundary(g, c).empty(); }

// The edge-counting homomorphism on finite cycles: per edge, the summed
// net traversal of the terms.
inline EdgeFunction f_hom(const FiniteGraph& g, const Chain1& c) {
    if (!is_cycle(g, c)) throw std::invalid_argument("f_hom expects a chain with zero boundary");
    EdgeFunction acc = EdgeFunction::zero();
    for (const auto& [coeff, w] : c.terms) acc = acc + net_traversal(w) * coeff;
    return acc;
}

// ---------------------------------------------------------------------------
// Boundary certificates: replayable witnesses that a chain lies in the
// boundary subgroup.  Each item carries a formal sum with zero boundary
// and zero net traversal; replaying a certificate adds the item sums to
// the source chain and must reach the target exactly.

struct CertItem {
    enum class Kind { subdivide, pair, splice };
    Kind kind = Kind::subdivide;
    long long coeff = 1;  // multiplier applied to the item's shape
    Walk whole;           // subdivide: the split walk; splice: the host walk
    std::size_t at = 0;   // subdivide: split position; splice: insertion position
    Walk inserted;        // splice: the inserted closed loop
    EdgeId edge = 0;      // pair: the traversed edge

    // The item's formal sum, as added to a chain during replay.
    Chain1 sum(const FiniteGraph& g) const {
        Chain1 c;
        switch (kind) {
            case Kind::subdivide: {
                if (at == 0 || at >= whole.steps.size())
                    throw std::invalid_argument("subdivision point must be interior");
                Walk first{whole.start,
                           {whole.steps.begin(), whole.steps.begin() + static_cast<long>(at)}};
                Walk second{whole.vertex_at(g, at),
                            {whole.steps.begin() + static_cast<long>(at), whole.steps.end()}};
                c.add(coeff, first).add(coeff, second).add(-coeff, whole);
                break;
            }
            case Kind::pair: {
                Walk fwd{g.edge(edge).tail, {{edge, true}}};
                Walk bwd{g.edge(edge).head, {{edge, false}}};
                c.add(coeff, fwd).add(coeff, bwd);
                break;
            }
            case Kind::splice: {
                if (at > whole.steps.size())
                    throw std::invalid_argument("splice position out of range");
                if (!inserted.is_closed(g) || inserted.start != whole.vertex_at(g, at))
                    throw std::invalid_argument("spliced loop must close at the splice point");
                Walk spliced = whole;
                spliced.steps.insert(spliced.steps.begin() + static_cast<long>(at),
                                     inserted.steps.begin(), inserted.steps.end());
                c.add(coeff, spliced).add(-coeff, whole).add(-coeff, inserted);
                break;
            }
        }
        return c;
    }
};

struct BoundaryCertificate {
    std::vector<CertItem> items;
};

// Independent replayer: every item's sum must have zero boundary and zero
// net traversal, and source + sum(items) must equal target as canonical
// formal sums.
inline bool replay_certificate(const FiniteGraph& g, const Chain1& source,
                               const BoundaryCertificate& cert, const Chain1& target) {
    Chain1 acc = source;
    for (const CertItem& item : cert.items) {
        Chain1 s = item.sum(g);
        if (!boundary(g, s).empty()) return false;
        EdgeFunction net = EdgeFunction::zero();
        for (const auto& [coeff, w] : s.terms) net = net + net_traversal(w) * coeff;
        if (!net.values().empty()) return false;
        acc = acc + s;
    }
    return formal_sum(acc) == formal_sum(target);
}

// Rewrites a chain into single-edge passes by telescoping subdivisions.
// Every certificate walk's image lies inside the input walks' images.
inline std::pair<Chain1, BoundaryCertificate> subdivide_chain(const FiniteGraph& g,
                                                              const Chain1& c) {
    Chain1 out;
    BoundaryCertificate cert;
    for (const auto& [coeff, w] : c.terms) {
        if (coeff == 0) continue;
        Walk rest = w;
        while (rest.steps.size() > 1) {
            CertItem item;
            item.kind = CertItem::Kind::subdivide;
            item.coeff = coeff;
            item.whole = rest;
            item.at = 1;
            cert.items.push_back(item);
            Walk head{rest.start, {rest.steps.front()}};
            out.add(coeff, head);
            rest = Walk{g.head(rest.steps.front()), {rest.steps.begin() + 1, rest.steps.end()}};
        }
        out.add(coeff, rest);  // single edge, or a stationary walk
    }
    return {out, cert};
}

struct NotABoundary {
    EdgeId edge = 0;
    long long value = 0;
};

// If the chain's edge image vanishes, produce a replayable certificate:
// telescoping subdivisions, a pairing of opposite single-edge passes per
// edge, and empty-loop splices absorbing stationary walks; otherwise
// report a witness edge with its net count.
inline std::variant<BoundaryCertificate, NotABoundary> certify_boundary(const FiniteGraph& g,
                                                                        const Chain1& z) {
    if (!is_cycle(g, z)) throw std::invalid_argument("certify_boundary expects zero boundary");
    auto [singles, cert] = subdivide_chain(g, z);

    std::map<EdgeId, long long> fwd, bwd;
    std::map<Walk, long long> combined = formal_sum(singles);
    for (const auto& [w, coeff] : combined) {
        if (w.steps.empty()) continue;
        const OrientedEdge& s = w.steps.front();
        (s.forward ? fwd[s.edge] : bwd[s.edge]) += coeff;
    }
    std::set<EdgeId> touched;
    for (const auto& [e, v] : fwd) touched.insert(e), (void)v;
    for (const auto& [e, v] : bwd) touched.insert(e), (void)v;
    for (EdgeId e : touched)
        if (fwd[e] != bwd[e]) return NotABoundary{e, fwd[e] - bwd[e]};

    for (EdgeId e : touched) {
        if (fwd[e] == 0) continue;
        CertItem item;
        item.kind = CertItem::Kind::pair;
        item.coeff = -fwd[e];
        item.edge = e;
        cert.items.push_back(item);
    }
    // Stationary walks: splicing the empty loop based at the same vertex
    // into such a walk reproduces it, so the splice sum removes one copy.
    for (const auto& [w, coeff] : combined) {
        if (!w.steps.empty() || coeff == 0) continue;
        CertItem sp;
        sp.kind = CertItem::Kind::splice;
        sp.coeff = coeff;
        sp.whole = w;
        sp.at = 0;
        sp.inserted = w;
        cert.items.push_back(sp);
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Symbolic chains: an indexed family of finite chains with declared
// finite supports per vertex.

struct SymbolicChain {
    std::function<Chain1(long long)> term;
    std::function<std::vector<long long>(VertexId)> support;
    std::function<std::vector<long long>(int)> index_pool;  // sample indices per budget
    bool cycle_flag = true;
};

// Vertices met by a chain's walks.
inline std::set<VertexId> vertices_met(const FiniteGraph& g, const Chain1& c) {
    std::set<VertexId> out;
    for (const auto& [coeff, w] : c.terms) {
        (void)coeff;
        for (std::size_t i = 0; i <= w.steps.size(); ++i) out.insert(w.vertex_at(g, i));
    }
    return out;
}

// Edge image of a symbolic chain: per edge, the contributions of exactly
// the terms meeting that edge, located through the declared supports.
// Finite-subchain stability makes the value independent of which finite
// superset of those terms one sums.
inline EdgeFunction f_hom(const FiniteGraph& g, const SymbolicChain& sc) {
    if (!sc.cycle_flag) throw std::invalid_argument("f_hom expects a cycle-flagged chain");
    auto term = sc.term;
    auto support = sc.support;
    auto gp = std::make_shared<FiniteGraph>(g);
    return EdgeFunction::symbolic("symbolic-chain-image", [term, support, gp](EdgeId e) {
        const EdgeRec& rec = gp->edge(e);
        std::vector<long long> st = support(rec.tail);
        std::set<long long> tail_set(st.begin(), st.end());
        std::set<long long> indices;
        for (long long j : support(rec.head))
            if (tail_set.count(j)) indices.insert(j);
        long long v = 0;
        for (long long j : indices)
            for (const auto& [coeff, w] : term(j).terms)
                v += coeff * net_traversal(w).natural(e);
        return v;
    });
}

struct RepresentationVerdict {
    enum class Kind { valid, not_cycles, not_locally_finite, support_violation };
    Kind kind = Kind::valid;
    long long index = 0;            // offending term
    VertexId vertex = 0;            // offending vertex
    std::vector<long long> growth;  // meeting counts along the index pool

    bool valid() const { return kind == Kind::valid; }
    explicit operator bool() const { return valid(); }
};

// Sampled validation of a standard representation: every sampled term is a
// finite cycle; sampled terms avoid vertices outside their declared
// support; and for every vertex of the working ball the number of sampled
// terms meeting it must stay within the declared support size instead of
// growing with the sample budget.
inline RepresentationVerdict validate_standard_representation(const FiniteGraph& g,
                                                              const SymbolicChain& sc,
                                                              int sample_budget) {
    RepresentationVerdict v;
    std::vector<long long> pool = sc.index_pool(sample_budget);
    for (long long j : pool) {
        if (!is_cycle(g, sc.term(j))) {
            v.kind = RepresentationVerdict::Kind::not_cycles;
            v.index = j;
            return v;
        }
    }
    // Scan central vertices first: local-finiteness failures concentrate
    // where the terms pile up.
    std::vector<VertexId> order = g.vertices();
    std::sort(order.begin(), order.end(), [](VertexId a, VertexId b) {
        auto ka = std::make_pair(a < 0 ? -a : a, a);
        auto kb = std::make_pair(b < 0 ? -b : b, b);
        return ka < kb;
    });
    for (VertexId x : order) {
        std::vector<long long> decl = sc.support(x);
        std::set<long long> declared(decl.begin(), decl.end());
        std::vector<long long> growth;
        long long met = 0;
        long long first_violation = 0;
        bool violated = false;
        for (long long j : pool) {
            if (vertices_met(g, sc.term(j)).count(x)) {
                ++met;
                if (!declared.count(j) && !violated) {
                    violated = true;
                    first_violation = j;
                }
            }
            growth.push_back(met);
        }
        if (met > static_cast<long long>(declared.size())) {
            // More terms meet x than any declared support explains; if the
            // count is still climbing across the last third of the pool the
            // family is not locally finite at x.
            std::size_t third = std::max<std::size_t>(1, growth.size() / 3);
            bool climbing = growth.size() >= 3 &&
                            growth.back() > growth[growth.size() - 1 - third];
            v.kind = climbing ? RepresentationVerdict::Kind::not_locally_finite
                              : RepresentationVerdict::Kind::support_violation;
            v.vertex = x;
            v.index = first_violation;
            v.growth = std::move(growth);
            return v;
        }
        if (violated) {
            v.kind = RepresentationVerdict::Kind::support_violation;
            v.vertex = x;
            v.index = first_violation;
            v.growth = std::move(growth);
            return v;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Classical cyclomatic number, cross-checked against the GF(2) rank of
// chord parity vectors of derived cycles; brute-force oracle for the
// kernel tests.

inline int h1_dimension_f2(const FiniteGraph& g) {
    if (!is_connected(g)) throw std::invalid_argument("h1_dimension_f2 expects a connected graph");
    int c = static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + 1;
    RootedTree t = dfs_spanning_tree(g);
    ChordIndex idx = chord_index(g, t, [](VertexId) { return 0; });
    if (idx.size() > 60) return c;  // oracle is meant for desk-scale graphs

    auto parity_row = [&](const Walk& w) {
        std::uint64_t row = 0;
        for (const auto& [chord, count] : abelianize(trace(w, t, idx)))
            if (count % 2 != 0) row |= 1ull << chord;
        return row;
    };

    std::vector<std::uint64_t> rows;
    for (int k = 0; k < idx.size(); ++k)
        rows.push_back(parity_row(fundamental_circuit_walk(g, t, idx, k)));
    // A few pseudo-random closed walks; their parity vectors must stay in
    // the span of the circuit rows.
    std::mt19937_64 rng(0xC0FFEEull);
    for (int i = 0; i < 8 && !g.edges().empty(); ++i) {
        Walk w;
        w.start = g.vertices()[rng() % g.vertex_count()];
        VertexId at = w.start;
        for (int s = 0; s < 8; ++s) {
            const auto& inc = g.incident(at);
            if (inc.empty()) break;
            EdgeId e = inc[rng() % inc.size()];
            OrientedEdge oe{e, g.edge(e).tail == at};
            w.steps.push_back(oe);
            at = g.head(oe);
        }
        Walk back = tree_path_walk(g, t, at, w.start);
        w.steps.insert(w.steps.end(), back.steps.begin(), back.steps.end());
        rows.push_back(parity_row(w));
    }

    std::uint64_t piv[64] = {0};
    int rank = 0;
    for (std::uint64_t row : rows) {
        for (int b = 63; b >= 0; --b) {
            if (!((row >> b) & 1)) continue;
            if (!piv[b]) {
                piv[b] = row;
                ++rank;
                break;
            }
            row ^= piv[b];
        }
    }
    if (rank != c) throw std::logic_error("cyclomatic number disagrees with GF(2) rank");
    return c;
}

}  // namespace tcs
