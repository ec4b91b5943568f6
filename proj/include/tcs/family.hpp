// Locally finite infinite graphs presented as coherent families of finite
// truncation balls.
//
// ball(n) is the subgraph induced on all vertices of level <= n, with ids
// and natural directions independent of n, so ball(n) is literally an
// induced subobject of ball(n+1).  Each builtin family also declares one
// or two restriction-stable spanning trees by a per-vertex parent rule:
//
//   * the "canonical" tree, the tree the running examples of the word and
//     trace machinery are built on (for the ladders this is one stile plus
//     all rungs, which is a topological spanning tree but not a normal one);
//   * the "normal" tree, a zigzag spanning tree that is genuinely normal
//     (every non-tree edge joins tree-comparable vertices), used where
//     normality is load-bearing (nerves, contraction ranks).
//
// For tree-like families and finite graphs the two coincide.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tcs/graph.hpp"

namespace tcs {

enum class TreeKind { canonical, normal };

// Structured label of an edge: a family-specific kind character plus an
// integer index, e.g. ladder rung f_3 -> {'f', 3}.  Symbolic edge
// functions are closed-form rules on these tags.
struct EdgeTag {
    char kind = 'e';
    std::int64_t index = 0;
};

// Zigzag encoding of signed indices into naturals: 0,-1,1,-2,2 -> 0,1,2,3,4.
inline std::int64_t zigenc(std::int64_t n) { return n >= 0 ? 2 * n : -2 * n - 1; }

class LeveledFamily {
public:
    virtual ~LeveledFamily() = default;

    const std::string& name() const { return name_; }

    // Cached truncation ball; thread-safe.
    const FiniteGraph& ball(int depth) const {
        if (depth < 0) throw std::invalid_argument("negative depth");
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(depth);
        if (it == cache_.end())
            it = cache_.emplace(depth, build_ball(depth)).first;
        return it->second;
    }

    virtual int level(VertexId v) const = 0;
    virtual VertexId root() const = 0;

    // Parent rule of the requested spanning tree: (parent vertex, edge id).
    // Must satisfy level(parent) <= level(v) so that the tree restricted to
    // any ball spans that ball.
    virtual std::pair<VertexId, EdgeId> tree_parent(VertexId v, TreeKind kind) const = 0;

    virtual EdgeTag edge_tag(EdgeId e) const = 0;

    virtual std::string vertex_label(VertexId v) const { return std::to_string(v); }
    virtual std::string edge_label(EdgeId e) const {
        EdgeTag t = edge_tag(e);
        std::ostringstream os;
        os << t.kind << '_' << t.index;
        return os.str();
    }

    // Edges of a chord sequence converging to an end, for families that
    // have one; `branch` selects the end (0 = the id-least persistent
    // branch).  Also reports, per chord, the endpoint whose level certifies
    // convergence (level of the k-th witness >= k).
    virtual std::vector<std::pair<EdgeId, VertexId>> ray_chords(int branch, int count) const {
        (void)branch;
        (void)count;
        throw std::invalid_argument("family '" + name_ + "' has no chord rays");
    }

    // Number of ends approximated by the builtin construction, if known.
    virtual std::optional<int> known_end_count() const { return std::nullopt; }

protected:
    explicit LeveledFamily(std::string name) : name_(std::move(name)) {}
    virtual FiniteGraph build_ball(int depth) const = 0;

private:
    std::string name_;
    mutable std::mutex mutex_;
    mutable std::map<int, FiniteGraph> cache_;
};

using FamilyPtr = std::shared_ptr<const LeveledFamily>;

// ---------------------------------------------------------------------------
// ray: vertices 0,1,2,..., edges k: k -> k+1.

class RayFamily final : public LeveledFamily {
public:
    RayFamily() : LeveledFamily("ray") {}

    int level(VertexId v) const override { return static_cast<int>(v); }
    VertexId root() const override { return 0; }

    std::pair<VertexId, EdgeId> tree_parent(VertexId v, TreeKind) const override {
        if (v <= 0) throw std::invalid_argument("root has no parent");
        return {v - 1, v - 1};
    }

    EdgeTag edge_tag(EdgeId e) const override { return {'e', e}; }
    std::optional<int> known_end_count() const override { return 1; }

protected:
    FiniteGraph build_ball(int depth) const override {
        std::vector<VertexId> vs;
        std::vector<EdgeRec> es;
        for (int k = 0; k <= depth; ++k) vs.push_back(k);
        for (int k = 0; k < depth; ++k) es.push_back({k, k, k + 1});
        return FiniteGraph(std::move(vs), std::move(es));
    }
};

// ---------------------------------------------------------------------------
// zline: the 2-ended line with vertex set Z; edges e_n: n -> n+1 (id n).

class ZLineFamily final : public LeveledFamily {
public:
    ZLineFamily() : LeveledFamily("zline") {}

    int level(VertexId v) const override { return static_cast<int>(v < 0 ? -v : v); }
    VertexId root() const override { return 0; }

    std::pair<VertexId, EdgeId> tree_parent(VertexId v, TreeKind) const override {
        if (v == 0) throw std::invalid_argument("root has no parent");
        return v > 0 ? std::make_pair(v - 1, v - 1) : std::make_pair(v + 1, v);
    }

    EdgeTag edge_tag(EdgeId e) const override { return {'e', e}; }
    std::optional<int> known_end_count() const override { return 2; }

protected:
    FiniteGraph build_ball(int depth) const override {
        std::vector<VertexId> vs;
        std::vector<EdgeRec> es;
        for (int n = -depth; n <= depth; ++n) vs.push_back(n);
        for (int n = -depth; n < depth; ++n) es.push_back({n, n, n + 1});
        return FiniteGraph(std::move(vs), std::move(es));
    }
};

// ---------------------------------------------------------------------------
// ladder: the one-ended ladder.  Stile vertices u_k (ids 2k) and w_k
// (ids 2k+1), k >= 0; edges t_k = u_k u_{k+1} (id 3k), e_k = w_k w_{k+1}
// (id 3k+1), rungs f_k = u_k w_k (id 3k+2).  Both u_k and w_k sit at
// level k, so every ball is the full ladder segment up to index k.
//
// Canonical tree: the u-stile plus all rungs; its chords are exactly the
// bottom edges e_0, e_1, ... in chord-index order.  Normal tree: the
// zigzag spanning path u_0 w_0 w_1 u_1 u_2 w_2 w_3 u_3 u_4 ...

class LadderFamily final : public LeveledFamily {
public:
    LadderFamily() : LeveledFamily("ladder") {}

    static VertexId u(std::int64_t k) { return 2 * k; }
    static VertexId w(std::int64_t k) { return 2 * k + 1; }
    static EdgeId t_edge(std::int64_t k) { return 3 * k; }
    static EdgeId e_edge(std::int64_t k) { return 3 * k + 1; }
    static EdgeId f_edge(std::int64_t k) { return 3 * k + 2; }

    int level(VertexId v) const override { return static_cast<int>(v / 2); }
    VertexId root() const override { return u(0); }

    std::pair<VertexId, EdgeId> tree_parent(VertexId v, TreeKind kind) const override {
        std::int64_t k = v / 2;
        bool top = (v % 2 == 0);
        if (v == root()) throw std::invalid_argument("root has no parent");
        if (kind == TreeKind::canonical) {
            if (!top) return {u(k), f_edge(k)};          // w_k hangs off u_k
            return {u(k - 1), t_edge(k - 1)};            // u-stile chain
        }
        // Normal zigzag path.
        if (k == 0) return {u(0), f_edge(0)};            // w_0 <- u_0
        if (k % 2 == 1) {
            if (!top) return {w(k - 1), e_edge(k - 1)};  // w_k <- w_{k-1}
            return {w(k), f_edge(k)};                    // u_k <- w_k
        }
        if (top) return {u(k - 1), t_edge(k - 1)};       // u_k <- u_{k-1}
        return {u(k), f_edge(k)};                        // w_k <- u_k
    }

    EdgeTag edge_tag(EdgeId e) const override {
        static const char kinds[3] = {'t', 'e', 'f'};
        return {kinds[e % 3], e / 3};
    }

    std::string vertex_label(VertexId v) const override {
        std::ostringstream os;
        os << (v % 2 == 0 ? "u" : "w") << v / 2;
        return os.str();
    }

    std::vector<std::pair<EdgeId, VertexId>> ray_chords(int branch, int count) const override {
        if (branch != 0) throw std::invalid_argument("ladder has a single end");
        std::vector<std::pair<EdgeId, VertexId>> out;
        for (int k = 0; k < count; ++k) out.emplace_back(e_edge(k), w(k));
        return out;
    }

    std::optional<int> known_end_count() const override { return 1; }

protected:
    FiniteGraph build_ball(int depth) const override {
        std::vector<VertexId> vs;
        std::vector<EdgeRec> es;
        for (int k = 0; k <= depth; ++k) {
            vs.push_back(u(k));
            vs.push_back(w(k));
            es.push_back({f_edge(k), u(k), w(k)});
            if (k < depth) {
                es.push_back({t_edge(k), u(k), u(k + 1)});
                es.push_back({e_edge(k), w(k), w(k + 1)});
            }
        }
        return FiniteGraph(std::move(vs), std::move(es));
    }
};

// ---------------------------------------------------------------------------
// double_ladder: the 2-ended ladder with vertices v_n, v'_n (n in Z),
// edges e_n = v_n v_{n+1}, e'_n = v'_n v'_{n+1}, rungs f_n = v_n v'_n.
// Both v_n and v'_n sit at level |n|.
//
// Canonical tree: the v-stile plus all rungs (chords: all e'_n).
// Normal tree: stem v_0 < v'_0 followed by one zigzag chain per end.

class DoubleLadderFamily final : public LeveledFamily {
public:
    DoubleLadderFamily() : LeveledFamily("double_ladder") {}

    static VertexId v(std::int64_t n) { return 2 * zigenc(n); }
    static VertexId vp(std::int64_t n) { return 2 * zigenc(n) + 1; }
    static EdgeId e_edge(std::int64_t n) { return 6 * zigenc(n); }
    static EdgeId ep_edge(std::int64_t n) { return 6 * zigenc(n) + 1; }
    static EdgeId f_edge(std::int64_t n) { return 6 * zigenc(n) + 2; }

    static std::int64_t index_of_vertex(VertexId x) {
        std::int64_t z = x / 2;
        return z % 2 == 0 ? z / 2 : -(z + 1) / 2;
    }
    static bool is_prime_vertex(VertexId x) { return x % 2 == 1; }

    int level(VertexId x) const override {
        std::int64_t n = index_of_vertex(x);
        return static_cast<int>(n < 0 ? -n : n);
    }
    VertexId root() const override { return v(0); }

    std::pair<VertexId, EdgeId> tree_parent(VertexId x, TreeKind kind) const override {
        std::int64_t n = index_of_vertex(x);
        bool prime = is_prime_vertex(x);
        if (x == root()) throw std::invalid_argument("root has no parent");
        if (kind == TreeKind::canonical) {
            if (prime) return {v(n), f_edge(n)};
            return n > 0 ? std::make_pair(v(n - 1), e_edge(n - 1))
                         : std::make_pair(v(n + 1), e_edge(n));
        }
        // Normal double-zigzag tree.
        if (n == 0) return {v(0), f_edge(0)};  // v'_0 <- v_0
        if (n > 0) {
            if (prime)
                return n % 2 == 1 ? std::make_pair(vp(n - 1), ep_edge(n - 1))
                                  : std::make_pair(v(n), f_edge(n));
            return n % 2 == 1 ? std::make_pair(vp(n), f_edge(n))
                              : std::make_pair(v(n - 1), e_edge(n - 1));
        }
        std::int64_t m = -n;
        if (prime)
            return m % 2 == 1 ? std::make_pair(vp(n + 1), ep_edge(n))
                              : std::make_pair(v(n), f_edge(n));
        return m % 2 == 1 ? std::make_pair(vp(n), f_edge(n))
                          : std::make_pair(v(n + 1), e_edge(n));
    }

    EdgeTag edge_tag(EdgeId e) const override {
        static const char kinds[3] = {'e', 'p', 'f'};  // 'p' = primed stile edge
        std::int64_t z = e / 6;
        std::int64_t n = z % 2 == 0 ? z / 2 : -(z + 1) / 2;
        return {kinds[e % 6 % 3], n};
    }

    std::string vertex_label(VertexId x) const override {
        std::ostringstream os;
        os << 'v' << (is_prime_vertex(x) ? "'" : "") << index_of_vertex(x);
        return os.str();
    }

    std::string edge_label(EdgeId e) const override {
        EdgeTag t = edge_tag(e);
        std::ostringstream os;
        if (t.kind == 'p')
            os << "e'_" << t.index;
        else
            os << t.kind << '_' << t.index;
        return os.str();
    }

    // branch 0: the right end (chords e'_0, e'_1, ...); branch 1: the left.
    std::vector<std::pair<EdgeId, VertexId>> ray_chords(int branch, int count) const override {
        std::vector<std::pair<EdgeId, VertexId>> out;
        for (int k = 0; k < count; ++k) {
            std::int64_t n = branch == 0 ? k : -(k + 1);
            out.emplace_back(ep_edge(n), vp(n));
        }
        return out;
    }

    std::optional<int> known_end_count() const override { return 2; }

protected:
    FiniteGraph build_ball(int depth) const override {
        std::vector<VertexId> vs;
        std::vector<EdgeRec> es;
        for (int n = -depth; n <= depth; ++n) {
            vs.push_back(v(n));
            vs.push_back(vp(n));
            es.push_back({f_edge(n), v(n), vp(n)});
            if (n < depth) {
                es.push_back({e_edge(n), v(n), v(n + 1)});
                es.push_back({ep_edge(n), vp(n), vp(n + 1)});
            }
        }
        return FiniteGraph(std::move(vs), std::move(es));
    }
};

// ---------------------------------------------------------------------------
// binary_tree: the rooted infinite binary tree in heap indexing; vertex k
// has children 2k, 2k+1; edge above k has id k.

class BinaryTreeFamily final : public LeveledFamily {
public:
    BinaryTreeFamily() : LeveledFamily("binary_tree") {}

    static int heap_depth(std::int64_t k) {
        int d = 0;
        while (k > 1) {
            k /= 2;
            ++d;
        }
        return d;
    }

    int level(VertexId v) const override { return heap_depth(v); }
    VertexId root() const override { return 1; }

    std::pair<VertexId, EdgeId> tree_parent(VertexId v, TreeKind) const override {
        if (v <= 1) throw std::invalid_argument("root has no parent");
        return {v / 2, v};
    }

    EdgeTag edge_tag(EdgeId e) const override { return {'e', e}; }

protected:
    FiniteGraph build_ball(int depth) const override {
        std::vector<VertexId> vs;
        std::vector<EdgeRec> es;
        std::int64_t limit = (std::int64_t{1} << (depth + 1)) - 1;
        for (std::int64_t k = 1; k <= limit; ++k) {
            vs.push_back(k);
            if (k >= 2) es.push_back({k, k / 2, k});
        }
        return FiniteGraph(std::move(vs), std::move(es));
    }
};

// ---------------------------------------------------------------------------
// binary_tree_doubled: the binary tree with every edge doubled and the new
// copies subdivided once.  The subdivided copies form a normal spanning
// tree; the chords are the original tree edges.
//
// Original vertex k -> id 2k; subdivision vertex on the edge above k -> id
// 2k+1 (k >= 2).  Per k >= 2: chord (orig parent, orig k) id 3k, upper
// tree edge (orig parent, mid) id 3k+1, lower tree edge (mid, orig k) id
// 3k+2.  level(orig k) = level(mid above k) = heap depth of k.

class BinaryTreeDoubledFamily final : public LeveledFamily {
public:
    BinaryTreeDoubledFamily() : LeveledFamily("binary_tree_doubled") {}

    static VertexId orig(std::int64_t k) { return 2 * k; }
    static VertexId mid(std::int64_t k) { return 2 * k + 1; }
    static EdgeId chord_edge(std::int64_t k) { return 3 * k; }
    static EdgeId upper_edge(std::int64_t k) { return 3 * k + 1; }
    static EdgeId lower_edge(std::int64_t k) { return 3 * k + 2; }

    int level(VertexId v) const override {
        return BinaryTreeFamily::heap_depth(v / 2);
    }
    VertexId root() const override { return orig(1); }

    std::pair<VertexId, EdgeId> tree_parent(VertexId v, TreeKind) const override {
        std::int64_t k = v / 2;
        if (v == root()) throw std::invalid_argument("root has no parent");
        if (v % 2 == 1) return {orig(k / 2), upper_edge(k)};  // mid above k
        return {mid(k), lower_edge(k)};                       // orig k
    }

    EdgeTag edge_tag(EdgeId e) const override {
        static const char kinds[3] = {'c', 'u', 'l'};
        return {kinds[e % 3], e / 3};
    }

    // Chords along the leftmost spine: original edges above 2, 4, 8, ...
    // with the deeper endpoint as convergence witness.
    std::vector<std::pair<EdgeId, VertexId>> ray_chords(int branch, int count) const override {
        if (branch != 0) throw std::invalid_argument("only the leftmost spine ray is built in");
        std::vector<std::pair<EdgeId, VertexId>> out;
        std::int64_t k = 2;
        for (int j = 0; j < count; ++j, k *= 2) out.emplace_back(chord_edge(k), orig(k));
        return out;
    }

protected:
    FiniteGraph build_ball(int depth) const override {
        std::vector<VertexId> vs;
        std::vector<EdgeRec> es;
        std::int64_t limit = (std::int64_t{1} << (depth + 1)) - 1;
        vs.push_back(orig(1));
        for (std::int64_t k = 2; k <= limit; ++k) {
            vs.push_back(orig(k));
            vs.push_back(mid(k));
            es.push_back({chord_edge(k), orig(k / 2), orig(k)});
            es.push_back({upper_edge(k), orig(k / 2), mid(k)});
            es.push_back({lower_edge(k), mid(k), orig(k)});
        }
        return FiniteGraph(std::move(vs), std::move(es));
    }
};

// ---------------------------------------------------------------------------
// finite(g): a finite connected graph wrapped as a (compact) family.
// Levels are BFS distances from the least vertex id; balls stabilize at
// the eccentricity of the root.  Tree parents follow an id-ordered DFS of
// the full graph, which is a normal spanning tree.

class FiniteFamily final : public LeveledFamily {
public:
    explicit FiniteFamily(FiniteGraph g, std::string tag = "finite")
        : LeveledFamily(std::move(tag)), graph_(std::move(g)) {
        if (graph_.vertices().empty()) throw std::invalid_argument("empty graph");
        if (!is_connected(graph_)) throw std::invalid_argument("finite family must be connected");
        root_ = graph_.vertices().front();
        // BFS levels.
        std::queue<VertexId> q;
        q.push(root_);
        level_[root_] = 0;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            for (EdgeId e : graph_.incident(u)) {
                VertexId w = graph_.other_end(e, u);
                if (level_.count(w)) continue;
                level_[w] = level_[u] + 1;
                q.push(w);
            }
        }
        // Id-ordered DFS spanning tree (recursion-free).
        std::vector<VertexId> stack{root_};
        std::set<VertexId> seen{root_};
        while (!stack.empty()) {
            VertexId u = stack.back();
            bool advanced = false;
            for (EdgeId e : graph_.incident(u)) {  // incident ids sorted
                VertexId w = graph_.other_end(e, u);
                if (seen.count(w)) continue;
                parent_[w] = {u, e};
                seen.insert(w);
                stack.push_back(w);
                advanced = true;
                break;
            }
            if (!advanced) stack.pop_back();
        }
    }

    const FiniteGraph& graph() const { return graph_; }

    int level(VertexId v) const override {
        auto it = level_.find(v);
        if (it == level_.end()) throw std::out_of_range("unknown vertex");
        return it->second;
    }
    VertexId root() const override { return root_; }

    std::pair<VertexId, EdgeId> tree_parent(VertexId v, TreeKind) const override {
        auto it = parent_.find(v);
        if (it == parent_.end()) throw std::invalid_argument("root has no parent");
        return it->second;
    }

    EdgeTag edge_tag(EdgeId e) const override { return {'e', e}; }
    std::optional<int> known_end_count() const override { return 0; }

protected:
    FiniteGraph build_ball(int depth) const override {
        std::vector<VertexId> vs;
        std::vector<EdgeRec> es;
        for (VertexId v : graph_.vertices())
            if (level(v) <= depth) vs.push_back(v);
        for (const EdgeRec& e : graph_.edges())
            if (level(e.tail) <= depth && level(e.head) <= depth) es.push_back(e);
        return FiniteGraph(std::move(vs), std::move(es));
    }

private:
    FiniteGraph graph_;
    VertexId root_ = 0;
    std::map<VertexId, int> level_;
    std::map<VertexId, std::pair<VertexId, EdgeId>> parent_;
};

// ---------------------------------------------------------------------------

inline FiniteGraph named_finite_graph(const std::string& which) {
    auto path = [](int n) {
        std::vector<VertexId> vs;
        std::vector<EdgeRec> es;
        for (int i = 0; i < n; ++i) vs.push_back(i);
        for (int i = 0; i + 1 < n; ++i) es.push_back({i, i, i + 1});
        return FiniteGraph(vs, es);
    };
    auto cycle = [](int n) {
        std::vector<VertexId> vs;
        std::vector<EdgeRec> es;
        for (int i = 0; i < n; ++i) vs.push_back(i);
        for (int i = 0; i < n; ++i) es.push_back({i, i, (i + 1) % n});
        return FiniteGraph(vs, es);
    };
    auto complete = [](int n) {
        std::vector<VertexId> vs;
        std::vector<EdgeRec> es;
        EdgeId id = 0;
        for (int i = 0; i < n; ++i) vs.push_back(i);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) es.push_back({id++, i, j});
        return FiniteGraph(vs, es);
    };
    if (which == "K1") return FiniteGraph({0}, {});
    if (which == "K2" || which == "single_edge") return path(2);
    if (which == "P3") return path(3);
    if (which == "C3" || which == "K3") return cycle(3);
    if (which == "C4") return cycle(4);
    if (which == "C5") return cycle(5);
    if (which == "K4") return complete(4);
    throw std::invalid_argument("unknown named graph '" + which + "'");
}

inline FamilyPtr make_family(const std::string& name) {
    if (name == "ray") return std::make_shared<RayFamily>();
    if (name == "zline") return std::make_shared<ZLineFamily>();
    if (name == "ladder") return std::make_shared<LadderFamily>();
    if (name == "double_ladder") return std::make_shared<DoubleLadderFamily>();
    if (name == "binary_tree") return std::make_shared<BinaryTreeFamily>();
    if (name == "binary_tree_doubled") return std::make_shared<BinaryTreeDoubledFamily>();
    if (name.rfind("finite:", 0) == 0) {
        std::string which = name.substr(7);
        return std::make_shared<FiniteFamily>(named_finite_graph(which), "finite:" + which);
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

}  // namespace tcs
