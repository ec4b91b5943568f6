// Symbolic chains of the running examples: the double-ladder square
// family and the line family of telescoping boundaries that fails local
// finiteness at the origin.

#pragma once

#include <algorithm>
#include <memory>

#include "tcs/chains.hpp"
#include "tcs/family.hpp"

namespace tcs {

// z_j: the square walk v_j -> v_{j+1} -> v'_{j+1} -> v'_j -> v_j of the
// double ladder.  Net traversal: +e_j, +f_{j+1}, -e'_j, -f_j.
inline Chain1 double_ladder_square(long long j) {
    using F = DoubleLadderFamily;
    Walk w;
    w.start = F::v(j);
    w.steps = {{F::e_edge(j), true},
               {F::f_edge(j + 1), true},
               {F::ep_edge(j), false},
               {F::f_edge(j), false}};
    Chain1 c;
    c.add(1, w);
    return c;
}

// The square family as a symbolic chain; its edge image is +1 on e_n,
// -1 on e'_n and 0 on every rung.  `max_abs_index` clips the sampling
// pool so that sampled squares stay inside the working ball (evaluation
// of the edge image is unaffected: net traversals are formal).
inline SymbolicChain double_ladder_square_family(int max_abs_index = 1 << 20) {
    SymbolicChain sc;
    sc.term = [](long long j) { return double_ladder_square(j); };
    sc.support = [](VertexId x) {
        long long n = DoubleLadderFamily::index_of_vertex(x);
        return std::vector<long long>{n - 1, n};
    };
    sc.index_pool = [max_abs_index](int budget) {
        std::vector<long long> pool;
        int cap = std::min(budget, max_abs_index);
        for (int a = 0; a <= cap; ++a) {
            pool.push_back(a);
            if (a > 0) pool.push_back(-a);
        }
        return pool;
    };
    sc.cycle_flag = true;
    return sc;
}

// Straight walk m -> n along the line (m < n).
inline Walk line_segment_walk(long long m, long long n) {
    Walk w;
    w.start = m;
    for (long long i = m; i < n; ++i) w.steps.push_back({i, true});
    return w;
}

// The telescoping boundary family on the line: every term is a genuine
// finite boundary of the form (segment + segment - combined segment), yet
// every term's image passes through the origin, so the family is not
// locally finite there.  The declared support is deliberately the honest
// finite one (indices of terms with an endpoint at the vertex), which the
// growth check exposes as inadequate.
inline SymbolicChain line_cancelling_boundary_family(int max_index = 1 << 20) {
    SymbolicChain sc;
    sc.term = [](long long idx) {
        Chain1 c;
        if (idx % 2 == 0) {
            long long i = idx / 2;
            c.add(1, line_segment_walk(-(i + 1), i));
            c.add(1, line_segment_walk(i, i + 1));
            c.add(-1, line_segment_walk(-(i + 1), i + 1));
        } else {
            long long i = (idx - 1) / 2;
            c.add(1, line_segment_walk(-(i + 2), -(i + 1)));
            c.add(1, line_segment_walk(-(i + 1), i + 1));
            c.add(-1, line_segment_walk(-(i + 2), i + 1));
        }
        return c;
    };
    sc.support = [](VertexId x) {
        // Indices whose segment endpoints include x; the naive finite
        // declaration, which the interiors of the segments outgrow.
        std::vector<long long> s;
        if (x >= 0) s.push_back(2 * x);
        if (x >= 1) {
            s.push_back(2 * (x - 1));
            s.push_back(2 * x - 1);
        }
        if (x <= -1) {
            s.push_back(2 * (-x - 1));
            s.push_back(-2 * x - 1);
        }
        if (x <= -2) s.push_back(-2 * x - 3);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    };
    sc.index_pool = [max_index](int budget) {
        std::vector<long long> pool;
        for (int idx = 0; idx <= std::min(budget, max_index); ++idx) pool.push_back(idx);
        return pool;
    };
    sc.cycle_flag = true;
    return sc;
}

}  // namespace tcs
