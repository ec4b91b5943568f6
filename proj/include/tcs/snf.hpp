// Smith normal form of integer matrices with transformation matrices,
// using minimal-magnitude pivoting to keep entries small.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace tcs {

using IntMatrix = std::vector<std::vector<long long>>;

inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), m = b[0].size(), k = b.size();
    IntMatrix c(n, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            long long av = a[i][t];
            if (av == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += av * b[t][j];
        }
    return c;
}

struct SNFResult {
    IntMatrix u, v;                   // unimodular row/column transforms
    std::vector<long long> diagonal;  // nonneg, divisibility chain
    int rank = 0;
};

// U * A * V = diag(diagonal).  Classic elimination: bring the minimal
// nonzero entry to the pivot, clear its row and column by division steps,
// restore the divisibility chain at the end.
inline SNFResult smith_normal_form(IntMatrix a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    SNFResult res;
    res.u = identity_matrix(rows);
    res.v = identity_matrix(cols);

    auto row_op = [&](std::size_t i, std::size_t j, long long q) {  // row i -= q * row j
        for (std::size_t t = 0; t < cols; ++t) a[i][t] -= q * a[j][t];
        for (std::size_t t = 0; t < rows; ++t) res.u[i][t] -= q * res.u[j][t];
    };
    auto col_op = [&](std::size_t i, std::size_t j, long long q) {  // col i -= q * col j
        for (std::size_t t = 0; t < rows; ++t) a[t][i] -= q * a[t][j];
        for (std::size_t t = 0; t < cols; ++t) res.v[t][i] -= q * res.v[t][j];
    };
    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(res.u[i], res.u[j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < rows; ++t) std::swap(a[t][i], a[t][j]);
        for (std::size_t t = 0; t < cols; ++t) std::swap(res.v[t][i], res.v[t][j]);
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t t = 0; t < cols; ++t) a[i][t] = -a[i][t];
        for (std::size_t t = 0; t < rows; ++t) res.u[i][t] = -res.u[i][t];
    };

    std::size_t r = 0;
    while (true) {
        // Minimal nonzero entry in the remaining block.
        long long best = 0;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = r; i < rows; ++i)
            for (std::size_t j = r; j < cols; ++j) {
                long long v = std::abs(a[i][j]);
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best == 0) break;
        row_swap(r, bi);
        col_swap(r, bj);
        if (a[r][r] < 0) row_negate(r);

        bool clean = true;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][r] == 0) continue;
            long long q = a[i][r] / a[r][r];
            row_op(i, r, q);
            if (a[i][r] != 0) clean = false;
        }
        for (std::size_t j = r + 1; j < cols; ++j) {
            if (a[r][j] == 0) continue;
            long long q = a[r][j] / a[r][r];
            col_op(j, r, q);
            if (a[r][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; re-pivot

        // Pivot must divide the rest of the block for the chain property;
        // if not, fold an offending row in and retry.
        bool divides = true;
        for (std::size_t i = r + 1; i < rows && divides; ++i)
            for (std::size_t j = r + 1; j < cols && divides; ++j)
                if (a[i][j] % a[r][r] != 0) {
                    row_op(r, i, -1);  // add row i to row r
                    divides = false;
                }
        if (!divides) continue;
        ++r;
    }

    res.rank = static_cast<int>(r);
    res.diagonal.assign(std::min(rows, cols), 0);
    for (std::size_t i = 0; i < r; ++i) res.diagonal[i] = a[i][i];
    return res;
}

// Rank by fraction-free (Bareiss) elimination over the rationals;
// an independent oracle for the SNF rank.
inline int bareiss_rank(IntMatrix a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    long long prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace tcs
