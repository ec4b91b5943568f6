// Finite words over oriented-chord letters and their reductions in the
// free group on the chords.
//
// A letter is a chord index with an orientation.  A reduction is an
// ordered list of position pairs, each pair adjacent among the surviving
// positions at its turn and carrying inverse letters; replaying a
// reduction validates it.  A position is permanent if no reduction ever
// deletes it.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcs {

struct Letter {
    int chord = 0;
    bool forward = true;

    Letter inverse() const { return {chord, !forward}; }

    friend bool operator==(const Letter& a, const Letter& b) {
        return a.chord == b.chord && a.forward == b.forward;
    }
    friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
    friend bool operator<(const Letter& a, const Letter& b) {
        return a.chord != b.chord ? a.chord < b.chord : a.forward < b.forward;
    }
};

using FiniteWord = std::vector<Letter>;

inline std::string to_string(const Letter& l) {
    return (l.forward ? "+" : "-") + std::to_string(l.chord);
}

inline std::string to_string(const FiniteWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += to_string(w[i]);
    }
    return s;
}

// Stack-based cancellation of adjacent inverse pairs; the free-group
// normal form.
inline FiniteWord reduce(const FiniteWord& w) {
    FiniteWord out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back() == l.inverse())
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline bool is_reduced(const FiniteWord& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] == w[i].inverse()) return false;
    return true;
}

inline FiniteWord inverse(const FiniteWord& w) {
    FiniteWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

// Group multiplication of reduced words.
inline FiniteWord multiply(const FiniteWord& a, const FiniteWord& b) {
    if (!is_reduced(a) || !is_reduced(b))
        throw std::invalid_argument("multiply expects reduced words");
    FiniteWord c = a;
    c.insert(c.end(), b.begin(), b.end());
    return reduce(c);
}

// Subsequence of letters whose chord lies in I, order inherited.
inline FiniteWord restrict_word(const FiniteWord& w, const std::set<int>& I) {
    FiniteWord out;
    for (const Letter& l : w)
        if (I.count(l.chord)) out.push_back(l);
    return out;
}

inline std::set<int> prefix_index_set(int n) {
    std::set<int> I;
    for (int i = 0; i <= n; ++i) I.insert(i);
    return I;
}

// ---------------------------------------------------------------------------
// Reductions as explicit replayable objects.

struct Reduction {
    // Position pairs in the original word, in deletion order.
    std::vector<std::pair<int, int>> pairs;
};

// Replays R on w; returns the residue word, or nullopt if some pair is not
// an adjacent inverse pair at its turn.
inline std::optional<FiniteWord> replay_reduction(const FiniteWord& w, const Reduction& r) {
    std::vector<bool> alive(w.size(), true);
    auto next_alive = [&](int i) {
        int j = i + 1;
        while (j < static_cast<int>(w.size()) && !alive[j]) ++j;
        return j;
    };
    for (auto [a, b] : r.pairs) {
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= static_cast<int>(w.size())) return std::nullopt;
        if (!alive[a] || !alive[b]) return std::nullopt;
        if (next_alive(a) != b) return std::nullopt;
        if (w[a] != w[b].inverse()) return std::nullopt;
        alive[a] = alive[b] = false;
    }
    FiniteWord residue;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (alive[i]) residue.push_back(w[i]);
    return residue;
}

namespace detail {

inline void enumerate_reductions(const FiniteWord& w, std::vector<bool>& alive,
                                 std::vector<std::pair<int, int>>& current,
                                 std::vector<Reduction>& out, std::size_t guard) {
    if (out.size() > guard) throw std::length_error("reduction enumeration exploded");
    out.push_back(Reduction{current});
    int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        int j = i + 1;
        while (j < n && !alive[j]) ++j;
        if (j >= n) break;
        if (w[i] != w[j].inverse()) continue;
        alive[i] = alive[j] = false;
        current.emplace_back(i, j);
        enumerate_reductions(w, alive, current, out, guard);
        current.pop_back();
        alive[i] = alive[j] = true;
    }
}

}  // namespace detail

// Exhaustive enumeration of every reduction (every legal ordered deletion
// sequence, including the empty one).  Brute-force oracle; |w| <= 10.
inline std::vector<Reduction> all_reductions(const FiniteWord& w) {
    if (w.size() > 10) throw std::invalid_argument("all_reductions: word longer than 10");
    std::vector<Reduction> out;
    std::vector<bool> alive(w.size(), true);
    std::vector<std::pair<int, int>> current;
    detail::enumerate_reductions(w, alive, current, out, 2'000'000);
    return out;
}

// Mask-based engine behind the enumeration oracle for words up to 20
// letters: the set of position subsets reachable by reductions.
inline std::set<std::uint32_t> reachable_masks(const FiniteWord& w) {
    int n = static_cast<int>(w.size());
    if (n > 20) throw std::invalid_argument("reachable_masks: word longer than 20");
    std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::set<std::uint32_t> seen{full};
    std::vector<std::uint32_t> queue{full};
    while (!queue.empty()) {
        std::uint32_t m = queue.back();
        queue.pop_back();
        int prev = -1;
        for (int i = 0; i < n; ++i) {
            if (!(m & (1u << i))) continue;
            if (prev >= 0 && w[prev] == w[i].inverse()) {
                std::uint32_t next = m & ~(1u << prev) & ~(1u << i);
                if (seen.insert(next).second) queue.push_back(next);
            }
            prev = i;
        }
    }
    return seen;
}

// Residues of all maximal reductions (oracle route to the normal form).
inline std::set<FiniteWord> oracle_reduced_residues(const FiniteWord& w) {
    int n = static_cast<int>(w.size());
    std::set<FiniteWord> residues;
    for (std::uint32_t m : reachable_masks(w)) {
        FiniteWord res;
        for (int i = 0; i < n; ++i)
            if (m & (1u << i)) res.push_back(w[i]);
        if (is_reduced(res)) residues.insert(res);
    }
    return residues;
}

// Positions deleted by at least one reduction (oracle route to permanence).
inline std::vector<bool> oracle_deletable_positions(const FiniteWord& w) {
    int n = static_cast<int>(w.size());
    std::vector<bool> deletable(n, false);
    for (std::uint32_t m : reachable_masks(w))
        for (int i = 0; i < n; ++i)
            if (!(m & (1u << i))) deletable[i] = true;
    return deletable;
}

// A position s is non-permanent iff some position s' with the inverse
// letter has the stretch strictly between s and s' reduce to the empty
// word; then that stretch can be cancelled away and {s, s'} deleted.
inline bool is_permanent(const FiniteWord& w, int s) {
    if (s < 0 || s >= static_cast<int>(w.size())) throw std::out_of_range("position out of range");
    for (int t = 0; t < static_cast<int>(w.size()); ++t) {
        if (t == s || w[t] != w[s].inverse()) continue;
        int lo = std::min(s, t), hi = std::max(s, t);
        FiniteWord between(w.begin() + lo + 1, w.begin() + hi);
        if (reduce(between).empty()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

// Maximal cancellation at the junction of two reduced words: returns
// (w2', w, w0') with w2 = w2'·w, w0 = w^-·w0' and r(w2 w0) = w2'·w0'
// already reduced.
struct CancellationSplit {
    FiniteWord left;       // w2'
    FiniteWord cancelled;  // w
    FiniteWord right;      // w0'
};

inline CancellationSplit cancellation_split(const FiniteWord& w2, const FiniteWord& w0) {
    if (!is_reduced(w2) || !is_reduced(w0))
        throw std::invalid_argument("cancellation_split expects reduced words");
    int i = static_cast<int>(w2.size()) - 1;
    int j = 0;
    while (i >= 0 && j < static_cast<int>(w0.size()) && w2[i] == w0[j].inverse()) {
        --i;
        ++j;
    }
    CancellationSplit s;
    s.left.assign(w2.begin(), w2.begin() + i + 1);
    s.cancelled.assign(w2.begin() + i + 1, w2.end());
    s.right.assign(w0.begin() + j, w0.end());
    return s;
}

// Net signed chord counts of a word.
inline std::map<int, long long> abelianize(const FiniteWord& w) {
    std::map<int, long long> m;
    for (const Letter& l : w) m[l.chord] += l.forward ? 1 : -1;
    for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
    return m;
}

}  // namespace tcs
