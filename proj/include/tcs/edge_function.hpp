// Antisymmetric integer functions on oriented edges and thin sums.
//
// Only the value on the natural orientation is ever stored or produced;
// antisymmetry phi(reverse) = -phi(forward) holds by construction.  A
// function is either of finite support (explicit map) or symbolic (a
// closed-form rule per edge id, typically derived from a family's edge
// tags, so that it can answer every edge of every ball).

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tcs/family.hpp"
#include "tcs/graph.hpp"

namespace tcs {

class EdgeFunction {
public:
    EdgeFunction() : finite_(std::make_shared<std::map<EdgeId, long long>>()) {}

    static EdgeFunction zero() { return EdgeFunction(); }

    static EdgeFunction finite(std::map<EdgeId, long long> values) {
        EdgeFunction f;
        auto m = std::make_shared<std::map<EdgeId, long long>>(std::move(values));
        for (auto it = m->begin(); it != m->end();)
            it = it->second == 0 ? m->erase(it) : std::next(it);
        f.finite_ = std::move(m);
        return f;
    }

    static EdgeFunction symbolic(std::string name, std::function<long long(EdgeId)> rule) {
        EdgeFunction f;
        f.finite_.reset();
        f.rule_name_ = std::move(name);
        f.rule_ = std::move(rule);
        return f;
    }

    bool finite_support() const { return finite_ != nullptr; }

    const std::map<EdgeId, long long>& values() const {
        if (!finite_) throw std::logic_error("symbolic edge function has no explicit support");
        return *finite_;
    }

    const std::string& rule_name() const { return rule_name_; }

    // Value on the natural orientation.
    long long natural(EdgeId e) const {
        if (finite_) {
            auto it = finite_->find(e);
            return it == finite_->end() ? 0 : it->second;
        }
        return rule_(e);
    }

    long long operator()(const OrientedEdge& oe) const {
        long long v = natural(oe.edge);
        return oe.forward ? v : -v;
    }

    friend EdgeFunction operator+(const EdgeFunction& a, const EdgeFunction& b) {
        if (a.finite_ && b.finite_) {
            std::map<EdgeId, long long> m = *a.finite_;
            for (const auto& [e, v] : *b.finite_) m[e] += v;
            return finite(std::move(m));
        }
        return symbolic("(" + a.describe() + "+" + b.describe() + ")",
                        [a, b](EdgeId e) { return a.natural(e) + b.natural(e); });
    }

    friend EdgeFunction operator-(const EdgeFunction& a, const EdgeFunction& b) {
        return a + (b * -1);
    }

    friend EdgeFunction operator*(const EdgeFunction& a, long long c) {
        if (a.finite_) {
            std::map<EdgeId, long long> m;
            for (const auto& [e, v] : *a.finite_) m[e] = c * v;
            return finite(std::move(m));
        }
        return symbolic(a.describe() + "*" + std::to_string(c),
                        [a, c](EdgeId e) { return c * a.natural(e); });
    }

    bool is_zero_on(const FiniteGraph& g) const {
        for (const EdgeRec& e : g.edges())
            if (natural(e.id) != 0) return false;
        return true;
    }

    bool equals_on(const FiniteGraph& g, const EdgeFunction& other) const {
        for (const EdgeRec& e : g.edges())
            if (natural(e.id) != other.natural(e.id)) return false;
        return true;
    }

    std::string describe() const {
        return finite_ ? std::string("finite") : rule_name_;
    }

private:
    std::shared_ptr<const std::map<EdgeId, long long>> finite_;  // null for symbolic
    std::function<long long(EdgeId)> rule_;
    std::string rule_name_;
};

// Net traversal counts of a walk: +1 per natural-direction pass, -1 per
// reverse pass.  Purely formal, no host graph needed.
inline EdgeFunction net_traversal(const Walk& w) {
    std::map<EdgeId, long long> m;
    for (const OrientedEdge& s : w.steps) m[s.edge] += s.forward ? 1 : -1;
    return EdgeFunction::finite(std::move(m));
}

// Forward/backward pass counts per edge; the second, independent route to
// the net counts.
inline std::map<EdgeId, std::pair<long long, long long>> pass_counts(const Walk& w) {
    std::map<EdgeId, std::pair<long long, long long>> m;
    for (const OrientedEdge& s : w.steps) {
        auto& p = m[s.edge];
        (s.forward ? p.first : p.second)++;
    }
    return m;
}

// Pointwise parity of an edge function; values land in {0, 1}.  Mod 2 the
// two orientations agree, so the natural-orientation representation is the
// whole datum.
inline EdgeFunction mod2(const EdgeFunction& phi) {
    if (phi.finite_support()) {
        std::map<EdgeId, long long> m;
        for (const auto& [e, v] : phi.values()) m[e] = ((v % 2) + 2) % 2;
        return EdgeFunction::finite(std::move(m));
    }
    return EdgeFunction::symbolic(phi.describe() + " mod 2", [phi](EdgeId e) {
        return ((phi.natural(e) % 2) + 2) % 2;
    });
}

// A family of edge functions declared thin: for every edge, the declared
// support lists every index whose term may be nonzero there.
struct ThinFamily {
    // Finite presentation ...
    std::vector<EdgeFunction> finite_terms;
    // ... or a generator with declared per-edge support.
    std::function<EdgeFunction(long long)> term;
    std::function<std::vector<long long>(EdgeId)> support;
    // Index pool used for thinness validation of generator families.
    std::vector<long long> sample_pool;

    bool is_generator() const { return static_cast<bool>(term); }
};

struct ThinnessViolation : std::runtime_error {
    EdgeId edge;
    long long index;
    ThinnessViolation(EdgeId e, long long i)
        : std::runtime_error("thinness violation: term " + std::to_string(i) +
                             " is nonzero on edge " + std::to_string(e) +
                             " outside its declared support"),
          edge(e), index(i) {}
};

// Pointwise sum of a thin family.  For generator families the result is
// symbolic and, when a validation graph is given, every pool index outside
// an edge's declared support is checked to vanish there.
inline EdgeFunction thin_sum(const ThinFamily& fam) {
    if (!fam.is_generator()) {
        EdgeFunction acc = EdgeFunction::zero();
        for (const EdgeFunction& t : fam.finite_terms) acc = acc + t;
        return acc;
    }
    auto term = fam.term;
    auto support = fam.support;
    return EdgeFunction::symbolic("thin-sum", [term, support](EdgeId e) {
        long long v = 0;
        for (long long i : support(e)) v += term(i).natural(e);
        return v;
    });
}

inline EdgeFunction thin_sum(const ThinFamily& fam, const FiniteGraph& validate_on) {
    if (fam.is_generator()) {
        for (const EdgeRec& e : validate_on.edges()) {
            std::set<long long> decl;
            for (long long i : fam.support(e.id)) decl.insert(i);
            for (long long i : fam.sample_pool) {
                if (decl.count(i)) continue;
                if (fam.term(i).natural(e.id) != 0) throw ThinnessViolation(e.id, i);
            }
        }
    }
    return thin_sum(fam);
}

// Named closed-form edge functions of the builtin families.
inline EdgeFunction named_edge_function(const FamilyPtr& fam, const std::string& rule) {
    if (rule == "zero") return EdgeFunction::zero();
    const std::string& fname = fam->name();
    if (fname == "double_ladder") {
        if (rule == "stiles-forward")
            return EdgeFunction::symbolic(rule, [fam](EdgeId e) {
                return fam->edge_tag(e).kind == 'e' ? 1 : 0;
            });
        if (rule == "stiles-prime-forward")
            return EdgeFunction::symbolic(rule, [fam](EdgeId e) {
                return fam->edge_tag(e).kind == 'p' ? 1 : 0;
            });
        if (rule == "psi")
            return EdgeFunction::symbolic(rule, [fam](EdgeId e) {
                char k = fam->edge_tag(e).kind;
                return k == 'e' ? 1 : k == 'p' ? -1 : 0;
            });
    }
    if (fname == "ladder") {
        if (rule == "bottom-forward")
            return EdgeFunction::symbolic(rule, [fam](EdgeId e) {
                return fam->edge_tag(e).kind == 'e' ? 1 : 0;
            });
    }
    throw std::invalid_argument("unknown rule '" + rule + "' for family '" + fname + "'");
}

}  // namespace tcs
