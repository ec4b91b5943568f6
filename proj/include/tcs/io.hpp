// JSON interchange and word text formats.
//
// Graphs:      {"vertices":[{"id":..,"level":..}],"edges":[{"id":..,"tail":..,"head":..}]}
// Trees:       {"root":id,"parents":{"v":[parent,edge],...}}
// Edge fns:    {"kind":"finite","values":{"edge":int,...}}
//              {"kind":"symbolic","family":name,"rule":name}
// Walks:       {"start":v,"steps":[{"edge":id,"forward":bool},...]}
// Words:       whitespace-separated tokens +k / -k; symbolic atoms
//              asc(j,+) asc(j,-) desc(j,+) desc(j,-)
// Certificates: {"items":[{"kind":"subdivide"|"pair"|"splice",...},...]}

#pragma once

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tcs/chains.hpp"
#include "tcs/cuts.hpp"
#include "tcs/edge_function.hpp"
#include "tcs/family.hpp"
#include "tcs/graph.hpp"
#include "tcs/snf.hpp"
#include "tcs/symbolic_words.hpp"
#include "tcs/tree.hpp"
#include "tcs/words.hpp"

namespace tcs {

using nlohmann::json;

inline json graph_to_json(const FiniteGraph& g,
                          const std::function<int(VertexId)>& level = nullptr) {
    json vs = json::array();
    for (VertexId v : g.vertices()) {
        json jv{{"id", v}};
        if (level) jv["level"] = level(v);
        vs.push_back(jv);
    }
    json es = json::array();
    for (const EdgeRec& e : g.edges())
        es.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
    return {{"vertices", vs}, {"edges", es}};
}

inline FiniteGraph graph_from_json(const json& j) {
    std::vector<VertexId> vs;
    std::vector<EdgeRec> es;
    for (const json& v : j.at("vertices")) vs.push_back(v.at("id").get<VertexId>());
    for (const json& e : j.at("edges"))
        es.push_back({e.at("id").get<EdgeId>(), e.at("tail").get<VertexId>(),
                      e.at("head").get<VertexId>()});
    return FiniteGraph(std::move(vs), std::move(es));
}

inline json tree_to_json(const RootedTree& t) {
    json parents = json::object();
    for (const auto& [v, pe] : t.parents())
        parents[std::to_string(v)] = json::array({pe.first, pe.second});
    return {{"root", t.root()}, {"parents", parents}};
}

inline RootedTree tree_from_json(const json& j) {
    std::map<VertexId, std::pair<VertexId, EdgeId>> parents;
    for (const auto& [k, v] : j.at("parents").items())
        parents[std::stoll(k)] = {v.at(0).get<VertexId>(), v.at(1).get<EdgeId>()};
    return RootedTree(j.at("root").get<VertexId>(), std::move(parents));
}

inline json edge_function_to_json(const EdgeFunction& f,
                                  const std::string& family_name = "") {
    if (f.finite_support()) {
        json values = json::object();
        for (const auto& [e, v] : f.values()) values[std::to_string(e)] = v;
        return {{"kind", "finite"}, {"values", values}};
    }
    return {{"kind", "symbolic"}, {"family", family_name}, {"rule", f.rule_name()}};
}

inline EdgeFunction edge_function_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite") {
        std::map<EdgeId, long long> values;
        for (const auto& [k, v] : j.at("values").items())
            values[std::stoll(k)] = v.get<long long>();
        return EdgeFunction::finite(std::move(values));
    }
    if (kind == "symbolic") {
        FamilyPtr fam = make_family(j.at("family").get<std::string>());
        return named_edge_function(fam, j.at("rule").get<std::string>());
    }
    throw std::invalid_argument("unknown edge-function kind '" + kind + "'");
}

inline json walk_to_json(const Walk& w) {
    json steps = json::array();
    for (const OrientedEdge& s : w.steps)
        steps.push_back({{"edge", s.edge}, {"forward", s.forward}});
    return {{"start", w.start}, {"steps", steps}};
}

inline Walk walk_from_json(const json& j) {
    Walk w;
    w.start = j.at("start").get<VertexId>();
    for (const json& s : j.at("steps"))
        w.steps.push_back({s.at("edge").get<EdgeId>(), s.at("forward").get<bool>()});
    return w;
}

inline json chain_to_json(const Chain1& c) {
    json terms = json::array();
    for (const auto& [coeff, w] : c.terms)
        terms.push_back({{"coeff", coeff}, {"walk", walk_to_json(w)}});
    return {{"terms", terms}};
}

inline Chain1 chain_from_json(const json& j) {
    Chain1 c;
    for (const json& t : j.at("terms"))
        c.add(t.at("coeff").get<long long>(), walk_from_json(t.at("walk")));
    return c;
}

inline json cut_to_json(const Cut& c) {
    json edges = json::array();
    for (const OrientedEdge& oe : c.edges)
        edges.push_back({{"edge", oe.edge}, {"forward", oe.forward}});
    return {{"removed", c.removed}, {"side_min_vertex", c.side.empty() ? 0 : c.side.front()},
            {"edges", edges}};
}

inline json certificate_to_json(const BoundaryCertificate& cert) {
    json items = json::array();
    for (const CertItem& it : cert.items) {
        json item;
        switch (it.kind) {
            case CertItem::Kind::subdivide:
                item = {{"kind", "subdivide"}, {"coeff", it.coeff},
                        {"walk", walk_to_json(it.whole)}, {"at", it.at}};
                break;
            case CertItem::Kind::pair:
                item = {{"kind", "pair"}, {"coeff", it.coeff}, {"edge", it.edge}};
                break;
            case CertItem::Kind::splice:
                item = {{"kind", "splice"}, {"coeff", it.coeff},
                        {"walk", walk_to_json(it.whole)}, {"at", it.at},
                        {"loop", walk_to_json(it.inserted)}};
                break;
        }
        items.push_back(item);
    }
    return {{"items", items}};
}

inline BoundaryCertificate certificate_from_json(const json& j) {
    BoundaryCertificate cert;
    for (const json& item : j.at("items")) {
        CertItem it;
        std::string kind = item.at("kind").get<std::string>();
        it.coeff = item.at("coeff").get<long long>();
        if (kind == "subdivide") {
            it.kind = CertItem::Kind::subdivide;
            it.whole = walk_from_json(item.at("walk"));
            it.at = item.at("at").get<std::size_t>();
        } else if (kind == "pair") {
            it.kind = CertItem::Kind::pair;
            it.edge = item.at("edge").get<EdgeId>();
        } else if (kind == "splice") {
            it.kind = CertItem::Kind::splice;
            it.whole = walk_from_json(item.at("walk"));
            it.at = item.at("at").get<std::size_t>();
            it.inserted = walk_from_json(item.at("loop"));
        } else {
            throw std::invalid_argument("unknown certificate item kind '" + kind + "'");
        }
        cert.items.push_back(std::move(it));
    }
    return cert;
}

inline json matrix_to_json(const IntMatrix& m) { return json(m); }

inline IntMatrix matrix_from_json(const json& j) {
    IntMatrix m;
    for (const json& row : j) m.push_back(row.get<std::vector<long long>>());
    for (const auto& row : m)
        if (row.size() != m.front().size()) throw std::invalid_argument("ragged matrix");
    return m;
}

// ---------------------------------------------------------------------------
// Word text.

inline FiniteWord parse_finite_word(const std::string& text) {
    FiniteWord w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
            throw std::invalid_argument("bad letter token '" + tok + "'");
        w.push_back({std::stoi(tok.substr(1)), tok[0] == '+'});
    }
    return w;
}

// Symbolic atoms: +k / -k singles, asc(j,+) asc(j,-) desc(j,+) desc(j,-).
inline SymbolicWord parse_symbolic_word(const std::string& text, const ChordRay& ray) {
    std::vector<SymAtom> atoms;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '+' || tok[0] == '-') {
            atoms.emplace_back(Letter{std::stoi(tok.substr(1)), tok[0] == '+'});
            continue;
        }
        bool asc = tok.rfind("asc(", 0) == 0;
        bool desc = tok.rfind("desc(", 0) == 0;
        if ((!asc && !desc) || tok.back() != ')')
            throw std::invalid_argument("bad atom token '" + tok + "'");
        std::string inner = tok.substr(asc ? 4 : 5, tok.size() - (asc ? 5 : 6));
        auto comma = inner.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad atom token '" + tok + "'");
        int start = std::stoi(inner.substr(0, comma));
        std::string orient = inner.substr(comma + 1);
        if (orient != "+" && orient != "-")
            throw std::invalid_argument("bad atom orientation in '" + tok + "'");
        atoms.emplace_back(RayAtom{asc, start, orient == "+"});
    }
    return SymbolicWord(ray, std::move(atoms));
}

inline std::string format_word(const FiniteWord& w) { return to_string(w); }

// "family:name?depth=n" addressing.
struct FamilyAddress {
    std::string family;
    std::optional<int> depth;
};

inline FamilyAddress parse_family_address(const std::string& s) {
    FamilyAddress a;
    std::string body = s;
    if (body.rfind("family:", 0) == 0) body = body.substr(7);
    auto q = body.find('?');
    if (q == std::string::npos) {
        a.family = body;
        return a;
    }
    a.family = body.substr(0, q);
    std::string query = body.substr(q + 1);
    if (query.rfind("depth=", 0) != 0)
        throw std::invalid_argument("bad family address query '" + query + "'");
    a.depth = std::stoi(query.substr(6));
    return a;
}

}  // namespace tcs
