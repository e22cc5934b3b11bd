// JSON (de)serialization for algebras, modules, module sets and
// presentations, plus composition-series text and DOT export.
//
// Algebra files look like
//   {"vertices":["1","2"],
//    "arrows":[{"name":"a","source":"1","target":"2"}],
//    "relations":[["a","b"]]}
// where ["a","b"] puts the path "a then b" in the ideal.  A module is
// {"string":["b","g","~a"]} with "~" marking an inverse letter, or
// {"vertex":"1"} for a simple; module sets are arrays of modules.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gentle/endo.hpp"
#include "gentle/mar.hpp"
#include "gentle/modules.hpp"

namespace gentle::io {

using nlohmann::json;

inline BoundQuiver parse_algebra(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw Error(Errc::BadInput, "algebra JSON needs vertices and arrows");
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows"))
        arrows.push_back({a.at("name").get<std::string>(), a.at("source").get<std::string>(),
                          a.at("target").get<std::string>()});
    std::vector<std::pair<std::string, std::string>> relations;
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) {
            if (!r.is_array() || r.size() != 2)
                throw Error(Errc::BadInput, "relation must be a pair of arrow names");
            relations.emplace_back(r.at(0).get<std::string>(), r.at(1).get<std::string>());
        }
    return BoundQuiver(std::move(vertices), std::move(arrows), std::move(relations));
}

inline json algebra_to_json(const BoundQuiver& q) {
    json j;
    j["vertices"] = q.vertices();
    j["arrows"] = json::array();
    for (const Arrow& a : q.arrows())
        j["arrows"].push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
    j["relations"] = json::array();
    for (auto [a, b] : q.relation_pairs())
        j["relations"].push_back({q.arrow(a).name, q.arrow(b).name});
    return j;
}

/// Letter text: "a" is a direct arrow, "~a" its inverse.
inline Letter parse_letter(const BoundQuiver& q, const std::string& text) {
    if (text.empty()) throw Error(Errc::BadInput, "empty letter");
    if (text[0] == '~') return {q.arrow_index(text.substr(1)), true};
    return {q.arrow_index(text), false};
}

/// Word text: "@v" for the trivial string at v, otherwise whitespace-joined
/// letters.
inline StringWord parse_word_text(const BoundQuiver& q, const std::string& text) {
    if (!text.empty() && text[0] == '@') return StringWord::trivial(q, text.substr(1));
    std::istringstream is(text);
    std::vector<Letter> ls;
    std::string tok;
    while (is >> tok) ls.push_back(parse_letter(q, tok));
    if (ls.empty()) throw Error(Errc::BadInput, "empty word text");
    return make_string(q, ls);
}

inline StringWord parse_module(const BoundQuiver& q, const json& j) {
    if (j.is_object() && j.contains("vertex"))
        return StringWord::trivial(q, j.at("vertex").get<std::string>());
    if (j.is_object() && j.contains("string")) {
        std::vector<Letter> ls;
        for (const auto& t : j.at("string")) ls.push_back(parse_letter(q, t.get<std::string>()));
        return make_string(q, ls);
    }
    if (j.is_string()) return parse_word_text(q, j.get<std::string>());
    throw Error(Errc::BadInput, "module JSON needs \"string\" or \"vertex\"");
}

inline json module_to_json(const StringWord& word) {
    StringWord w = word.canonical();
    if (w.is_trivial()) return json{{"vertex", w.qd().vertices[w.trivial_vertex_index()]}};
    json letters = json::array();
    for (Letter l : w.letters())
        letters.push_back((l.inverted ? "~" : "") + w.qd().arrows[l.arrow].name);
    return json{{"string", letters}};
}

inline ModuleSet parse_module_set(const BoundQuiver& q, const json& j) {
    const json& arr = j.is_object() && j.contains("modules") ? j.at("modules") : j;
    if (!arr.is_array()) throw Error(Errc::BadInput, "module set JSON must be an array");
    std::vector<StringWord> ws;
    for (const auto& m : arr) ws.push_back(parse_module(q, m));
    return ModuleSet(std::move(ws));
}

inline json module_set_to_json(const ModuleSet& s) {
    json arr = json::array();
    for (const auto& w : s) arr.push_back(module_to_json(w));
    return arr;
}

/// Composition-series text, radical layers top to socle, e.g. "2/1 3" for
/// the module with top 2 over socle 1+3.
inline std::string stack_text(const StringWord& word) {
    StringWord w = word.canonical();
    auto pos = w.positions();
    const auto& ls = w.letters();
    int n = w.length();
    std::vector<int> depth(n + 1, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            int from = ls[i].inverted ? i + 1 : i;
            int to = ls[i].inverted ? i : i + 1;
            if (depth[to] < depth[from] + 1) {
                depth[to] = depth[from] + 1;
                changed = true;
            }
        }
    }
    int maxd = 0;
    for (int d : depth) maxd = std::max(maxd, d);
    std::vector<std::vector<std::string>> rows(maxd + 1);
    for (int p = 0; p <= n; ++p) rows[depth[p]].push_back(w.qd().vertices[pos[p]]);
    std::ostringstream os;
    for (int d = 0; d <= maxd; ++d) {
        if (d) os << '/';
        for (size_t k = 0; k < rows[d].size(); ++k) {
            if (k) os << ' ';
            os << rows[d][k];
        }
    }
    return os.str();
}

inline json presentation_to_json(const AlgebraPresentation& p) {
    json j = algebra_to_json(p.quiver);
    json labels = json::object();
    for (const auto& [v, w] : p.vertex_labels) labels[v] = stack_text(w);
    j["labels"] = labels;
    j["infinite_dimensional"] = p.infinite_dimensional;
    return j;
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

/// DOT digraph for a bound quiver; relations render as dotted arcs spanning
/// the two composed arrows.
inline std::string algebra_to_dot(const BoundQuiver& q,
                                  const std::map<std::string, std::string>& labels = {}) {
    std::ostringstream os;
    os << "digraph algebra {\n";
    for (const auto& v : q.vertices()) {
        os << "  \"" << dot_escape(v) << "\"";
        auto it = labels.find(v);
        if (it != labels.end()) os << " [label=\"" << dot_escape(it->second) << "\"]";
        os << ";\n";
    }
    for (const Arrow& a : q.arrows())
        os << "  \"" << dot_escape(a.source) << "\" -> \"" << dot_escape(a.target)
           << "\" [label=\"" << dot_escape(a.name) << "\"];\n";
    for (auto [a, b] : q.relation_pairs())
        os << "  \"" << dot_escape(q.arrow(a).source) << "\" -> \""
           << dot_escape(q.arrow(b).target) << "\" [style=dotted, constraint=false, color=gray, label=\""
           << dot_escape(q.arrow(a).name + q.arrow(b).name) << "\"];\n";
    os << "}\n";
    return os.str();
}

inline std::string ar_quiver_to_dot(const ArQuiver& ar) {
    std::ostringstream os;
    os << "digraph ar_quiver {\n";
    for (size_t i = 0; i < ar.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << dot_escape(stack_text(ar.nodes[i])) << "\"];\n";
    for (auto [from, to, mult] : ar.edges)
        for (int k = 0; k < mult; ++k) os << "  n" << from << " -> n" << to << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace gentle::io
