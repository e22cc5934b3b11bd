// The arrow-subdivision algebra and the exact embedding of module categories
// it carries: each arrow a: i -> j becomes i -> v_a -> j, relations are
// transported, and a string maps over by replacing every letter with its
// two-letter image.  Images of maximal almost rigid modules are tilting.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "gentle/homext.hpp"
#include "gentle/mar.hpp"
#include "gentle/modules.hpp"

namespace gentle {

struct BarAlgebra {
    BoundQuiver base;
    BoundQuiver bar;
    std::map<std::string, std::string> vertex_of_arrow;                     // a -> v_a
    std::map<std::string, std::pair<std::string, std::string>> split;      // a -> (a_a, a_b)
};

inline BarAlgebra bar_algebra(const BoundQuiver& q) {
    std::vector<std::string> vertices = q.vertices();
    std::vector<Arrow> arrows;
    std::map<std::string, std::string> vertex_of_arrow;
    std::map<std::string, std::pair<std::string, std::string>> split;
    for (const Arrow& a : q.arrows()) {
        std::string v = "v_" + a.name;
        vertices.push_back(v);
        std::string first = a.name + "_a", second = a.name + "_b";
        arrows.push_back({first, a.source, v});
        arrows.push_back({second, v, a.target});
        vertex_of_arrow[a.name] = v;
        split[a.name] = {first, second};
    }
    std::vector<std::pair<std::string, std::string>> relations;
    for (auto [x, y] : q.relation_pairs())
        relations.emplace_back(split[q.arrow(x).name].second, split[q.arrow(y).name].first);
    return BarAlgebra{q, BoundQuiver(vertices, arrows, relations), vertex_of_arrow, split};
}

/// Image of a string under the subdivision: each letter a becomes a_a a_b
/// (inverses reverse the pair).  Trivial strings keep their vertex.
inline StringWord g_string(const BarAlgebra& B, const StringWord& w) {
    if (!w.qdata() || !(B.base.data() == w.qdata()))
        throw Error(Errc::BadInput, "g_string: word is not over the base algebra");
    if (w.is_trivial())
        return StringWord::trivial(B.bar, B.base.vertex_id(w.trivial_vertex_index()));
    std::vector<Letter> ls;
    for (Letter l : w.letters()) {
        const auto& [fa, fb] = B.split.at(B.base.arrow(l.arrow).name);
        int ia = B.bar.arrow_index(fa), ib = B.bar.arrow_index(fb);
        if (l.inverted) {
            ls.push_back({ib, true});
            ls.push_back({ia, true});
        } else {
            ls.push_back({ia, false});
            ls.push_back({ib, false});
        }
    }
    return make_string(B.bar, ls);
}

/// Partial inverse of g_string: defined exactly on the strings whose top and
/// socle vertices all come from the base algebra.
inline std::optional<StringWord> g_preimage(const BarAlgebra& B, const StringWord& wbar) {
    if (!(B.bar.data() == wbar.qdata()))
        throw Error(Errc::BadInput, "g_preimage: word is not over the subdivided algebra");
    StringWord w = wbar.canonical();
    if (w.is_trivial()) {
        const std::string& id = B.bar.vertex_id(w.trivial_vertex_index());
        if (!B.base.find_vertex(id)) return std::nullopt;
        return StringWord::trivial(B.base, id);
    }
    if (w.length() % 2 != 0) return std::nullopt;
    // bar arrow index -> (base arrow index, is_second_half)
    std::map<int, std::pair<int, bool>> half;
    for (const auto& [name, pair] : B.split) {
        int base = B.base.arrow_index(name);
        half[B.bar.arrow_index(pair.first)] = {base, false};
        half[B.bar.arrow_index(pair.second)] = {base, true};
    }
    std::vector<Letter> ls;
    for (int i = 0; i < w.length(); i += 2) {
        Letter x = w.letters()[i], y = w.letters()[i + 1];
        auto [bx, second_x] = half.at(x.arrow);
        auto [by, second_y] = half.at(y.arrow);
        if (bx != by) return std::nullopt;
        if (!x.inverted && !y.inverted && !second_x && second_y)
            ls.push_back({bx, false});
        else if (x.inverted && y.inverted && second_x && !second_y)
            ls.push_back({bx, true});
        else
            return std::nullopt;
    }
    return make_string(B.base, ls);
}

inline ModuleSet g_module_set(const BarAlgebra& B, const ModuleSet& s) {
    std::vector<StringWord> ws;
    for (const auto& w : s) ws.push_back(g_string(B, w));
    return ModuleSet(std::move(ws));
}

struct TiltingReport {
    bool pd_ok = false;       // projective dimension <= 1 for every summand
    bool ext_ok = false;      // Ext^1 vanishes on all ordered pairs
    bool count_ok = false;    // number of summands == number of simples
    std::string detail;
    bool tilting() const { return pd_ok && ext_ok && count_ok; }
};

/// Checks the tilting-module conditions for a basic module over any gentle
/// algebra: pd <= 1, full rigidity (arrow extensions must vanish too), and
/// the summand count |Q_0|.
inline TiltingReport tilting_check(const BoundQuiver& algebra, const ModuleSet& s) {
    TiltingReport r;
    r.pd_ok = true;
    for (const auto& w : s)
        if (!proj_dimension_at_most(w, 1)) {
            r.pd_ok = false;
            r.detail = "pd > 1 for " + w.text();
            break;
        }
    r.ext_ok = true;
    auto ws = s.words();
    for (size_t i = 0; i < ws.size() && r.ext_ok; ++i)
        for (size_t j = 0; j < ws.size() && r.ext_ok; ++j)
            if (ext1_basis(ws[i], ws[j]).size() != 0) {
                r.ext_ok = false;
                r.detail = "Ext^1(" + ws[i].text() + ", " + ws[j].text() + ") != 0";
            }
    r.count_ok = s.size() == algebra.vertex_count();
    return r;
}

}  // namespace gentle
