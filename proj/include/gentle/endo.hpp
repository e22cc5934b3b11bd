// Quiver presentations of endomorphism algebras of basic string-module sets,
// the relation-extension tensor algebra, and presentation isomorphism tests.
//
// Vertices are the summands in canonical order.  An arrow i -> j stands for
// an irreducible-in-add(T) morphism T_j -> T_i, and a path composes the maps
// right to left, so a length-2 relation (x, y) means map(x) . map(y) == 0.
// This orientation matches the usual arrows-are-radical-quotients convention
// for End(T) acting on the right.

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gentle/homext.hpp"
#include "gentle/mar.hpp"

namespace gentle {

struct AlgebraPresentation {
    BoundQuiver quiver;
    std::map<std::string, StringWord> vertex_labels;  // vertex id -> summand
    bool infinite_dimensional = false;
};

namespace detail {

// paths avoiding relations; -1 when a relation-free cycle makes the count
// infinite
inline long long count_monomial_paths(const BoundQuiver& q) {
    if (!is_finite_dimensional(q)) return -1;
    long long total = q.vertex_count();
    // longest chains are bounded by the arrow count once relation-free cycles
    // are excluded
    std::vector<std::vector<int>> frontier;
    for (int a = 0; a < q.arrow_count(); ++a) frontier.push_back({a});
    total += (long long)frontier.size();
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier)
            for (int b : q.out_arrows(q.target_of(p.back()))) {
                if (q.is_relation(p.back(), b)) continue;
                auto e = p;
                e.push_back(b);
                next.push_back(std::move(e));
            }
        total += (long long)next.size();
        frontier = std::move(next);
    }
    return total;
}

}  // namespace detail

/// Present End(T_1 + ... + T_m) as a quiver with monomial length-2 relations.
/// Arrows are the radical basis morphisms that are not composites of two
/// radical basis morphisms; relations are the composable arrow pairs whose
/// composite vanishes.  The result is asserted to be a faithful monomial
/// presentation (dimension count) and gentle with non-overlapping relations.
inline AlgebraPresentation endomorphism_presentation(const BoundQuiver& q, const ModuleSet& T) {
    (void)q;
    std::vector<StringWord> summands = T.words();
    int m = (int)summands.size();
    if (m == 0) throw Error(Errc::PreconditionViolated, "empty module set");

    // hom bases for all ordered pairs; radical = non-identity elements
    std::vector<std::vector<std::vector<HomBasisElement>>> hom(m);
    long long total_dim = 0;
    for (int i = 0; i < m; ++i) {
        hom[i].resize(m);
        for (int j = 0; j < m; ++j) {
            hom[i][j] = hom_basis(summands[i], summands[j]);
            total_dim += (long long)hom[i][j].size();
        }
    }
    struct Rad {
        int i, j, k;  // hom[i][j][k]
    };
    std::vector<Rad> rad;
    auto is_identity = [&](int i, int j, const HomBasisElement& h) {
        return i == j && h.kind == HomKind::TwoSided && !h.flip;
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < (int)hom[i][j].size(); ++k)
                if (!is_identity(i, j, hom[i][j][k])) rad.push_back({i, j, k});

    // mark radical elements that factor as composites of two radical elements
    auto same_element = [](const HomBasisElement& a, const HomBasisElement& b) {
        return a.in_source == b.in_source && a.in_target == b.in_target && a.flip == b.flip;
    };
    std::set<std::tuple<int, int, int>> composite;
    for (const Rad& f : rad)
        for (const Rad& g : rad) {
            if (f.j != g.i) continue;
            auto c = compose(hom[f.i][f.j][f.k], hom[g.i][g.j][g.k]);
            if (!c) continue;
            for (int k = 0; k < (int)hom[f.i][g.j].size(); ++k)
                if (same_element(hom[f.i][g.j][k], *c) && !is_identity(f.i, g.j, hom[f.i][g.j][k]))
                    composite.insert({f.i, g.j, k});
        }

    // arrows: map T_i -> T_j becomes an arrow j -> i
    struct ArrowInfo {
        int map_src, map_tgt, k;  // hom[map_src][map_tgt][k]
        std::string name;
    };
    std::vector<ArrowInfo> arrows;
    for (const Rad& f : rad)
        if (!composite.count({f.i, f.j, f.k})) arrows.push_back({f.i, f.j, f.k, ""});
    std::sort(arrows.begin(), arrows.end(), [](const ArrowInfo& a, const ArrowInfo& b) {
        return std::tie(a.map_tgt, a.map_src, a.k) < std::tie(b.map_tgt, b.map_src, b.k);
    });

    std::vector<std::string> vnames;
    for (int i = 1; i <= m; ++i) vnames.push_back(std::to_string(i));
    std::vector<Arrow> qarrows;
    for (size_t n = 0; n < arrows.size(); ++n) {
        arrows[n].name = "r" + std::to_string(n + 1);
        qarrows.push_back({arrows[n].name, vnames[arrows[n].map_tgt], vnames[arrows[n].map_src]});
    }

    // relations: composable arrow pairs with vanishing composite
    std::vector<std::pair<std::string, std::string>> rels;
    for (const ArrowInfo& x : arrows)
        for (const ArrowInfo& y : arrows) {
            if (x.map_src != y.map_tgt) continue;  // path x then y: t(x) = s(y)
            // composite map: apply y's morphism first
            auto c = compose(hom[y.map_src][y.map_tgt][y.k], hom[x.map_src][x.map_tgt][x.k]);
            if (!c) rels.emplace_back(x.name, y.name);
        }

    AlgebraPresentation p{BoundQuiver(vnames, qarrows, rels), {}, false};
    for (int i = 0; i < m; ++i) p.vertex_labels[vnames[i]] = summands[i];

    // faithfulness of the monomial presentation: dimensions must agree
    long long paths = detail::count_monomial_paths(p.quiver);
    if (paths != total_dim)
        throw Error(Errc::PresentationNotMonomial,
                    "presentation dimension mismatch: paths=" + std::to_string(paths) +
                        " hom dim=" + std::to_string(total_dim));
    auto rep = validate_gentle(p.quiver);
    if (!rep.gentle)
        throw Error(Errc::PresentationNotMonomial, "presentation is not gentle");
    for (auto [a, b] : p.quiver.relation_pairs())
        for (auto [c, d] : p.quiver.relation_pairs())
            if (b == c)
                throw Error(Errc::PresentationNotMonomial, "presentation has overlapping relations");
    p.infinite_dimensional = !is_finite_dimensional(p.quiver);
    return p;
}

/// Relation-extension of a gentle presentation with non-overlapping
/// relations: one arrow eps(r): t(r) -> s(r) per relation r = xy, with the
/// cyclic-derivative relations (y, eps) and (eps, x).
inline AlgebraPresentation tensor_algebra(const AlgebraPresentation& p) {
    auto rep = validate_gentle(p.quiver);
    if (!rep.gentle)
        throw Error(Errc::PreconditionViolated, "tensor_algebra needs a gentle presentation");
    for (auto [a, b] : p.quiver.relation_pairs())
        for (auto [c, d] : p.quiver.relation_pairs())
            if (b == c)
                throw Error(Errc::PreconditionViolated,
                            "tensor_algebra needs non-overlapping relations");

    std::vector<std::string> vnames = p.quiver.vertices();
    std::vector<Arrow> arrows = p.quiver.arrows();
    std::vector<std::pair<std::string, std::string>> rels;
    for (auto [a, b] : p.quiver.relation_pairs())
        rels.emplace_back(p.quiver.arrow(a).name, p.quiver.arrow(b).name);
    for (auto [a, b] : p.quiver.relation_pairs()) {
        const Arrow& x = p.quiver.arrow(a);
        const Arrow& y = p.quiver.arrow(b);
        std::string eps = "eps_" + x.name + "_" + y.name;
        arrows.push_back({eps, y.target, x.source});
        rels.emplace_back(y.name, eps);
        rels.emplace_back(eps, x.name);
    }
    AlgebraPresentation out{BoundQuiver(vnames, arrows, rels), p.vertex_labels, false};
    out.infinite_dimensional = !is_finite_dimensional(out.quiver);
    return out;
}

/// Does the vertex bijection extend to an isomorphism of quivers with
/// relations?  Parallel arrows are matched by backtracking over the groups.
inline bool presentations_match(const std::map<std::string, std::string>& vertex_map,
                                const AlgebraPresentation& p1, const AlgebraPresentation& p2) {
    const BoundQuiver& q1 = p1.quiver;
    const BoundQuiver& q2 = p2.quiver;
    if (q1.vertex_count() != q2.vertex_count() || q1.arrow_count() != q2.arrow_count() ||
        q1.relation_pairs().size() != q2.relation_pairs().size())
        return false;
    for (const auto& v : q1.vertices()) {
        auto it = vertex_map.find(v);
        if (it == vertex_map.end() || !q2.find_vertex(it->second)) return false;
    }
    // group arrows by mapped (source, target)
    std::map<std::pair<std::string, std::string>, std::vector<int>> g1, g2;
    for (int a = 0; a < q1.arrow_count(); ++a)
        g1[{vertex_map.at(q1.arrow(a).source), vertex_map.at(q1.arrow(a).target)}].push_back(a);
    for (int a = 0; a < q2.arrow_count(); ++a)
        g2[{q2.arrow(a).source, q2.arrow(a).target}].push_back(a);
    if (g1.size() != g2.size()) return false;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
    for (auto& [k, v] : g1) {
        auto it = g2.find(k);
        if (it == g2.end() || it->second.size() != v.size()) return false;
        groups.emplace_back(v, it->second);
    }
    std::set<std::pair<int, int>> rel2(q2.relation_pairs().begin(), q2.relation_pairs().end());
    std::vector<int> arrow_map(q1.arrow_count(), -1);
    auto relations_ok = [&]() {
        std::set<std::pair<int, int>> mapped;
        for (auto [a, b] : q1.relation_pairs()) mapped.insert({arrow_map[a], arrow_map[b]});
        return mapped == rel2;
    };
    auto attempt = [&](auto&& self, size_t gi) -> bool {
        if (gi == groups.size()) return relations_ok();
        auto& [from, to] = groups[gi];
        std::vector<int> perm = to;
        std::sort(perm.begin(), perm.end());
        do {
            for (size_t k = 0; k < from.size(); ++k) arrow_map[from[k]] = perm[k];
            if (self(self, gi + 1)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (int a : from) arrow_map[a] = -1;
        return false;
    };
    return attempt(attempt, 0);
}

}  // namespace gentle
