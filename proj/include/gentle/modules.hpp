// String modules: dimension vectors, coefficient quivers, tops and socles,
// projectives/injectives, radical and socle-quotient summands, projective
// covers by string surgery, syzygies and projective-dimension bounds.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "gentle/strings.hpp"

namespace gentle {

struct DimVector {
    std::vector<int> dims;  // indexed by vertex index

    int total() const {
        int t = 0;
        for (int d : dims) t += d;
        return t;
    }
    friend bool operator==(const DimVector&, const DimVector&) = default;
};

/// The coefficient quiver of M(w): nodes are the positions 0..len, with an
/// edge p -> p+1 for a direct letter and p+1 -> p for an inverse one.
struct CoefficientQuiver {
    std::vector<int> vertex_of_position;
    std::vector<std::pair<int, int>> edges;
};

struct StringModule {
    StringWord word;
    std::vector<int> positions;
    DimVector dim;
    CoefficientQuiver gamma;
};

inline StringModule realize(const StringWord& w) {
    StringModule m{w.canonical(), {}, {}, {}};
    m.positions = m.word.positions();
    m.dim.dims.assign(m.word.qd().vertices.size(), 0);
    for (int v : m.positions) m.dim.dims[v]++;
    m.gamma.vertex_of_position = m.positions;
    for (int i = 0; i < m.word.length(); ++i) {
        if (m.word.letters()[i].inverted)
            m.gamma.edges.emplace_back(i + 1, i);
        else
            m.gamma.edges.emplace_back(i, i + 1);
    }
    return m;
}

namespace detail {

inline bool position_is_source(const std::vector<Letter>& ls, int p) {
    if (p > 0 && !ls[p - 1].inverted) return false;
    if (p < (int)ls.size() && ls[p].inverted) return false;
    return true;
}
inline bool position_is_sink(const std::vector<Letter>& ls, int p) {
    if (p > 0 && ls[p - 1].inverted) return false;
    if (p < (int)ls.size() && !ls[p].inverted) return false;
    return true;
}

}  // namespace detail

/// Vertex ids at the source positions of the coefficient quiver (sorted, with
/// multiplicity).
inline std::vector<std::string> top(const StringWord& word) {
    StringWord w = word.canonical();
    auto pos = w.positions();
    std::vector<std::string> out;
    for (int p = 0; p <= w.length(); ++p)
        if (detail::position_is_source(w.letters(), p)) out.push_back(w.qd().vertices[pos[p]]);
    std::sort(out.begin(), out.end());
    return out;
}

/// Vertex ids at the sink positions (sorted, with multiplicity).
inline std::vector<std::string> socle(const StringWord& word) {
    StringWord w = word.canonical();
    auto pos = w.positions();
    std::vector<std::string> out;
    for (int p = 0; p <= w.length(); ++p)
        if (detail::position_is_sink(w.letters(), p)) out.push_back(w.qd().vertices[pos[p]]);
    std::sort(out.begin(), out.end());
    return out;
}

inline StringWord simple(const BoundQuiver& q, const std::string& vertex) {
    return StringWord::trivial(q, vertex);
}

/// The string of the indecomposable projective P(v): u^-1 u' for the right
/// maximal direct strings u, u' along the arrows out of v (trivial branches
/// dropped so the word stays reduced).
inline StringWord projective(const BoundQuiver& q, const std::string& vertex) {
    const auto& d = *q.data();
    int v = q.vertex_index(vertex);
    const auto& outs = q.out_arrows(v);
    if (outs.empty()) return StringWord::trivial_at(q, v);
    auto right = detail::right_maximal_from(d, outs[0]);
    if (outs.size() == 1) return word_unchecked(q.data(), right).canonical();
    auto left = detail::right_maximal_from(d, outs[1]);
    std::vector<Letter> ls;
    for (auto it = left.rbegin(); it != left.rend(); ++it) ls.push_back({it->arrow, true});
    for (Letter l : right) ls.push_back(l);
    return word_unchecked(q.data(), ls).canonical();
}

/// The string of the indecomposable injective I(v): u u'^-1 for the left
/// maximal direct strings ending at v.
inline StringWord injective(const BoundQuiver& q, const std::string& vertex) {
    const auto& d = *q.data();
    int v = q.vertex_index(vertex);
    const auto& ins = q.in_arrows(v);
    if (ins.empty()) return StringWord::trivial_at(q, v);
    auto first = detail::left_maximal_to(d, ins[0]);
    if (ins.size() == 1) return word_unchecked(q.data(), first).canonical();
    auto second = detail::left_maximal_to(d, ins[1]);
    std::vector<Letter> ls = first;
    for (auto it = second.rbegin(); it != second.rend(); ++it) ls.push_back({it->arrow, true});
    return word_unchecked(q.data(), ls).canonical();
}

namespace detail {

// Right-maximal direct continuation of arrow a: the unique b with ab not in
// I extended right-maximally, as a (possibly trivial) string based at t(a).
inline StringWord continuation(const BoundQuiver& q, int a) {
    const auto& d = *q.data();
    for (int b : d.out_arrows[d.tgt[a]])
        if (!d.is_relation(a, b))
            return word_unchecked(q.data(), right_maximal_from(d, b)).canonical();
    return StringWord::trivial_at(q, d.tgt[a]);
}

// Left-maximal direct continuation of arrow a on the other side: the unique
// b with ba not in I extended left-maximally, based at s(a).
inline StringWord co_continuation(const BoundQuiver& q, int a) {
    const auto& d = *q.data();
    for (int b : d.in_arrows[d.src[a]])
        if (!d.is_relation(b, a))
            return word_unchecked(q.data(), left_maximal_to(d, b)).canonical();
    return StringWord::trivial_at(q, d.src[a]);
}

}  // namespace detail

/// Indecomposable summands of rad P(v), one per arrow out of v.
inline std::vector<StringWord> radical_summands(const BoundQuiver& q, const std::string& vertex) {
    int v = q.vertex_index(vertex);
    std::vector<StringWord> out;
    for (int a : q.out_arrows(v)) out.push_back(detail::continuation(q, a));
    std::sort(out.begin(), out.end());
    return out;
}

/// Indecomposable summands of I(v)/S(v), one per arrow into v.
inline std::vector<StringWord> socle_quotient_summands(const BoundQuiver& q, const std::string& vertex) {
    int v = q.vertex_index(vertex);
    std::vector<StringWord> out;
    for (int a : q.in_arrows(v)) out.push_back(detail::co_continuation(q, a));
    std::sort(out.begin(), out.end());
    return out;
}

struct ProjectiveCover {
    std::vector<std::string> covers;   // top vertices (with multiplicity)
    std::vector<StringWord> kernel;    // syzygy summands, sorted, multiset
};

/// Projective cover of M(w) by string surgery.  The kernel has one summand
/// for every end of w where the covering branch keeps descending, and one
/// summand per interior sink of the coefficient quiver.
inline ProjectiveCover projective_cover(const StringWord& word) {
    const BoundQuiver q = word.ambient();
    const auto& d = word.qd();
    StringWord w = word.canonical();
    ProjectiveCover pc;
    pc.covers = top(w);

    const auto& ls = w.letters();
    auto pos = w.positions();
    int n = w.length();

    // chain(b) = the direct string starting with arrow b extended right
    // maximally, as letters
    auto chain = [&](int b) { return detail::right_maximal_from(d, b); };

    auto push_end_summand = [&](std::vector<Letter> tail_letters, int base_vertex) {
        if (tail_letters.empty())
            pc.kernel.push_back(StringWord::trivial_at(q, base_vertex));
        else
            pc.kernel.push_back(word_unchecked(q.data(), tail_letters).canonical());
    };

    // Contribution hanging past an end of the string.
    //  - end is a sink: the descent arrives via arrow `a`; the cover branch
    //    continues with the unique b such that ab avoids I, and the summand is
    //    that continuation minus its first vertex.
    //  - end is a source: the other arrow out of the end vertex (if any)
    //    hangs entirely; the summand is its branch minus the peak.
    auto end_summand_via_descent = [&](int a) {
        for (int b : d.out_arrows[d.tgt[a]]) {
            if (d.is_relation(a, b)) continue;
            auto c = chain(b);
            c.erase(c.begin());
            push_end_summand(std::move(c), d.tgt[b]);
            return;
        }
    };
    auto end_summand_via_peak = [&](int peak_vertex, int arrow_along_w) {
        for (int b : d.out_arrows[peak_vertex]) {
            if (b == arrow_along_w) continue;
            auto c = chain(b);
            c.erase(c.begin());
            push_end_summand(std::move(c), d.tgt[b]);
            return;
        }
    };

    if (n == 0) {
        int v = pos[0];
        for (int b : d.out_arrows[v]) {
            auto c = chain(b);
            c.erase(c.begin());
            push_end_summand(std::move(c), d.tgt[b]);
        }
    } else {
        // left end: position 0
        if (ls.front().inverted)
            end_summand_via_descent(ls.front().arrow);  // sink at position 0
        else
            end_summand_via_peak(pos[0], ls.front().arrow);
        // right end: position n
        if (!ls.back().inverted)
            end_summand_via_descent(ls.back().arrow);  // sink at position n
        else
            end_summand_via_peak(pos[n], ls.back().arrow);
        // interior sinks: descent from the left via ls[p-1] (direct) and from
        // the right via ls[p] (inverse); glue the two continuations through
        // the sink vertex
        for (int p = 1; p < n; ++p) {
            if (!(!ls[p - 1].inverted && ls[p].inverted)) continue;
            int x = pos[p];
            int aL = ls[p - 1].arrow;
            int aR = ls[p].arrow;
            std::vector<Letter> leftc, rightc;
            for (int b : d.out_arrows[x])
                if (!d.is_relation(aL, b)) leftc = chain(b);
            for (int b : d.out_arrows[x])
                if (!d.is_relation(aR, b)) rightc = chain(b);
            std::vector<Letter> glued;
            for (auto it = leftc.rbegin(); it != leftc.rend(); ++it) glued.push_back({it->arrow, true});
            for (Letter l : rightc) glued.push_back(l);
            if (glued.empty())
                pc.kernel.push_back(StringWord::trivial_at(q, x));
            else
                pc.kernel.push_back(word_unchecked(q.data(), glued).canonical());
        }
    }
    std::sort(pc.kernel.begin(), pc.kernel.end());
    return pc;
}

inline std::vector<StringWord> syzygy(const StringWord& w) { return projective_cover(w).kernel; }

inline bool is_projective_string(const StringWord& w) {
    const BoundQuiver q = w.ambient();
    for (const auto& t : top(w))
        if (projective(q, t) == w) return true;
    return false;
}

/// True iff the n-th syzygy of M(w) vanishes or is projective.
inline bool proj_dimension_at_most(const StringWord& w, int n) {
    const BoundQuiver q = w.ambient();
    std::vector<StringWord> current{w.canonical()};
    for (int step = 0; step < n; ++step) {
        std::vector<StringWord> next;
        for (const auto& m : current) {
            if (is_projective_string(m)) continue;
            auto k = syzygy(m);
            next.insert(next.end(), k.begin(), k.end());
        }
        current = std::move(next);
        if (current.empty()) return true;
    }
    for (const auto& m : current)
        if (!is_projective_string(m)) return false;
    return true;
}

}  // namespace gentle
