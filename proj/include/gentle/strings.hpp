// The string calculus over a gentle algebra: letters, walks, validity,
// canonical forms, hooks/cohooks, one-sided irreducible moves, bounded
// enumeration, band detection and subwalk placements.
//
// Conventions, fixed once for the whole library:
//  * composition is left-to-right: a relation (a,b) forbids the subwalk ab
//    and its inverse b^-1 a^-1;
//  * letters are ordered by (arrow name, direct < inverse) and the canonical
//    representative of a word is the lexicographically smaller of the walk
//    and its inverse;
//  * StringWord values compare equal up to inversion, matching isomorphism
//    of the associated modules;
//  * operations that depend on a left/right side (step_left, step_right,
//    placements) act on the canonical orientation, and a trivial string with
//    two attaching arrows assigns the lexicographically smaller arrow to the
//    left side.  The shape of the results does not depend on this choice,
//    only the labelling does.

#pragma once

#include <cassert>
#include <compare>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

struct Letter {
    int arrow = -1;
    bool inverted = false;
    auto operator<=>(const Letter&) const = default;
};

namespace detail {

inline int letter_head(const QuiverData& d, Letter l) { return l.inverted ? d.tgt[l.arrow] : d.src[l.arrow]; }
inline int letter_tail(const QuiverData& d, Letter l) { return l.inverted ? d.src[l.arrow] : d.tgt[l.arrow]; }

inline bool pair_composable(const QuiverData& d, Letter a, Letter b) {
    return letter_tail(d, a) == letter_head(d, b);
}
inline bool pair_reduced(const QuiverData& d, Letter a, Letter b) {
    (void)d;
    return !(a.arrow == b.arrow && a.inverted != b.inverted);
}
inline bool pair_relation_free(const QuiverData& d, Letter a, Letter b) {
    if (!a.inverted && !b.inverted) return !d.is_relation(a.arrow, b.arrow);
    if (a.inverted && b.inverted) return !d.is_relation(b.arrow, a.arrow);
    return true;
}
inline bool pair_valid(const QuiverData& d, Letter a, Letter b) {
    return pair_composable(d, a, b) && pair_reduced(d, a, b) && pair_relation_free(d, a, b);
}

inline std::vector<Letter> invert_letters(const std::vector<Letter>& ls) {
    std::vector<Letter> out;
    out.reserve(ls.size());
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push_back({it->arrow, !it->inverted});
    return out;
}

}  // namespace detail

/// A validated walk in the quiver, or a trivial string at a vertex.  Equality
/// and ordering identify a word with its inverse, so values of this type are
/// in bijection with the string modules they define.
class StringWord {
public:
    static StringWord trivial(const BoundQuiver& q, const std::string& vertex) {
        StringWord w;
        w.q_ = q.data();
        w.trivial_vertex_ = q.vertex_index(vertex);
        return w;
    }
    static StringWord trivial_at(const BoundQuiver& q, int vertex_index) {
        StringWord w;
        w.q_ = q.data();
        w.trivial_vertex_ = vertex_index;
        return w;
    }
    static StringWord trivial_raw(std::shared_ptr<const detail::QuiverData> q, int vertex_index) {
        StringWord w;
        w.q_ = std::move(q);
        w.trivial_vertex_ = vertex_index;
        return w;
    }

    bool is_trivial() const { return letters_.empty(); }
    int length() const { return (int)letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }
    int trivial_vertex_index() const { return trivial_vertex_; }

    const detail::QuiverData& qd() const { return *q_; }
    std::shared_ptr<const detail::QuiverData> qdata() const { return q_; }
    BoundQuiver ambient() const { return BoundQuiver::wrap(q_); }

    /// Endpoints of the stored orientation (vertex indices).
    int source_index() const {
        return is_trivial() ? trivial_vertex_ : detail::letter_head(*q_, letters_.front());
    }
    int target_index() const {
        return is_trivial() ? trivial_vertex_ : detail::letter_tail(*q_, letters_.back());
    }

    /// Vertex indices v_1..v_{len+1} along the stored orientation.
    std::vector<int> positions() const {
        std::vector<int> p;
        p.reserve(letters_.size() + 1);
        p.push_back(source_index());
        for (Letter l : letters_) p.push_back(detail::letter_tail(*q_, l));
        return p;
    }

    bool is_direct() const {
        for (Letter l : letters_)
            if (l.inverted) return false;
        return true;
    }
    bool is_inverse() const {
        for (Letter l : letters_)
            if (!l.inverted) return false;
        return true;
    }

    StringWord inverse() const {
        if (is_trivial()) return *this;
        StringWord w;
        w.q_ = q_;
        w.letters_ = detail::invert_letters(letters_);
        return w;
    }

    bool is_canonical() const { return is_trivial() || letters_ <= detail::invert_letters(letters_); }

    StringWord canonical() const {
        if (is_canonical()) return *this;
        return inverse();
    }

    friend bool operator==(const StringWord& a, const StringWord& b) {
        if (a.q_ != b.q_) return false;
        if (a.is_trivial() || b.is_trivial())
            return a.is_trivial() && b.is_trivial() && a.trivial_vertex_ == b.trivial_vertex_;
        const auto& ca = a.is_canonical() ? a.letters_ : detail::invert_letters(a.letters_);
        const auto& cb = b.is_canonical() ? b.letters_ : detail::invert_letters(b.letters_);
        return ca == cb;
    }
    friend bool operator<(const StringWord& a, const StringWord& b) {
        assert(a.q_ == b.q_ && "comparing words over different quivers");
        if (a.is_trivial() != b.is_trivial()) return a.is_trivial();
        if (a.is_trivial()) return a.trivial_vertex_ < b.trivial_vertex_;
        if (a.length() != b.length()) return a.length() < b.length();
        const auto& ca = a.is_canonical() ? a.letters_ : detail::invert_letters(a.letters_);
        const auto& cb = b.is_canonical() ? b.letters_ : detail::invert_letters(b.letters_);
        return ca < cb;
    }
    friend bool operator!=(const StringWord& a, const StringWord& b) { return !(a == b); }

    /// Compact text of the stored orientation: "@v" or letters joined by
    /// spaces with "~" marking inverses.
    std::string text() const {
        if (is_trivial()) return "@" + q_->vertices[trivial_vertex_];
        std::ostringstream os;
        for (size_t i = 0; i < letters_.size(); ++i) {
            if (i) os << ' ';
            if (letters_[i].inverted) os << '~';
            os << q_->arrows[letters_[i].arrow].name;
        }
        return os.str();
    }

private:
    friend StringWord make_string(const BoundQuiver&, const std::vector<Letter>&);
    friend std::optional<StringWord> try_make_string(const BoundQuiver&, const std::vector<Letter>&);
    friend StringWord word_unchecked(std::shared_ptr<const detail::QuiverData>, std::vector<Letter>);

    std::shared_ptr<const detail::QuiverData> q_;
    std::vector<Letter> letters_;
    int trivial_vertex_ = -1;
};

/// Internal fast path: the caller guarantees validity.
inline StringWord word_unchecked(std::shared_ptr<const detail::QuiverData> q, std::vector<Letter> ls) {
    StringWord w;
    w.q_ = std::move(q);
    if (ls.empty()) throw Error(Errc::BadInput, "word_unchecked needs letters; use trivial()");
    w.letters_ = std::move(ls);
    w.trivial_vertex_ = -1;
    return w;
}

inline StringWord make_string(const BoundQuiver& q, const std::vector<Letter>& letters) {
    if (letters.empty()) throw Error(Errc::BadInput, "empty letter sequence; use StringWord::trivial");
    const auto& d = *q.data();
    for (const Letter& l : letters)
        if (l.arrow < 0 || l.arrow >= (int)d.arrows.size())
            throw Error(Errc::UnknownArrow, "letter references unknown arrow");
    for (size_t i = 0; i + 1 < letters.size(); ++i) {
        if (!detail::pair_composable(d, letters[i], letters[i + 1]))
            throw Error(Errc::EndpointMismatch, "letters do not compose at position " + std::to_string(i + 1),
                        (int)i + 1);
        if (!detail::pair_reduced(d, letters[i], letters[i + 1]))
            throw Error(Errc::NotReduced, "walk not reduced at position " + std::to_string(i + 1), (int)i + 1);
        if (!detail::pair_relation_free(d, letters[i], letters[i + 1]))
            throw Error(Errc::HitsRelation, "walk hits a relation at position " + std::to_string(i + 1),
                        (int)i + 1);
    }
    StringWord w;
    w.q_ = q.data();
    w.letters_ = letters;
    return w.canonical();
}

inline std::optional<StringWord> try_make_string(const BoundQuiver& q, const std::vector<Letter>& letters) {
    if (letters.empty()) return std::nullopt;
    const auto& d = *q.data();
    for (size_t i = 0; i + 1 < letters.size(); ++i)
        if (!detail::pair_valid(d, letters[i], letters[i + 1])) return std::nullopt;
    StringWord w;
    w.q_ = q.data();
    w.letters_ = letters;
    return w.canonical();
}

inline StringWord canonicalize(const StringWord& w) { return w.canonical(); }
inline StringWord inverse(const StringWord& w) { return w.inverse(); }

namespace detail {

// Letters that can follow letter `l` in a valid walk.
inline void successors(const QuiverData& d, Letter l, std::vector<Letter>& out) {
    out.clear();
    int v = letter_tail(d, l);
    for (int b : d.out_arrows[v]) {
        Letter nb{b, false};
        if (pair_valid(d, l, nb)) out.push_back(nb);
    }
    for (int b : d.in_arrows[v]) {
        Letter nb{b, true};
        if (pair_valid(d, l, nb)) out.push_back(nb);
    }
}

}  // namespace detail

/// All canonical strings of length <= max_len, in sorted order.  Trivial
/// strings have length 0.  On algebras with bands the result is complete only
/// up to the bound; see detect_bands.
inline std::vector<StringWord> enumerate_strings(const BoundQuiver& q, int max_len) {
    const auto& d = *q.data();
    std::set<StringWord> out;
    for (int v = 0; v < q.vertex_count(); ++v) out.insert(StringWord::trivial_at(q, v));
    if (max_len >= 1) {
        std::vector<std::vector<Letter>> frontier;
        for (int a = 0; a < q.arrow_count(); ++a) {
            frontier.push_back({Letter{a, false}});
            frontier.push_back({Letter{a, true}});
        }
        for (auto& ls : frontier) out.insert(word_unchecked(q.data(), ls));
        std::vector<Letter> succ;
        for (int len = 2; len <= max_len && !frontier.empty(); ++len) {
            std::vector<std::vector<Letter>> next;
            for (const auto& ls : frontier) {
                detail::successors(d, ls.back(), succ);
                for (Letter s : succ) {
                    auto ext = ls;
                    ext.push_back(s);
                    out.insert(word_unchecked(q.data(), ext));
                    next.push_back(std::move(ext));
                }
            }
            frontier = std::move(next);
        }
    }
    return {out.begin(), out.end()};
}

/// A cyclically reduced, relation-avoiding, primitive mixed cycle.
struct BandWord {
    std::vector<Letter> letters;
};

/// Returns a witness band if one exists.  Band existence means bounded string
/// enumeration never stabilizes.
inline std::optional<BandWord> detect_bands(const BoundQuiver& q) {
    const auto& d = *q.data();
    // Cycle search in the letter-transition graph; a simple cycle has pairwise
    // distinct letters, hence is primitive as a cyclic word.
    std::vector<Letter> all;
    for (int a = 0; a < q.arrow_count(); ++a) {
        all.push_back({a, false});
        all.push_back({a, true});
    }
    auto id = [&](Letter l) { return l.arrow * 2 + (l.inverted ? 1 : 0); };
    std::vector<char> on_path(all.size(), 0);
    std::vector<Letter> path;
    std::optional<BandWord> found;

    std::vector<Letter> succ;
    auto dfs = [&](auto&& self, Letter l) -> bool {
        path.push_back(l);
        on_path[id(l)] = 1;
        detail::successors(d, l, succ);
        auto local = succ;  // successors() reuses the buffer
        for (Letter s : local) {
            if (on_path[id(s)]) {
                // close the cycle at the first occurrence of s in path
                size_t k = 0;
                while (!(path[k] == s)) ++k;
                std::vector<Letter> cyc(path.begin() + k, path.end());
                bool direct = true, inv = true;
                for (Letter c : cyc) (c.inverted ? direct : inv) = false;
                if (!direct && !inv) {
                    found = BandWord{cyc};
                    return true;
                }
                continue;
            }
            if (self(self, s)) return true;
        }
        on_path[id(l)] = 0;
        path.pop_back();
        return false;
    };

    for (Letter l : all) {
        path.clear();
        std::fill(on_path.begin(), on_path.end(), 0);
        if (dfs(dfs, l)) break;
    }
    if (!found) return std::nullopt;
    // canonical rotation of min(word, inverse) for a stable witness
    auto best = found->letters;
    auto consider = [&best](std::vector<Letter> w) {
        for (size_t r = 0; r < w.size(); ++r) {
            std::rotate(w.begin(), w.begin() + 1, w.end());
            if (w < best) best = w;
        }
    };
    consider(found->letters);
    consider(detail::invert_letters(found->letters));
    return BandWord{best};
}

namespace detail {

// Right-maximal direct string starting with arrow a; empty guard against
// relation-free cycles (non finite-dimensional input).
inline std::vector<Letter> right_maximal_from(const QuiverData& d, int a) {
    std::vector<Letter> ls{Letter{a, false}};
    int guard = (int)d.arrows.size() + 1;
    while (guard-- > 0) {
        int cur = ls.back().arrow;
        int nxt = -1;
        for (int b : d.out_arrows[d.tgt[cur]])
            if (!d.is_relation(cur, b)) { nxt = b; break; }
        if (nxt < 0) return ls;
        ls.push_back({nxt, false});
    }
    throw Error(Errc::NotFiniteDimensional, "relation-free oriented cycle while extending a direct string");
}

// Left-maximal direct string ending with arrow a.
inline std::vector<Letter> left_maximal_to(const QuiverData& d, int a) {
    std::vector<Letter> ls{Letter{a, false}};
    int guard = (int)d.arrows.size() + 1;
    while (guard-- > 0) {
        int cur = ls.front().arrow;
        int prv = -1;
        for (int b : d.in_arrows[d.src[cur]])
            if (!d.is_relation(b, cur)) { prv = b; break; }
        if (prv < 0) return ls;
        ls.insert(ls.begin(), {prv, false});
    }
    throw Error(Errc::NotFiniteDimensional, "relation-free oriented cycle while extending a direct string");
}

// Letters of hook(a) / cohook(a); empty when the hook is trivial.
inline std::vector<Letter> hook_letters(const QuiverData& d, int a) {
    const auto& outs = d.out_arrows[d.src[a]];
    if (outs.size() < 2) return {};
    int other = outs[0] == a ? outs[1] : outs[0];
    return right_maximal_from(d, other);
}
inline std::vector<Letter> cohook_letters(const QuiverData& d, int a) {
    const auto& ins = d.in_arrows[d.tgt[a]];
    if (ins.size() < 2) return {};
    int other = ins[0] == a ? ins[1] : ins[0];
    return left_maximal_to(d, other);
}

}  // namespace detail

/// Hook of an arrow: the right-maximal direct string at s(a) avoiding a, or
/// the trivial string if a is the only arrow out of s(a).  Returned in its
/// direct orientation.
inline StringWord hook(const BoundQuiver& q, const std::string& arrow) {
    int a = q.arrow_index(arrow);
    int x = q.source_of(a);
    const auto& outs = q.out_arrows(x);
    if (outs.size() < 2) return StringWord::trivial_at(q, x);
    int other = outs[0] == a ? outs[1] : outs[0];
    return word_unchecked(q.data(), detail::right_maximal_from(*q.data(), other));
}

/// Cohook of an arrow: the left-maximal direct string at t(a) avoiding a, or
/// the trivial string if a is the only arrow into t(a).
inline StringWord cohook(const BoundQuiver& q, const std::string& arrow) {
    int a = q.arrow_index(arrow);
    int y = q.target_of(a);
    const auto& ins = q.in_arrows(y);
    if (ins.size() < 2) return StringWord::trivial_at(q, y);
    int other = ins[0] == a ? ins[1] : ins[0];
    return word_unchecked(q.data(), detail::left_maximal_to(*q.data(), other));
}

/// All nontrivial maximal direct strings.
inline std::vector<StringWord> maximal_direct_strings(const BoundQuiver& q) {
    const auto& d = *q.data();
    std::set<StringWord> out;
    for (int a = 0; a < q.arrow_count(); ++a) {
        bool left_max = true;
        for (int b : q.in_arrows(q.source_of(a)))
            if (!q.is_relation(b, a)) { left_max = false; break; }
        if (!left_max) continue;
        out.insert(word_unchecked(q.data(), detail::right_maximal_from(d, a)));
    }
    return {out.begin(), out.end()};
}

enum class StepKind { AddHookLeft, AddHookRight, RemoveCohookLeft, RemoveCohookRight, Zero };

struct IrreducibleStep {
    StepKind kind = StepKind::Zero;
    std::optional<std::string> arrow;     // the hook/cohook arrow involved
    std::optional<StringWord> result;     // absent for Zero
};

namespace detail {

// The candidates for attaching on the left/right of a trivial string are the
// arrows into its vertex; the lexicographically smaller one is "left".
inline std::optional<int> trivial_attacher(const QuiverData& d, int v, bool left) {
    const auto& ins = d.in_arrows[v];
    if (ins.empty()) return std::nullopt;
    if (left) return ins[0];
    if (ins.size() < 2) return std::nullopt;
    return ins[1];
}

// Arrow a such that `a w` is a string (at most one exists), for nontrivial w.
inline std::optional<int> left_add_candidate(const QuiverData& d, const std::vector<Letter>& w) {
    Letter first = w.front();
    int v = letter_head(d, first);
    for (int a : d.in_arrows[v]) {
        Letter la{a, false};
        if (pair_valid(d, la, first)) return a;
    }
    return std::nullopt;
}

// Arrow a such that `w a^{-1}` is a string, for nontrivial w.
inline std::optional<int> right_add_candidate(const QuiverData& d, const std::vector<Letter>& w) {
    Letter last = w.back();
    int v = letter_tail(d, last);
    for (int a : d.in_arrows[v]) {
        Letter la{a, true};
        if (pair_valid(d, last, la)) return a;
    }
    return std::nullopt;
}

}  // namespace detail

/// One irreducible move on the left of the canonical orientation of w.
/// Adding the hook of a gives (hook a)^-1 a w.
inline IrreducibleStep step_left(const StringWord& word) {
    const auto& d = word.qd();
    StringWord w = word.canonical();
    std::optional<int> cand = w.is_trivial()
                                  ? detail::trivial_attacher(d, w.trivial_vertex_index(), /*left=*/true)
                                  : detail::left_add_candidate(d, w.letters());
    if (cand) {
        std::vector<Letter> ls;
        auto h = detail::hook_letters(d, *cand);
        for (auto it = h.rbegin(); it != h.rend(); ++it) ls.push_back({it->arrow, true});
        ls.push_back({*cand, false});
        for (Letter l : w.letters()) ls.push_back(l);
        return {StepKind::AddHookLeft, d.arrows[*cand].name, word_unchecked(w.qdata(), ls)};
    }
    if (w.is_direct()) return {StepKind::Zero, std::nullopt, std::nullopt};
    // remove a cohook on the left: strip the maximal direct prefix and the
    // inverse letter after it
    size_t i = 0;
    while (i < w.letters().size() && !w.letters()[i].inverted) ++i;
    int beta = w.letters()[i].arrow;
    std::vector<Letter> rest(w.letters().begin() + i + 1, w.letters().end());
    StringWord res = rest.empty() ? StringWord::trivial_raw(w.qdata(), d.src[beta])
                                  : word_unchecked(w.qdata(), rest);
    return {StepKind::RemoveCohookLeft, d.arrows[beta].name, res};
}

/// One irreducible move on the right of the canonical orientation of w.
/// Adding the hook of a gives w a^-1 (hook a).
inline IrreducibleStep step_right(const StringWord& word) {
    const auto& d = word.qd();
    StringWord w = word.canonical();
    std::optional<int> cand = w.is_trivial()
                                  ? detail::trivial_attacher(d, w.trivial_vertex_index(), /*left=*/false)
                                  : detail::right_add_candidate(d, w.letters());
    if (cand) {
        std::vector<Letter> ls = w.letters();
        ls.push_back({*cand, true});
        for (Letter l : detail::hook_letters(d, *cand)) ls.push_back(l);
        return {StepKind::AddHookRight, d.arrows[*cand].name, word_unchecked(w.qdata(), ls)};
    }
    if (w.is_inverse()) return {StepKind::Zero, std::nullopt, std::nullopt};
    // remove a cohook on the right: strip the maximal inverse suffix and the
    // direct letter before it
    size_t j = w.letters().size();
    while (j > 0 && w.letters()[j - 1].inverted) --j;
    int beta = w.letters()[j - 1].arrow;
    std::vector<Letter> rest(w.letters().begin(), w.letters().begin() + (j - 1));
    StringWord res = rest.empty() ? StringWord::trivial_raw(w.qdata(), d.src[beta])
                                  : word_unchecked(w.qdata(), rest);
    return {StepKind::RemoveCohookRight, d.arrows[beta].name, res};
}

/// A subwalk placement: letters [lo, hi) of the canonical orientation of the
/// host (positions lo..hi).  A trivial factor has lo == hi == position.
/// `reversed` records that the factor's canonical form reads backwards there.
struct Placement {
    int lo = 0;
    int hi = 0;
    bool reversed = false;
    bool trivial() const { return lo == hi; }
    auto operator<=>(const Placement&) const = default;
};

namespace detail {

inline bool upset_interval(const std::vector<Letter>& w, int lo, int hi) {
    if (lo > 0 && !w[lo - 1].inverted) return false;
    if (hi < (int)w.size() && w[hi].inverted) return false;
    return true;
}
inline bool downset_interval(const std::vector<Letter>& w, int lo, int hi) {
    if (lo > 0 && w[lo - 1].inverted) return false;
    if (hi < (int)w.size() && !w[hi].inverted) return false;
    return true;
}

// All up-set (or down-set) placements of host, keyed by the canonical factor.
template <class Fn>
inline void for_each_closed_interval(const StringWord& host, bool upset, Fn&& fn) {
    StringWord w = host.canonical();
    const auto& ls = w.letters();
    int n = (int)ls.size();
    for (int lo = 0; lo <= n; ++lo)
        for (int hi = lo; hi <= n; ++hi) {
            bool ok = upset ? upset_interval(ls, lo, hi) : downset_interval(ls, lo, hi);
            if (ok) fn(lo, hi);
        }
}

}  // namespace detail

/// Placements of u (up to inversion) as an up-set subwalk of w.
inline std::vector<Placement> upset_occurrences(const StringWord& w, const StringWord& u) {
    StringWord host = w.canonical(), fac = u.canonical();
    std::vector<Placement> out;
    const auto& ls = host.letters();
    auto pos = host.positions();
    detail::for_each_closed_interval(host, true, [&](int lo, int hi) {
        if (hi - lo != fac.length()) return;
        if (fac.is_trivial()) {
            if (pos[lo] == fac.trivial_vertex_index()) out.push_back({lo, hi, false});
            return;
        }
        std::vector<Letter> sub(ls.begin() + lo, ls.begin() + hi);
        if (sub == fac.letters()) out.push_back({lo, hi, false});
        else if (detail::invert_letters(sub) == fac.letters()) out.push_back({lo, hi, true});
    });
    return out;
}

/// Placements of u (up to inversion) as a down-set subwalk of w.
inline std::vector<Placement> downset_occurrences(const StringWord& w, const StringWord& u) {
    StringWord host = w.canonical(), fac = u.canonical();
    std::vector<Placement> out;
    const auto& ls = host.letters();
    auto pos = host.positions();
    detail::for_each_closed_interval(host, false, [&](int lo, int hi) {
        if (hi - lo != fac.length()) return;
        if (fac.is_trivial()) {
            if (pos[lo] == fac.trivial_vertex_index()) out.push_back({lo, hi, false});
            return;
        }
        std::vector<Letter> sub(ls.begin() + lo, ls.begin() + hi);
        if (sub == fac.letters()) out.push_back({lo, hi, false});
        else if (detail::invert_letters(sub) == fac.letters()) out.push_back({lo, hi, true});
    });
    return out;
}

}  // namespace gentle
