// Almost-rigidity, required summands, M_proj / M_inj, completion of almost
// rigid modules and exhaustive MAR enumeration with the |Q_0|+|Q_1| size
// certificate.

#pragma once

#include <optional>
#include <set>
#include <vector>

#include "gentle/homext.hpp"
#include "gentle/modules.hpp"

namespace gentle {

/// A basic module given as a canonical sorted set of strings.
class ModuleSet {
public:
    ModuleSet() = default;
    explicit ModuleSet(std::vector<StringWord> words) {
        for (auto& w : words) items_.insert(w.canonical());
    }

    bool contains(const StringWord& w) const { return items_.count(w.canonical()) > 0; }
    int size() const { return (int)items_.size(); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    std::vector<StringWord> words() const { return {items_.begin(), items_.end()}; }

    ModuleSet with(const StringWord& w) const {
        ModuleSet s = *this;
        s.items_.insert(w.canonical());
        return s;
    }
    ModuleSet united(const std::vector<StringWord>& ws) const {
        ModuleSet s = *this;
        for (const auto& w : ws) s.items_.insert(w.canonical());
        return s;
    }

    friend bool operator==(const ModuleSet& a, const ModuleSet& b) { return a.items_ == b.items_; }
    friend bool operator<(const ModuleSet& a, const ModuleSet& b) { return a.items_ < b.items_; }

private:
    std::set<StringWord> items_;
};

struct MarCertificate {
    bool size_ok = false;      // |set| == |Q_0| + |Q_1|
    bool pairwise_ok = false;  // no overlap extensions in any ordered pair
    bool mar() const { return size_ok && pairwise_ok; }
};

struct AlmostRigidReport {
    bool almost_rigid = false;
    std::optional<OverlapExtensionDatum> witness;
};

inline AlmostRigidReport is_almost_rigid(const BoundQuiver& q, const ModuleSet& s) {
    (void)q;
    auto ws = s.words();
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = 0; j < ws.size(); ++j) {
            auto ext = ext1_basis(ws[i], ws[j]);
            if (!ext.overlap_exts.empty()) return {false, ext.overlap_exts.front()};
        }
    return {true, std::nullopt};
}

inline MarCertificate mar_certificate(const BoundQuiver& q, const ModuleSet& s) {
    MarCertificate c;
    c.size_ok = s.size() == q.vertex_count() + q.arrow_count();
    c.pairwise_ok = is_almost_rigid(q, s).almost_rigid;
    return c;
}

/// Summands of every MAR module: simples at vertices of in- and out-degree
/// at most one, plus the nontrivial maximal direct strings.
inline ModuleSet required_summands(const BoundQuiver& q) {
    std::vector<StringWord> ws = maximal_direct_strings(q);
    for (int v = 0; v < q.vertex_count(); ++v)
        if (q.in_arrows(v).size() <= 1 && q.out_arrows(v).size() <= 1)
            ws.push_back(StringWord::trivial_at(q, v));
    return ModuleSet(std::move(ws));
}

/// The unique MAR module containing all indecomposable projectives:
/// projectives + radical summands + required summands.
inline ModuleSet m_proj(const BoundQuiver& q) {
    std::vector<StringWord> ws;
    for (const auto& v : q.vertices()) {
        ws.push_back(projective(q, v));
        auto r = radical_summands(q, v);
        ws.insert(ws.end(), r.begin(), r.end());
    }
    auto req = required_summands(q);
    ws.insert(ws.end(), req.begin(), req.end());
    return ModuleSet(std::move(ws));
}

/// Dual construction with injectives and socle quotients.
inline ModuleSet m_inj(const BoundQuiver& q) {
    std::vector<StringWord> ws;
    for (const auto& v : q.vertices()) {
        ws.push_back(injective(q, v));
        auto r = socle_quotient_summands(q, v);
        ws.insert(ws.end(), r.begin(), r.end());
    }
    auto req = required_summands(q);
    ws.insert(ws.end(), req.begin(), req.end());
    return ModuleSet(std::move(ws));
}

namespace detail {

struct CompatibilityPool {
    std::vector<StringWord> candidates;           // sorted by (length, word)
    std::vector<std::vector<char>> compatible;    // symmetric matrix
};

inline CompatibilityPool build_pool(const BoundQuiver& q, int max_len) {
    CompatibilityPool pool;
    for (const auto& w : enumerate_strings(q, max_len)) {
        if (!ext1_basis(w, w).overlap_exts.empty()) continue;  // self-overlap
        pool.candidates.push_back(w);
    }
    size_t n = pool.candidates.size();
    pool.compatible.assign(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        pool.compatible[i][i] = 1;
        for (size_t j = i + 1; j < n; ++j) {
            bool ok = !has_overlap_between(pool.candidates[i], pool.candidates[j]);
            pool.compatible[i][j] = pool.compatible[j][i] = ok ? 1 : 0;
        }
    }
    return pool;
}

}  // namespace detail

/// Extends an almost rigid module to an MAR module using candidate strings of
/// length <= max_len.  Throws NotAlmostRigid if the seed fails, BoundTooSmall
/// if no completion exists within the bound (which proves nothing beyond it).
inline ModuleSet complete_to_mar(const BoundQuiver& q, const ModuleSet& seed, int max_len) {
    auto rep = is_almost_rigid(q, seed);
    if (!rep.almost_rigid) throw Error(Errc::NotAlmostRigid, "seed module is not almost rigid");
    int target = q.vertex_count() + q.arrow_count();

    auto pool = detail::build_pool(q, max_len);
    size_t n = pool.candidates.size();
    std::vector<int> chosen;         // indices into pool
    std::vector<char> fixed(n, 0);   // candidate is in the seed
    for (const auto& w : seed) {
        bool found = false;
        for (size_t i = 0; i < n && !found; ++i)
            if (pool.candidates[i] == w) {
                fixed[i] = 1;
                chosen.push_back((int)i);
                found = true;
            }
        if (!found) throw Error(Errc::BoundTooSmall, "seed summand exceeds the length bound");
    }

    std::vector<char> allowed(n, 1);
    for (int c : chosen)
        for (size_t i = 0; i < n; ++i)
            if (!pool.compatible[c][i]) allowed[i] = 0;

    std::optional<std::vector<int>> best;
    auto dfs = [&](auto&& self, size_t from, std::vector<int>& acc, std::vector<char> avail) -> bool {
        if ((int)acc.size() == target) {
            best = acc;
            return true;
        }
        int room = 0;
        for (size_t i = from; i < n; ++i)
            if (avail[i] && !fixed[i]) ++room;
        if ((int)acc.size() + room < target) return false;
        for (size_t i = from; i < n; ++i) {
            if (!avail[i] || fixed[i]) continue;
            auto next_avail = avail;
            for (size_t j = 0; j < n; ++j)
                if (!pool.compatible[i][j]) next_avail[j] = 0;
            acc.push_back((int)i);
            if (self(self, i + 1, acc, std::move(next_avail))) return true;
            acc.pop_back();
        }
        return false;
    };
    std::vector<int> acc = chosen;
    if (!dfs(dfs, 0, acc, allowed))
        throw Error(Errc::BoundTooSmall, "no completion within the length bound");
    std::vector<StringWord> ws;
    for (int i : *best) ws.push_back(pool.candidates[i]);
    return ModuleSet(std::move(ws));
}

struct MarEnumeration {
    std::vector<ModuleSet> mars;  // sorted
    bool bands_present = false;   // enumeration incomplete beyond the bound
};

/// All MAR modules whose summands have length <= max_len; complete exactly
/// when the algebra is band-free and the bound exceeds the longest string.
inline MarEnumeration enumerate_mars(const BoundQuiver& q, int max_len) {
    MarEnumeration out;
    out.bands_present = detect_bands(q).has_value();
    int target = q.vertex_count() + q.arrow_count();
    auto pool = detail::build_pool(q, max_len);
    size_t n = pool.candidates.size();

    std::vector<int> acc;
    std::vector<ModuleSet> found;
    auto dfs = [&](auto&& self, size_t from, std::vector<char> avail) -> void {
        if ((int)acc.size() == target) {
            std::vector<StringWord> ws;
            for (int i : acc) ws.push_back(pool.candidates[i]);
            found.emplace_back(std::move(ws));
            return;
        }
        int room = 0;
        for (size_t i = from; i < n; ++i)
            if (avail[i]) ++room;
        if ((int)acc.size() + room < target) return;
        for (size_t i = from; i < n; ++i) {
            if (!avail[i]) continue;
            auto next_avail = avail;
            for (size_t j = 0; j < n; ++j)
                if (!pool.compatible[i][j]) next_avail[j] = 0;
            acc.push_back((int)i);
            self(self, i + 1, std::move(next_avail));
            acc.pop_back();
        }
    };
    dfs(dfs, 0, std::vector<char>(n, 1));
    std::sort(found.begin(), found.end());
    out.mars = std::move(found);
    return out;
}

}  // namespace gentle
