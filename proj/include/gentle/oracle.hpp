// Independent brute-force verification backend.  Modules become matrix
// representations over a prime field; Hom dimensions come from intertwiner
// systems, Ext^1 from projective covers built on path bases, and irreducible
// map counts from numeric radical quotients.  Nothing here shares code with
// the combinatorial Hom/Ext enumeration it is meant to check.

#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "gentle/strings.hpp"

namespace gentle::oracle {

struct FieldConfig {
    int prime = 101;
};

namespace fp {

inline int norm(long long x, int p) {
    long long r = x % p;
    return (int)(r < 0 ? r + p : r);
}

inline int inv(int a, int p) {
    // extended Euclid
    int t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    return norm(t, p);
}

}  // namespace fp

struct Mat {
    int rows = 0, cols = 0;
    std::vector<int> a;  // row-major

    static Mat zero(int r, int c) { return Mat{r, c, std::vector<int>((size_t)r * c, 0)}; }
    static Mat identity(int n) {
        Mat m = zero(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    int& at(int i, int j) { return a[(size_t)i * cols + j]; }
    int at(int i, int j) const { return a[(size_t)i * cols + j]; }
    friend bool operator==(const Mat&, const Mat&) = default;
};

inline Mat mul(const Mat& x, const Mat& y, int p) {
    Mat z = Mat::zero(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = fp::norm(z.at(i, j) + (long long)v * y.at(k, j), p);
        }
    return z;
}

/// In-place row echelon; returns rank.  Rows are vectors of length `cols`.
inline int echelon(std::vector<std::vector<int>>& rows, int cols, int p) {
    int rank = 0;
    for (int c = 0; c < cols && rank < (int)rows.size(); ++c) {
        int piv = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (rows[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        int ip = fp::inv(rows[rank][c], p);
        for (int j = c; j < cols; ++j) rows[rank][j] = fp::norm((long long)rows[rank][j] * ip, p);
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            long long f = rows[r][c];
            for (int j = c; j < cols; ++j)
                rows[r][j] = fp::norm(rows[r][j] - f * rows[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

inline int rank_of(std::vector<std::vector<int>> rows, int cols, int p) {
    return echelon(rows, cols, p);
}

/// Basis of the solution space of the homogeneous system rows * x = 0.
inline std::vector<std::vector<int>> nullspace(std::vector<std::vector<int>> rows, int cols, int p) {
    int rank = echelon(rows, cols, p);
    rows.resize(rank);
    std::vector<int> pivot_col(rank, -1);
    std::vector<char> is_pivot(cols, 0);
    for (int r = 0; r < rank; ++r) {
        int c = 0;
        while (c < cols && rows[r][c] == 0) ++c;
        pivot_col[r] = c;
        is_pivot[c] = 1;
    }
    std::vector<std::vector<int>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<int> v(cols, 0);
        v[c] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivot_col[r]] = fp::norm(-(long long)rows[r][c], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct MatrixRepresentation {
    int prime = 101;
    std::vector<int> dims;        // per vertex index
    std::vector<Mat> arrow_mats;  // per arrow index: dims[tgt] x dims[src]

    int total() const { return std::accumulate(dims.begin(), dims.end(), 0); }
};

/// 0/1 representation of M(w) on the coefficient-quiver basis.
inline MatrixRepresentation matrix_rep(const StringWord& word, FieldConfig field = {}) {
    const auto& d = word.qd();
    StringWord w = word.canonical();
    MatrixRepresentation rep;
    rep.prime = field.prime;
    rep.dims.assign(d.vertices.size(), 0);
    auto pos = w.positions();
    std::vector<int> index_at(pos.size());  // basis index of position within its vertex
    for (size_t i = 0; i < pos.size(); ++i) index_at[i] = rep.dims[pos[i]]++;
    for (size_t a = 0; a < d.arrows.size(); ++a)
        rep.arrow_mats.push_back(Mat::zero(rep.dims[d.tgt[a]], rep.dims[d.src[a]]));
    for (int i = 0; i < w.length(); ++i) {
        Letter l = w.letters()[i];
        int from = l.inverted ? i + 1 : i;
        int to = l.inverted ? i : i + 1;
        rep.arrow_mats[l.arrow].at(index_at[to], index_at[from]) = 1;
    }
    return rep;
}

inline MatrixRepresentation direct_sum(const BoundQuiver& q,
                                       const std::vector<const MatrixRepresentation*>& parts,
                                       int prime) {
    MatrixRepresentation out;
    out.prime = prime;
    out.dims.assign(q.vertex_count(), 0);
    for (auto* r : parts)
        for (int v = 0; v < q.vertex_count(); ++v) out.dims[v] += r->dims[v];
    for (int a = 0; a < q.arrow_count(); ++a) {
        Mat m = Mat::zero(out.dims[q.target_of(a)], out.dims[q.source_of(a)]);
        int roff = 0, coff = 0;
        for (auto* r : parts) {
            const Mat& b = r->arrow_mats[a];
            for (int i = 0; i < b.rows; ++i)
                for (int j = 0; j < b.cols; ++j) m.at(roff + i, coff + j) = b.at(i, j);
            roff += b.rows;
            coff += b.cols;
        }
        out.arrow_mats.push_back(std::move(m));
    }
    return out;
}

namespace detail {

// Assemble the intertwiner system f_t M_a = N_a f_s; unknowns are the
// entries of the blocks f_x (dim N_x rows, dim M_x cols), vectorized.
inline std::vector<std::vector<int>> intertwiner_rows(const BoundQuiver& q,
                                                      const MatrixRepresentation& M,
                                                      const MatrixRepresentation& N,
                                                      std::vector<int>& offsets) {
    int p = M.prime;
    int nv = q.vertex_count();
    offsets.assign(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offsets[v + 1] = offsets[v] + N.dims[v] * M.dims[v];
    int unknowns = offsets[nv];
    std::vector<std::vector<int>> rows;
    auto idx = [&](int v, int r, int c) { return offsets[v] + r * M.dims[v] + c; };
    for (int a = 0; a < q.arrow_count(); ++a) {
        int s = q.source_of(a), t = q.target_of(a);
        const Mat& Ma = M.arrow_mats[a];
        const Mat& Na = N.arrow_mats[a];
        for (int r = 0; r < N.dims[t]; ++r)
            for (int c = 0; c < M.dims[s]; ++c) {
                std::vector<int> row(unknowns, 0);
                for (int j = 0; j < M.dims[t]; ++j)
                    if (Ma.at(j, c))
                        row[idx(t, r, j)] = fp::norm(row[idx(t, r, j)] + Ma.at(j, c), p);
                for (int i = 0; i < N.dims[s]; ++i)
                    if (Na.at(r, i))
                        row[idx(s, i, c)] = fp::norm(row[idx(s, i, c)] - Na.at(r, i), p);
                bool nz = false;
                for (int x : row)
                    if (x) { nz = true; break; }
                if (nz) rows.push_back(std::move(row));
            }
    }
    return rows;
}

}  // namespace detail

inline int hom_dim_numeric(const BoundQuiver& q, const MatrixRepresentation& M,
                           const MatrixRepresentation& N) {
    std::vector<int> offsets;
    auto rows = detail::intertwiner_rows(q, M, N, offsets);
    int unknowns = offsets.back();
    if (unknowns == 0) return 0;
    return unknowns - rank_of(std::move(rows), unknowns, M.prime);
}

/// All homs M -> N as per-vertex blocks.
inline std::vector<std::vector<Mat>> hom_space_numeric(const BoundQuiver& q,
                                                       const MatrixRepresentation& M,
                                                       const MatrixRepresentation& N) {
    std::vector<int> offsets;
    auto rows = detail::intertwiner_rows(q, M, N, offsets);
    int unknowns = offsets.back();
    std::vector<std::vector<int>> vecs =
        unknowns == 0 ? std::vector<std::vector<int>>{} : nullspace(std::move(rows), unknowns, M.prime);
    std::vector<std::vector<Mat>> out;
    for (const auto& v : vecs) {
        std::vector<Mat> blocks;
        for (int x = 0; x < q.vertex_count(); ++x) {
            Mat b = Mat::zero(N.dims[x], M.dims[x]);
            for (int r = 0; r < b.rows; ++r)
                for (int c = 0; c < b.cols; ++c) b.at(r, c) = v[offsets[x] + r * M.dims[x] + c];
            blocks.push_back(std::move(b));
        }
        out.push_back(std::move(blocks));
    }
    return out;
}

/// Projective P(v) on its basis of relation-avoiding paths from v.
struct ProjectiveRep {
    MatrixRepresentation rep;
    int top_vertex = -1;
    std::vector<std::vector<int>> paths;     // arrow sequences, paths[k] for global basis element k
    std::vector<int> end_vertex;             // per basis element
    std::vector<int> index_within_vertex;    // per basis element
};

inline ProjectiveRep projective_rep(const BoundQuiver& q, int v, FieldConfig field = {}) {
    ProjectiveRep pr;
    pr.top_vertex = v;
    pr.rep.prime = field.prime;
    pr.rep.dims.assign(q.vertex_count(), 0);
    std::vector<std::vector<int>> frontier{{}};
    pr.paths.push_back({});
    int guard = 0;
    while (!frontier.empty()) {
        if (++guard > 4096) throw Error(Errc::NotFiniteDimensional, "unbounded path basis");
        std::vector<std::vector<int>> next;
        for (const auto& path : frontier) {
            int end = path.empty() ? v : q.target_of(path.back());
            for (int b : q.out_arrows(end)) {
                if (!path.empty() && q.is_relation(path.back(), b)) continue;
                auto ext = path;
                ext.push_back(b);
                pr.paths.push_back(ext);
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    for (const auto& path : pr.paths) {
        int end = path.empty() ? v : q.target_of(path.back());
        pr.end_vertex.push_back(end);
        pr.index_within_vertex.push_back(pr.rep.dims[end]++);
    }
    for (int a = 0; a < q.arrow_count(); ++a)
        pr.rep.arrow_mats.push_back(
            Mat::zero(pr.rep.dims[q.target_of(a)], pr.rep.dims[q.source_of(a)]));
    // arrow action: path |-> path . a when relation-avoiding
    std::map<std::vector<int>, int> lookup;
    for (size_t k = 0; k < pr.paths.size(); ++k) lookup[pr.paths[k]] = (int)k;
    for (size_t k = 0; k < pr.paths.size(); ++k) {
        int end = pr.end_vertex[k];
        for (int a : q.out_arrows(end)) {
            if (!pr.paths[k].empty() && q.is_relation(pr.paths[k].back(), a)) continue;
            auto ext = pr.paths[k];
            ext.push_back(a);
            auto it = lookup.find(ext);
            if (it == lookup.end()) continue;
            pr.rep.arrow_mats[a].at(pr.index_within_vertex[it->second], pr.index_within_vertex[k]) = 1;
        }
    }
    return pr;
}

struct NumericCover {
    MatrixRepresentation p0;
    MatrixRepresentation kernel;
    std::vector<int> top_multiplicity;  // per vertex
};

/// Minimal projective cover of M with its kernel, computed entirely from the
/// matrices: tops are complements of the radical, lifts are applied along
/// path bases, the kernel is the per-vertex nullspace as a subrepresentation.
inline NumericCover projective_cover_numeric(const BoundQuiver& q, const MatrixRepresentation& M) {
    int p = M.prime;
    int nv = q.vertex_count();
    NumericCover out;
    out.top_multiplicity.assign(nv, 0);

    // top generators per vertex: unit vectors completing rad M_x
    std::vector<std::vector<std::vector<int>>> gens(nv);  // per vertex, list of coordinate vectors
    for (int x = 0; x < nv; ++x) {
        std::vector<std::vector<int>> span;
        for (int a = 0; a < q.arrow_count(); ++a) {
            if (q.target_of(a) != x) continue;
            const Mat& m = M.arrow_mats[a];
            for (int c = 0; c < m.cols; ++c) {
                std::vector<int> col(m.rows);
                for (int r = 0; r < m.rows; ++r) col[r] = m.at(r, c);
                span.push_back(std::move(col));
            }
        }
        int base_rank = span.empty() ? 0 : rank_of(span, M.dims[x], p);
        auto work = span;
        int current = base_rank;
        for (int i = 0; i < M.dims[x]; ++i) {
            std::vector<int> e(M.dims[x], 0);
            e[i] = 1;
            work.push_back(e);
            int r = rank_of(work, M.dims[x], p);
            if (r > current) {
                current = r;
                gens[x].push_back(std::move(e));
                out.top_multiplicity[x]++;
            } else {
                work.pop_back();
            }
        }
    }

    // assemble P0 and the cover map blocks f_x : (P0)_x -> M_x
    std::vector<ProjectiveRep> projs;
    std::vector<std::vector<int>> gen_vectors;  // aligned with projs
    for (int x = 0; x < nv; ++x)
        for (const auto& g : gens[x]) {
            projs.push_back(projective_rep(q, x, FieldConfig{p}));
            gen_vectors.push_back(g);
        }
    std::vector<const MatrixRepresentation*> parts;
    for (const auto& pr : projs) parts.push_back(&pr.rep);
    out.p0 = direct_sum(q, parts, p);

    std::vector<Mat> f;  // per vertex: M.dims[x] x p0.dims[x]
    for (int x = 0; x < nv; ++x) f.push_back(Mat::zero(M.dims[x], out.p0.dims[x]));
    std::vector<int> offset(nv, 0);
    for (size_t k = 0; k < projs.size(); ++k) {
        const ProjectiveRep& pr = projs[k];
        // image of each basis path under the lift of gen_vectors[k]
        for (size_t b = 0; b < pr.paths.size(); ++b) {
            std::vector<int> vec = gen_vectors[k];
            for (int a : pr.paths[b]) {
                const Mat& ma = M.arrow_mats[a];
                std::vector<int> nxt(ma.rows, 0);
                for (int r = 0; r < ma.rows; ++r) {
                    long long s = 0;
                    for (int c = 0; c < ma.cols; ++c) s += (long long)ma.at(r, c) * vec[c];
                    nxt[r] = fp::norm(s, p);
                }
                vec = std::move(nxt);
            }
            int x = pr.end_vertex[b];
            int col = offset[x] + pr.index_within_vertex[b];
            for (int r = 0; r < (int)vec.size(); ++r) f[x].at(r, col) = vec[r];
        }
        for (int x = 0; x < nv; ++x) offset[x] += pr.rep.dims[x];
    }

    // kernel bases per vertex
    std::vector<std::vector<std::vector<int>>> kb(nv);
    for (int x = 0; x < nv; ++x) {
        std::vector<std::vector<int>> rows;
        for (int r = 0; r < f[x].rows; ++r) {
            std::vector<int> row(f[x].cols);
            for (int c = 0; c < f[x].cols; ++c) row[c] = f[x].at(r, c);
            rows.push_back(std::move(row));
        }
        kb[x] = out.p0.dims[x] == 0 ? std::vector<std::vector<int>>{}
                                    : nullspace(std::move(rows), out.p0.dims[x], p);
    }
    out.kernel.prime = p;
    out.kernel.dims.assign(nv, 0);
    for (int x = 0; x < nv; ++x) out.kernel.dims[x] = (int)kb[x].size();
    // restrict arrow action to the kernel: solve B_t X = P0_a B_s
    for (int a = 0; a < q.arrow_count(); ++a) {
        int s = q.source_of(a), t = q.target_of(a);
        Mat x = Mat::zero(out.kernel.dims[t], out.kernel.dims[s]);
        if (out.kernel.dims[t] > 0 && out.kernel.dims[s] > 0) {
            // columns of P0_a * B_s expressed in basis B_t
            int dt = out.p0.dims[t];
            // augmented system [B_t | rhs...] in coordinates
            std::vector<std::vector<int>> aug(dt);
            for (int r = 0; r < dt; ++r) {
                aug[r].assign(out.kernel.dims[t] + out.kernel.dims[s], 0);
                for (int c = 0; c < out.kernel.dims[t]; ++c) aug[r][c] = kb[t][c][r];
            }
            const Mat& pa = out.p0.arrow_mats[a];
            for (int c = 0; c < out.kernel.dims[s]; ++c) {
                for (int r = 0; r < dt; ++r) {
                    long long sum = 0;
                    for (int j = 0; j < out.p0.dims[s]; ++j) sum += (long long)pa.at(r, j) * kb[s][c][j];
                    aug[r][out.kernel.dims[t] + c] = fp::norm(sum, p);
                }
            }
            echelon(aug, out.kernel.dims[t] + out.kernel.dims[s], p);
            // read solutions: for each pivot row with pivot in the B_t block
            for (int r = 0; r < (int)aug.size(); ++r) {
                int c = 0;
                while (c < out.kernel.dims[t] && aug[r][c] == 0) ++c;
                if (c >= out.kernel.dims[t]) continue;
                for (int j = 0; j < out.kernel.dims[s]; ++j)
                    x.at(c, j) = aug[r][out.kernel.dims[t] + j];
            }
        }
        out.kernel.arrow_mats.push_back(std::move(x));
    }
    return out;
}

/// dim Ext^1(M, N) from 0 -> K -> P0 -> M -> 0:
/// dim Hom(K,N) - dim Hom(P0,N) + dim Hom(M,N).
inline int ext1_dim_numeric(const BoundQuiver& q, const MatrixRepresentation& M,
                            const MatrixRepresentation& N, const NumericCover* cover = nullptr) {
    NumericCover local;
    if (!cover) {
        local = projective_cover_numeric(q, M);
        cover = &local;
    }
    return hom_dim_numeric(q, cover->kernel, N) - hom_dim_numeric(q, cover->p0, N) +
           hom_dim_numeric(q, M, N);
}

namespace detail {

// The scalar lambda with f - lambda*id nilpotent, read off a vertex block
// whose dimension is a unit mod p.
inline int local_scalar(const std::vector<Mat>& f, const std::vector<int>& dims, int p) {
    for (size_t x = 0; x < dims.size(); ++x) {
        if (dims[x] == 0 || dims[x] % p == 0) continue;
        long long tr = 0;
        for (int i = 0; i < dims[x]; ++i) tr += f[x].at(i, i);
        return fp::norm(tr * fp::inv(dims[x] % p, p), p);
    }
    throw Error(Errc::BadInput, "prime too small to separate scalars on this module");
}

inline std::vector<int> vectorize(const std::vector<Mat>& blocks) {
    std::vector<int> v;
    for (const Mat& b : blocks) v.insert(v.end(), b.a.begin(), b.a.end());
    return v;
}

// Basis of the radical morphisms M -> N (all homs when the strings differ,
// the kernel of the local scalar when they agree).
inline std::vector<std::vector<Mat>> radical_basis(const BoundQuiver& q, bool same,
                                                   const MatrixRepresentation& M,
                                                   const MatrixRepresentation& N) {
    auto homs = hom_space_numeric(q, M, N);
    if (!same) return homs;
    int p = M.prime;
    std::vector<std::vector<Mat>> rad;
    for (auto& f : homs) {
        int lambda = local_scalar(f, M.dims, p);
        auto g = f;
        for (size_t x = 0; x < g.size(); ++x)
            for (int i = 0; i < std::min(g[x].rows, g[x].cols); ++i)
                g[x].at(i, i) = fp::norm(g[x].at(i, i) - lambda, p);
        bool nz = false;
        for (const Mat& b : g)
            for (int v : b.a)
                if (v) nz = true;
        if (nz) rad.push_back(std::move(g));
    }
    return rad;
}

}  // namespace detail

/// dim rad(M,N) - dim rad^2(M,N), the number of arrows M -> N in the
/// Auslander-Reiten quiver.  `ambient` must contain all indecomposables.
inline int irr_count(const BoundQuiver& q, const StringWord& M, const StringWord& N,
                     const std::vector<StringWord>& ambient, FieldConfig field = {}) {
    auto contains = [&](const StringWord& w) {
        for (const auto& x : ambient)
            if (x == w) return true;
        return false;
    };
    if (!contains(M) || !contains(N))
        throw Error(Errc::AmbientIncomplete, "module missing from ambient list");

    int p = field.prime;
    auto repM = matrix_rep(M, field);
    auto repN = matrix_rep(N, field);
    auto rad_mn = detail::radical_basis(q, M == N, repM, repN);
    if (rad_mn.empty()) return 0;
    std::vector<std::vector<int>> mat;
    for (const auto& f : rad_mn) mat.push_back(detail::vectorize(f));
    int cols = (int)mat[0].size();
    int dim_rad = rank_of(mat, cols, p);

    std::vector<std::vector<int>> sq;
    for (const auto& X : ambient) {
        auto repX = matrix_rep(X, field);
        auto fs = detail::radical_basis(q, M == X, repM, repX);
        if (fs.empty()) continue;
        auto gs = detail::radical_basis(q, X == N, repX, repN);
        if (gs.empty()) continue;
        for (const auto& f : fs)
            for (const auto& g : gs) {
                std::vector<Mat> comp;
                for (int x = 0; x < q.vertex_count(); ++x) comp.push_back(mul(g[x], f[x], p));
                sq.push_back(detail::vectorize(comp));
            }
    }
    int dim_rad2 = sq.empty() ? 0 : rank_of(sq, cols, p);
    return dim_rad - dim_rad2;
}

}  // namespace gentle::oracle
