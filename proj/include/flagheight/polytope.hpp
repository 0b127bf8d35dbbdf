#pragma once

// Exact rational H-polytopes: vertex enumeration, pulling triangulation,
// volumes, integrals of affine functions and lattice-point counts.
//
// Vertices are found by solving every d-subset of the inequalities, which is
// adequate for the few dozen facets of the polytopes handled here.

#include "flagheight/errors.hpp"
#include "flagheight/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace flagheight {

/// a . x <= b
struct Halfspace {
    RationalVec a;
    Rational b;
    friend bool operator<(const Halfspace& x, const Halfspace& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }
    friend bool operator==(const Halfspace& x, const Halfspace& y) { return x.a == y.a && x.b == y.b; }
};

/// x |-> coeffs . x + constant
struct AffineFunctional {
    RationalVec coeffs;
    Rational constant;

    Rational operator()(const RationalVec& x) const { return dot(coeffs, x) + constant; }
};

namespace linalg {

/// Solves the square system M x = rhs; nullopt when M is singular.
inline std::optional<RationalVec> solve(std::vector<RationalVec> m, RationalVec rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
            rhs[r] -= f * rhs[col];
        }
    }
    RationalVec x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = rhs[i] / m[i][i];
        x[i].canonicalize();
    }
    return x;
}

inline int rank(std::vector<RationalVec> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int r = 0;
    for (std::size_t col = 0; col < cols && r < static_cast<int>(rows.size()); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const Rational f = rows[i][col] / rows[r][col];
            for (std::size_t k = col; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

inline Rational determinant(std::vector<RationalVec> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    det.canonicalize();
    return det;
}

}  // namespace linalg

inline Rational factorial(int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

class Polytope {
public:
    using Simplex = std::vector<std::size_t>;

    /// Builds {x in Q^dim : a.x <= b for all halfspaces} and its triangulation.
    Polytope(int dim, std::vector<Halfspace> halfspaces) : dim_(dim) {
        for (auto& h : halfspaces) {
            if (h.a.size() != static_cast<std::size_t>(dim))
                throw Error(ErrorKind::DimensionMismatch, "halfspace of wrong dimension");
            for (auto& q : h.a) q.canonicalize();
            h.b.canonicalize();
            const bool zero = std::all_of(h.a.begin(), h.a.end(), [](const Rational& q) { return q == 0; });
            if (zero) {
                if (h.b < 0) infeasible_ = true;
                continue;
            }
            ineqs_.push_back(std::move(h));
        }
        std::sort(ineqs_.begin(), ineqs_.end());
        ineqs_.erase(std::unique(ineqs_.begin(), ineqs_.end()), ineqs_.end());
        if (!infeasible_) enumerate_vertices();
        if (!vertices_.empty()) {
            std::vector<RationalVec> diffs;
            for (std::size_t i = 1; i < vertices_.size(); ++i) diffs.push_back(sub(vertices_[i], vertices_[0]));
            affine_dim_ = linalg::rank(diffs);
        }
        if (full_dimensional()) triangulate();
    }

    int dim() const { return dim_; }
    const std::vector<Halfspace>& inequalities() const { return ineqs_; }
    /// Deduplicated vertices in lexicographic order.
    const std::vector<RationalVec>& vertices() const { return vertices_; }
    /// (dim+1)-tuples of vertex indices, each with positive orientation.
    const std::vector<Simplex>& simplices() const { return simplices_; }
    bool empty() const { return vertices_.empty(); }
    int affine_dimension() const { return vertices_.empty() ? -1 : affine_dim_; }
    bool full_dimensional() const { return !vertices_.empty() && affine_dim_ == dim_; }

    bool contains(const RationalVec& x) const {
        if (x.size() != static_cast<std::size_t>(dim_)) return false;
        if (infeasible_) return false;
        for (const auto& h : ineqs_)
            if (dot(h.a, x) > h.b) return false;
        return true;
    }

    /// Number of inequalities tight at x.
    int tight_count(const RationalVec& x) const {
        int c = 0;
        for (const auto& h : ineqs_) c += dot(h.a, x) == h.b ? 1 : 0;
        return c;
    }

    /// Rank of the normals of the inequalities tight at x.
    int tight_rank(const RationalVec& x) const {
        std::vector<RationalVec> rows;
        for (const auto& h : ineqs_)
            if (dot(h.a, x) == h.b) rows.push_back(h.a);
        return linalg::rank(rows);
    }

    /// d! vol(S) = |det| for the simplex.
    Rational simplex_normalized_volume(const Simplex& s) const {
        if (dim_ == 0) return 1;
        return abs(signed_det(s));
    }

    /// Lebesgue volume; 0 for lower-dimensional or empty polytopes, 1 in dimension 0.
    Rational volume() const {
        Rational v = 0;
        for (const auto& s : simplices_) v += simplex_normalized_volume(s);
        v /= factorial(dim_);
        v.canonicalize();
        return v;
    }

    /// Exact integral of an affine function: sum over simplices of vol(S) times the vertex mean.
    Rational integrate(const AffineFunctional& f) const {
        if (f.coeffs.size() != static_cast<std::size_t>(dim_))
            throw Error(ErrorKind::DimensionMismatch, "functional of wrong dimension");
        Rational total = 0;
        for (const auto& s : simplices_) {
            Rational mean = 0;
            for (auto v : s) mean += f(vertices_[v]);
            mean /= static_cast<long>(s.size());
            total += simplex_normalized_volume(s) * mean;
        }
        total /= factorial(dim_);
        total.canonicalize();
        return total;
    }

    /// #(m P cap Z^dim).
    std::uint64_t count_lattice_points(int m) const {
        if (m <= 0) throw Error(ErrorKind::BadRank, "dilation factor must be positive");
        if (vertices_.empty()) return 0;
        if (dim_ == 0) return 1;
        std::vector<mpz_class> lo(dim_), hi(dim_);
        for (int i = 0; i < dim_; ++i) {
            Rational mn = vertices_[0][i], mx = vertices_[0][i];
            for (const auto& v : vertices_) {
                mn = std::min(mn, v[i]);
                mx = std::max(mx, v[i]);
            }
            mn *= m;
            mx *= m;
            mpz_cdiv_q(lo[i].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
            mpz_fdiv_q(hi[i].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
        }
        // Each inequality is checked once its last nonzero coordinate is fixed.
        std::vector<std::vector<std::size_t>> check_at(dim_);
        for (std::size_t h = 0; h < ineqs_.size(); ++h) {
            int last = 0;
            for (int i = 0; i < dim_; ++i)
                if (ineqs_[h].a[i] != 0) last = i;
            check_at[last].push_back(h);
        }
        RationalVec x(dim_);
        std::uint64_t count = 0;
        std::function<void(int)> rec = [&](int k) {
            if (k == dim_) {
                ++count;
                return;
            }
            for (mpz_class v = lo[k]; v <= hi[k]; ++v) {
                x[k] = v;
                bool ok = true;
                for (auto h : check_at[k]) {
                    Rational s = 0;
                    for (int i = 0; i <= k; ++i) s += ineqs_[h].a[i] * x[i];
                    if (s > ineqs_[h].b * m) {
                        ok = false;
                        break;
                    }
                }
                if (ok) rec(k + 1);
            }
        };
        rec(0);
        return count;
    }

    /// The polytope intersected with one more halfspace.
    Polytope with_halfspace(Halfspace h) const {
        auto hs = ineqs_;
        hs.push_back(std::move(h));
        if (infeasible_) hs.push_back({RationalVec(dim_, 0), -1});
        return Polytope(dim_, std::move(hs));
    }

private:
    static RationalVec sub(const RationalVec& a, const RationalVec& b) {
        RationalVec d(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
        return d;
    }

    Rational signed_det(const Simplex& s) const {
        std::vector<RationalVec> m;
        for (std::size_t i = 1; i < s.size(); ++i) m.push_back(sub(vertices_[s[i]], vertices_[s[0]]));
        return linalg::determinant(std::move(m));
    }

    void enumerate_vertices() {
        const std::size_t m = ineqs_.size();
        std::set<RationalVec> found;
        if (dim_ == 0) {
            vertices_.push_back({});
            return;
        }
        if (m < static_cast<std::size_t>(dim_)) return;  // unbounded or degenerate: no vertices
        std::vector<std::size_t> pick(dim_);
        std::function<void(std::size_t, int)> rec = [&](std::size_t start, int depth) {
            if (depth == dim_) {
                std::vector<RationalVec> rows;
                RationalVec rhs;
                for (auto h : pick) {
                    rows.push_back(ineqs_[h].a);
                    rhs.push_back(ineqs_[h].b);
                }
                auto x = linalg::solve(std::move(rows), std::move(rhs));
                if (x && contains(*x)) found.insert(*x);
                return;
            }
            for (std::size_t h = start; h + (dim_ - depth) <= m; ++h) {
                pick[depth] = h;
                rec(h + 1, depth + 1);
            }
        };
        rec(0, 0);
        vertices_.assign(found.begin(), found.end());
    }

    int affine_dim_of(const std::vector<std::size_t>& face) const {
        std::vector<RationalVec> diffs;
        for (std::size_t i = 1; i < face.size(); ++i) diffs.push_back(sub(vertices_[face[i]], vertices_[face[0]]));
        return linalg::rank(diffs);
    }

    // Pulling triangulation: cone from the smallest vertex of each face over the
    // facets of that face not containing it.
    std::vector<Simplex> triangulate_face(const std::vector<std::size_t>& face, int k) const {
        if (k == 0) return {{face.front()}};
        const std::size_t apex = face.front();
        std::vector<Simplex> out;
        std::set<std::vector<std::size_t>> seen;
        for (std::size_t h = 0; h < ineqs_.size(); ++h) {
            if (tight_[h][apex]) continue;
            std::vector<std::size_t> sub_face;
            for (auto v : face)
                if (tight_[h][v]) sub_face.push_back(v);
            if (sub_face.size() < static_cast<std::size_t>(k)) continue;
            if (!seen.insert(sub_face).second) continue;
            if (affine_dim_of(sub_face) != k - 1) continue;
            for (auto& s : triangulate_face(sub_face, k - 1)) {
                Simplex full{apex};
                full.insert(full.end(), s.begin(), s.end());
                out.push_back(std::move(full));
            }
        }
        return out;
    }

    void triangulate() {
        tight_.assign(ineqs_.size(), std::vector<char>(vertices_.size(), 0));
        for (std::size_t h = 0; h < ineqs_.size(); ++h)
            for (std::size_t v = 0; v < vertices_.size(); ++v)
                tight_[h][v] = dot(ineqs_[h].a, vertices_[v]) == ineqs_[h].b;
        std::vector<std::size_t> all(vertices_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        simplices_ = triangulate_face(all, dim_);
        for (auto& s : simplices_) {
            const Rational det = signed_det(s);
            if (det == 0) throw Error(ErrorKind::InternalInconsistency, "degenerate simplex in triangulation");
            if (det < 0) std::swap(s[0], s[1]);
        }
        std::sort(simplices_.begin(), simplices_.end());
    }

    int dim_;
    bool infeasible_ = false;
    std::vector<Halfspace> ineqs_;
    std::vector<RationalVec> vertices_;
    int affine_dim_ = -1;
    std::vector<std::vector<char>> tight_;
    std::vector<Simplex> simplices_;
};

}  // namespace flagheight
