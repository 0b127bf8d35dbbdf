#pragma once

// Gelfand-Zetlin polytopes for GL(n): the Okounkov body of (GL_n/P, L_lambda)
// in type A, the weight map onto the weight polytope, and the concave
// transform x |-> <deg(F_Q), p(x)>. Integral means of the transform give an
// independent route to the variety height.

#include "flagheight/errors.hpp"
#include "flagheight/height.hpp"
#include "flagheight/polytope.hpp"
#include "flagheight/rational.hpp"
#include "flagheight/root_datum.hpp"
#include "flagheight/weyl.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace flagheight {

/// One pattern entry: either a constant or an affine image of a free variable.
struct GZEntry {
    bool is_free = false;
    Rational value;       // constant value when !is_free
    std::size_t var = 0;  // free-variable index when is_free
};

class GZPolytope {
public:
    int n() const { return n_; }
    const RationalVec& lambda() const { return lambda_; }
    /// rows[k] has n - k entries; rows[0] = lambda.
    const std::vector<std::vector<GZEntry>>& rows() const { return rows_; }
    /// (row, position) of each free variable, in variable order.
    const std::vector<std::pair<int, int>>& free_vars() const { return free_vars_; }
    int dim() const { return static_cast<int>(free_vars_.size()); }
    const Polytope& polytope() const { return poly_; }
    const std::vector<Halfspace>& inequalities() const { return poly_.inequalities(); }

    /// p_j as affine functionals of the free variables, j = 1..n.
    const std::vector<AffineFunctional>& weight_functionals() const { return weight_; }

    friend GZPolytope build_gz(int n, const WeightVec& lambda);

private:
    GZPolytope(int n, RationalVec lambda, std::vector<std::vector<GZEntry>> rows,
               std::vector<std::pair<int, int>> free_vars, Polytope poly, std::vector<AffineFunctional> weight)
        : n_(n), lambda_(std::move(lambda)), rows_(std::move(rows)), free_vars_(std::move(free_vars)),
          poly_(std::move(poly)), weight_(std::move(weight)) {}

    int n_;
    RationalVec lambda_;
    std::vector<std::vector<GZEntry>> rows_;
    std::vector<std::pair<int, int>> free_vars_;
    Polytope poly_;
    std::vector<AffineFunctional> weight_;
};

/// Interlacing system row_{k-1}[i] <= row_k[i] <= row_{k-1}[i+1] for an integral,
/// weakly increasing lambda. Entries squeezed between equal constants are
/// eliminated, leaving a full-dimensional polytope in the free variables.
inline GZPolytope build_gz(int n, const WeightVec& lambda) {
    if (n < 1 || lambda.coords.size() != static_cast<std::size_t>(n))
        throw Error(ErrorKind::DimensionMismatch, "GZ pattern needs lambda of length n");
    for (int i = 0; i < n; ++i)
        if (!is_integral(lambda.coords[i]))
            throw Error(ErrorKind::NotIntegral, "lambda_" + std::to_string(i + 1) + " = " +
                                                    to_string(lambda.coords[i]) + " is not an integer");
    for (int i = 0; i + 1 < n; ++i)
        if (lambda.coords[i] > lambda.coords[i + 1])
            throw Error(ErrorKind::NotAntidominant, "lambda must be weakly increasing: lambda_" + std::to_string(i + 1) +
                                                        " > lambda_" + std::to_string(i + 2));

    std::vector<std::vector<GZEntry>> rows(n);
    std::vector<std::pair<int, int>> free_vars;
    for (int i = 0; i < n; ++i) rows[0].push_back({false, lambda.coords[i], 0});
    for (int k = 1; k < n; ++k) {
        for (int i = 0; i < n - k; ++i) {
            const auto& lo = rows[k - 1][i];
            const auto& hi = rows[k - 1][i + 1];
            if (!lo.is_free && !hi.is_free && lo.value == hi.value) {
                rows[k].push_back({false, lo.value, 0});
            } else {
                rows[k].push_back({true, 0, free_vars.size()});
                free_vars.emplace_back(k, i);
            }
        }
    }
    const int d = static_cast<int>(free_vars.size());
    auto as_affine = [&](const GZEntry& e) {
        AffineFunctional f{RationalVec(d, 0), 0};
        if (e.is_free) f.coeffs[e.var] = 1;
        else f.constant = e.value;
        return f;
    };
    std::vector<Halfspace> hs;
    auto leq = [&](const GZEntry& a, const GZEntry& b) {
        if (!a.is_free && !b.is_free) return;  // constants already interlace
        const auto fa = as_affine(a), fb = as_affine(b);
        Halfspace h{RationalVec(d), fb.constant - fa.constant};
        for (int j = 0; j < d; ++j) h.a[j] = fa.coeffs[j] - fb.coeffs[j];
        hs.push_back(std::move(h));
    };
    for (int k = 1; k < n; ++k)
        for (int i = 0; i < n - k; ++i) {
            leq(rows[k - 1][i], rows[k][i]);
            leq(rows[k][i], rows[k - 1][i + 1]);
        }

    // r_k = sum of the row with k entries; p_j = r_j - r_{j-1}.
    std::vector<AffineFunctional> row_sum(n + 1, AffineFunctional{RationalVec(d, 0), 0});
    for (int k = 0; k < n; ++k) {
        auto& s = row_sum[n - k];
        for (const auto& e : rows[k]) {
            const auto f = as_affine(e);
            for (int j = 0; j < d; ++j) s.coeffs[j] += f.coeffs[j];
            s.constant += f.constant;
        }
    }
    std::vector<AffineFunctional> weight;
    for (int j = 1; j <= n; ++j) {
        AffineFunctional p{RationalVec(d), row_sum[j].constant - row_sum[j - 1].constant};
        for (int v = 0; v < d; ++v) p.coeffs[v] = row_sum[j].coeffs[v] - row_sum[j - 1].coeffs[v];
        weight.push_back(std::move(p));
    }
    Polytope poly(d, std::move(hs));
    if (!poly.full_dimensional())
        throw Error(ErrorKind::InternalInconsistency, "GZ polytope is not full-dimensional");
    return GZPolytope(n, lambda.coords, std::move(rows), std::move(free_vars), std::move(poly), std::move(weight));
}

inline const std::vector<RationalVec>& vertices(const GZPolytope& gz) { return gz.polytope().vertices(); }

inline Rational volume(const GZPolytope& gz) { return gz.polytope().volume(); }

/// p(x) for x in the polytope.
inline WeightVec weight_map(const GZPolytope& gz, const RationalVec& x) {
    if (!gz.polytope().contains(x)) throw Error(ErrorKind::PointOutside, "point " + join(x) + " lies outside the GZ polytope");
    WeightVec w;
    for (const auto& p : gz.weight_functionals()) w.coords.push_back(p(x));
    return w;
}

/// phi = <c, p(.)> as an affine functional of the free variables.
inline AffineFunctional concave_transform_functional(const GZPolytope& gz, const CochVec& c) {
    if (c.coords.size() != static_cast<std::size_t>(gz.n()))
        throw Error(ErrorKind::DimensionMismatch, "slope vector length differs from n");
    AffineFunctional phi{RationalVec(gz.dim(), 0), 0};
    for (int j = 0; j < gz.n(); ++j) {
        const auto& p = gz.weight_functionals()[j];
        for (int v = 0; v < gz.dim(); ++v) phi.coeffs[v] += c.coords[j] * p.coeffs[v];
        phi.constant += c.coords[j] * p.constant;
    }
    return phi;
}

/// Boucksom-Chen concave transform x |-> <deg(F_Q), p(x)>.
inline Rational concave_transform(const GZPolytope& gz, const CochVec& c, const RationalVec& x) {
    return pair(c, weight_map(gz, x));
}

inline Rational integrate_affine(const GZPolytope& gz, const AffineFunctional& f) { return gz.polytope().integrate(f); }

/// Volume of {x : phi(x) >= t}.
inline Rational superlevel_volume(const GZPolytope& gz, const CochVec& c, const Rational& t) {
    const auto phi = concave_transform_functional(gz, c);
    Halfspace h{RationalVec(gz.dim()), phi.constant - t};
    for (int v = 0; v < gz.dim(); ++v) h.a[v] = -phi.coeffs[v];
    return gz.polytope().with_halfspace(std::move(h)).volume();
}

/// Weyl dimension formula for GL(n) with weakly increasing (antidominant) lambda:
/// prod_{i<j} (lambda_j - lambda_i + j - i) / (j - i).
inline Rational weyl_dimension(const RationalVec& lambda) {
    Rational dim = 1;
    const int n = static_cast<int>(lambda.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) dim *= (lambda[j] - lambda[i] + (j - i)) / Rational(j - i);
    dim.canonicalize();
    return dim;
}

/// Coefficients (constant term first) of m |-> weyl_dimension(m lambda).
inline RationalVec weyl_dimension_polynomial(const RationalVec& lambda) {
    RationalVec poly{1};
    const int n = static_cast<int>(lambda.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Rational slope = (lambda[j] - lambda[i]) / Rational(j - i);
            RationalVec next(poly.size() + 1, 0);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k] += poly[k];
                next[k + 1] += poly[k] * slope;
            }
            poly = std::move(next);
        }
    while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
    for (auto& q : poly) q.canonicalize();
    return poly;
}

/// #(m GZ cap Z^d), cross-checked against the Weyl dimension of m lambda.
inline std::uint64_t count_lattice_points(const GZPolytope& gz, int m) {
    const std::uint64_t count = gz.polytope().count_lattice_points(m);
    RationalVec scaled = gz.lambda();
    for (auto& q : scaled) q *= m;
    if (Rational(static_cast<unsigned long>(count)) != weyl_dimension(scaled))
        throw Error(ErrorKind::InternalInconsistency, "lattice-point count " + std::to_string(count) +
                                                          " differs from the Weyl dimension " +
                                                          to_string(weyl_dimension(scaled)));
    return count;
}

/// Delta_P = {i : lambda_i = lambda_{i+1}}: the parabolic stabilizing lambda.
inline SimpleSet stabilizer_parabolic(const RationalVec& lambda) {
    std::vector<int> idx;
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] == lambda[i + 1]) idx.push_back(static_cast<int>(i + 1));
    return SimpleSet(idx);
}

struct OracleComparison {
    /// Positive integer m clearing the denominators of lambda; polytope data refers to m lambda.
    long scale = 1;
    Rational volume;
    Rational integral;
    /// Integral mean of phi divided by the scale: the height of L_lambda.
    Rational oracle_height;
    /// Weighted average of successive minima.
    Rational variety_height;
    bool match = false;
    int dim = 0;
};

inline long denominator_lcm(const RationalVec& v) {
    mpz_class l = 1;
    for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l.get_si();
}

/// Integral mean of the concave transform over GZ(m lambda), rescaled by 1/m,
/// next to the Weyl-average height. Does not throw on mismatch.
inline OracleComparison compare_with_oracle(const WeylGroup& g, const WeightVec& lambda, const CochVec& c) {
    const RootDatum& d = g.datum();
    if (!d.is_gl()) throw Error(ErrorKind::UnsupportedType, "the polytope oracle is built for GL(n) only");
    const int n = d.coord_dim();
    const SimpleSet parabolic = stabilizer_parabolic(lambda.coords);
    OracleComparison out;
    out.variety_height = variety_height(g, c, lambda, parabolic);
    out.scale = denominator_lcm(lambda.coords);
    WeightVec scaled = lambda;
    for (auto& q : scaled.coords) q *= out.scale;
    const GZPolytope gz = build_gz(n, scaled);
    out.dim = gz.dim();
    if (out.dim != d.flag_dimension(parabolic))
        throw Error(ErrorKind::InternalInconsistency, "GZ dimension differs from dim G/P");
    out.volume = volume(gz);
    out.integral = integrate_affine(gz, concave_transform_functional(gz, c));
    out.oracle_height = out.integral / out.volume / out.scale;
    out.oracle_height.canonicalize();
    out.match = out.oracle_height == out.variety_height;
    return out;
}

/// Integral mean of the concave transform; throws OracleMismatch if it differs
/// from the Weyl-average height.
inline Rational oracle_height(int n, const WeightVec& lambda, const CochVec& c) {
    const auto g = WeylGroup::enumerate(build_root_datum(Family::GL, n));
    const auto cmp = compare_with_oracle(g, lambda, c);
    if (!cmp.match)
        throw Error(ErrorKind::OracleMismatch, "polytope integral mean " + to_string(cmp.oracle_height) +
                                                   " differs from the Weyl average " + to_string(cmp.variety_height));
    return cmp.oracle_height;
}

}  // namespace flagheight
