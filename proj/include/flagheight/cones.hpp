#pragma once

// Augmented base loci and k-th movable cones of flag bundles. A class in
// N^1(F/P) is represented by a pair (lambda, t) standing for L_lambda - t f,
// where f is the class of a vertical fiber.

#include "flagheight/errors.hpp"
#include "flagheight/height.hpp"
#include "flagheight/hn_input.hpp"
#include "flagheight/rational.hpp"
#include "flagheight/root_datum.hpp"
#include "flagheight/weyl.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flagheight {

struct PolarizedClass {
    /// A character of P (pairs to zero with the coroots of Delta_P).
    WeightVec lambda;
    Rational t;
};

struct BindingConstraint {
    std::string kind;  // "root" or "weyl"
    /// Simple-root index for "root", double-coset id for "weyl".
    std::size_t index = 0;
    Rational value;
};

struct ConeReport {
    bool is_big = false;
    /// Largest k with the class in Mov^k; 0 when not big.
    int movable_index = 0;
    /// Values of k for which the class lies on the boundary of Mov^k:
    /// no functional violated, at least one exactly zero.
    std::vector<int> boundary_of;
    /// Functionals that are violated or exactly zero.
    std::vector<BindingConstraint> binding_constraints;
};

struct BaseLocus {
    Stratification cells;
    /// Codimension in the flag bundle; empty when the locus is empty.
    std::optional<int> codimension;
    std::string reason;
};

/// B_+ from a minima table: the cells with zeta_w <= t.
inline Stratification augmented_base_locus(const MinimaTable& table, const Rational& t) {
    return detail::collect(table, t, /*strict=*/false);
}

class ConeAnalyzer {
public:
    ConeAnalyzer(const WeylGroup& group, CochVec slope, SimpleSet parabolic)
        : g_(&group), c_(std::move(slope)), parabolic_(std::move(parabolic)) {
        raise_if_any(validate_canonical_slope(group.datum(), c_), "invalid slope vector");
        check_simple_set(group.datum(), parabolic_, "parabolic_P");
        cosets_ = group.minimal_coset_reps(parabolic_);
        records_ = group.double_cosets(c_.levi, cosets_);
        dim_ = group.datum().flag_dimension(parabolic_);
    }

    int dim() const { return dim_; }
    const CosetTable& cosets() const { return cosets_; }
    const std::vector<DoubleCosetRecord>& double_coset_records() const { return records_; }

    /// <alpha_i^vee, lambda> for i outside Delta_P.
    Rational functional_root(const PolarizedClass& cls, int i) const {
        check_class(cls);
        if (parabolic_.contains(i))
            throw Error(ErrorKind::IndexInLevi, "alpha_" + std::to_string(i) + " lies in Delta_P");
        if (i < 1 || i > g_->datum().num_simple())
            throw Error(ErrorKind::DimensionMismatch, "simple-root index out of range");
        return coroot_pairing(g_->datum(), i, cls.lambda);
    }

    /// <deg(F_Q), w lambda> - t for a group element w.
    Rational functional_weyl(const PolarizedClass& cls, std::size_t w) const {
        check_class(cls);
        return pair(c_, g_->act(w, cls.lambda)) - cls.t;
    }

    std::vector<int> outside_levi() const {
        std::vector<int> out;
        for (int i = 1; i <= g_->datum().num_simple(); ++i)
            if (!parabolic_.contains(i)) out.push_back(i);
        return out;
    }

    bool strictly_antidominant(const PolarizedClass& cls) const {
        for (int i : outside_levi())
            if (functional_root(cls, i) >= 0) return false;
        return true;
    }

    MinimaTable minima(const PolarizedClass& cls) const { return successive_minima(*g_, c_, cls.lambda, parabolic_); }

    BaseLocus augmented_base_locus(const PolarizedClass& cls) const {
        BaseLocus out;
        if (!strictly_antidominant(cls)) {
            out.cells.t = cls.t;
            for (const auto& r : records_) out.cells.included_ids.push_back(r.id);
            for (const auto& r : records_) out.cells.dimension = std::max(out.cells.dimension, r.length);
            out.cells.is_all = true;
            out.codimension = 0;
            out.reason = "lambda is not strictly antidominant: the class is not big on the fibers";
            return out;
        }
        out.cells = flagheight::augmented_base_locus(minima(cls), cls.t);
        if (!out.cells.included_ids.empty()) out.codimension = dim_ - out.cells.dimension;
        return out;
    }

    /// Largest meaningful k: the flag bundle has dimension dim G/P + 1, and Mov^{d+1} is the ample cone.
    int max_k() const { return dim_ + 1; }

    /// Membership in Mov^k, cross-checked against e_k > t.
    bool movable_check(const PolarizedClass& cls, int k) const {
        if (k < 1 || k > max_k())
            throw Error(ErrorKind::BadRank, "k must lie in 1.." + std::to_string(max_k()) + ", got " + std::to_string(k));
        bool roots_ok = true;
        for (int i : outside_levi()) roots_ok = roots_ok && functional_root(cls, i) < 0;

        const int min_len = dim_ - k + 1;
        bool weyl_ok = true;
        for (auto u : cosets_.reps)
            if (g_->element(u).length >= min_len && functional_weyl(cls, u) <= 0) weyl_ok = false;
        bool weyl_ok_double = true;
        for (const auto& rec : records_)
            if (rec.length >= min_len && functional_weyl(cls, rec.min_rep) <= 0) weyl_ok_double = false;
        if (weyl_ok != weyl_ok_double)
            throw Error(ErrorKind::InternalInconsistency,
                        "movable-cone condition differs between W/W_P and double-coset representatives");

        if (roots_ok) {
            const auto e = zhang_minima(minima(cls));
            if ((e[k - 1] > cls.t) != weyl_ok)
                throw Error(ErrorKind::InternalInconsistency,
                            "movable-cone criterion disagrees with e_" + std::to_string(k) + " > t");
        }
        return roots_ok && weyl_ok;
    }

    ConeReport movable_index(const PolarizedClass& cls) const {
        ConeReport rep;
        bool prev = true;
        for (int k = 1; k <= max_k(); ++k) {
            const bool in = movable_check(cls, k);
            if (in && !prev) throw Error(ErrorKind::InternalInconsistency, "movable cones are not nested");
            if (in) rep.movable_index = k;
            prev = in;
        }
        rep.is_big = rep.movable_index >= 1;

        bool root_violated = false, root_zero = false;
        for (int i : outside_levi()) {
            const Rational v = functional_root(cls, i);
            if (v >= 0) rep.binding_constraints.push_back({"root", static_cast<std::size_t>(i), v});
            root_violated = root_violated || v > 0;
            root_zero = root_zero || v == 0;
        }
        for (const auto& rec : records_) {
            const Rational v = functional_weyl(cls, rec.min_rep);
            if (v <= 0) rep.binding_constraints.push_back({"weyl", rec.id, v});
        }
        for (int k = 1; k <= max_k(); ++k) {
            bool violated = root_violated, zero = root_zero;
            for (const auto& rec : records_) {
                if (rec.length < dim_ - k + 1) continue;
                const Rational v = functional_weyl(cls, rec.min_rep);
                violated = violated || v < 0;
                zero = zero || v == 0;
            }
            if (!violated && zero) rep.boundary_of.push_back(k);
        }
        return rep;
    }

private:
    void check_class(const PolarizedClass& cls) const {
        raise_if_any(validate_character_of_p(g_->datum(), cls.lambda, parabolic_), "class is not of the form L_lambda - t f");
    }

    const WeylGroup* g_;
    CochVec c_;
    SimpleSet parabolic_;
    CosetTable cosets_;
    std::vector<DoubleCosetRecord> records_;
    int dim_ = 0;
};

/// A ray a O(1) - t f of N^1(Gr_r(E)) in (a, t) coordinates.
struct ConeRay {
    Rational lambda_coeff;
    Rational t;
};

struct GrassmannRays {
    ConeRay fiber;      // f = (0, -1)
    ConeRay essential;  // O(1) - (mu_1 + ... + mu_r) f = (1, mu_1 + ... + mu_r)

    /// Open cone strictly between the rays: a > 0 and t < a (mu_1 + ... + mu_r).
    bool strictly_inside(const Rational& a, const Rational& t) const {
        return a > 0 && t < a * essential.t;
    }
};

/// Extremal rays of the big cone of the Grassmann bundle Gr_r(E).
inline GrassmannRays grassmann_big_cone_rays(int n, int r, const HNBlocks& blocks) {
    grassmann_setup(n, r);
    if (blocks.total_rank() != n)
        throw Error(ErrorKind::BadRank, "HN ranks sum to " + std::to_string(blocks.total_rank()) + ", expected " +
                                            std::to_string(n));
    const CochVec mu = hn_to_slope_vector(blocks);
    Rational top = 0;
    for (int i = 0; i < r; ++i) top += mu.coords[i];
    return {{0, -1}, {1, top}};
}

}  // namespace flagheight
