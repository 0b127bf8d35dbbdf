#pragma once

// Successive minima, height filtration, Zhang minima and the variety height
// of a flag bundle F/P over a curve, polarized by a strictly antidominant
// character lambda of P, with slope vector deg(F_Q).

#include "flagheight/errors.hpp"
#include "flagheight/rational.hpp"
#include "flagheight/root_datum.hpp"
#include "flagheight/weyl.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flagheight {

struct MinimaEntry {
    std::size_t coset_id = 0;
    std::vector<int> min_rep_word;
    int length = 0;
    std::size_t multiplicity = 0;
    Rational zeta;
};

/// A pair of double cosets w' <= w in the closure order with zeta_{w'} > zeta_w.
struct MonotonicityViolation {
    std::size_t lower_id;
    std::size_t upper_id;
};

struct MinimaTable {
    /// Sorted by (length, zeta, coset_id).
    std::vector<MinimaEntry> entries;
    /// dim G/P.
    int dim = 0;
    /// closure[a][b]: cell a lies in the closure of cell b (indices are coset ids).
    std::vector<std::vector<char>> closure;
    /// Must stay empty; reported rather than silently ignored.
    std::vector<MonotonicityViolation> monotonicity_violations;

    const MinimaEntry& by_id(std::size_t id) const {
        for (const auto& e : entries)
            if (e.coset_id == id) return e;
        throw Error(ErrorKind::InternalInconsistency, "unknown coset id " + std::to_string(id));
    }
};

/// Index set of cells making up a union of Schubert cells.
struct Stratification {
    Rational t;
    std::vector<std::size_t> included_ids;
    /// Max length among included cells, -1 when empty.
    int dimension = -1;
    bool is_all = false;
};

/// Validated input of every height computation.
struct FlagProblem {
    const WeylGroup* group = nullptr;
    CochVec slope;
    WeightVec lambda;
    SimpleSet parabolic;
};

inline void validate_problem(const RootDatum& d, const CochVec& c, const WeightVec& lambda,
                             const SimpleSet& parabolic) {
    raise_if_any(validate_antidominant(d, lambda, parabolic), "invalid polarization");
    raise_if_any(validate_canonical_slope(d, c), "invalid slope vector");
}

/// zeta_w = <deg(F_Q), w lambda> for every double coset, with closure data.
inline MinimaTable successive_minima(const WeylGroup& g, const CochVec& c, const WeightVec& lambda,
                                     const SimpleSet& parabolic) {
    const RootDatum& d = g.datum();
    validate_problem(d, c, lambda, parabolic);
    const CosetTable cosets = g.minimal_coset_reps(parabolic);
    const auto records = g.double_cosets(c.levi, cosets);

    MinimaTable table;
    table.dim = d.flag_dimension(parabolic);
    int max_len = 0;
    for (const auto& rec : records) {
        MinimaEntry e;
        e.coset_id = rec.id;
        e.min_rep_word = g.element(rec.min_rep).word;
        e.length = rec.length;
        e.multiplicity = rec.multiplicity;
        e.zeta = pair(c, g.act(rec.min_rep, lambda));
        max_len = std::max(max_len, rec.length);
        table.entries.push_back(std::move(e));
    }
    if (max_len != table.dim)
        throw Error(ErrorKind::InternalInconsistency, "max double-coset length " + std::to_string(max_len) +
                                                          " differs from dim G/P = " + std::to_string(table.dim));
    int top = 0;
    for (const auto& e : table.entries) top += e.length == table.dim ? 1 : 0;
    if (top != 1) throw Error(ErrorKind::InternalInconsistency, "expected exactly one big cell");

    table.closure = g.closure_order(records);
    for (std::size_t a = 0; a < records.size(); ++a)
        for (std::size_t b = 0; b < records.size(); ++b)
            if (a != b && table.closure[a][b] && table.entries[a].zeta > table.entries[b].zeta)
                table.monotonicity_violations.push_back({a, b});

    std::sort(table.entries.begin(), table.entries.end(), [](const MinimaEntry& x, const MinimaEntry& y) {
        if (x.length != y.length) return x.length < y.length;
        if (x.zeta != y.zeta) return x.zeta < y.zeta;
        return x.coset_id < y.coset_id;
    });
    return table;
}

namespace detail {

inline Stratification collect(const MinimaTable& table, const Rational& t, bool strict) {
    Stratification s;
    s.t = t;
    for (const auto& e : table.entries) {
        const bool in = strict ? (e.zeta < t) : (e.zeta <= t);
        if (in) {
            s.included_ids.push_back(e.coset_id);
            s.dimension = std::max(s.dimension, e.length);
        }
    }
    std::sort(s.included_ids.begin(), s.included_ids.end());
    s.is_all = s.included_ids.size() == table.entries.size();
    return s;
}

}  // namespace detail

/// Z_t: the cells with zeta_w < t.
inline Stratification height_filtration(const MinimaTable& table, const Rational& t) {
    return detail::collect(table, t, /*strict=*/true);
}

/// e_i = min{zeta_w : l(w) >= d - i + 1}, i = 1..d+1.
inline RationalVec zhang_minima(const MinimaTable& table) {
    RationalVec e;
    for (int i = 1; i <= table.dim + 1; ++i) {
        std::optional<Rational> best;
        for (const auto& entry : table.entries)
            if (entry.length >= table.dim - i + 1 && (!best || entry.zeta < *best)) best = entry.zeta;
        if (!best) throw Error(ErrorKind::InternalInconsistency, "no cell of length >= " + std::to_string(table.dim - i + 1));
        e.push_back(*best);
    }
    return e;
}

/// zeta of the big cell; cross-checked against the maximum over all cells.
inline Rational essential_minimum(const MinimaTable& table) {
    std::optional<Rational> big, overall;
    for (const auto& e : table.entries) {
        if (e.length == table.dim) big = e.zeta;
        if (!overall || e.zeta > *overall) overall = e.zeta;
    }
    if (!big || *big != *overall)
        throw Error(ErrorKind::InternalInconsistency, "essential minimum is not the maximal successive minimum");
    return *big;
}

/// Smallest successive minimum (the absolute minimum of the height).
inline Rational absolute_minimum(const MinimaTable& table) {
    Rational m = table.entries.front().zeta;
    for (const auto& e : table.entries) m = std::min(m, e.zeta);
    return m;
}

struct HeightEvaluation {
    /// (1/#W/W_P) sum over minimal coset representatives u of <c, u lambda>.
    Rational by_cosets;
    /// (1/#W/W_P) sum over double cosets of m_w zeta_w.
    Rational by_double_cosets;
    std::size_t num_cosets = 0;
};

inline HeightEvaluation evaluate_height(const WeylGroup& g, const CochVec& c, const WeightVec& lambda,
                                        const SimpleSet& parabolic) {
    validate_problem(g.datum(), c, lambda, parabolic);
    const CosetTable cosets = g.minimal_coset_reps(parabolic);
    HeightEvaluation h;
    h.num_cosets = cosets.reps.size();
    Rational sum = 0;
    for (auto u : cosets.reps) sum += pair(c, g.act(u, lambda));
    Rational weighted = 0;
    for (const auto& rec : g.double_cosets(c.levi, cosets))
        weighted += Rational(static_cast<long>(rec.multiplicity)) * pair(c, g.act(rec.min_rep, lambda));
    const Rational n(static_cast<long>(h.num_cosets));
    h.by_cosets = sum / n;
    h.by_double_cosets = weighted / n;
    h.by_cosets.canonicalize();
    h.by_double_cosets.canonicalize();
    return h;
}

/// Height of X as the multiplicity-weighted average of the successive minima.
inline Rational variety_height(const WeylGroup& g, const CochVec& c, const WeightVec& lambda,
                               const SimpleSet& parabolic) {
    const auto h = evaluate_height(g, c, lambda, parabolic);
    if (h.by_cosets != h.by_double_cosets)
        throw Error(ErrorKind::InternalInconsistency, "height over W/W_P (" + to_string(h.by_cosets) +
                                                          ") differs from the double-coset sum (" +
                                                          to_string(h.by_double_cosets) + ")");
    return h.by_cosets;
}

}  // namespace flagheight
