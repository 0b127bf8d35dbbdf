#pragma once

// Root data for the split reductive groups handled by the library.
//
// Two coordinate systems are used for characters:
//   * simple families (A..G): fundamental-weight coordinates, so that
//     <alpha_i^vee, lambda> = lambda[i] and cocharacters are written in the
//     simple-coroot basis;
//   * GL(n): standard coordinates lambda_1..lambda_n, with simple roots
//     alpha_i = lambda_i - lambda_{i+1} and the dual standard basis for
//     cocharacters.
// In both cases the weight/cocharacter pairing is the plain dot product.
//
// Cartan convention: cartan[i][j] = <alpha_i^vee, alpha_j> with Bourbaki
// numbering (for B_n the long roots are alpha_1..alpha_{n-1}).

#include "flagheight/errors.hpp"
#include "flagheight/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flagheight {

inline constexpr std::uint64_t kDefaultMaxWeylOrder = 1'000'000;

enum class Family { A, B, C, D, E6, E7, E8, F4, G2, GL };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
        case Family::G2: return "G2";
        case Family::GL: return "GL";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    static const std::map<std::string, Family, std::less<>> names{
        {"A", Family::A},   {"B", Family::B},   {"C", Family::C},   {"D", Family::D},
        {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8}, {"F4", Family::F4},
        {"G2", Family::G2}, {"GL", Family::GL}};
    auto it = names.find(s);
    if (it == names.end())
        throw Error(ErrorKind::UnsupportedType, "unknown group family '" + std::string(s) + "'");
    return it->second;
}

/// Sorted set of 1-based simple-root indices.
class SimpleSet {
public:
    SimpleSet() = default;
    SimpleSet(std::initializer_list<int> idx) : indices_(idx) { normalize(); }
    explicit SimpleSet(std::vector<int> idx) : indices_(std::move(idx)) { normalize(); }

    static SimpleSet all(int count) {
        std::vector<int> v(count);
        for (int i = 0; i < count; ++i) v[i] = i + 1;
        return SimpleSet(std::move(v));
    }

    bool contains(int i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }
    const std::vector<int>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

    friend bool operator==(const SimpleSet&, const SimpleSet&) = default;

private:
    void normalize() {
        std::sort(indices_.begin(), indices_.end());
        indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    }
    std::vector<int> indices_;
};

/// A rational character in the datum's coordinates.
struct WeightVec {
    RationalVec coords;
    friend bool operator==(const WeightVec&, const WeightVec&) = default;
};

/// A rational cocharacter (the slope vector deg(F_Q)) together with its Levi set.
struct CochVec {
    RationalVec coords;
    SimpleSet levi;
};

using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;

class RootDatum {
public:
    RootDatum(Family family, int rank, IntMatrix cartan, std::vector<IntVec> coroots,
              std::vector<IntVec> roots, int coord_dim)
        : family_(family), rank_(rank), cartan_(std::move(cartan)), coroots_(std::move(coroots)),
          roots_(std::move(roots)), coord_dim_(coord_dim) {}

    Family family() const { return family_; }
    int rank() const { return rank_; }
    bool is_gl() const { return family_ == Family::GL; }
    const IntMatrix& cartan() const { return cartan_; }
    /// Number of simple roots (rank, or n-1 for GL(n)).
    int num_simple() const { return static_cast<int>(cartan_.size()); }
    /// Length of WeightVec / CochVec coordinate vectors.
    int coord_dim() const { return coord_dim_; }
    /// alpha_i^vee as a linear functional on weight coordinates (1-based i).
    const IntVec& coroot(int i) const { return coroots_.at(i - 1); }
    /// alpha_j in weight coordinates (1-based j).
    const IntVec& root(int j) const { return roots_.at(j - 1); }

    std::string name() const { return family_name(family_) + (fixed_rank() ? "" : std::to_string(rank_)); }

    /// Closed-form order of the Weyl group.
    std::uint64_t weyl_order() const {
        auto fact = [](int n) {
            std::uint64_t f = 1;
            for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
            return f;
        };
        switch (family_) {
            case Family::A: return fact(rank_ + 1);
            case Family::B:
            case Family::C: return (std::uint64_t{1} << rank_) * fact(rank_);
            case Family::D: return (std::uint64_t{1} << (rank_ - 1)) * fact(rank_);
            case Family::E6: return 51840;
            case Family::E7: return 2903040;
            case Family::E8: return 696729600;
            case Family::F4: return 1152;
            case Family::G2: return 12;
            case Family::GL: return fact(rank_);
        }
        return 0;
    }

    /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
    /// Computed from the Cartan matrix by root strings, independently of the Weyl group.
    std::vector<IntVec> positive_roots() const {
        const int r = num_simple();
        std::set<IntVec> found;
        std::vector<IntVec> layer;
        for (int i = 0; i < r; ++i) {
            IntVec e(r, 0);
            e[i] = 1;
            layer.push_back(e);
            found.insert(e);
        }
        while (!layer.empty()) {
            std::vector<IntVec> next;
            for (const auto& beta : layer) {
                for (int i = 0; i < r; ++i) {
                    // <beta, alpha_i^vee> = sum_j beta_j a[i][j]
                    std::int64_t pairing = 0;
                    for (int j = 0; j < r; ++j) pairing += beta[j] * cartan_[i][j];
                    // p = largest p with beta - p alpha_i a root
                    int p = 0;
                    IntVec down = beta;
                    while (true) {
                        down[i] -= 1;
                        if (down[i] < 0 || !found.count(down)) break;
                        ++p;
                    }
                    const std::int64_t q = p - pairing;
                    if (q > 0) {
                        IntVec up = beta;
                        up[i] += 1;
                        if (found.insert(up).second) next.push_back(up);
                    }
                }
            }
            std::sort(next.begin(), next.end());
            layer = std::move(next);
        }
        std::vector<IntVec> out(found.begin(), found.end());
        std::stable_sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) {
            std::int64_t ha = 0, hb = 0;
            for (auto x : a) ha += x;
            for (auto x : b) hb += x;
            return ha < hb;
        });
        return out;
    }

    /// Converts a root given in simple-root coordinates into weight coordinates.
    IntVec root_to_weight_coords(const IntVec& simple_coords) const {
        IntVec w(coord_dim_, 0);
        for (int j = 0; j < num_simple(); ++j)
            for (int k = 0; k < coord_dim_; ++k) w[k] += simple_coords[j] * roots_[j][k];
        return w;
    }

    /// dim G/P = number of positive roots not in the span of Delta_P.
    int flag_dimension(const SimpleSet& parabolic) const {
        int d = 0;
        for (const auto& beta : positive_roots()) {
            for (int j = 0; j < num_simple(); ++j) {
                if (beta[j] != 0 && !parabolic.contains(j + 1)) {
                    ++d;
                    break;
                }
            }
        }
        return d;
    }

    friend bool operator==(const RootDatum& a, const RootDatum& b) {
        return a.family_ == b.family_ && a.rank_ == b.rank_;
    }

private:
    bool fixed_rank() const {
        return family_ == Family::E6 || family_ == Family::E7 || family_ == Family::E8 ||
               family_ == Family::F4 || family_ == Family::G2;
    }

    Family family_;
    int rank_;
    IntMatrix cartan_;
    std::vector<IntVec> coroots_;
    std::vector<IntVec> roots_;
    int coord_dim_;
};

namespace detail {

// Builds a Cartan matrix from a Dynkin diagram: squared root lengths and bonds.
// For a bond of multiplicity m between a short root s and a long root l,
// <s^vee, l> = -m and <l^vee, s> = -1; equal-length neighbours pair to -1.
inline IntMatrix cartan_from_diagram(const std::vector<int>& sq_len,
                                     const std::vector<std::pair<int, int>>& bonds) {
    const int r = static_cast<int>(sq_len.size());
    IntMatrix a(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i) a[i][i] = 2;
    for (auto [u, v] : bonds) {
        const int i = u - 1, j = v - 1;
        if (sq_len[i] == sq_len[j]) {
            a[i][j] = a[j][i] = -1;
        } else {
            const int m = std::max(sq_len[i], sq_len[j]) / std::min(sq_len[i], sq_len[j]);
            const int s = sq_len[i] < sq_len[j] ? i : j;
            const int l = s == i ? j : i;
            a[s][l] = -m;
            a[l][s] = -1;
        }
    }
    return a;
}

inline std::vector<std::pair<int, int>> chain(int r) {
    std::vector<std::pair<int, int>> b;
    for (int i = 1; i < r; ++i) b.emplace_back(i, i + 1);
    return b;
}

}  // namespace detail

/// Tabulates the Cartan data of the requested family.
inline RootDatum build_root_datum(Family family, int rank) {
    auto bad = [&](const std::string& why) {
        return Error(ErrorKind::UnsupportedType,
                     "unsupported root datum " + family_name(family) + " rank " + std::to_string(rank) + ": " + why);
    };
    std::vector<int> len;
    std::vector<std::pair<int, int>> bonds;
    int r = rank;
    switch (family) {
        case Family::A:
            if (rank < 1) throw bad("type A needs rank >= 1");
            len.assign(r, 1);
            bonds = detail::chain(r);
            break;
        case Family::B:
            if (rank < 2) throw bad("type B needs rank >= 2");
            len.assign(r, 2);
            len[r - 1] = 1;
            bonds = detail::chain(r);
            break;
        case Family::C:
            if (rank < 2) throw bad("type C needs rank >= 2");
            len.assign(r, 1);
            len[r - 1] = 2;
            bonds = detail::chain(r);
            break;
        case Family::D:
            if (rank < 3) throw bad("type D needs rank >= 3");
            len.assign(r, 1);
            bonds = detail::chain(r - 1);
            bonds.emplace_back(r - 2, r);
            break;
        case Family::E6:
        case Family::E7: {
            const int want = family == Family::E6 ? 6 : 7;
            if (rank != want) throw bad("rank is fixed to " + std::to_string(want));
            len.assign(r, 1);
            bonds = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
            if (r == 7) bonds.emplace_back(6, 7);
            break;
        }
        case Family::E8:
            throw bad("E8 exceeds the supported Weyl group size");
        case Family::F4:
            if (rank != 4) throw bad("rank is fixed to 4");
            len = {2, 2, 1, 1};
            bonds = detail::chain(4);
            break;
        case Family::G2:
            if (rank != 2) throw bad("rank is fixed to 2");
            len = {1, 3};
            bonds = {{1, 2}};
            break;
        case Family::GL:
            if (rank < 2) throw bad("GL(n) needs n >= 2");
            len.assign(rank - 1, 1);
            bonds = detail::chain(rank - 1);
            break;
    }
    IntMatrix cartan = detail::cartan_from_diagram(len, bonds);
    const int ns = static_cast<int>(cartan.size());
    std::vector<IntVec> coroots, roots;
    int coord_dim = ns;
    if (family == Family::GL) {
        coord_dim = rank;
        for (int i = 0; i < ns; ++i) {
            IntVec v(rank, 0);
            v[i] = 1;
            v[i + 1] = -1;
            coroots.push_back(v);
            roots.push_back(v);
        }
    } else {
        for (int i = 0; i < ns; ++i) {
            IntVec e(ns, 0);
            e[i] = 1;
            coroots.push_back(e);
            IntVec col(ns);
            for (int k = 0; k < ns; ++k) col[k] = cartan[k][i];
            roots.push_back(col);
        }
    }
    return RootDatum(family, rank, std::move(cartan), std::move(coroots), std::move(roots), coord_dim);
}

inline void check_dims(const RootDatum& d, std::size_t n, std::string_view what) {
    if (n != static_cast<std::size_t>(d.coord_dim()))
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has " + std::to_string(n) +
                                                      " coordinates, datum " + d.name() + " expects " +
                                                      std::to_string(d.coord_dim()));
}

inline void check_simple_set(const RootDatum& d, const SimpleSet& s, std::string_view what) {
    for (int i : s)
        if (i < 1 || i > d.num_simple())
            throw Error(ErrorKind::DimensionMismatch, std::string(what) + " contains index " + std::to_string(i) +
                                                          " outside 1.." + std::to_string(d.num_simple()));
}

/// <c, lambda>: plain dot product in both coordinate conventions.
inline Rational pair(const CochVec& c, const WeightVec& lambda) {
    if (c.coords.size() != lambda.coords.size())
        throw Error(ErrorKind::DimensionMismatch, "pairing of vectors of different length");
    return dot(c.coords, lambda.coords);
}

inline Rational pair(const RationalVec& c, const WeightVec& lambda) {
    if (c.size() != lambda.coords.size())
        throw Error(ErrorKind::DimensionMismatch, "pairing of vectors of different length");
    return dot(c, lambda.coords);
}

/// <alpha_i^vee, lambda>.
inline Rational coroot_pairing(const RootDatum& d, int i, const WeightVec& lambda) {
    check_dims(d, lambda.coords.size(), "weight");
    return dot(to_rationals(d.coroot(i)), lambda.coords);
}

/// <c, alpha_j>.
inline Rational root_pairing(const RootDatum& d, const CochVec& c, int j) {
    check_dims(d, c.coords.size(), "cocharacter");
    return dot(c.coords, to_rationals(d.root(j)));
}

inline WeightVec simple_root(const RootDatum& d, int j) { return {to_rationals(d.root(j))}; }

/// e_i: the i-th fundamental weight (simple families) or the i-th standard character (GL).
inline WeightVec basis_weight(const RootDatum& d, int i) {
    RationalVec v(d.coord_dim(), 0);
    v.at(i - 1) = 1;
    return {v};
}

/// e_i: the i-th simple coroot (simple families) or the i-th dual standard vector (GL).
inline CochVec basis_cocharacter(const RootDatum& d, int i) {
    RationalVec v(d.coord_dim(), 0);
    v.at(i - 1) = 1;
    return {v, {}};
}

/// Checks that lambda is a character of P (pairs to 0 on Delta_P).
inline std::vector<Violation> validate_character_of_p(const RootDatum& d, const WeightVec& lambda,
                                                      const SimpleSet& parabolic) {
    check_dims(d, lambda.coords.size(), "lambda");
    check_simple_set(d, parabolic, "parabolic_P");
    std::vector<Violation> out;
    for (int i : parabolic) {
        Rational v = coroot_pairing(d, i, lambda);
        if (v != 0)
            out.push_back({ErrorKind::NotACharacterOfP, i,
                           "lambda is not a character of P: <alpha_" + std::to_string(i) + "^vee, lambda> = " +
                               to_string(v) + " != 0 for an index in Delta_P"});
    }
    return out;
}

/// Classifies every simple index: Delta_P indices must pair to zero, all
/// others strictly negative. Returns the list of violations (empty when valid).
inline std::vector<Violation> validate_antidominant(const RootDatum& d, const WeightVec& lambda,
                                                    const SimpleSet& parabolic) {
    check_dims(d, lambda.coords.size(), "lambda");
    check_simple_set(d, parabolic, "parabolic_P");
    std::vector<Violation> out;
    for (int i = 1; i <= d.num_simple(); ++i) {
        Rational v = coroot_pairing(d, i, lambda);
        const std::string pv = "<alpha_" + std::to_string(i) + "^vee, lambda> = " + to_string(v);
        if (parabolic.contains(i)) {
            if (v != 0)
                out.push_back({ErrorKind::NotACharacterOfP, i,
                               "lambda not a character of P: " + pv + " != 0 with alpha_" + std::to_string(i) +
                                   " in Delta_P"});
        } else if (v >= 0) {
            out.push_back({ErrorKind::NotStrictlyAntidominant, i,
                           "lambda not strictly antidominant: " + pv + " >= 0"});
        }
    }
    return out;
}

/// Sign pattern of a canonical-reduction slope: <c, alpha_j> = 0 on Delta_Q
/// and > 0 off Delta_Q.
inline std::vector<Violation> validate_canonical_slope(const RootDatum& d, const CochVec& c) {
    check_dims(d, c.coords.size(), "slope vector");
    check_simple_set(d, c.levi, "levi_Q");
    std::vector<Violation> out;
    for (int j = 1; j <= d.num_simple(); ++j) {
        Rational v = root_pairing(d, c, j);
        const std::string pv = "<deg(F_Q), alpha_" + std::to_string(j) + "> = " + to_string(v);
        if (c.levi.contains(j)) {
            if (v != 0)
                out.push_back({ErrorKind::SlopeNotLeviTrivial, j,
                               "slope not trivial on the Levi of Q: " + pv + " != 0"});
        } else if (v <= 0) {
            out.push_back({ErrorKind::SlopeNotStrictlyDecreasingAcrossBlocks, j,
                           "slope not strictly positive across blocks: " + pv + " <= 0"});
        }
    }
    return out;
}

}  // namespace flagheight
