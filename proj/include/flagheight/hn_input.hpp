#pragma once

// Harder-Narasimhan data for vector bundles (GL case) and Grassmann-bundle setups.

#include "flagheight/errors.hpp"
#include "flagheight/rational.hpp"
#include "flagheight/root_datum.hpp"

#include <string>
#include <vector>

namespace flagheight {

struct HNBlock {
    int rank = 0;
    Rational slope;

    /// Block given by rank and degree of the subquotient; slope = degree / rank.
    static HNBlock from_degree(int rank, const Rational& degree) {
        if (rank <= 0) throw Error(ErrorKind::BadRank, "HN block rank must be positive");
        Rational s = degree / rank;
        s.canonicalize();
        return {rank, s};
    }
};

/// Subquotients of the HN filtration, ordered from E_1 outward; slopes strictly decrease.
class HNBlocks {
public:
    explicit HNBlocks(std::vector<HNBlock> blocks) : blocks_(std::move(blocks)) {
        if (blocks_.empty()) throw Error(ErrorKind::BadRank, "HN data needs at least one block");
        std::vector<Violation> bad;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (blocks_[i].rank <= 0)
                throw Error(ErrorKind::BadRank, "HN block " + std::to_string(i + 1) + " has non-positive rank");
            if (i > 0 && !(blocks_[i].slope < blocks_[i - 1].slope))
                bad.push_back({ErrorKind::NonDecreasingSlopes, static_cast<int>(i + 1),
                               "HN slopes must strictly decrease: block " + std::to_string(i + 1) + " slope " +
                                   to_string(blocks_[i].slope) + " >= previous " + to_string(blocks_[i - 1].slope)});
        }
        raise_if_any(bad, "invalid HN blocks");
    }

    const std::vector<HNBlock>& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }

    int total_rank() const {
        int n = 0;
        for (const auto& b : blocks_) n += b.rank;
        return n;
    }

    Rational total_degree() const {
        Rational s = 0;
        for (const auto& b : blocks_) s += b.slope * b.rank;
        return s;
    }

private:
    std::vector<HNBlock> blocks_;
};

/// mu = (mu_1, ..., mu_n) with each slope repeated rank-many times; Delta_Q = {i : mu_i = mu_{i+1}}.
inline CochVec hn_to_slope_vector(const HNBlocks& blocks) {
    CochVec c;
    for (const auto& b : blocks.blocks())
        for (int k = 0; k < b.rank; ++k) c.coords.push_back(b.slope);
    std::vector<int> levi;
    for (std::size_t i = 0; i + 1 < c.coords.size(); ++i)
        if (c.coords[i] == c.coords[i + 1]) levi.push_back(static_cast<int>(i + 1));
    c.levi = SimpleSet(levi);
    return c;
}

/// Inverse of hn_to_slope_vector: reads the blocks off the Levi set.
inline HNBlocks slope_vector_to_hn(const CochVec& c) {
    std::vector<HNBlock> blocks;
    const int n = static_cast<int>(c.coords.size());
    int start = 0;
    for (int i = 0; i < n; ++i) {
        const bool boundary = (i == n - 1) || !c.levi.contains(i + 1);
        if (boundary) {
            blocks.push_back({i - start + 1, c.coords[start]});
            start = i + 1;
        }
    }
    return HNBlocks(std::move(blocks));
}

/// Grassmann bundle Gr_r(E) of r-dimensional quotients: P of type (n-r, r), lambda = det_2.
struct GrassmannSetup {
    int n = 0;
    int r = 0;
    SimpleSet parabolic;
    WeightVec lambda;
};

inline GrassmannSetup grassmann_setup(int n, int r) {
    if (n < 2 || r < 1 || r >= n)
        throw Error(ErrorKind::BadRank, "Grassmann setup needs 1 <= r < n, got n=" + std::to_string(n) +
                                            " r=" + std::to_string(r));
    GrassmannSetup g;
    g.n = n;
    g.r = r;
    std::vector<int> p;
    for (int i = 1; i < n; ++i)
        if (i != n - r) p.push_back(i);
    g.parabolic = SimpleSet(p);
    g.lambda.coords.assign(n, 0);
    for (int i = n - r; i < n; ++i) g.lambda.coords[i] = 1;
    return g;
}

}  // namespace flagheight
