#pragma once

// Finite certificate that a list of simplices triangulates a polytope:
//   * every simplex is full-dimensional with vertices among the polytope's;
//   * every facet of a simplex is either shared by exactly two simplices lying
//     on opposite sides of it, or lies in a facet hyperplane of the polytope.
// Together with sum of volumes == vol(P) (computed independently) this rules
// out gaps and overlaps.

#include "flagheight/polytope.hpp"

#include <map>
#include <string>

namespace flagheight::testing {

inline Rational side(const std::vector<RationalVec>& face, const RationalVec& p) {
    std::vector<RationalVec> m;
    for (std::size_t i = 1; i < face.size(); ++i) {
        RationalVec d(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) d[k] = face[i][k] - face[0][k];
        m.push_back(d);
    }
    RationalVec d(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) d[k] = p[k] - face[0][k];
    m.push_back(d);
    return linalg::determinant(m);
}

inline std::string check_triangulation(const Polytope& P) {
    const auto& V = P.vertices();
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> facets;  // facet -> opposite vertices
    for (const auto& s : P.simplices()) {
        if (s.size() != static_cast<std::size_t>(P.dim()) + 1) return "wrong simplex size";
        if (P.simplex_normalized_volume(s) == 0) return "degenerate simplex";
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<std::size_t> f;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) f.push_back(s[i]);
            std::sort(f.begin(), f.end());
            facets[f].push_back(s[drop]);
        }
    }
    for (const auto& [f, opp] : facets) {
        std::vector<RationalVec> pts;
        for (auto v : f) pts.push_back(V[v]);
        if (opp.size() == 2) {
            if (side(pts, V[opp[0]]) * side(pts, V[opp[1]]) >= 0) return "overlapping simplices";
        } else if (opp.size() == 1) {
            bool on_boundary = false;
            for (const auto& h : P.inequalities()) {
                bool all_tight = true;
                for (const auto& p : pts) all_tight = all_tight && dot(h.a, p) == h.b;
                on_boundary = on_boundary || all_tight;
            }
            if (!on_boundary) return "interior facet not shared";
        } else {
            return "facet in more than two simplices";
        }
    }
    return "";
}

}  // namespace flagheight::testing
