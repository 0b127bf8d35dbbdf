#pragma once

// Weyl group enumeration, parabolic cosets, double cosets and Bruhat order.
//
// Elements are enumerated breadth-first along right multiplication by simple
// reflections, so the canonical order is (length, lexicographic reduced word)
// and each element carries its lexicographically smallest reduced word.

#include "flagheight/errors.hpp"
#include "flagheight/rational.hpp"
#include "flagheight/root_datum.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

namespace flagheight {

struct WeylElt {
    /// Row-major coord_dim x coord_dim integer matrix acting on weight coordinates.
    IntVec action;
    /// One reduced word (1-based simple reflection indices).
    std::vector<int> word;
    int length = 0;

    friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.action == b.action; }
};

namespace detail {

struct IntVecHash {
    std::size_t operator()(const IntVec& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline IntVec matmul(const IntVec& a, const IntVec& b, int n) {
    IntVec c(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const auto aik = a[i * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
        }
    return c;
}

/// s_i(lambda) = lambda - <alpha_i^vee, lambda> alpha_i as a matrix.
inline IntVec reflection_matrix(const RootDatum& d, int i) {
    const int n = d.coord_dim();
    IntVec m(static_cast<std::size_t>(n) * n, 0);
    const auto& root = d.root(i);
    const auto& coroot = d.coroot(i);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m[r * n + c] = (r == c ? 1 : 0) - root[r] * coroot[c];
    return m;
}

}  // namespace detail

/// Table of minimal-length representatives of W/W_P.
struct CosetTable {
    SimpleSet parabolic;
    /// Element indices into WeylGroup::elements(), canonical order.
    std::vector<std::size_t> reps;
    /// For every group element, the position in `reps` of its coset.
    std::vector<std::size_t> coset_of;
};

/// A double coset W_Q w W_P.
struct DoubleCosetRecord {
    std::size_t id = 0;
    /// Element index of the minimal-length element of the double coset.
    std::size_t min_rep = 0;
    /// Positions in CosetTable::reps forming q^{-1}(w).
    std::vector<std::size_t> fiber;
    std::size_t multiplicity = 0;
    /// max over the fiber of minimal coset-representative lengths.
    int length = 0;
};

class WeylGroup {
public:
    /// Enumerates W; throws GroupTooLarge when |W| exceeds `max_order`.
    static WeylGroup enumerate(const RootDatum& datum, std::uint64_t max_order = kDefaultMaxWeylOrder) {
        if (datum.weyl_order() > max_order)
            throw Error(ErrorKind::GroupTooLarge, "Weyl group of " + datum.name() + " has order " +
                                                      std::to_string(datum.weyl_order()) + " > cap " +
                                                      std::to_string(max_order));
        WeylGroup g(datum);
        g.build(max_order);
        return g;
    }

    const RootDatum& datum() const { return datum_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<WeylElt>& elements() const { return elements_; }
    const WeylElt& element(std::size_t idx) const { return elements_.at(idx); }
    std::size_t identity() const { return 0; }
    std::size_t longest() const { return elements_.size() - 1; }

    /// Index of w * s_i.
    std::size_t right_mul(std::size_t w, int i) const { return right_[w * ns_ + (i - 1)]; }
    /// Index of s_i * w.
    std::size_t left_mul(int i, std::size_t w) const { return left_[w * ns_ + (i - 1)]; }

    std::size_t index_of(const WeylElt& w) const { return index_of_action(w.action); }

    std::size_t index_of_action(const IntVec& action) const {
        auto it = index_.find(action);
        if (it == index_.end()) throw Error(ErrorKind::InternalInconsistency, "matrix is not a Weyl group element");
        return it->second;
    }

    /// Index of the product of simple reflections along `word`.
    std::size_t from_word(const std::vector<int>& word) const {
        std::size_t w = identity();
        for (int i : word) {
            if (i < 1 || i > ns_) throw Error(ErrorKind::DimensionMismatch, "reflection index out of range");
            w = right_mul(w, i);
        }
        return w;
    }

    /// Index of u * v.
    std::size_t multiply(std::size_t u, std::size_t v) const {
        std::size_t w = u;
        for (int i : elements_[v].word) w = right_mul(w, i);
        return w;
    }

    std::size_t inverse(std::size_t u) const {
        std::size_t w = identity();
        const auto& word = elements_[u].word;
        for (auto it = word.rbegin(); it != word.rend(); ++it) w = right_mul(w, *it);
        return w;
    }

    WeightVec act(std::size_t w, const WeightVec& lambda) const { return act(elements_.at(w), lambda); }

    WeightVec act(const WeylElt& w, const WeightVec& lambda) const {
        check_dims(datum_, lambda.coords.size(), "weight");
        const int n = datum_.coord_dim();
        RationalVec out(n, 0);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (w.action[r * n + c] != 0) out[r] += Rational(static_cast<long>(w.action[r * n + c])) * lambda.coords[c];
        return {out};
    }

    /// Minimal-length representatives of W/W_P: elements u with l(u s_i) > l(u) for all i in Delta_P.
    CosetTable minimal_coset_reps(const SimpleSet& parabolic) const {
        check_simple_set(datum_, parabolic, "parabolic");
        CosetTable t;
        t.parabolic = parabolic;
        std::vector<std::size_t> pos(order(), SIZE_MAX);
        for (std::size_t w = 0; w < order(); ++w) {
            bool minimal = true;
            for (int i : parabolic)
                if (elements_[right_mul(w, i)].length < elements_[w].length) {
                    minimal = false;
                    break;
                }
            if (minimal) {
                pos[w] = t.reps.size();
                t.reps.push_back(w);
            }
        }
        t.coset_of.resize(order());
        for (std::size_t w = 0; w < order(); ++w) {
            std::size_t x = w;
            bool descended = true;
            while (descended) {
                descended = false;
                for (int i : parabolic) {
                    const std::size_t y = right_mul(x, i);
                    if (elements_[y].length < elements_[x].length) {
                        x = y;
                        descended = true;
                        break;
                    }
                }
            }
            t.coset_of[w] = pos[x];
        }
        return t;
    }

    /// Groups the minimal W/W_P representatives under the left W_Q action.
    std::vector<DoubleCosetRecord> double_cosets(const SimpleSet& levi_q, const CosetTable& table) const {
        check_simple_set(datum_, levi_q, "levi_Q");
        const std::size_t m = table.reps.size();
        std::vector<std::size_t> parent(m);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t a = 0; a < m; ++a)
            for (int j : levi_q) {
                const std::size_t b = table.coset_of[left_mul(j, table.reps[a])];
                const std::size_t ra = find(a), rb = find(b);
                if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
            }
        // Canonical order of reps means the smallest position in a group is its minimal element.
        std::vector<DoubleCosetRecord> records;
        std::vector<std::size_t> record_of(m, SIZE_MAX);
        for (std::size_t a = 0; a < m; ++a) {
            const std::size_t root = find(a);
            if (record_of[root] == SIZE_MAX) {
                record_of[root] = records.size();
                DoubleCosetRecord rec;
                rec.id = records.size();
                rec.min_rep = table.reps[a];
                records.push_back(rec);
            }
            auto& rec = records[record_of[root]];
            rec.fiber.push_back(a);
            rec.length = std::max(rec.length, elements_[table.reps[a]].length);
        }
        for (auto& rec : records) rec.multiplicity = rec.fiber.size();
        return records;
    }

    std::vector<DoubleCosetRecord> double_cosets(const SimpleSet& levi_q, const SimpleSet& parabolic) const {
        return double_cosets(levi_q, minimal_coset_reps(parabolic));
    }

    /// All u <= v in Bruhat order: products of subwords of v's stored reduced word.
    std::vector<char> bruhat_downset(std::size_t v) const {
        std::vector<char> in(order(), 0);
        std::vector<std::size_t> members{identity()};
        in[identity()] = 1;
        for (int i : elements_.at(v).word) {
            const std::size_t count = members.size();
            for (std::size_t k = 0; k < count; ++k) {
                const std::size_t y = right_mul(members[k], i);
                if (!in[y]) {
                    in[y] = 1;
                    members.push_back(y);
                }
            }
        }
        return in;
    }

    bool bruhat_leq(std::size_t u, std::size_t v) const {
        if (elements_.at(u).length > elements_.at(v).length) return false;
        return bruhat_downset(v)[u] != 0;
    }

    bool bruhat_leq(const WeylElt& u, const WeylElt& v) const { return bruhat_leq(index_of(u), index_of(v)); }

    /// Induced Bruhat order on minimal double-coset representatives: leq[a][b] for record ids.
    std::vector<std::vector<char>> closure_order(const std::vector<DoubleCosetRecord>& records) const {
        const std::size_t m = records.size();
        std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
        for (std::size_t b = 0; b < m; ++b) {
            const auto down = bruhat_downset(records[b].min_rep);
            for (std::size_t a = 0; a < m; ++a) leq[a][b] = down[records[a].min_rep];
        }
        return leq;
    }

private:
    explicit WeylGroup(const RootDatum& datum) : datum_(datum), ns_(datum.num_simple()) {}

    void build(std::uint64_t max_order) {
        const int n = datum_.coord_dim();
        std::vector<IntVec> gens;
        for (int i = 1; i <= ns_; ++i) gens.push_back(detail::reflection_matrix(datum_, i));
        IntVec id(static_cast<std::size_t>(n) * n, 0);
        for (int k = 0; k < n; ++k) id[k * n + k] = 1;
        elements_.push_back({id, {}, 0});
        index_.emplace(id, 0);
        std::size_t level_begin = 0;
        while (level_begin < elements_.size()) {
            const std::size_t level_end = elements_.size();
            for (std::size_t w = level_begin; w < level_end; ++w) {
                for (int i = 1; i <= ns_; ++i) {
                    IntVec prod = detail::matmul(elements_[w].action, gens[i - 1], n);
                    if (index_.count(prod)) continue;
                    if (elements_.size() >= max_order)
                        throw Error(ErrorKind::GroupTooLarge, "Weyl group enumeration exceeded cap " +
                                                                  std::to_string(max_order));
                    WeylElt e;
                    e.word = elements_[w].word;
                    e.word.push_back(i);
                    e.length = elements_[w].length + 1;
                    e.action = prod;
                    index_.emplace(prod, elements_.size());
                    elements_.push_back(std::move(e));
                }
            }
            level_begin = level_end;
        }
        right_.assign(elements_.size() * ns_, 0);
        left_.assign(elements_.size() * ns_, 0);
        for (std::size_t w = 0; w < elements_.size(); ++w)
            for (int i = 1; i <= ns_; ++i) {
                right_[w * ns_ + (i - 1)] = index_.at(detail::matmul(elements_[w].action, gens[i - 1], n));
                left_[w * ns_ + (i - 1)] = index_.at(detail::matmul(gens[i - 1], elements_[w].action, n));
            }
    }

    RootDatum datum_;
    int ns_;
    std::vector<WeylElt> elements_;
    std::unordered_map<IntVec, std::size_t, detail::IntVecHash> index_;
    std::vector<std::size_t> right_;
    std::vector<std::size_t> left_;
};

/// Convenience wrapper mirroring the group's canonical element list.
inline std::vector<WeylElt> enumerate_weyl(const RootDatum& datum, std::uint64_t max_order = kDefaultMaxWeylOrder) {
    return WeylGroup::enumerate(datum, max_order).elements();
}

/// Brute-force sampling helper: the element q * w * p for words in the given generators.
inline std::size_t double_coset_element(const WeylGroup& g, const std::vector<int>& left_word, std::size_t w,
                                        const std::vector<int>& right_word) {
    std::size_t x = w;
    for (auto it = left_word.rbegin(); it != left_word.rend(); ++it) x = g.left_mul(*it, x);
    for (int i : right_word) x = g.right_mul(x, i);
    return x;
}

}  // namespace flagheight
