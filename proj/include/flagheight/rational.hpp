#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flagheight {

/// Exact rational scalar used throughout the library.
using Rational = mpq_class;

using RationalVec = std::vector<Rational>;

/// Canonical text form: "p/q" with q > 0 and gcd(p, q) = 1, or "p" when q = 1.
inline std::string to_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return c.get_str();
}

/// Parses "p/q", "p" or "-p/q". Whitespace is not allowed.
inline Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    std::string n(num[0] == '+' ? num.substr(1) : num);
    mpz_class dz{std::string(den)};
    if (dz == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(mpz_class(n), dz);
    r.canonicalize();
    return r;
}

/// p/q in lowest terms (mpq_class(p, q) alone does not reduce).
inline Rational frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& q) { return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0; }

inline Rational dot(const RationalVec& a, const RationalVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline std::vector<std::string> to_strings(const RationalVec& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

inline std::string join(const RationalVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

template <typename Int>
RationalVec to_rationals(const std::vector<Int>& v) {
    RationalVec out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(static_cast<long>(x));
    return out;
}

}  // namespace flagheight
