#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flagheight {

enum class ErrorKind {
    UnsupportedType,
    DimensionMismatch,
    NotACharacterOfP,
    NotStrictlyAntidominant,
    SlopeNotLeviTrivial,
    SlopeNotStrictlyDecreasingAcrossBlocks,
    GroupTooLarge,
    NonDecreasingSlopes,
    BadRank,
    NotIntegral,
    NotAntidominant,
    PointOutside,
    IndexInLevi,
    InvalidConfig,
    InternalInconsistency,
    OracleMismatch,
};

inline std::string_view kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::UnsupportedType: return "UnsupportedType";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotACharacterOfP: return "NotACharacterOfP";
        case ErrorKind::NotStrictlyAntidominant: return "NotStrictlyAntidominant";
        case ErrorKind::SlopeNotLeviTrivial: return "SlopeNotLeviTrivial";
        case ErrorKind::SlopeNotStrictlyDecreasingAcrossBlocks: return "SlopeNotStrictlyDecreasingAcrossBlocks";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::NonDecreasingSlopes: return "NonDecreasingSlopes";
        case ErrorKind::BadRank: return "BadRank";
        case ErrorKind::NotIntegral: return "NotIntegral";
        case ErrorKind::NotAntidominant: return "NotAntidominant";
        case ErrorKind::PointOutside: return "PointOutside";
        case ErrorKind::IndexInLevi: return "IndexInLevi";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::OracleMismatch: return "OracleMismatch";
    }
    return "Unknown";
}

/// One classified failure of a validation check. `index` is a 1-based
/// simple-root (or block) index, 0 when not applicable.
struct Violation {
    ErrorKind kind;
    int index = 0;
    std::string message;
};

/// Every library failure is reported through this exception type.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::vector<Violation> details = {})
        : std::runtime_error(what), kind_(kind), details_(std::move(details)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<Violation>& details() const noexcept { return details_; }

private:
    ErrorKind kind_;
    std::vector<Violation> details_;
};

/// Throws an Error carrying all violations; the kind is that of the first one.
inline void raise_if_any(const std::vector<Violation>& violations, std::string_view context) {
    if (violations.empty()) return;
    std::string what(context);
    for (const auto& v : violations) what += "; " + v.message;
    throw Error(violations.front().kind, what, violations);
}

}  // namespace flagheight
