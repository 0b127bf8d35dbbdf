#pragma once

// JSON job configuration and canonical report serialization.

#include "flagheight/cones.hpp"
#include "flagheight/errors.hpp"
#include "flagheight/height.hpp"
#include "flagheight/hn_input.hpp"
#include "flagheight/rational.hpp"
#include "flagheight/root_datum.hpp"

#include "json.hpp"

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace flagheight::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct JobConfig {
    Family family = Family::GL;
    int rank = 0;
    SimpleSet parabolic;
    CochVec slope;
    std::optional<HNBlocks> hn_blocks;
    WeightVec lambda;
    std::optional<std::pair<int, int>> grassmann;  // (n, r)
    std::optional<Rational> t;
    std::optional<int> k;
    std::uint64_t max_weyl_order = kDefaultMaxWeylOrder;
};

inline json to_json(const Rational& q) { return to_string(q); }

inline json to_json(const RationalVec& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

inline json to_json(const SimpleSet& s) { return json(s.indices()); }

/// Accepts integers or "p/q" strings.
inline Rational rational_field(const json& j, const std::string& field) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw Error(ErrorKind::InvalidConfig, field + ": " + e.what());
        }
    }
    throw Error(ErrorKind::InvalidConfig, field + ": expected an integer or a \"p/q\" string");
}

inline RationalVec rational_array(const json& j, const std::string& field) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidConfig, field + ": expected an array");
    RationalVec out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_field(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

inline std::vector<int> int_array(const json& j, const std::string& field) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidConfig, field + ": expected an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error(ErrorKind::InvalidConfig, field + ": expected integers");
        out.push_back(x.get<int>());
    }
    return out;
}

inline int int_field(const json& j, const std::string& field) {
    if (!j.is_number_integer()) throw Error(ErrorKind::InvalidConfig, field + ": expected an integer");
    return j.get<int>();
}

/// Cap from FLAGHEIGHT_MAX_WEYL_ORDER, or the default.
inline std::uint64_t env_weyl_cap() {
    if (const char* env = std::getenv("FLAGHEIGHT_MAX_WEYL_ORDER")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw Error(ErrorKind::InvalidConfig, "FLAGHEIGHT_MAX_WEYL_ORDER is not a positive integer");
        }
    }
    return kDefaultMaxWeylOrder;
}

/// Parses and validates a job. Field-level problems are collected and raised together.
inline JobConfig parse_config(const json& j) {
    if (!j.is_object()) throw Error(ErrorKind::InvalidConfig, "config must be a JSON object");
    std::vector<Violation> problems;
    auto attempt = [&](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            if (e.details().empty()) problems.push_back({ErrorKind::InvalidConfig, 0, e.what()});
            for (const auto& d : e.details()) problems.push_back({ErrorKind::InvalidConfig, d.index, d.message});
        }
    };
    JobConfig cfg;
    cfg.max_weyl_order = env_weyl_cap();
    if (j.contains("schema_version") && j["schema_version"] != kSchemaVersion)
        problems.push_back({ErrorKind::InvalidConfig, 0, "schema_version: only version 1 is supported"});
    if (j.contains("max_weyl_order")) attempt([&] {
            const int v = int_field(j["max_weyl_order"], "max_weyl_order");
            if (v <= 0) throw Error(ErrorKind::InvalidConfig, "max_weyl_order: must be positive");
            cfg.max_weyl_order = static_cast<std::uint64_t>(v);
        });

    bool have_group = false;
    attempt([&] {
        if (!j.contains("group") || !j["group"].is_object())
            throw Error(ErrorKind::InvalidConfig, "group: required object {family, rank}");
        const auto& g = j["group"];
        if (!g.contains("family") || !g["family"].is_string())
            throw Error(ErrorKind::InvalidConfig, "group.family: required string");
        cfg.family = parse_family(g["family"].get<std::string>());
        if (!g.contains("rank")) throw Error(ErrorKind::InvalidConfig, "group.rank: required integer");
        cfg.rank = int_field(g["rank"], "group.rank");
        build_root_datum(cfg.family, cfg.rank);
        have_group = true;
    });
    if (!have_group) raise_if_any(problems, "invalid config");
    const RootDatum datum = build_root_datum(cfg.family, cfg.rank);

    bool have_lambda = false;
    attempt([&] {
        if (!j.contains("lambda")) throw Error(ErrorKind::InvalidConfig, "lambda: required");
        const auto& l = j["lambda"];
        if (l.is_object()) {
            if (!l.contains("grassmann") || !l["grassmann"].is_object())
                throw Error(ErrorKind::InvalidConfig, "lambda: object form must be {\"grassmann\": {n, r}}");
            if (!datum.is_gl()) throw Error(ErrorKind::InvalidConfig, "lambda.grassmann: requires a GL group");
            const int n = int_field(l["grassmann"].value("n", json()), "lambda.grassmann.n");
            const int r = int_field(l["grassmann"].value("r", json()), "lambda.grassmann.r");
            if (n != cfg.rank) throw Error(ErrorKind::InvalidConfig, "lambda.grassmann.n: must equal the GL rank");
            const auto g = grassmann_setup(n, r);
            cfg.grassmann = std::make_pair(n, r);
            cfg.lambda = g.lambda;
            cfg.parabolic = g.parabolic;
        } else {
            cfg.lambda.coords = rational_array(l, "lambda");
            check_dims(datum, cfg.lambda.coords.size(), "lambda");
        }
        have_lambda = true;
    });

    attempt([&] {
        if (j.contains("parabolic_P")) {
            SimpleSet p(int_array(j["parabolic_P"], "parabolic_P"));
            check_simple_set(datum, p, "parabolic_P");
            if (cfg.grassmann && !(p == cfg.parabolic))
                throw Error(ErrorKind::InvalidConfig, "parabolic_P: conflicts with the grassmann shorthand");
            cfg.parabolic = p;
        } else if (have_lambda && !cfg.grassmann) {
            std::vector<int> p;
            for (int i = 1; i <= datum.num_simple(); ++i)
                if (coroot_pairing(datum, i, cfg.lambda) == 0) p.push_back(i);
            cfg.parabolic = SimpleSet(p);
        }
    });

    attempt([&] {
        if (!j.contains("slope") || !j["slope"].is_object())
            throw Error(ErrorKind::InvalidConfig, "slope: required object");
        const auto& s = j["slope"];
        const bool hn = s.contains("hn_blocks"), coeffs = s.contains("coroot_coeffs");
        if (hn == coeffs)
            throw Error(ErrorKind::InvalidConfig, "slope: exactly one of hn_blocks or coroot_coeffs is required");
        if (hn) {
            if (!datum.is_gl()) throw Error(ErrorKind::InvalidConfig, "slope.hn_blocks: only available for GL groups");
            if (!s["hn_blocks"].is_array()) throw Error(ErrorKind::InvalidConfig, "slope.hn_blocks: expected an array");
            std::vector<HNBlock> blocks;
            for (std::size_t i = 0; i < s["hn_blocks"].size(); ++i) {
                const auto& b = s["hn_blocks"][i];
                const std::string f = "slope.hn_blocks[" + std::to_string(i) + "]";
                if (!b.is_object() || !b.contains("rank"))
                    throw Error(ErrorKind::InvalidConfig, f + ": expected {rank, slope} or {rank, degree}");
                const int rank = int_field(b["rank"], f + ".rank");
                if (b.contains("slope") == b.contains("degree"))
                    throw Error(ErrorKind::InvalidConfig, f + ": give exactly one of slope or degree");
                if (b.contains("slope")) {
                    if (rank <= 0) throw Error(ErrorKind::InvalidConfig, f + ".rank: must be positive");
                    blocks.push_back({rank, rational_field(b["slope"], f + ".slope")});
                } else {
                    blocks.push_back(HNBlock::from_degree(rank, rational_field(b["degree"], f + ".degree")));
                }
            }
            HNBlocks hb(std::move(blocks));
            if (hb.total_rank() != datum.coord_dim())
                throw Error(ErrorKind::InvalidConfig, "slope.hn_blocks: ranks sum to " + std::to_string(hb.total_rank()) +
                                                          ", expected " + std::to_string(datum.coord_dim()));
            cfg.slope = hn_to_slope_vector(hb);
            cfg.hn_blocks = hb;
        } else {
            cfg.slope.coords = rational_array(s["coroot_coeffs"], "slope.coroot_coeffs");
            check_dims(datum, cfg.slope.coords.size(), "slope.coroot_coeffs");
            if (s.contains("levi_Q")) {
                cfg.slope.levi = SimpleSet(int_array(s["levi_Q"], "slope.levi_Q"));
                check_simple_set(datum, cfg.slope.levi, "slope.levi_Q");
            } else {
                std::vector<int> q;
                for (int jj = 1; jj <= datum.num_simple(); ++jj)
                    if (root_pairing(datum, cfg.slope, jj) == 0) q.push_back(jj);
                cfg.slope.levi = SimpleSet(q);
            }
        }
        raise_if_any(validate_canonical_slope(datum, cfg.slope), "slope");
    });

    if (have_lambda) attempt([&] { raise_if_any(validate_character_of_p(datum, cfg.lambda, cfg.parabolic), "lambda"); });
    if (j.contains("t")) attempt([&] { cfg.t = rational_field(j["t"], "t"); });
    if (j.contains("k")) attempt([&] { cfg.k = int_field(j["k"], "k"); });

    raise_if_any(problems, "invalid config");
    return cfg;
}

inline json echo(const JobConfig& cfg) {
    json in;
    in["group"] = {{"family", family_name(cfg.family)}, {"rank", cfg.rank}};
    in["parabolic_P"] = to_json(cfg.parabolic);
    in["lambda"] = to_json(cfg.lambda.coords);
    in["slope"] = {{"coords", to_json(cfg.slope.coords)}, {"levi_Q", to_json(cfg.slope.levi)}};
    if (cfg.hn_blocks) {
        json blocks = json::array();
        for (const auto& b : cfg.hn_blocks->blocks()) blocks.push_back({{"rank", b.rank}, {"slope", to_string(b.slope)}});
        in["slope"]["hn_blocks"] = blocks;
    }
    if (cfg.grassmann) in["grassmann"] = {{"n", cfg.grassmann->first}, {"r", cfg.grassmann->second}};
    if (cfg.t) in["t"] = to_string(*cfg.t);
    if (cfg.k) in["k"] = *cfg.k;
    in["max_weyl_order"] = cfg.max_weyl_order;
    return in;
}

inline json to_json(const MinimaTable& table) {
    json out;
    out["dim"] = table.dim;
    json entries = json::array();
    for (const auto& e : table.entries)
        entries.push_back({{"coset_id", e.coset_id},
                           {"min_rep_word", e.min_rep_word},
                           {"length", e.length},
                           {"multiplicity", e.multiplicity},
                           {"zeta", to_string(e.zeta)}});
    out["entries"] = entries;
    json closure = json::array();
    for (std::size_t a = 0; a < table.closure.size(); ++a)
        for (std::size_t b = 0; b < table.closure.size(); ++b)
            if (a != b && table.closure[a][b]) closure.push_back({a, b});
    out["closure_pairs"] = closure;
    json viol = json::array();
    for (const auto& v : table.monotonicity_violations) viol.push_back({v.lower_id, v.upper_id});
    out["monotonicity_violations"] = viol;
    return out;
}

inline json to_json(const Stratification& s) {
    return {{"t", to_string(s.t)}, {"included_ids", s.included_ids}, {"dimension", s.dimension}, {"is_all", s.is_all}};
}

inline json to_json(const ConeReport& r) {
    json b = json::array();
    for (const auto& c : r.binding_constraints)
        b.push_back({{"kind", c.kind}, {"index", c.index}, {"value", to_string(c.value)}});
    return {{"is_big", r.is_big}, {"movable_index", r.movable_index}, {"boundary_of", r.boundary_of},
            {"binding_constraints", b}};
}

inline json error_report(const Error& e) {
    json details = json::array();
    for (const auto& d : e.details())
        details.push_back({{"kind", std::string(kind_name(d.kind))}, {"index", d.index}, {"message", d.message}});
    return {{"schema_version", kSchemaVersion},
            {"error", {{"kind", std::string(kind_name(e.kind()))}, {"message", e.what()}, {"details", details}}}};
}

/// Process exit status for an error kind.
inline int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::GroupTooLarge: return 3;
        case ErrorKind::InternalInconsistency:
        case ErrorKind::OracleMismatch: return 4;
        default: return 2;
    }
}

}  // namespace flagheight::io
