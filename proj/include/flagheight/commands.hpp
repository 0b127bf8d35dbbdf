#pragma once

// Command dispatch for the flagheight CLI: one JSON job in, one JSON report out.

#include "flagheight/cones.hpp"
#include "flagheight/errors.hpp"
#include "flagheight/gz.hpp"
#include "flagheight/height.hpp"
#include "flagheight/hn_input.hpp"
#include "flagheight/io.hpp"
#include "flagheight/rational.hpp"
#include "flagheight/root_datum.hpp"
#include "flagheight/weyl.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace flagheight::io {

struct RunOptions {
    std::optional<Rational> t{};
    std::optional<int> k{};
    bool oracle = false;
    bool scan = false;
};

struct RunResult {
    int exit_code = 0;
    json report;
    /// Human-readable summary, written to standard error by the CLI.
    std::string table;
};

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"minima", "filtration", "zhang", "height",
                                                "cones", "grassmann-rays", "selftest"};
    return names;
}

namespace detail {

inline std::string word_text(const std::vector<int>& w) {
    if (w.empty()) return "e";
    std::string s;
    for (int i : w) s += "s" + std::to_string(i);
    return s;
}

inline std::string minima_text(const MinimaTable& t) {
    std::ostringstream os;
    os << "dim G/P = " << t.dim << "\n";
    os << "id  length  mult  zeta  min_rep\n";
    for (const auto& e : t.entries)
        os << e.coset_id << "  " << e.length << "  " << e.multiplicity << "  " << to_string(e.zeta) << "  "
           << word_text(e.min_rep_word) << "\n";
    return os.str();
}

inline Rational require_t(const JobConfig& cfg, const RunOptions& opt, const std::string& command) {
    if (opt.t) return *opt.t;
    if (cfg.t) return *cfg.t;
    throw Error(ErrorKind::InvalidConfig, command + " needs t (config field \"t\" or --t)");
}

inline std::string boundary_note(const MinimaTable& table, const Rational& t) {
    std::vector<std::size_t> hit;
    for (const auto& e : table.entries)
        if (e.zeta == t) hit.push_back(e.coset_id);
    if (hit.empty()) return "t is not a successive minimum: Z_t and B_+ consist of the same cells";
    std::string ids;
    std::sort(hit.begin(), hit.end());
    for (auto id : hit) ids += (ids.empty() ? "" : ",") + std::to_string(id);
    return "t equals zeta_w for cells {" + ids + "}: Z_t excludes them (strict <), B_+ includes them (<=)";
}

}  // namespace detail

inline json selftest_report();

inline Rational pow_scale(long scale, int e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(scale), static_cast<unsigned long>(e));
    return Rational(p);
}

/// Runs one command on a parsed config.
inline RunResult run_parsed(const std::string& command, const JobConfig& cfg, const RunOptions& opt) {
    RunResult out;
    const RootDatum datum = build_root_datum(cfg.family, cfg.rank);
    const WeylGroup group = WeylGroup::enumerate(datum, cfg.max_weyl_order);
    json result;
    std::ostringstream table;

    if (command == "minima") {
        const auto t = successive_minima(group, cfg.slope, cfg.lambda, cfg.parabolic);
        result = to_json(t);
        table << detail::minima_text(t);
        if (!t.monotonicity_violations.empty()) out.exit_code = 4;
    } else if (command == "filtration") {
        const Rational t = detail::require_t(cfg, opt, command);
        const auto minima = successive_minima(group, cfg.slope, cfg.lambda, cfg.parabolic);
        const auto z = height_filtration(minima, t);
        const auto b = augmented_base_locus(minima, t);
        result["height_filtration"] = to_json(z);
        result["augmented_base_locus"] = to_json(b);
        if (b.included_ids.empty()) result["augmented_base_locus"]["codimension"] = nullptr;
        else result["augmented_base_locus"]["codimension"] = minima.dim - b.dimension;
        result["boundary_note"] = detail::boundary_note(minima, t);
        result["t"] = to_string(t);
        table << "Z_t cells: " << z.included_ids.size() << " (dim " << z.dimension << ")\n"
              << "B_+ cells: " << b.included_ids.size() << " (dim " << b.dimension << ")\n"
              << result["boundary_note"].get<std::string>() << "\n";
    } else if (command == "zhang") {
        const auto minima = successive_minima(group, cfg.slope, cfg.lambda, cfg.parabolic);
        const auto e = zhang_minima(minima);
        result["dim"] = minima.dim;
        result["e"] = to_json(e);
        result["essential_minimum"] = to_string(essential_minimum(minima));
        result["absolute_minimum"] = to_string(absolute_minimum(minima));
        for (std::size_t i = 0; i < e.size(); ++i) table << "e_" << i + 1 << " = " << to_string(e[i]) << "\n";
    } else if (command == "height") {
        const auto h = evaluate_height(group, cfg.slope, cfg.lambda, cfg.parabolic);
        if (h.by_cosets != h.by_double_cosets)
            throw Error(ErrorKind::InternalInconsistency, "height over W/W_P differs from the double-coset sum");
        result["height"] = to_string(h.by_cosets);
        result["by_cosets"] = to_string(h.by_cosets);
        result["by_double_cosets"] = to_string(h.by_double_cosets);
        result["num_cosets"] = h.num_cosets;
        table << "height = " << to_string(h.by_cosets) << "\n";
        if (opt.oracle) {
            if (!datum.is_gl()) throw Error(ErrorKind::UnsupportedType, "--oracle is available for GL groups only");
            if (!(stabilizer_parabolic(cfg.lambda.coords) == cfg.parabolic))
                throw Error(ErrorKind::InvalidConfig, "parabolic_P must be the stabilizer of lambda for --oracle");
            const auto cmp = compare_with_oracle(group, cfg.lambda, cfg.slope);
            result["oracle"] = to_string(cmp.oracle_height);
            result["match"] = cmp.match;
            result["polytope"] = {{"scale", cmp.scale},
                                  {"dim", cmp.dim},
                                  {"volume", to_string(cmp.volume)},
                                  {"integral", to_string(cmp.integral)},
                                  {"normalized_volume", to_string(cmp.volume / pow_scale(cmp.scale, cmp.dim))},
                                  {"normalized_integral",
                                   to_string(cmp.integral / pow_scale(cmp.scale, cmp.dim + 1))}};
            table << "oracle = " << to_string(cmp.oracle_height) << (cmp.match ? " (match)" : " (MISMATCH)") << "\n"
                  << "Vol(GZ) = " << to_string(cmp.volume) << ", integral = " << to_string(cmp.integral) << "\n";
            if (!cmp.match) out.exit_code = 4;
        }
    } else if (command == "cones") {
        const Rational t = detail::require_t(cfg, opt, command);
        const ConeAnalyzer analyzer(group, cfg.slope, cfg.parabolic);
        const PolarizedClass cls{cfg.lambda, t};
        const std::optional<int> k = opt.k ? opt.k : cfg.k;
        result["t"] = to_string(t);
        result["dim"] = analyzer.dim();
        result["max_k"] = analyzer.max_k();
        if (k && !opt.scan) {
            const bool member = analyzer.movable_check(cls, *k);
            result["k"] = *k;
            result["member"] = member;
            table << "class " << (member ? "is" : "is not") << " in Mov^" << *k << "\n";
        } else {
            const auto rep = analyzer.movable_index(cls);
            result["report"] = to_json(rep);
            table << "movable index = " << rep.movable_index << (rep.is_big ? " (big)" : " (not big)") << "\n";
        }
        const auto locus = analyzer.augmented_base_locus(cls);
        result["augmented_base_locus"] = to_json(locus.cells);
        result["augmented_base_locus"]["codimension"] = locus.codimension ? json(*locus.codimension) : json(nullptr);
        if (!locus.reason.empty()) result["augmented_base_locus"]["reason"] = locus.reason;
    } else if (command == "grassmann-rays") {
        if (!cfg.grassmann || !cfg.hn_blocks)
            throw Error(ErrorKind::InvalidConfig, "grassmann-rays needs lambda {\"grassmann\": {n, r}} and slope.hn_blocks");
        const auto rays = grassmann_big_cone_rays(cfg.grassmann->first, cfg.grassmann->second, *cfg.hn_blocks);
        result["rays"] = {{"f", {to_string(rays.fiber.lambda_coeff), to_string(rays.fiber.t)}},
                          {"essential", {to_string(rays.essential.lambda_coeff), to_string(rays.essential.t)}}};
        result["coordinates"] = "(lambda coefficient a, t) for the class a*O(1) - t*f";
        table << "big cone rays: f and O(1) - (" << to_string(rays.essential.t) << ") f\n";
    } else {
        throw Error(ErrorKind::InvalidConfig, "unknown command '" + command + "'");
    }
    out.report = {{"schema_version", kSchemaVersion}, {"command", command}, {"input", echo(cfg)}, {"result", result}};
    out.table = table.str();
    return out;
}

/// Parses the config and runs the command; errors become an error report and exit code.
inline RunResult run(const std::string& command, const json& config, const RunOptions& opt = {}) {
    RunResult out;
    try {
        if (command == "selftest") {
            out.report = selftest_report();
            out.exit_code = out.report["result"]["passed"].get<bool>() ? 0 : 4;
            for (const auto& c : out.report["result"]["checks"])
                out.table += std::string(c["pass"].get<bool>() ? "PASS " : "FAIL ") + c["name"].get<std::string>() + "\n";
            return out;
        }
        if (std::find(command_names().begin(), command_names().end(), command) == command_names().end())
            throw Error(ErrorKind::InvalidConfig, "unknown command '" + command + "'");
        const JobConfig cfg = parse_config(config);
        return run_parsed(command, cfg, opt);
    } catch (const Error& e) {
        out.exit_code = exit_code_for(e.kind());
        out.report = error_report(e);
        out.table = std::string("error: ") + e.what() + "\n";
    }
    return out;
}

/// Built-in checks of the reference values for Grassmann bundles Gr(2,4).
inline json selftest_report() {
    json checks = json::array();
    auto check = [&](const std::string& name, const std::function<std::pair<std::string, std::string>()>& fn) {
        std::string expected, actual;
        bool pass = false;
        try {
            std::tie(expected, actual) = fn();
            pass = expected == actual;
        } catch (const std::exception& e) {
            actual = std::string("exception: ") + e.what();
        }
        checks.push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", pass}});
    };
    const RootDatum gl4 = build_root_datum(Family::GL, 4);
    const WeylGroup g = WeylGroup::enumerate(gl4);
    const HNBlocks blocks({{1, 3}, {1, 1}, {1, 0}, {1, -2}});
    const CochVec mu = hn_to_slope_vector(blocks);
    const GrassmannSetup gr = grassmann_setup(4, 2);

    check("pairing <deg(F_Q), lambda_i> = mu_i", [&] {
        RationalVec got;
        for (int i = 1; i <= 4; ++i) got.push_back(pair(mu, basis_weight(gl4, i)));
        return std::make_pair(join(mu.coords), join(got));
    });
    check("grassmann_setup(4,2) gives Delta_P={1,3}, lambda=(0,0,1,1)", [&] {
        return std::make_pair(std::string("[1,3] (0,0,1,1)"),
                              to_json(gr.parabolic).dump() + " " + join(gr.lambda.coords));
    });
    check("(0,0,1,1) is strictly antidominant for Delta_P={1,3}", [&] {
        return std::make_pair(std::string("0"),
                              std::to_string(validate_antidominant(gl4, gr.lambda, gr.parabolic).size()));
    });
    check("longest coset representative sends det_2 to lambda_1+lambda_2", [&] {
        const auto cosets = g.minimal_coset_reps(gr.parabolic);
        return std::make_pair(std::string("(1,1,0,0)"), join(g.act(cosets.reps.back(), gr.lambda).coords));
    });
    check("successive minima are {mu_i + mu_j : i < j}", [&] {
        const auto t = successive_minima(g, mu, gr.lambda, gr.parabolic);
        RationalVec z;
        for (const auto& e : t.entries) z.push_back(e.zeta);
        std::sort(z.begin(), z.end());
        RationalVec want;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) want.push_back(mu.coords[i] + mu.coords[j]);
        std::sort(want.begin(), want.end());
        return std::make_pair(join(want), join(z));
    });
    check("essential minimum = mu_1 + mu_2", [&] {
        const auto t = successive_minima(g, mu, gr.lambda, gr.parabolic);
        return std::make_pair(to_string(mu.coords[0] + mu.coords[1]), to_string(essential_minimum(t)));
    });
    check("height = (mu_1+mu_2+mu_3+mu_4)/2", [&] {
        Rational s = 0;
        for (const auto& q : mu.coords) s += q;
        return std::make_pair(to_string(s / 2), to_string(variety_height(g, mu, gr.lambda, gr.parabolic)));
    });
    const GZPolytope gz = build_gz(4, gr.lambda);
    check("GZ inequalities 0<=x2<=x1<=x3<=1, x2<=x4<=x3", [&] {
        // the reference system written as a.x <= b
        std::vector<Halfspace> ref{{{0, -1, 0, 0}, 0}, {{-1, 1, 0, 0}, 0}, {{1, 0, -1, 0}, 0},
                                   {{0, 0, 1, 0}, 1},  {{0, 1, 0, -1}, 0}, {{0, 0, -1, 1}, 0}};
        const Polytope reference(4, ref);
        return std::make_pair(std::string("same polytope"), reference.vertices() == vertices(gz)
                                                                ? std::string("same polytope")
                                                                : std::string("different polytope"));
    });
    check("GZ vertices", [&] {
        std::string got;
        for (const auto& v : vertices(gz)) got += join(v);
        return std::make_pair(std::string("(0,0,0,0)(0,0,1,0)(0,0,1,1)(1,0,1,0)(1,0,1,1)(1,1,1,1)"), got);
    });
    check("Vol(GZ) = 1/12", [&] { return std::make_pair(std::string("1/12"), to_string(volume(gz))); });
    check("integral of <deg(F_Q), p(x)> = (mu_1+...+mu_4)/24", [&] {
        Rational s = 0;
        for (const auto& q : mu.coords) s += q;
        return std::make_pair(to_string(s / 24), to_string(integrate_affine(gz, concave_transform_functional(gz, mu))));
    });
    check("oracle height = Weyl average", [&] {
        return std::make_pair(std::string("1"), to_string(oracle_height(4, gr.lambda, mu)));
    });
    const ConeAnalyzer cones(g, mu, gr.parabolic);
    check("<alpha_2^vee, det_2> = -1", [&] {
        return std::make_pair(std::string("-1"), to_string(cones.functional_root({gr.lambda, 0}, 2)));
    });
    check("<deg(F_Q), I_0 .> sends O(1) - t f to mu_1+mu_2-t and f to 1", [&] {
        const auto cosets = g.minimal_coset_reps(gr.parabolic);
        const auto i0 = cosets.reps.back();
        const Rational on_o = cones.functional_weyl({gr.lambda, Rational(1, 2)}, i0);
        const Rational on_f = cones.functional_weyl({WeightVec{RationalVec(4, 0)}, -1}, i0);
        return std::make_pair(std::string("7/2 1"), to_string(on_o) + " " + to_string(on_f));
    });
    check("big iff t < mu_1 + mu_2", [&] {
        std::string got;
        for (Rational t : {Rational(39, 10), Rational(4), Rational(5)})
            got += cones.movable_check({gr.lambda, t}, 1) ? "1" : "0";
        return std::make_pair(std::string("100"), got);
    });
    check("big cone rays f and O(1) - 4f", [&] {
        const auto rays = grassmann_big_cone_rays(4, 2, blocks);
        return std::make_pair(std::string("(0,-1) (1,4)"),
                              join({rays.fiber.lambda_coeff, rays.fiber.t}) + " " +
                                  join({rays.essential.lambda_coeff, rays.essential.t}));
    });
    check("height --oracle golden report", [&] {
        const json cfg = {{"group", {{"family", "GL"}, {"rank", 4}}},
                          {"lambda", {{"grassmann", {{"n", 4}, {"r", 2}}}}},
                          {"slope",
                           {{"hn_blocks",
                             {{{"rank", 1}, {"slope", 3}}, {{"rank", 1}, {"slope", 1}},
                              {{"rank", 1}, {"slope", 0}}, {{"rank", 1}, {"slope", -2}}}}}}};
        RunOptions o;
        o.oracle = true;
        const auto r = run("height", cfg, o);
        return std::make_pair(std::string("1 1 true"), r.report["result"]["height"].get<std::string>() + " " +
                                                            r.report["result"]["oracle"].get<std::string>() + " " +
                                                            (r.report["result"]["match"].get<bool>() ? "true" : "false"));
    });
    bool all = true;
    for (const auto& c : checks) all = all && c["pass"].get<bool>();
    return {{"schema_version", kSchemaVersion}, {"command", "selftest"}, {"result", {{"checks", checks}, {"passed", all}}}};
}

}  // namespace flagheight::io
