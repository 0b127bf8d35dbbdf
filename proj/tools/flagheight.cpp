// flagheight: command-line front end. Reads one JSON job, writes one JSON report.

#include "flagheight/commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace fh = flagheight;

int main(int argc, char** argv) {
    CLI::App app{"Heights, successive minima and movable cones of flag bundles over curves"};
    std::string command;
    std::string config_path;
    bool from_stdin = false;
    std::string t_text;
    int k = 0;
    bool oracle = false;
    bool scan = false;
    bool json_only = false;

    app.add_option("command", command, "minima | filtration | zhang | height | cones | grassmann-rays | selftest")
        ->required()
        ->check(CLI::IsMember(fh::io::command_names()));
    auto* cfg_opt = app.add_option("--config", config_path, "JSON job file")->check(CLI::ExistingFile);
    auto* stdin_opt = app.add_flag("--stdin", from_stdin, "read the JSON job from standard input");
    cfg_opt->excludes(stdin_opt);
    auto* t_opt = app.add_option("--t", t_text, "threshold t as p/q");
    auto* k_opt = app.add_option("--k", k, "movable-cone index k");
    app.add_flag("--oracle", oracle, "height: also integrate over the Gelfand-Zetlin polytope");
    app.add_flag("--scan", scan, "cones: report the largest k with the class in Mov^k");
    app.add_flag("--json", json_only, "suppress the human-readable table on standard error");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // usage errors count as invalid configuration; --help exits 0
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    fh::io::RunOptions opt;
    opt.oracle = oracle;
    opt.scan = scan;
    if (*k_opt) opt.k = k;

    fh::io::json config = fh::io::json::object();
    try {
        if (*t_opt) opt.t = fh::parse_rational(t_text);
        if (command != "selftest") {
            std::string text;
            if (from_stdin) {
                text.assign(std::istreambuf_iterator<char>(std::cin), {});
            } else if (!config_path.empty()) {
                std::ifstream in(config_path);
                std::stringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            } else {
                throw fh::Error(fh::ErrorKind::InvalidConfig, "a job is required: pass --config <path> or --stdin");
            }
            config = fh::io::json::parse(text);
        }
    } catch (const fh::io::json::parse_error& e) {
        const fh::Error err(fh::ErrorKind::InvalidConfig, std::string("config is not valid JSON: ") + e.what());
        std::cout << fh::io::error_report(err).dump(2) << "\n";
        if (!json_only) std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        const fh::Error err(fh::ErrorKind::InvalidConfig, std::string("--t: ") + e.what());
        std::cout << fh::io::error_report(err).dump(2) << "\n";
        if (!json_only) std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const fh::Error& e) {
        std::cout << fh::io::error_report(e).dump(2) << "\n";
        if (!json_only) std::cerr << "error: " << e.what() << "\n";
        return fh::io::exit_code_for(e.kind());
    }

    const auto result = fh::io::run(command, config, opt);
    std::cout << result.report.dump(2) << "\n";
    if (!json_only) std::cerr << result.table;
    return result.exit_code;
}
