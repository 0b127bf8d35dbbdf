// Runs the flagheight binary as a subprocess.

#include <gtest/gtest.h>

#include "json.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

Outcome sh(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + std::string(FLAGHEIGHT_BIN) + " " + args + " 2>/dev/null";
    Outcome o;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return o;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) o.out.append(buf.data(), n);
    const int status = pclose(p);
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return o;
}

std::string write_job(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("flagheight_" + name + ".json");
    std::ofstream(path) << text;
    return path.string();
}

const char* kGr24 = R"({
  "schema_version": 1,
  "group": {"family": "GL", "rank": 4},
  "lambda": {"grassmann": {"n": 4, "r": 2}},
  "slope": {"hn_blocks": [{"rank": 1, "slope": 3}, {"rank": 1, "slope": 1},
                          {"rank": 1, "slope": 0}, {"rank": 1, "slope": -2}]}
})";

}  // namespace

TEST(CLI, HeightOracleGolden) {
    const auto job = write_job("gr24", kGr24);
    auto o = sh("height --oracle --json --config " + job);
    ASSERT_EQ(o.code, 0) << o.out;
    auto j = nlohmann::json::parse(o.out);
    EXPECT_EQ(j["result"]["height"], "1");
    EXPECT_EQ(j["result"]["oracle"], "1");
    EXPECT_EQ(j["result"]["match"], true);
    EXPECT_EQ(j["result"]["polytope"]["volume"], "1/12");
}

TEST(CLI, ByteIdenticalRuns) {
    const auto job = write_job("gr24", kGr24);
    for (const char* cmd : {"minima", "zhang", "height --oracle", "filtration --t 1", "cones --t 1/2 --scan"}) {
        auto a = sh(std::string(cmd) + " --json --config " + job);
        auto b = sh(std::string(cmd) + " --json --config " + job);
        EXPECT_EQ(a.code, 0) << cmd;
        EXPECT_EQ(a.out, b.out) << cmd;
    }
}

TEST(CLI, StdinInput) {
    const auto job = write_job("gr24", kGr24);
    auto o = sh("zhang --json --stdin < " + job);
    ASSERT_EQ(o.code, 0);
    EXPECT_EQ(nlohmann::json::parse(o.out)["result"]["essential_minimum"], "4");
}

TEST(CLI, ExitCodes) {
    EXPECT_EQ(sh("minima --json --config " + write_job("broken", "{not json")).code, 2);
    EXPECT_EQ(sh("minima --json --config " + write_job("empty", "{}")).code, 2);
    EXPECT_EQ(sh("bogus --json").code, 2);
    EXPECT_EQ(sh("minima --json").code, 2);
    EXPECT_EQ(sh("filtration --t 1/0 --json --config " + write_job("gr24", kGr24)).code, 2);
    const auto capped = write_job("capped", R"({"group": {"family": "GL", "rank": 4}, "max_weyl_order": 5,
        "lambda": [0, 0, 1, 1], "slope": {"hn_blocks": [{"rank": 4, "slope": 0}]}})");
    auto o = sh("minima --json --config " + capped);
    EXPECT_EQ(o.code, 3);
    EXPECT_EQ(nlohmann::json::parse(o.out)["error"]["kind"], "GroupTooLarge");
    EXPECT_EQ(sh("selftest --json").code, 0);
}

TEST(CLI, EnvironmentCap) {
    const auto job = write_job("gr24", kGr24);
    EXPECT_EQ(sh("minima --json --config " + job, "FLAGHEIGHT_MAX_WEYL_ORDER=23").code, 3);
    EXPECT_EQ(sh("minima --json --config " + job, "FLAGHEIGHT_MAX_WEYL_ORDER=24").code, 0);
    EXPECT_EQ(sh("minima --json --config " + job, "FLAGHEIGHT_MAX_WEYL_ORDER=lots").code, 2);
}

TEST(CLI, ShippedJobsRun) {
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(FLAGHEIGHT_JOBS)) {
        if (entry.path().extension() != ".json") continue;
        ++seen;
        for (const char* cmd : {"minima", "zhang", "height", "cones --t 0 --scan"})
            EXPECT_EQ(sh(std::string(cmd) + " --json --config " + entry.path().string()).code, 0)
                << cmd << " " << entry.path();
    }
    EXPECT_GE(seen, 2u);
}
