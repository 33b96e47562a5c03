#include "arithgrass/cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace arithgrass;
using namespace arithgrass::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    args.insert(args.begin(), "arithgrass");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string& text) {
    std::vector<nlohmann::json> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) rows.push_back(nlohmann::json::parse(line));
    return rows;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST(Cli, SigmaBoth) {
    const auto r = call({"sigma", "--N", "6", "--k", "1", "--method", "both"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0]["agree"], true);
    EXPECT_EQ(rows[0]["positive"], true);
    EXPECT_EQ(parse_rational(rows[0]["sigma"].get<std::string>()), sigma_direct(SigmaInstance::make(6, 1)));
    EXPECT_EQ(rows[0]["sigma_approx"], to_decimal(sigma_direct(SigmaInstance::make(6, 1)), 12));
}

TEST(Cli, SigmaAllK) {
    const auto r = call({"sigma", "--N", "7", "--method", "direct"});
    ASSERT_EQ(r.code, 0);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 4u);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(rows[k]["k"], k);
}

TEST(Cli, ScanBoundUpTo50) {
    const auto r = call({"scan-bound", "--Tmin", "3", "--Tmax", "50", "--workers", "2"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["violations"].empty());
    EXPECT_EQ(j["T_range"], nlohmann::json::array({3, 50}));
    EXPECT_TRUE(j.contains("rows_checked"));
    EXPECT_TRUE(j.contains("elapsed_ms"));
    for (const auto& e : j["equality_cases"]) EXPECT_TRUE(e["n"] == 0 || e["s"] == 0);
}

TEST(Cli, VerifyNeededHarmonic30) {
    const auto r = call({"verify-needed", "--T", "30", "--sequence", "harmonic"});
    ASSERT_EQ(r.code, 0);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 30u);
    for (int n = 0; n < 30; ++n) {
        EXPECT_EQ(rows[n]["n"], n);
        EXPECT_EQ(rows[n]["passed"], true);
        EXPECT_NE(rows[n]["branch"], "uncovered");
    }
}

TEST(Cli, VerifyNeededRandom) {
    const auto r = call({"verify-needed", "--Tmin", "3", "--Tmax", "8", "--sequence", "random", "--count", "5",
                         "--seed", "42", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    int count = -1;
    while (std::getline(in, line)) ++count;
    EXPECT_EQ(count, 5 * (3 + 4 + 5 + 6 + 7 + 8));
}

TEST(Cli, SequenceFile) {
    std::string content;
    for (int k = 1; k <= 14; ++k) content += std::to_string(k) + "\n";
    const auto linear = temp_file("arithgrass_linear.txt", content);
    auto r = call({"verify-needed", "--T", "15", "--sequence", linear.string()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out)[0]["concave"], true);

    // not concave: still evaluated, but labelled exploratory with no certifying branch
    const auto convex = temp_file("arithgrass_convex.txt", "1\n2\n4\n8\n16\n");
    r = call({"verify-needed", "--T", "6", "--sequence", convex.string()});
    EXPECT_EQ(r.code, 0);
    for (const auto& row : lines(r.out)) {
        EXPECT_EQ(row["branch"], "exploratory");
        EXPECT_EQ(row["branch_ok"], false);
        EXPECT_EQ(row["concave"], false);
        EXPECT_EQ(row["passed"], row["holds"]);
    }

    const auto bad = temp_file("arithgrass_bad.txt", "1\nabc\n");
    r = call({"verify-needed", "--T", "3", "--sequence", bad.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find(":2:"), std::string::npos);

    const auto negative = temp_file("arithgrass_neg.txt", "1\n-2\n");
    EXPECT_EQ(call({"verify-needed", "--T", "3", "--sequence", negative.string()}).code, 2);
    EXPECT_EQ(call({"verify-needed", "--T", "30", "--sequence", linear.string()}).code, 2);
    EXPECT_EQ(call({"verify-needed", "--T", "3", "--sequence", "/nonexistent/file"}).code, 2);
}

TEST(Cli, SigmaTableSortedByNK) {
    const auto r = call({"table", "--kind", "sigma", "--Nmax", "9", "--workers", "3"});
    ASSERT_EQ(r.code, 0);
    const auto rows = lines(r.out);
    ASSERT_FALSE(rows.empty());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const std::pair prev{rows[i - 1]["N"].get<int>(), rows[i - 1]["k"].get<int>()};
        const std::pair cur{rows[i]["N"].get<int>(), rows[i]["k"].get<int>()};
        EXPECT_LT(prev, cur);
    }
}

TEST(Cli, RacahTableSortedByTNS) {
    const auto r = call({"table", "--kind", "racah", "--Tmin", "3", "--Tmax", "7", "--format", "csv", "--workers", "4"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "T,n,s,value,value_approx,passed");
    std::vector<std::tuple<int, int, int>> keys;
    for (std::string line; std::getline(in, line);) {
        int T, n, s;
        ASSERT_EQ(std::sscanf(line.c_str(), "%d,%d,%d", &T, &n, &s), 3);
        keys.emplace_back(T, n, s);
    }
    EXPECT_EQ(keys.size(), 9u + 16 + 25 + 36 + 49);
    EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
    EXPECT_EQ(std::adjacent_find(keys.begin(), keys.end()), keys.end());
}

TEST(Cli, DeviationTable) {
    const auto r = call({"table", "--kind", "deviation", "--Tmin", "10", "--Tmax", "14"});
    ASSERT_EQ(r.code, 0);
    for (const auto& row : lines(r.out)) EXPECT_EQ(row["passed"], true);
}

TEST(Cli, EmptyTableIsHeaderOnly) {
    // no n satisfies 10(1 + 2n + 2n^2) < T^2 for T < 4
    const auto r = call({"table", "--kind", "deviation", "--Tmin", "3", "--Tmax", "3", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "T,n,grid,max_deviation,max_deviation_approx,bound,bound_approx,passed\n");
}

TEST(Cli, VerifyCommands) {
    EXPECT_EQ(call({"verify-grassmannian", "--Nmax", "8"}).code, 0);
    EXPECT_EQ(call({"verify-grassmannian", "--Nmax", "8", "--k", "0", "2"}).code, 0);
    const auto pn = call({"verify-pn", "--nmax", "5"});
    ASSERT_EQ(pn.code, 0);
    EXPECT_EQ(lines(pn.out).back()["tau"], "87/10");
    const auto ortho = call({"verify-ortho", "--Tmin", "3", "--Tmax", "6"});
    EXPECT_EQ(ortho.code, 0);
    EXPECT_EQ(lines(ortho.out).size(), 9u + 16 + 25 + 36);
}

TEST(Cli, ByteIdenticalReruns) {
    const std::vector<std::vector<std::string>> configs{
        {"scan-bound", "--Tmin", "3", "--Tmax", "25", "--no-timing", "--workers", "3"},
        {"verify-needed", "--Tmin", "3", "--Tmax", "12", "--sequence", "random", "--count", "4", "--seed", "9",
         "--workers", "2"},
        {"table", "--kind", "sigma", "--Nmax", "10", "--format", "csv", "--workers", "4"},
    };
    for (const auto& cfg : configs) {
        const auto a = call(cfg);
        const auto b = call(cfg);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out);
    }
    // parallelism does not affect content either
    EXPECT_EQ(call({"table", "--kind", "racah", "--Tmax", "9", "--workers", "1"}).out,
              call({"table", "--kind", "racah", "--Tmax", "9", "--workers", "5"}).out);
}

TEST(Cli, FaultInjectionGivesExitOne) {
    const auto r = call({"sigma", "--N", "4", "--inject-failure"});
    EXPECT_EQ(r.code, 1);
    const auto rows = lines(r.out);
    EXPECT_EQ(rows[0]["passed"], false);
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i]["passed"], true);
    EXPECT_EQ(call({"scan-bound", "--Tmax", "5", "--inject-failure"}).code, 1);
    EXPECT_EQ(call({"verify-pn", "--nmax", "3", "--inject-failure"}).code, 1);

    RunConfig cfg;
    cfg.command = Command::verify_ortho;
    cfg.T_min = 3;
    cfg.T_max = 4;
    std::ostringstream out, err;
    EXPECT_EQ(run(cfg, out, err), 0);
    cfg.inject_failure = true;
    EXPECT_EQ(run(cfg, out, err), 1);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"bogus"}).code, 2);
    EXPECT_EQ(call({"sigma"}).code, 2);
    EXPECT_EQ(call({"sigma", "--N", "4", "--k", "3"}).code, 2);
    EXPECT_EQ(call({"sigma", "--N", "0"}).code, 2);
    EXPECT_EQ(call({"sigma", "--N", "4", "--method", "fast"}).code, 2);
    EXPECT_EQ(call({"sigma", "--N", "4", "--format", "xml"}).code, 2);
    EXPECT_EQ(call({"sigma", "--N", "4", "--workers", "0"}).code, 2);
    EXPECT_EQ(call({"verify-ortho", "--Tmin", "2"}).code, 2);
    EXPECT_EQ(call({"verify-ortho", "--Tmin", "9", "--Tmax", "4"}).code, 2);
    EXPECT_EQ(call({"table", "--kind", "weird"}).code, 2);
    EXPECT_EQ(call({"verify-needed", "--T", "5", "--sequence", "random", "--count", "0"}).code, 2);
    const auto help = call({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("scan-bound"), std::string::npos);
}

TEST(Cli, RunConfigValidation) {
    RunConfig cfg;
    cfg.command = Command::sigma;
    cfg.N = 5;
    cfg.k = 3;
    EXPECT_THROW(validate(cfg), UsageError);
    cfg.k = 2;
    EXPECT_NO_THROW(validate(cfg));
    cfg.workers = 0;
    EXPECT_THROW(validate(cfg), UsageError);
    EXPECT_EQ(to_string(Command::scan_bound), "scan-bound");
}

#ifdef ARITHGRASS_TOOL
TEST(Cli, BinaryExitCodes) {
    const std::string tool = ARITHGRASS_TOOL;
    auto status = [&](const std::string& args) {
        const int raw = std::system((tool + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    EXPECT_EQ(status("sigma --N 6 --k 1 --method both"), 0);
    EXPECT_EQ(status("sigma --N 6 --inject-failure"), 1);
    EXPECT_EQ(status("sigma --N -3"), 2);
    EXPECT_EQ(status("no-such-command"), 2);
}
#endif
