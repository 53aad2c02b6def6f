#include "doctest.h"

#include <collatz/cli.hpp>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>

using namespace collatz;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;

    ReportDocument report() const { return parse_report(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "collatz-slots");
    std::ostringstream out, err;
    const int code = cli::main(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("collatz-cli-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("levels --nu 20 --stats") {
    const Run r = run({"levels", "--nu", "20", "--stats"});
    REQUIRE(r.code == 0);
    const ReportDocument doc = r.report();
    CHECK(doc.results["count"] == 72);
    CHECK(doc.results["min"] == "18");
    CHECK(doc.results["max"] == "1048576");
    CHECK(doc.results["kappa_histogram"]["3"] == 22);
    CHECK(doc.results["cardinalities"].size() == 21);
    CHECK(doc.command["subcommand"] == "levels");
    CHECK(doc.command["--nu"] == "20");
    CHECK(doc.command["--stats"] == true);
}

TEST_CASE("levels output file and csv") {
    TempDir dir;
    const fs::path p = dir.path / "l7.levelset";
    REQUIRE(run({"levels", "--nu", "7", "--out", p.string()}).code == 0);
    CHECK(read_text_file(p) == "collatz-levelset v1 nu=7 count=4\n3\n20\n21\n128\n");
    const Run csv = run({"levels", "--nu", "7", "--format", "csv"});
    CHECK(csv.out == "nu,n\n7,3\n7,20\n7,21\n7,128\n");
}

TEST_CASE("sigma --n 5 --mode both") {
    const Run r = run({"sigma", "--n", "5", "--mode", "both"});
    REQUIRE(r.code == 0);
    const ReportDocument doc = r.report();
    CHECK(doc.results["steadiness"]["literal"]["exact"]["num"] == "45");
    CHECK(doc.results["steadiness"]["literal"]["exact"]["den"] == "64");
    CHECK(doc.results["steadiness"]["telescoping"]["exact"]["num"] == "15");
    CHECK(doc.results["steadiness"]["telescoping"]["exact"]["den"] == "16");
    CHECK(doc.results["identity_telescoping"]["holds"] == true);
    CHECK(doc.results["identity_literal"]["holds"] == false);
    REQUIRE(doc.warnings.size() == 1);
    CHECK(doc.warnings[0].find("literal steadiness") != std::string::npos);

    const Run tel = run({"sigma", "--n", "5", "--mode", "telescoping"});
    CHECK(tel.report().warnings.empty());
}

TEST_CASE("exit codes") {
    CHECK(run({"sigma", "--n", "27", "--cap", "10"}).code == cli::kExitCapExceeded);
    CHECK(run({"sigma", "--n", "27", "--cap", "10"}).err.find("27") != std::string::npos);
    CHECK(run({"levels", "--nu", "3", "--bogus"}).code == cli::kExitUsage);
    CHECK(run({"levels", "--nu", "3", "--sigma0", "1/2"}).code == cli::kExitUsage);
    CHECK(run({"levels"}).code == cli::kExitUsage);
    CHECK(run({}).code == cli::kExitUsage);
    CHECK(run({"sigma", "--n", "0"}).code == cli::kExitUsage);
    CHECK(run({"sigma", "--n", "-4"}).code == cli::kExitUsage);
    CHECK(run({"sigma", "--n", "5", "--mode", "average"}).code == cli::kExitUsage);
    CHECK(run({"slots", "--nu", "5", "--sigma0", "3/2"}).code == cli::kExitUsage);
    CHECK(run({"slots", "--nu", "5", "--sigma0", "1/0"}).code == cli::kExitUsage);
    CHECK(run({"clusters", "--nu", "5", "--gap-factor", "1/1"}).code == cli::kExitUsage);
    CHECK(run({"sigma0", "--nu", "5", "--n", "10"}).code == cli::kExitUsage);
    CHECK(run({"sigma0", "--n", "10", "--resume"}).code == cli::kExitUsage);
    CHECK(run({"sigma0", "--n", "10", "--workers", "0"}).code == cli::kExitUsage);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("slots") {
    const Run bad = run({"slots", "--nu", "20", "--sigma0", "9/10"});
    CHECK(bad.code == cli::kExitVerificationFailed);
    CHECK(bad.report().results["contained"] == false);
    CHECK_FALSE(bad.report().results["outside"].empty());

    const Run good = run({"slots", "--nu", "20", "--sigma0", "5152/10000", "--emit-plot-data"});
    CHECK(good.code == 0);
    const auto res = good.report().results;
    CHECK(res["contained"] == true);
    CHECK(res["conditions"]["disjoint"] == true);
    CHECK(res["conditions"]["separated"] == true);
    CHECK(res["slots"].size() == 7);
    CHECK(res["slots"][0]["kappa"] == 6);
    CHECK(res["slots"][0]["upper"]["num"] == "16384");
    CHECK(res["slots"][0]["upper"]["den"] == "729");
    CHECK(res["plot_data"]["kappa_slot"].size() == 7);

    const Run scanned = run({"slots", "--nu", "20"});
    CHECK(scanned.code == 0);
    CHECK(scanned.report().results["sigma0_source"].get<std::string>().find("scanned") != std::string::npos);
}

TEST_CASE("clusters") {
    const Run r = run({"clusters", "--nu", "20", "--emit-plot-data"});
    REQUIRE(r.code == 0);
    const auto res = r.report().results;
    CHECK(res["by_kappa"]["sizes"] == nlohmann::json({2, 5, 15, 22, 19, 8, 1}));
    CHECK(res["by_gap"]["sizes"] == nlohmann::json({2, 5, 15, 22, 19, 8, 1}));
    CHECK(res["partitions_equal"] == true);
    CHECK(res["plot_data"]["element_cluster"].size() == 72);
    CHECK(res["plot_data"]["element_cluster"][0] == nlohmann::json({"18", 0}));

    const Run wide = run({"clusters", "--nu", "20", "--gap-factor", "1000000"});
    CHECK(wide.code == 0);
    CHECK(wide.report().results["partitions_equal"] == false);
    CHECK(wide.report().warnings.size() == 1);
}

TEST_CASE("verify --nu 25") {
    const Run r = run({"verify", "--nu", "25", "--seed", "42"});
    CHECK(r.code == 0);
    const auto res = r.report().results;
    CHECK(res["all_pass"] == true);
    CHECK(res["suites"]["identity_random"]["seed"] == 42);
    CHECK(res["suites"]["identity_random"]["samples"] == 10000);
    for (const char* s : {"recurrence", "level_consistency", "identity_levels", "domination_ceiling", "containment",
                          "slot_conditions", "clusters_agree"})
        CHECK(res["suites"][s]["pass"] == true);
}

TEST_CASE("sigma0 workers and resume") {
    TempDir dir;
    const Run one = run({"sigma0", "--n", "30000", "--workers", "1"});
    const Run four = run({"sigma0", "--n", "30000", "--workers", "4"});
    REQUIRE(one.code == 0);
    REQUIRE(four.code == 0);
    CHECK(one.report().results == four.report().results);
    CHECK(one.report().results["minima"].size() == 2);
    CHECK(one.report().results["minima"][0]["mode"] == "literal");
    CHECK_FALSE(one.report().warnings.empty());

    const std::string cp = (dir.path / "cp.json").string();
    REQUIRE(run({"sigma0", "--n", "12000", "--checkpoint", cp}).code == 0);
    const Run resumed = run({"sigma0", "--n", "30000", "--checkpoint", cp, "--resume"});
    REQUIRE(resumed.code == 0);
    CHECK(resumed.report().results["resumed"] == true);
    CHECK(resumed.report().results["minima"] == one.report().results["minima"]);
    CHECK(resumed.report().results["checkpoint"] == one.report().results["checkpoint"]);

    write_text_file(cp, "{}");
    CHECK(run({"sigma0", "--n", "30000", "--checkpoint", cp, "--resume"}).code == cli::kExitUsage);

    const Run levels = run({"sigma0", "--nu", "12", "--mode", "literal"});
    CHECK(levels.code == 0);
    CHECK(levels.report().results["domain"]["kind"] == "levels");
}

TEST_CASE("report goes to --out") {
    TempDir dir;
    const fs::path p = dir.path / "r.json";
    const Run r = run({"sigma", "--n", "7", "--out", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(parse_report(read_text_file(p)).results["n"] == "7");
}

TEST_CASE("level cache directory") {
    TempDir dir;
    ::setenv("COLLATZ_SLOTS_CACHE_DIR", dir.path.c_str(), 1);
    CHECK(run({"clusters", "--nu", "12"}).code == 0);
    CHECK(fs::exists(dir.path / "L12.levelset"));
    CHECK(fs::exists(dir.path / "L0.levelset"));
    CHECK(run({"clusters", "--nu", "12"}).code == 0);
    write_text_file(dir.path / "L12.levelset", "collatz-levelset v1 nu=12 count=1\n5\n");
    CHECK(run({"clusters", "--nu", "12"}).code == cli::kExitUsage);
    ::unsetenv("COLLATZ_SLOTS_CACHE_DIR");
}
