#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "moead/archive.hpp"
#include "moead/problems.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int status;
    std::string out;
};

Outcome cli(const std::string& args) {
    const std::string cmd = std::string(MOEAD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe)) out += buf;
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const fs::path kDir = fs::current_path() / "cli_test_work";
const std::string kFront = std::string(MOEAD_SOURCE_DIR) + "/data/fronts/WFG2.txt";

void write(const fs::path& p, const std::string& text) {
    fs::create_directories(p.parent_path());
    std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("igd of a front against itself is zero", "[cli]") {
    const Outcome o = cli("igd " + kFront + " " + kFront);
    CHECK(o.status == 0);
    CHECK(std::stod(o.out) == 0.0);
}

TEST_CASE("run is seed-deterministic and its output is auditable", "[cli]") {
    write(kDir / "run.json", R"({"problem": "MinusWFG2", "scalarizer": "TCH", "max_evaluations": 455, "seed": 3})");
    REQUIRE(cli("run " + (kDir / "run.json").string() + " -o " + (kDir / "a.json").string()).status == 0);
    REQUIRE(cli("run " + (kDir / "run.json").string() + " -o " + (kDir / "b.json").string()).status == 0);
    REQUIRE(cli("run " + (kDir / "run.json").string() + " --seed 4 -o " + (kDir / "c.json").string()).status == 0);
    CHECK(slurp(kDir / "a_archive.txt") == slurp(kDir / "b_archive.txt"));
    CHECK(slurp(kDir / "a_archive.txt") != slurp(kDir / "c_archive.txt"));

    // select with k >= archive size returns the archive unchanged.
    const auto archive = moead::read_solution_file((kDir / "a_archive.txt").string());
    REQUIRE(cli("select " + (kDir / "a_archive.txt").string() + " -k 100000 -o " + (kDir / "all.txt").string()).status == 0);
    const auto all = moead::read_solution_file((kDir / "all.txt").string());
    REQUIRE(all.size() == archive.size());
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].f == archive[i].f);

    // Selecting 91 from the archive reproduces the run's IGD.
    REQUIRE(cli("select " + (kDir / "a_archive.txt").string() + " -k 91 -o " + (kDir / "sel.txt").string()).status == 0);
    const std::string minus_front = std::string(MOEAD_SOURCE_DIR) + "/data/fronts/MinusWFG2.txt";
    const Outcome from_json = cli("igd " + (kDir / "a.json").string() + " " + minus_front);
    const Outcome from_sel = cli("igd " + (kDir / "sel.txt").string() + " " + minus_front);
    CHECK(from_json.status == 0);
    CHECK(from_json.out == from_sel.out);
}

TEST_CASE("stats compares two columns", "[cli]") {
    write(kDir / "a.csv", "igd\n0.1\n0.2\n0.15\n0.12\n");
    write(kDir / "b.csv", "igd\n0.3\n0.4\n0.35\n0.32\n");
    const Outcome o = cli("stats " + (kDir / "a.csv").string() + " " + (kDir / "b.csv").string() + " --column igd");
    CHECK(o.status == 0);
    CHECK(o.out.find("exact") != std::string::npos);
    CHECK(o.out.find("U 0") != std::string::npos);
}

TEST_CASE("fronts regenerates a shipped front", "[cli]") {
    REQUIRE(cli("fronts --problems WFG4 -o " + (kDir / "fronts").string()).status == 0);
    CHECK(slurp(kDir / "fronts" / "WFG4.txt") == slurp(std::string(MOEAD_SOURCE_DIR) + "/data/fronts/WFG4.txt"));
}

TEST_CASE("errors give nonzero exit codes", "[cli]") {
    CHECK(cli("").status != 0);
    CHECK(cli("bogus").status != 0);
    CHECK(cli("igd /nonexistent " + kFront).status != 0);
    write(kDir / "bad.json", R"({"problem": "WFG9"})");
    CHECK(cli("run " + (kDir / "bad.json").string() + " -o " + (kDir / "x.json").string()).status == 1);
    write(kDir / "unknown.json", R"({"popsize": 91})");
    CHECK(cli("run " + (kDir / "unknown.json").string() + " -o " + (kDir / "x.json").string()).status == 1);
    CHECK(cli("run " + (kDir / "run.json").string() + " --threads 0").status != 0);
}
