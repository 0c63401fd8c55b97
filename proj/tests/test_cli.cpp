// End-to-end tests of the command-line binary: output of the printing
// subcommands, exit codes, report files, and the work-bound guard.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#ifndef CLI_PATH
#error "CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("dickson printing") {
    auto r = run("dickson --q 2 --n 2 --i 1");
    CHECK(r.code == 0);
    CHECK(r.out == "x1^2 + x1*x2 + x2^2\n");
    CHECK(run("dickson --q 2 --n 2 --i 2").out == "1\n");
    CHECK(run("dickson --q 2 --n 2 --i -1").out == "0\n");
}

TEST_CASE("series printing") {
    auto r = run("series --alpha 1 --m 2 --q 2");
    CHECK(r.code == 0);
    CHECK(r.out == "1 + t + t^2 + t^3\n");
}

TEST_CASE("orbit counting") {
    auto r = run("orbits --alpha 2 --m 2 --q 2");
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
}

TEST_CASE("hilbert verification with JSON and CSV reports") {
    auto r = run("verify hilbert --alpha 2 --m 2 --q 2 --json /tmp/trinv_h.json --csv /tmp/trinv_h.csv");
    CHECK(r.code == 0);
    CHECK(r.out.find("EQUAL") != std::string::npos);

    auto j = nlohmann::json::parse(slurp("/tmp/trinv_h.json"));
    CHECK(j["equal"] == true);
    CHECK(j["q"] == 2);
    CHECK(j["m"] == 2);
    CHECK(j["totals"]["conjecture"] == "5");
    CHECK(j["totals"]["bruteforce"] == "5");
    CHECK(j["totals"]["orbits"] == 5);

    std::string csv = slurp("/tmp/trinv_h.csv");
    CHECK(csv.rfind("degree,conjecture,bruteforce,basis-count,match\n", 0) == 0);
    // every degree row must match
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);  // header
    int rows = 0;
    while (std::getline(lines, line)) {
        CHECK(line.substr(line.size() - 2) == ",1");
        ++rows;
    }
    CHECK(rows == 7);  // degrees 0..6 for n=2, q^m=4
}

TEST_CASE("basis verification") {
    auto r = run("verify basis --alpha 1,1 --m 2 --q 2 --json /tmp/trinv_b.json");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    auto j = nlohmann::json::parse(slurp("/tmp/trinv_b.json"));
    CHECK(j["invariant"] == true);
    CHECK(j["independent"] == true);
    CHECK(j["spans"] == true);
}

TEST_CASE("filtration verification") {
    auto r = run("verify filtration --n 2 --k 1 --m 2 --q 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("identity suites") {
    auto r = run("verify identities --q 2 --m 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("basis dump round-trips") {
    auto r = run("basis-dump --alpha 2 --m 2 --q 2 --json /tmp/trinv_d.json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(slurp("/tmp/trinv_d.json"));
    CHECK(j["count"] == 5);
    CHECK(j["elements"].size() == 5);
    for (const auto& e : j["elements"]) {
        CHECK(e.contains("recipe"));
        CHECK(e.contains("poly"));
        CHECK(e["degree"].get<long long>() >= 0);
    }
}

TEST_CASE("work bound refuses oversized jobs") {
    auto r = run("verify basis --alpha 3 --m 4 --q 3");
    CHECK(r.code == 2);
    auto r2 = run("orbits --alpha 1 --m 12 --q 3");
    CHECK(r2.code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").code == 2);
    CHECK(run("nonsense").code == 2);
    CHECK(run("series --alpha 1 --m 2 --q 6").code == 2);   // not a prime power
    CHECK(run("series --alpha 0,1 --m 2 --q 2").code == 2); // bad composition
    CHECK(run("verify hilbert --alpha 1,1,1,1 --m 2 --q 2").code == 2);  // rank > 3
}

TEST_CASE("config file supplies defaults") {
    {
        std::ofstream cfg("/tmp/trinv_cfg.ini");
        cfg << "q=2\nm=2\nalpha=2\n";
    }
    auto r = run("series --config /tmp/trinv_cfg.ini");
    CHECK(r.code == 0);
    CHECK(r.out.find("t^6") != std::string::npos);  // top degree for n=2, m=2, q=2
}
