#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(MCBOLTZ_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

using Table = std::vector<std::vector<std::string>>;

Table csv(const std::string& text) {
    Table t;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        std::vector<std::string> row;
        std::stringstream cells(line);
        for (std::string c; std::getline(cells, c, ',');) row.push_back(c);
        t.push_back(row);
    }
    return t;
}

std::size_t column(const Table& t, const std::string& name) {
    for (std::size_t i = 0; i < t.at(0).size(); ++i) {
        if (t[0][i] == name) return i;
    }
    FAIL("missing column " << name);
    return 0;
}

} // namespace

TEST_CASE("invalid configurations exit with code 2") {
    CHECK(run("eval-collision --N 0").code == 2);
    CHECK(run("eval-collision --N 8 --S 1 --L 5").code == 2);
    CHECK(run("eval-collision --N 8 --kernel vhs:1:1").code == 2);
    CHECK(run("eval-collision --N 8 --dim 4").code == 2);
    CHECK(run("eval-collision --N 8 --mapping cubic").code == 2);
    CHECK(run("evolve --N 8 --dt 0").code == 2);
    CHECK(run("evolve --N 8 --dim 3 --init two-gaussian").code == 2);
    CHECK(run("eval-collision --N 8 --Mv 9").code == 2);
    CHECK(run("eval-collision --bogus").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("BKW collision error at N = 16") {
    const Run r = run("eval-collision --dim 2 --N 16 --mapping log --L 8.83 --kernel maxwell2d");
    REQUIRE(r.code == 0);
    const Table t = csv(r.out);
    REQUIRE(t.size() == 2);
    CHECK(t[0][0] == "dim");
    const double l2 = std::stod(t[1][column(t, "l2")]);
    CHECK(l2 <= 2.2e-4);
    CHECK(std::stod(t[1][column(t, "L")]) == doctest::Approx(8.83));
    CHECK(std::stoi(t[1][column(t, "Mv")]) == 18);
    CHECK(std::stoi(t[1][column(t, "Msigma")]) == 16);
}

TEST_CASE("scale sweep has an interior minimum") {
    const Run r = run("eval-collision --N 16 --S 1,2,4,8");
    REQUIRE(r.code == 0);
    const Table t = csv(r.out);
    REQUIRE(t.size() == 5);
    const std::size_t c = column(t, "l2");
    std::vector<double> e;
    for (std::size_t i = 1; i < t.size(); ++i) e.push_back(std::stod(t[i][c]));
    const auto best = std::min_element(e.begin(), e.end()) - e.begin();
    CHECK(best > 0);
    CHECK(best < 3);
}

TEST_CASE("evolution traces") {
    const Run zero = run("evolve --N 8 --t-end 0");
    REQUIRE(zero.code == 0);
    const Table t0 = csv(zero.out);
    REQUIRE(t0.size() == 2);
    CHECK(t0[0][0] == "t");
    CHECK(t0[1][0] == "0");

    const Run orc = run("evolve --N 8 --t-end 0.04 --oracle two-gaussian");
    REQUIRE(orc.code == 0);
    const Table t = csv(orc.out);
    REQUIRE(t.size() == 4);
    for (const char* name : {"P11_err", "P12_err", "P22_err", "q1_err", "q2_err"}) {
        const std::size_t c = column(t, name);
        for (std::size_t i = 1; i < t.size(); ++i) CHECK(std::isfinite(std::stod(t[i][c])));
    }
    CHECK(t.back()[0] == "0.04");

    const auto dir = std::filesystem::temp_directory_path();
    const auto path = dir / "mcboltz_cli_trace.csv";
    REQUIRE(run("evolve --N 6 --t-end 0.02 --out " + path.string()).code == 0);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "t,rho,Ux,Uy,E,P11,P12,P22,q1,q2");
    std::filesystem::remove(path);
}

TEST_CASE("output is reproducible") {
    const std::string a = run("evolve --N 8 --t-end 0.1 --threads 2").out;
    const std::string b = run("evolve --N 8 --t-end 0.1 --threads 1").out;
    CHECK(!a.empty());
    CHECK(a == b);
    CHECK(run("eval-collision --N 8,10 --L 5").out == run("eval-collision --N 8,10 --L 5").out);
}

TEST_CASE("bench reports monotone timings and a slope") {
    const Run r = run("bench --dim 2 --N 8,16,32 --reps 3");
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc["results"].size() == 3);
    double prev = 0.0;
    for (const auto& e : doc["results"]) {
        const double m = e["median_seconds"].get<double>();
        CHECK(m > prev);
        prev = m;
        CHECK(e["seconds"].size() == 3);
    }
    CHECK(doc["slope"].is_number());

    const Run d = run("bench --dim 2 --N 32 --evaluator direct --reps 1");
    REQUIRE(d.code == 0);
    const auto dd = nlohmann::json::parse(d.out);
    CHECK(dd["results"][0]["error"] == "memory cap exceeded");
    CHECK(dd["results"][0]["needed_bytes"].get<double>() > dd["results"][0]["cap_bytes"].get<double>());
}

TEST_CASE("selftest") {
    const Run r = run("selftest --quick");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS nufft") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("d=3") == std::string::npos);
}

TEST_CASE("default two-Gaussian evolution keeps unit mass" * doctest::test_suite("long")) {
    const Run r = run("evolve --N 16");
    REQUIRE(r.code == 0);
    const Table t = csv(r.out);
    REQUIRE(t.size() == 252);
    CHECK(t.back()[0] == "5");
    const std::size_t c = column(t, "rho");
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(std::abs(std::stod(t[i][c]) - 1.0) <= 1e-8);
}
