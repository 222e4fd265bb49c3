#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#include "cdr/monodromy.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string &args) {
    Run r;
    std::string cmd = std::string(CDR_BINARY) + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json run_json(const std::string &args) {
    Run r = run(args);
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.at("schema_version") == 1);
    return j.at("result");
}

}  // namespace

TEST_CASE("enumerate") {
    CHECK(run_json("enumerate subgroups --delta 2 --q 1").at("count") == 5);
    CHECK(run_json("enumerate graphs --g 1 --n 1 --d 0").at("count") == 2);
    // One cone per element of the right kernel of each monodromy graph.
    cdr::TorsionAmbient amb{2, 2};
    std::size_t expected = 0;
    for (const auto &k : cdr::enumerate_subgroups(amb))
        for (const auto &mg : cdr::enumerate_strata(1, 2, 1, amb, k)) expected += cdr::enumerate_corr0_cones(mg).size();
    CHECK(run_json("enumerate cones --g 1 --n 2 --d 1 --delta 2 --q 1").at("count") == expected);
}

TEST_CASE("dr") {
    auto r = run_json("dr --g 1 --a 2,-2 --d 1 --delta 2 --q 1");
    CHECK(r.at("gluing") == true);
    auto t = run("dr --g 1 --a 2,-2 --d 1 --delta 2 --q 1 --trunc 0 --format text");
    CHECK(t.code == 0);
    CHECK(t.out.find("psi") == std::string::npos);
    CHECK(t.out.find("*l") == std::string::npos);
    CHECK(run("dr --g 1 --a 3,-3 --d 1 --delta 2 --q 1").code == 3);
}

TEST_CASE("output does not depend on the thread count") {
    auto a = run("dr --g 1 --a 2,-2 --d 1 --delta 2 --q 1 --jobs 1");
    auto b = run("dr --g 1 --a 2,-2 --d 1 --delta 2 --q 1 --jobs 4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("invariants and verify") {
    auto csv = run("invariants --a 2,-2 --delta 2 --g 1 --d 2 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("g,d,delta,a,N,N0,source\n", 0) == 0);
    CHECK(csv.out.find("1,2,2,2;-2,24/1,12/1,subgroup_sum") != std::string::npos);
    CHECK(run("verify moebius").code == 0);
    CHECK(run("verify elliptic --format text").code == 0);
}

TEST_CASE("errors and help") {
    CHECK(run("").code == 2);
    CHECK(run("enumerate graphs --format csv").code == 2);
    CHECK(run("enumerate bogus").code == 2);
    CHECK(run("invariants --a 2,-1").code == 3);
    CHECK(run("enumerate subgroups --delta 4 --q 4 --cap 100").code == 5);
    auto help = run("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("Exit codes") != std::string::npos);
}

TEST_CASE("config file") {
    const std::string path = "cdr_cli_test.toml";
    {
        std::ofstream f(path);
        f << "[enumerate]\ndelta=3\nq=1\n";
    }
    CHECK(run_json("--config " + path + " enumerate subgroups").at("count") == 6);
    std::remove(path.c_str());
}
