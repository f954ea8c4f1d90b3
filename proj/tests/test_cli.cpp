#include "command.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace {
CommandResult quiet(const std::string& args) { return run_command(kit(args) + " 2>/dev/null"); }
} // namespace

TEST_SUITE("cli") {

TEST_CASE("fam")
{
    auto r = quiet(R"x(fam rank "prod(schreier, cube(3,3))")x");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "w*3+1\n");
    r = quiet(R"x(fam rank S2 --format json)x");
    CHECK(r.out == "{\"family\":\"S2\",\"rank\":\"w^2+1\",\"rule_derived\":false}\n");
    r = quiet(R"x(fam maximal schreier "{3,4,5}")x");
    CHECK(r.out == "{\"set\":[3,4,5],\"maximal\":true}\n");
    r = quiet(R"x(fam member S2 "{1,2}")x");
    CHECK(r.out == "{\"set\":[1,2],\"member\":false}\n");
    r = quiet(R"x(fam enum schreier --bound 4)x");
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 8);
    r = quiet(R"x(fam enum "cube(2,2)" --bound 4 --format csv)x");
    CHECK(r.out == "\n2\n3\n4\n2 3\n2 4\n3 4\n");
    r = quiet(R"x(fam parse "restrict(schreier, powers(2))")x");
    CHECK(r.out == "{\"family\":\"restrict(schreier, powers(2))\"}\n");
}

TEST_CASE("theta")
{
    auto r = quiet(R"x(theta eval --s "{2,5,8}" --t "{2,3,5,8,9}")x");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["inner"] == 2);
    CHECK(j["theta"] == 1);
    CHECK(r.out.rfind("{\"inner\":2,\"theta\":1,", 0) == 0);
    r = quiet(R"x(theta decompose "{2,3,4}")x");
    CHECK(r.out == "{\"t\":[2,3,4],\"blocks\":[[2,3],[4]]}\n");
}

TEST_CASE("compacta and tree")
{
    auto r = quiet("compacta matrix --alpha 1 --rows 2 --cols 2");
    CHECK(r.out == ",,1,2\n,1,1,1\n1,1,0,1\n2,1,1,0\n");
    r = quiet("compacta matrix --alpha 1 --rows 2 --cols 2 --format pbm");
    CHECK(r.out == "P1\n3 3\n1 1 1\n1 0 1\n1 1 0\n");
    r = quiet(R"x(compacta witness --s0 "{1}" --s1 "{2}")x");
    CHECK(r.out == "{\"t\":[1],\"in_s2\":true,\"theta0\":0,\"theta1\":1}\n");
    r = quiet(R"x(compacta search --t0 "{2,3}" --t1 "{2,4}" --bound 8)x");
    CHECK(r.out == "{\"s\":[3]}\n");
    r = quiet("compacta inject --mode L --rows 8 --cols 10");
    CHECK(nlohmann::json::parse(r.out.substr(0, r.out.find('\n')))["injective"] == true);
    r = quiet(R"x(tree check --n 2 --s "{3}" --m 5)x");
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.out)["value"] == "-1");
    r = quiet("tree sweep --max-n 3 --bound 6 --m-bound 7 --seeds 5");
    CHECK(r.exit_code == 0);
}

TEST_CASE("output file")
{
    const std::string path = "cli_test_matrix.csv";
    std::remove(path.c_str());
    auto r = quiet("compacta matrix --alpha 1 --rows 2 --cols 2 --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == ",,1,2\n,1,1,1\n1,1,0,1\n2,1,1,0\n");
    std::remove(path.c_str());
}

TEST_CASE("errors and exit codes")
{
    CHECK(quiet("").exit_code == 2);
    CHECK(quiet("nonsense").exit_code == 2);
    CHECK(quiet("fam").exit_code == 2);
    CHECK(quiet("fam rank --bogus S2").exit_code == 2);
    CHECK(quiet(R"x(fam rank "prod(schreier)")x").exit_code == 2);
    CHECK(quiet(R"x(theta decompose "{1,2}")x").exit_code == 2);
    CHECK(quiet(R"x(theta eval --s "{1}" --t "{1,2}")x").exit_code == 2);
    CHECK(quiet("verify --suite no.such.suite").exit_code == 2);
    CHECK(quiet("compacta matrix --format nope").exit_code == 2);
    CHECK(quiet(R"x(fam rank "restrict(schreier, {1,2})")x").exit_code == 2);
    const auto r = run_command(kit(R"x(fam parse "prod(schreier)")x") + " 2>&1");
    CHECK(r.out.find("offset 14") != std::string::npos);
}

TEST_CASE("verify")
{
    const auto r = quiet("verify --max 6");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j["passed"] == true);
        ++count;
    }
    CHECK(count == 25);
    const auto one = quiet("verify --suite finset.interval");
    CHECK(one.out.rfind("{\"suite\":\"finset.interval\",", 0) == 0);
}

}
