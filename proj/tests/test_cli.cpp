#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "vecinv/parser.hpp"

using namespace vecinv;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented invocations") {
    Outcome golden = run({"inv-curl", "--coords", "cartesian", "x*y*z + y^2", "x*z + y", "-z - y*z^2/2"});
    CHECK(golden.code == cli::kExitOk);
    CHECK(golden.out.find("e1: x*z^2/4 + y^2*z^2/12 + 2*y*z/3") != std::string::npos);
    CHECK(golden.out.find("e2: -x*y*z^2/3 - x*z/3 - y^2*z/2") != std::string::npos);
    CHECK(golden.out.find("e3: -x^2*z/4 + x*y^2*z/6 - x*y/3 + y^3/6") != std::string::npos);

    Outcome div = run({"inv-curl", "x", "0", "0"});
    CHECK(div.code == cli::kExitPrecondition);
    CHECK(div.err.find("NotSolenoidal") != std::string::npos);
    CHECK(div.err.find("residual: 1") != std::string::npos);

    Outcome grad = run({"inv-grad", "--base", "0,0,0", "2*x*y", "x^2", "1"});
    CHECK(grad.code == cli::kExitOk);
    CHECK(grad.out.find("phi: x^2*y + z") != std::string::npos);
}

TEST_CASE("forward operators") {
    CHECK(run({"div", "--coords", "cylindrical", "rho", "0", "0"}).out.find("2") != std::string::npos);
    Outcome c = run({"curl", "-y", "x", "0"});
    CHECK(c.code == 0);
    CHECK(c.out.find("e3: 2") != std::string::npos);
    CHECK(run({"grad", "--coords", "spherical", "r^2"}).out.find("e1: 2*r") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"inv-curl", "x +", "0", "0"}).code == cli::kExitUsage);
    CHECK(run({"inv-curl", "x", "0"}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"inv-curl", "--coords", "toroidal", "0", "0", "0"}).code == cli::kExitUsage);
    CHECK(run({"inv-curl", "q", "0", "0"}).code == cli::kExitUsage);
    CHECK(run({"inv-div", "--weights", "1,1,1", "x"}).code == cli::kExitUsage);
    CHECK(run({"inv-grad", "-y", "x", "0"}).code == cli::kExitPrecondition);
    CHECK(run({"inv-grad", "x^-1", "0", "0"}).code == cli::kExitPrecondition);
    CHECK(run({"inv-grad", "ln(x)", "0", "0"}).code == cli::kExitNotIntegrable);
    CHECK(run({"inv-div", "sin(x*y)"}).code == cli::kExitNotIntegrable);
}

TEST_CASE("json output reparses") {
    Outcome o = run({"inv-curl", "--format", "json", "--verify", "y", "z", "x"});
    REQUIRE(o.code == 0);
    auto j = nlohmann::json::parse(o.out);
    CHECK(j["command"] == "inv-curl");
    CHECK(j["coords"]["name"] == "cartesian");
    REQUIRE(j["result"].size() == 3);
    CHECK(equals(parse(j["result"][0].get<std::string>()), parse("z^2/4 - x*y/2")));
    CHECK(j["verification"]["symbolic_equal"] == true);
    CHECK(j["verification"]["rng_seed"] == 42);
    CHECK(j["error"].is_null());

    Outcome bad = run({"--format", "json", "inv-curl", "x", "0", "0"});
    if (bad.code == cli::kExitUsage) bad = run({"inv-curl", "--format", "json", "x", "0", "0"});
    CHECK(bad.code == cli::kExitPrecondition);
    auto e = nlohmann::json::parse(bad.out);
    CHECK(e["error"]["kind"] == "NotSolenoidal");
    CHECK(e["error"]["residual"][0] == "1");

    auto src = nlohmann::json::parse(run({"grad", "--format", "json", "x +"}).out);
    CHECK(src["error"]["kind"] == "SourceError");
    CHECK(src["error"]["offset"] == 3);
}

TEST_CASE("seeded verification output is stable") {
    std::vector<std::string> args{"verify", "inv-div", "--coords", "spherical", "--seed", "9", "--format", "json",
                                  "r*theta"};
    Outcome a = run(args);
    Outcome b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["verification"]["rng_seed"] == 9);
}

TEST_CASE("gauge options and unchecked mode") {
    Outcome g = run({"inv-curl", "--gauge-scalar", "x*y", "y", "z", "x"});
    CHECK(g.code == 0);
    CHECK(g.out.find("e1: -x*y/2 + y + z^2/4") != std::string::npos);

    Outcome u = run({"inv-curl", "--unchecked", "x", "0", "0"});
    CHECK(u.code == 0);
    CHECK(u.out.find("residual") != std::string::npos);

    CHECK(run({"inv-div", "--gauge-vector", "y,z,x", "3"}).code == 0);
}

TEST_CASE("custom coordinates from a file") {
    const std::string path = "test_cli_coords.txt";
    {
        std::ofstream f(path);
        f << "names = s, t, h\nh1 = 1\nh2 = s\nh3 = 1\nbase = 1, 0, 0\nbox = 0.5:2, 0.1:3, -2:2\n";
    }
    Outcome o = run({"div", "--coords-file", path, "s", "0", "0"});
    std::remove(path.c_str());
    CHECK(o.code == 0);
    CHECK(o.out.find("2") != std::string::npos);
    CHECK(run({"div", "--coords-file", "/nonexistent", "s", "0", "0"}).code == cli::kExitUsage);
}
