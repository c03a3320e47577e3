#include "doctest.h"

#include "conchoid/algebra/parser.hpp"
#include "conchoid/cli/commands.hpp"
#include "conchoid/cli/plot.hpp"

#include "json.hpp"

#include <sstream>

using namespace conchoid::cli;
using conchoid::algebra::equal_up_to_scalar;
using conchoid::algebra::parse_polynomial;
using conchoid::core::PlaneCurve;

namespace {
struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}
} // namespace

TEST_CASE("curve parsing") {
    CHECK(parse_curve("x^2+y^2-z^2").degree() == 2);
    CHECK(parse_curve("x-2", conchoid::algebra::Field::Q, true).equation() == parse_polynomial("x-2*z"));
    CHECK_THROWS_AS(parse_curve("x-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve("x^2+"), conchoid::algebra::ParseError);
    CHECK_THROWS_AS(parse_curve("x*t"), std::invalid_argument);
    CHECK_THROWS_AS(parse_curve("x-z", conchoid::algebra::Field::Q, true), std::invalid_argument);
}

TEST_CASE("exit codes") {
    struct Case {
        std::vector<std::string> args;
        int code;
    };
    const std::vector<Case> matrix{
        {{"transform", "--B", "x^2+y^2-z^2", "--C", "x-2*z"}, kSuccess},
        {{"transform", "--C", "x^2+"}, kUsage},
        {{"transform", "--C", "x-2"}, kUsage},
        {{"--affine", "transform", "--C", "x-2"}, kSuccess},
        {{"transform"}, kUsage},
        {{"frobnicate"}, kUsage},
        {{}, kUsage},
        {{"transform", "--C", "z", "--B", "z^2"}, kUsage},
        {{"split", "--C", "(y+z)^2-(x^2+y^2)"}, kSuccess},
        {{"split", "--C", "x^2+y^2-4*z^2", "--center", "1,0"}, kNegative},
        {{"split", "--C", "x^6+y^6+z^6+x^5*z", "--center", "0,0"}, kNegative},
        {{"split", "--C", "x^2+y^2-z^2", "--center", "1"}, kUsage},
        {{"focus", "--C", "9*x^2+25*y^2-225*z^2", "--center", "4,0"}, kSuccess},
        {{"focus", "--C", "9*x^2+25*y^2-225*z^2", "--center", "3,0"}, kNegative},
        {{"focus", "--C", "x*y", "--center", "3,0"}, kUsage},
        {{"iterate", "--C", "x-3*z", "--n", "2"}, kSuccess},
        {{"iterate", "--C", "x-3*z", "--n", "0"}, kUsage},
        {{"recognize", "--D", "4*y^2*z^2+x^4+x^2*y^2-4*x^3*z-4*x*y^2*z+3*x^2*z^2"}, kSuccess},
        {{"recognize", "--D", "x^2+y^2-4*z^2"}, kNegative},
        {{"recognize", "--D", "x^2+y^2-4*z^2", "--mode", "sideways"}, kUsage},
        {{"recognize", "--D", "x^4+y^4+x*y*z^2+z^4+x^3*z", "--mode", "proper"}, kInconclusive},
        {{"split", "--C", "(x^2+y^2)^2*z-x^5"}, kInconclusive},
        {{"genus", "--d", "2", "--delta", "1"}, kSuccess},
        {{"genus", "--d", "0", "--delta", "1"}, kUsage},
        {{"eliminate", "--C", "x"}, kSuccess},
        {{"plot", "--curve", "x^2+y^2-z^2", "--window", "2,-2,-2,2"}, kUsage},
        {{"plot", "--curve", "x^2+y^2-z^2", "--grid", "4"}, kUsage},
        {{"verify", "--C", "x^2-y*z+3*z^2"}, kSuccess},
        {{"--field", "Qi", "transform", "--C", "x+i*y-z"}, kSuccess},
        {{"transform", "--C", "x+i*y-z"}, kUsage},
        {{"--field", "R", "transform", "--C", "x"}, kUsage},
    };
    for (const auto& c : matrix) {
        Run r = run(c.args);
        std::string joined;
        for (const auto& a : c.args) joined += a + " ";
        CAPTURE(joined);
        CAPTURE(r.err);
        CHECK(r.code == c.code);
        if (c.code == kUsage) CHECK_FALSE(r.err.empty());
    }
}

TEST_CASE("command output") {
    Run t = run({"transform", "--B", "x^2+y^2-z^2", "--C", "x-2*z"});
    CHECK(equal_up_to_scalar(parse_polynomial(t.out.substr(0, t.out.size() - 1)),
                             parse_polynomial("4*y^2*z^2+x^4+x^2*y^2-4*x^3*z-4*x*y^2*z+3*x^2*z^2")));
    Run p = run({"transform", "--B", "x^2+y^2-z^2", "--C", "x", "--proper", "--json"});
    auto j = nlohmann::json::parse(p.out);
    int base = 0, input = 0;
    for (const auto& c : j["components"]) {
        if (c["label"] == "base") base = c["mult"];
        if (c["label"] == "input") input = c["mult"];
    }
    CHECK(base == 1);
    CHECK(input == 2);
    CHECK(run({"genus", "--d", "2", "--delta", "1"}).out == "degree 4, genus 0\n");
    CHECK(run({"genus", "--d", "2", "--delta", "2", "--gamma", "0"}).out == "degree 8, genus 1\n");
    auto r = nlohmann::json::parse(run({"--json", "recognize", "--D", "4*y^2*z^2+x^4+x^2*y^2-4*x^3*z-4*x*y^2*z+3*x^2*z^2"}).out);
    CHECK(r["verdict"] == "yes");
    CHECK(r["candidates"][0]["r2"] == "1");
    CHECK(r["candidates"][0]["witness"] == "x-2*z");
}

TEST_CASE("plots") {
    PlotSpec spec;
    spec.grid = 64;
    Plot circle = render_svg(parse_curve("x^2+y^2-z^2"), spec);
    CHECK(circle.segments > 0);
    CHECK(circle.svg.find("<path") != std::string::npos);
    CHECK(render_svg(parse_curve("x^2+y^2-z^2"), spec).svg == circle.svg);
    Plot empty = render_svg(PlaneCurve(parse_polynomial("1")), spec);
    CHECK(empty.segments == 0);
    CHECK(empty.svg.find("<path") == std::string::npos);
    spec.xmin = -1;
    spec.xmax = 5;
    spec.ymin = -3;
    spec.ymax = 3;
    Plot quartic = render_svg(parse_curve("4*y^2*z^2+x^4+x^2*y^2-4*x^3*z-4*x*y^2*z+3*x^2*z^2"), spec);
    CHECK(quartic.segments > 0);
    spec.xmax = -1;
    CHECK_THROWS_AS(render_svg(parse_curve("x"), spec), std::invalid_argument);
    Run a = run({"plot", "--C", "x-2*z", "--window", "-1,5,-3,3", "--grid", "48"});
    Run b = run({"plot", "--C", "x-2*z", "--window", "-1,5,-3,3", "--grid", "48"});
    CHECK(a.code == kSuccess);
    CHECK(a.out == b.out);
}
