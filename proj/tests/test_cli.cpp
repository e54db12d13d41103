#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "wright/cli/cli.hpp"

using namespace wright;
using wright::cli::Json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args)
{
    args.insert(args.begin(), {"--format", "json"});
    Outcome o = run(args);
    EXPECT_EQ(o.code, 0) << o.err;
    return Json::parse(o.out);
}

Real real_of(const Json& j) { return Real(j.get<std::string>()); }

} // namespace

TEST(Cli, CoeffsRationalTextDump)
{
    Outcome o = run({"coeffs", "psi01", "a=1/2", "b=5/4", "J=10", "--rational"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto& ref = reference::table1();
    for (const auto& c : ref) {
        EXPECT_NE(o.out.find(" " + c + "\n"), std::string::npos) << c;
    }
    Json j = run_json({"coeffs", "psi01", "a=1/2", "b=5/4", "J=10", "--rational"});
    ASSERT_EQ(j["c"].size(), 10u);
    for (std::size_t k = 0; k < 10; ++k) {
        EXPECT_EQ(j["c"][k]["c"].get<std::string>(), ref[k]);
    }
}

TEST(Cli, CoeffsHalfSigmaMatchClosedForm)
{
    Json j = run_json({"--prec", "40", "coeffs", "psi10", "sigma=1/2", "b=5/4", "J=10"});
    WorkingPrecision wp(40);
    Complex A0 = aj_half_closed(Rational(5, 4), 0);
    for (std::size_t k = 1; k <= 10; ++k) {
        Real c = real_of(j["c"][k - 1]["c"]["re"]);
        Real want = (aj_half_closed(Rational(5, 4), k) / A0).re;
        EXPECT_LT(to_double(abs(c / want - 1)), 1e-35) << k;
    }
}

TEST(Cli, CoeffsSigmaSixthColumn)
{
    Json j = run_json({"coeffs", "psi10", "sigma=1/6", "b=5/4", "J=10"});
    const auto& col = reference::table4()[0];
    for (std::size_t k = 1; k <= 10; ++k) {
        double got = to_double(real_of(j["c"][k - 1]["c"]["re"]));
        double want = std::stod(col.c[k - 1]);
        EXPECT_NEAR(got / want, 1.0, 1e-11) << k;
    }
}

TEST(Cli, EvalAtOrigin)
{
    Json j = run_json({"eval", "a=0.5", "b=1.25", "x=0"});
    WorkingPrecision wp(40);
    Real v = real_of(j["value"]["re"]);
    EXPECT_LT(to_double(abs(v * gamma(Real(5) / 4) - 1)), 1e-38);
    EXPECT_TRUE(j["plan"].is_null());
}

TEST(Cli, EvalBothOnNegativeAxis)
{
    Json j = run_json({"eval", "a=-0.5", "b=1", "x=-10", "method=both"});
    EXPECT_EQ(j["plan"]["regime"], "negative-axis");
    WorkingPrecision wp(40);
    EXPECT_LE(to_double(real_of(j["discrepancy"]["absolute"])), 1e-21);
    Real s = real_of(j["series"]["value"]["re"]);
    EXPECT_LT(to_double(abs(s / Real("1.5374597944e-12") - 1)), 1e-10);
}

TEST(Cli, EvalPlanInDoubleBand)
{
    Outcome o = run({"--format", "json", "eval", "a=\xe2\x88\x92" "1/3", "b=5/4", "modulus=10",
                     "angle=0.40\xcf\x80", "method=asym"});
    ASSERT_EQ(o.code, 0) << o.err;
    Json j = Json::parse(o.out);
    EXPECT_EQ(j["plan"]["flags"], "(0,1,0)");
    EXPECT_EQ(j["components"].size(), 1u);
    EXPECT_EQ(j["components"][0]["name"], "E-");
}

TEST(Cli, EvalWrightFunction)
{
    Json j = run_json({"eval", "fn=psi10", "sigma=1/3", "delta=1/2", "modulus=6", "angle=pi/2", "method=both"});
    EXPECT_EQ(j["plan"]["regime"], "exponential-algebraic");
    EXPECT_LT(to_double(real_of(j["discrepancy"]["relative"])), 0.05);
}

TEST(Cli, JsonRoundTripIsByteIdentical)
{
    std::vector<std::vector<std::string>> cmds = {
        {"--format", "json", "eval", "a=-1/3", "b=5/4", "modulus=10", "angle=0.25pi", "method=both"},
        {"--format", "json", "coeffs", "psi01", "a=3", "b=1/2", "J=6"},
        {"--format", "json", "sector", "sigma=1/6", "theta=0,0.25pi,0.75pi"},
        {"--format", "json", "table", "1"},
    };
    for (const auto& c : cmds) {
        Outcome o = run(c);
        ASSERT_EQ(o.code, 0) << o.err;
        EXPECT_EQ(Json::parse(o.out).dump(2) + "\n", o.out);
        // fixed configuration, fixed output
        EXPECT_EQ(run(c).out, o.out);
    }
}

TEST(Cli, SectorExamples)
{
    Json j = run_json({"sector", "sigma=1/6", "theta=0,0.25pi,0.75pi"});
    ASSERT_EQ(j["sectors"].size(), 3u);
    EXPECT_EQ(j["sectors"][0]["flags"], "(1,1,1)");
    EXPECT_EQ(j["sectors"][1]["flags"], "(1,1,0)");
    EXPECT_EQ(j["sectors"][2]["flags"], "(0,1,0)");

    j = run_json({"sector", "sigma=2/3", "theta=0"});
    EXPECT_EQ(j["sectors"][0]["flags"], "(0,0,1)");

    j = run_json({"sector", "a=3", "b=1", "theta=0"});
    const Json& s = j["sectors"][0];
    EXPECT_EQ(s["N"], 1);
    int exps = 0;
    for (const auto& c : s["components"]) {
        exps += c["name"].get<std::string>().rfind("E(", 0) == 0;
    }
    EXPECT_EQ(exps, 3);
}

TEST(Cli, SectorFlagsBorderline)
{
    Json j = run_json({"sector", "sigma=1/6", "theta=1/6pi"});
    EXPECT_TRUE(j["sectors"][0]["borderline"].get<bool>());
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"--prec", "8", "eval", "a=1", "b=1", "x=1"}).code, 1);
    EXPECT_EQ(run({"--format", "xml", "eval", "a=1", "b=1", "x=1"}).code, 1);
    EXPECT_EQ(run({"eval", "a=1", "b=1", "x=1", "colour=red"}).code, 1);
    EXPECT_EQ(run({"eval", "a=1", "b=1", "modulus=1", "angle=0.3"}).code, 1);
    EXPECT_EQ(run({"eval", "a=1", "b=1"}).code, 1);
    EXPECT_EQ(run({"table", "7"}).code, 1);

    Outcome d = run({"eval", "a=-2", "b=1", "x=1"});
    EXPECT_EQ(d.code, 2);
    EXPECT_NE(d.err.find("a > -1"), std::string::npos);
    EXPECT_EQ(run({"eval", "a=1/2", "b=1", "x=0", "method=asym"}).code, 2);
    EXPECT_EQ(run({"eval", "fn=psi10", "sigma=2", "delta=1", "x=1"}).code, 2);

    Outcome b = run({"eval", "a=-1/6", "b=5/4", "modulus=15", "angle=1/6pi", "method=asym"});
    EXPECT_EQ(b.code, 3);
    EXPECT_NE(b.err.find("Stokes"), std::string::npos);
    EXPECT_EQ(run({"--force-borderline", "eval", "a=-1/6", "b=5/4", "modulus=15", "angle=1/6pi", "method=asym"}).code,
              0);
}

TEST(Cli, TableMismatchListsOffenders)
{
    // Cutting the negative-axis sum at M = 2 spoils the R- column.
    Outcome o = run({"--M", "2", "table", "3"});
    EXPECT_EQ(o.code, 4);
    EXPECT_NE(o.err.find("R-_M"), std::string::npos);
    EXPECT_EQ(o.err.find("0Psi1(-x)"), std::string::npos);
}

TEST(Cli, TablesOneToFourReproduce)
{
    for (const char* id : {"1", "2", "3", "4"}) {
        Outcome o = run({"table", id});
        EXPECT_EQ(o.code, 0) << "table " << id << "\n" << o.err;
        EXPECT_EQ(o.out.rfind("row,parameters,quantity,expected,computed,rel_error,match,note\r\n", 0), 0u);
    }
}

TEST(Cli, CsvQuoting)
{
    EXPECT_EQ(cli::detail::csv_field("plain"), "plain");
    EXPECT_EQ(cli::detail::csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(cli::detail::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(cli::detail::csv_field("two\nlines"), "\"two\nlines\"");
    cli::Grid g{{"x", "y"}, {{"1", "p,q"}}};
    std::ostringstream os;
    cli::detail::write_csv(os, g);
    EXPECT_EQ(os.str(), "x,y\r\n1,\"p,q\"\r\n");
}

TEST(Cli, AngleSpellings)
{
    using cli::detail::angle_arg;
    EXPECT_EQ(angle_arg("t", "pi"), Rational(1));
    EXPECT_EQ(angle_arg("t", "-pi"), Rational(-1));
    EXPECT_EQ(angle_arg("t", "0.25pi"), Rational(1, 4));
    EXPECT_EQ(angle_arg("t", "1/3pi"), Rational(1, 3));
    EXPECT_EQ(angle_arg("t", "pi/3"), Rational(1, 3));
    EXPECT_EQ(angle_arg("t", "2*pi/5"), Rational(2, 5));
    EXPECT_EQ(angle_arg("t", "0"), Rational(0));
    EXPECT_THROW(angle_arg("t", "0.5"), cli::UsageError);
    EXPECT_THROW(angle_arg("t", "pix"), cli::UsageError);
}

TEST(Cli, ConfigFileAndFlagPrecedence)
{
    std::string path = ::testing::TempDir() + "wrightfn_test.cfg";
    {
        std::ofstream f(path);
        f << "prec=20\nformat=json\n";
    }
    Outcome a = run({"--config", path, "eval", "a=1", "b=1", "x=1"});
    ASSERT_EQ(a.code, 0) << a.err;
    Json j = Json::parse(a.out);
    EXPECT_EQ(j["inputs"]["digits"], 20);
    Outcome b = run({"--config", path, "--prec", "30", "eval", "a=1", "b=1", "x=1"});
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(Json::parse(b.out)["inputs"]["digits"], 30);
    std::remove(path.c_str());
}
