#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "origami/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "origami");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = origami::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const std::string L = "n=3; h=(1,2); v=(1,3)";
const std::string W = "n=8; h=(1,2,3,4)(5,6,7,8); v=(1,5,3,7)(2,8,4,6)";

}  // namespace

TEST(Cli, SumOfLShapedOrigami) {
    const auto r = run({"sum", L});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "4/3\n");
}

TEST(Cli, HyperellipticFormula) {
    const auto r = run({"formulas", "hyp-abelian", "--genus", "3", "--component", "single_zero"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "9/5\n");
}

TEST(Cli, StratumOfTorus) {
    const auto r = run({"stratum", "n=1; h=(); v=()"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("signature ()"), std::string::npos);
    EXPECT_NE(r.out.find("genus 1"), std::string::npos);
}

TEST(Cli, OrbitJson) {
    const auto r = run({"--json", "orbit", W});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["orbit_size"], 1);
    EXPECT_EQ(j["stratum"], (std::vector<int>{1, 1, 1, 1}));
    EXPECT_EQ(j["svc"], "1/2");
    EXPECT_EQ(j["sum"], "1");
    EXPECT_EQ(j["cusp_widths"], std::vector<int>{1});
    EXPECT_EQ(run({"--json", "orbit", W}).out, r.out);
}

TEST(Cli, Svc) {
    const auto r = run({"svc", L});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("svc 10/9"), std::string::npos);
    EXPECT_NE(r.out.find("pi2_c 10/3"), std::string::npos);
}

TEST(Cli, MonteCarloJsonIsReproducible) {
    const auto a = run({"--json", "mc", L, "--steps", "20000", "--seed", "4"});
    ASSERT_EQ(a.code, 0) << a.err;
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["exponents"].size(), 2u);
    EXPECT_EQ(j["steps"], 20000);
    EXPECT_EQ(j["seed"], 4);
    EXPECT_TRUE(j.contains("stderr"));
    EXPECT_TRUE(j.contains("cf_digit_resamples"));
    EXPECT_EQ(run({"--json", "mc", L, "--steps", "20000", "--seed", "4"}).out, a.out);
    const auto reps = run({"--json", "mc", L, "--steps", "20000", "--replicas", "2"});
    EXPECT_EQ(nlohmann::json::parse(reps.out)["steps"], 40000);
}

TEST(Cli, Enumerate) {
    const auto r = run({"enumerate", "--squares", "3", "--stratum", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("summary 1 orbits"), std::string::npos);
    EXPECT_NE(r.out.find("size 3"), std::string::npos);
    const auto j = nlohmann::json::parse(run({"--json", "enumerate", "--squares", "4"}).out);
    std::size_t total = 0;
    for (const auto& orb : j["orbits"]) total += orb["orbit_size"].get<std::size_t>();
    EXPECT_GT(total, 0u);
    EXPECT_EQ(run({"enumerate", "--squares", "12"}).code, 2);
}

TEST(Cli, Formulas) {
    EXPECT_EQ(run({"formulas", "kappa", "--abelian", "1,1,1,1"}).out, "1/2\n");
    EXPECT_EQ(run({"formulas", "kappa", "--quadratic=-1^4"}).out, "-1/2\n");
    EXPECT_EQ(run({"formulas", "odd-defect", "--quadratic", "2,1,1"}).out, "1/6\n");
    EXPECT_EQ(run({"formulas", "positivity", "--kind", "abelian_general", "--genus", "7"}).out, "2\n");
    EXPECT_EQ(run({"formulas", "nondegenerate", "--quadratic=1,-1^5"}).out, "true\n");
    const auto g0 = run({"formulas", "genus0", "--quadratic=1,-1^5"});
    EXPECT_NE(g0.out.find("pi2_c 5/3"), std::string::npos);
    EXPECT_NE(g0.out.find("lambda_minus_sum 4/3"), std::string::npos);
    const auto hq = nlohmann::json::parse(run({"--json", "formulas", "hyp-quadratic", "--family", "F2", "--genus", "2", "--k", "0"}).out);
    EXPECT_EQ(hq["sum"], "4/3");
    EXPECT_EQ(hq["g_eff"], 2);
    const auto dc = run({"formulas", "double-cover", "--quadratic", "2,1,1"});
    EXPECT_NE(dc.out.find("cover (1,1,2,2)"), std::string::npos);
    EXPECT_NE(dc.out.find("g_hat 4"), std::string::npos);
    const auto qs = run({"formulas", "quadratic-sums", "--quadratic=-1^4", "--svc", "1/2"});
    EXPECT_NE(qs.out.find("plus_sum 0"), std::string::npos);
    EXPECT_NE(qs.out.find("minus_sum 1"), std::string::npos);
    const auto info = run({"formulas", "info", "--quadratic", "3,1"});
    EXPECT_NE(info.out.find("known_empty true"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    const auto bad = run({"stratum", "n=3; h=(1,2); v=(1,4)"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("symbol 4 out of range"), std::string::npos);
    EXPECT_EQ(run({"stratum", "n=3; h=(1,2); v=(1,2)"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"formulas", "kappa", "--abelian", "1"}).code, 2);
    EXPECT_EQ(run({"formulas", "positivity", "--kind", "abelian_general", "--genus", "3"}).code, 2);
    EXPECT_EQ(run({"mc", L, "--steps", "10"}).code, 2);
    EXPECT_EQ(run({"formulas", "quadratic-sums", "--quadratic=-1^4", "--svc", "1/3"}).code, 3);
    EXPECT_EQ(run({"--help"}).code, 0);
}
