#include "cmdihedral/cli.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;
namespace cli = cmdihedral::cli;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> const & args)
{
    std::ostringstream out, err;
    int const code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(std::string const & name, std::string const & text)
{
    std::string const path = ::testing::TempDir() + name;
    std::ofstream(path, std::ios::binary) << text;
    return path;
}

}  // namespace

TEST(Cli, ClassGroup)
{
    CliRun const r23 = run({"classgroup", "--disc", "-23"});
    ASSERT_EQ(r23.code, 0) << r23.err;
    json const j = json::parse(r23.out);
    EXPECT_EQ(j["class_number"], 3);
    EXPECT_EQ(j["structure"], json::array({3}));
    EXPECT_EQ(json::parse(run({"classgroup", "--disc", "-71"}).out)["class_number"], 7);
    json const j4 = json::parse(run({"classgroup", "--disc", "-4"}).out);
    EXPECT_EQ(j4["class_number"], 1);
    EXPECT_TRUE(j4["structure"].empty());
    EXPECT_EQ(run({"classgroup", "--disc", "-12"}).code, 2);
    EXPECT_EQ(run({"classgroup"}).code, 2);
}

TEST(Cli, Predict)
{
    json const a = json::parse(run({"predict", "--disc", "-23", "--ell", "23", "--weight", "12", "--cond-norm", "1"}).out);
    EXPECT_EQ(a["n_prime"], 529);
    EXPECT_EQ(a["ell_relation"], "2k-1");
    json const b =
        json::parse(run({"predict", "--disc", "-71", "--ell", "7", "--weight", "2", "--cond-norm", "5041"}).out);
    EXPECT_EQ(b["n_prime"], 5041);
    json const c = json::parse(run({"predict", "--disc", "-23", "--ell", "23", "--weight", "13", "--cond-norm", "1"}).out);
    EXPECT_EQ(c["ell_relation"], "2k-3");
    // split ell keeps N' = N(rho)
    json const d = json::parse(run({"predict", "--disc", "-23", "--ell", "13", "--weight", "2", "--cond-norm", "46"}).out);
    EXPECT_EQ(d["n_prime"], 46);
    EXPECT_EQ(run({"predict", "--disc", "-23", "--ell", "23", "--weight", "23", "--cond-norm", "1"}).code, 2);
    EXPECT_EQ(run({"predict", "--disc", "-23", "--ell", "23", "--weight", "12", "--cond-norm", "x"}).code, 2);
}

TEST(Cli, Tau)
{
    json const j = json::parse(run({"tau", "--prec", "6"}).out);
    EXPECT_EQ(j["coefficients"], json({"1", "-24", "252", "-1472", "4830", "-6048"}));
    EXPECT_EQ(json::parse(run({"tau", "--prec", "1"}).out)["coefficients"], json({"1"}));
    EXPECT_EQ(run({"tau", "--prec", "0"}).code, 2);
    EXPECT_EQ(run({"tau", "--prec", "100001"}).code, 2);
}

TEST(Cli, VerifyExitCodesAndDeterminism)
{
    CliRun const a = run({"verify", "--builtin", "delta23"});
    CliRun const b = run({"verify", "--builtin", "delta23"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(json::parse(a.out)["verdict"].get<bool>());

    CliRun const bad = run({"verify", "--builtin", "delta23", "--perturb", "5"});
    EXPECT_EQ(bad.code, 1);
    json const rep = json::parse(bad.out)["report"];
    ASSERT_EQ(rep["mismatches"].size(), 1U);
    EXPECT_EQ(rep["mismatches"][0]["n"], 5);

    EXPECT_EQ(run({"verify"}).code, 2);
    EXPECT_EQ(run({"verify", "--builtin", "nope"}).code, 2);
    EXPECT_EQ(run({"verify", "--builtin", "delta23", "--scenario", "x.json"}).code, 2);
    EXPECT_EQ(run({"verify", "--scenario", "/nonexistent/file.json"}).code, 2);
    EXPECT_EQ(run({"verify", "--builtin", "delta23", "--perturb", "0"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ScenarioFiles)
{
    std::string const good = write_temp("delta.json", R"({
        "disc": -23, "weight": 12, "ell": 23,
        "char": {"conductor": {"n": 23, "b": 23}, "finite_part": [11]},
        "target": "tau", "bound_mode": "paper"})");
    CliRun const r = run({"verify", "--scenario", good});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["report"]["bound"], 92);

    // the same file through the builtin path gives the same report at the same bound
    CliRun const b = run({"verify", "--builtin", "delta23", "--bound-mode", "paper"});
    EXPECT_EQ(json::parse(r.out)["report"], json::parse(b.out)["report"]);

    for (std::string const text : {
             std::string("{"),
             std::string(R"({"disc": -23})"),
             std::string(R"({"disc": -23, "weight": 12, "ell": 23, "char": "search", "target": "tau", "extra": 1})"),
             std::string(R"({"disc": -24, "weight": 12, "ell": 23, "char": "search", "target": "tau"})"),
             std::string(R"({"disc": -23, "weight": 12, "ell": 23, "char": "guess", "target": "tau"})"),
             std::string(R"({"disc": -23, "weight": 12, "ell": 23, "char": "search", "target": {"curve": [1, 2]}})"),
             std::string(R"({"disc": -23, "weight": 12, "ell": 23, "char": {"conductor": {"n": 5, "b": 1},
                 "finite_part": [1]}, "target": "tau"})"),
             std::string(R"({"disc": -23, "weight": "12", "ell": 23, "char": "search", "target": "tau"})"),
             std::string(R"({"disc": -23, "weight": 12, "ell": 23, "char": "search", "target": "tau",
                 "bound_mode": "loose"})"),
             std::string(R"({"disc": -71, "weight": 2, "ell": 7, "char": "search",
                 "target": {"curve": [0, 0, 0, 0, 0]}})"),
         }) {
        std::string const path = write_temp("bad.json", text);
        EXPECT_EQ(run({"verify", "--scenario", path}).code, 2) << text;
    }
}

TEST(Cli, Search)
{
    CliRun const r = run({"search", "--builtin", "delta23"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_FALSE(json::parse(r.out)["matches"].empty());
    CliRun const p = run({"search", "--builtin", "delta23", "--perturb", "5"});
    EXPECT_EQ(p.code, 1);
    EXPECT_TRUE(json::parse(p.out)["matches"].empty());
}

TEST(Cli, OutputFile)
{
    std::string const path = ::testing::TempDir() + "tau.json";
    CliRun const r = run({"-o", path, "tau", "--prec", "3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    json const j = json::parse(f);
    EXPECT_EQ(j["coefficients"], json({"1", "-24", "252"}));
    std::remove(path.c_str());
}
