#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "bvs/algnum.hpp"
#include "bvs_cli/cli.hpp"

using namespace bvs;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bvsolve");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  fs::path dir;
  void SetUp() override {
    dir = fs::temp_directory_path() / ("bvs_cli_" + std::to_string(::getpid()) + "_" +
                                       ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& body) {
    fs::path p = dir / name;
    std::ofstream(p) << body;
    return p.string();
  }
};

int count_lines(const std::string& s, const std::string& prefix) {
  std::istringstream in(s);
  std::string l;
  int n = 0;
  while (std::getline(in, l)) n += l.rfind(prefix, 0) == 0;
  return n;
}

RealAlgNum from_json(const nlohmann::json& j, const char* var) {
  VarNames names;
  names.x = var;
  names.y = std::string(var) == "y" ? "x" : "y";
  UniPoly d = as_uni(parse_poly(j.at("defining").get<std::string>(), names), Var::x);
  Rational lo = parse_rational(j.at("lo").get<std::string>()), hi = parse_rational(j.at("hi").get<std::string>());
  return RealAlgNum{d, lo, hi, lo == hi ? 0 : sign_at_rational(d, lo)};
}

}  // namespace

TEST_F(Cli, SolveTwoRoots) {
  auto r = run_cli({"solve", file("a.sys", "# circle and diagonal\nx^2 + y^2 - 2\n\nx - y  # second\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(count_lines(r.out, "root: x in "), 2);
  EXPECT_EQ(r.out.find("mult"), std::string::npos);
  EXPECT_NE(r.out.find("root: x in [1, 1] by x^2 - 1; y in [1, 1] by y^2 - 1"), std::string::npos);
}

TEST_F(Cli, CommonFactorExitsTwo) {
  std::string f = file("b.sys", "x*y\nx*y + x\n");
  for (const char* s : {"grid", "mrur", "grur"}) {
    auto r = run_cli({"--solver", s, "solve", f});
    EXPECT_EQ(r.code, 2) << s;
    EXPECT_NE(r.err.find("coprimality"), std::string::npos) << s;
  }
}

TEST_F(Cli, CircleTopology) {
  auto r = run_cli({"topology", file("c.txt", "x^2 + y^2 - 1\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("topology: vertices 4; edges 4; shear 0"), std::string::npos);
  EXPECT_NE(r.out.find("graph topology {"), std::string::npos);
  auto s = run_cli({"--format", "structured", "topology", file("c.txt", "x^2 + y^2 - 1\n")});
  auto j = nlohmann::json::parse(s.out);
  EXPECT_EQ(j["vertices"].size(), 4u);
  EXPECT_EQ(j["edges"].size(), 4u);
}

TEST_F(Cli, GenericityErrorForMrur) {
  auto r = run_cli({"--solver", "mrur", "solve", file("v.sys", "x^2 + y^2 - 1\nx\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("genericity"), std::string::npos);
  EXPECT_EQ(run_cli({"--solver", "grur", "solve", file("v.sys", "x^2 + y^2 - 1\nx\n")}).code, 0);
}

TEST_F(Cli, UsageAndParseErrors) {
  auto p = run_cli({"solve", file("p.sys", "x^2 + y^2\n\nx - $y\n")});
  EXPECT_EQ(p.code, 1);
  EXPECT_NE(p.err.find(":3:5:"), std::string::npos) << p.err;
  EXPECT_EQ(run_cli({"solve", (dir / "missing.sys").string()}).code, 1);
  EXPECT_EQ(run_cli({"solve"}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate", file("a.sys", "x\ny\n")}).code, 1);
  EXPECT_EQ(run_cli({"--solver", "magic", "solve", file("a.sys", "x\ny\n")}).code, 1);
  EXPECT_EQ(run_cli({"--refine-width", "0", "solve", file("a.sys", "x\ny\n")}).code, 1);
  EXPECT_EQ(run_cli({"--refine-width", "abc", "solve", file("a.sys", "x\ny\n")}).code, 1);
  EXPECT_EQ(run_cli({"solve", file("one.sys", "x\n")}).code, 1);
  EXPECT_EQ(run_cli({"topology", file("two.sys", "x\ny\n")}).code, 1);
  auto m = run_cli({"ineq", file("i.sys", "x^2 + y^2 - 2\nx - y\n! x\n")});
  EXPECT_EQ(m.code, 1);
  EXPECT_NE(m.err.find(":3:1:"), std::string::npos) << m.err;
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(Cli, MultiplicitiesAndInequalities) {
  auto r = run_cli({"mult", file("t.sys", "x^2 + y^2 - 1\nx^2 - 4*x + y^2 + 3\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("root: x in [1, 1] by x - 1; y in [0, 0] by y; mult 2"), std::string::npos) << r.out;
  auto i = run_cli({"--mult", "ineq", file("i.sys", "x^2 + y^2 - 2\nx - y\n> x\n")});
  EXPECT_EQ(i.code, 0);
  EXPECT_EQ(count_lines(i.out, "root:"), 1);
  EXPECT_NE(i.out.find("mult 1"), std::string::npos);
  auto e = run_cli({"solve", file("e.sys", "x^2 + y^2 - 2\nx - y\nx + y + 2\n")});
  EXPECT_EQ(count_lines(e.out, "root:"), 1);
  EXPECT_NE(e.out.find("x in [-1, -1]"), std::string::npos);
}

TEST_F(Cli, Count) {
  auto r = run_cli({"count", file("f.txt", "y^2 - x\n4\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "fiber: x = 4; given; roots 2\n");
  auto c = run_cli({"count", file("c.txt", "x^2 + y^2 - 1\n")});
  EXPECT_EQ(c.out,
            "fiber: x = -2; intermediate; roots 0\nfiber: x = -1; critical; roots 1\nfiber: x = 0; intermediate; roots 2\n"
            "fiber: x = 1; critical; roots 1\nfiber: x = 2; intermediate; roots 0\n");
  EXPECT_EQ(run_cli({"count", file("bad.txt", "y^2 - x\n1/0\n")}).code, 1);
  EXPECT_EQ(run_cli({"count", file("sq.txt", "y^2 - 2*x*y + x^2\n")}).code, 2);
}

TEST_F(Cli, RefineWidth) {
  auto r = run_cli({"--refine-width", "1/1099511627776", "--format", "structured", "solve",
                    file("s.sys", "x^2 - 2\ny - x\n")});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  for (const auto& s : j["solutions"]) {
    RealAlgNum a = from_json(s["x"], "x");
    EXPECT_LE(a.width(), Rational(1, Integer(1) << 40));
  }
}

// every root of every corpus system, read back from structured output, is a common zero
TEST_F(Cli, StructuredRoundTripOverCorpus) {
  int roots = 0;
  for (const auto& e : fs::directory_iterator(BVS_CORPUS_DIR)) {
    if (e.path().extension() != ".sys") continue;
    for (const char* cmd : {"solve", "mult"}) {
      auto r = run_cli({"--format", "structured", cmd, e.path().string()});
      ASSERT_EQ(r.code, 0) << e.path() << r.err;
      auto j = nlohmann::json::parse(r.out);
      BivPoly F = parse_poly(j["polynomials"][0].get<std::string>()), G = parse_poly(j["polynomials"][1].get<std::string>());
      for (const auto& s : j["solutions"]) {
        RealAlgNum a = from_json(s["x"], "x"), b = from_json(s["y"], "y");
        EXPECT_EQ(sign_at_biv(F, a, b), 0) << e.path();
        EXPECT_EQ(sign_at_biv(G, a, b), 0) << e.path();
        if (std::string(cmd) == "mult") EXPECT_GE(s["multiplicity"].get<int>(), 1);
        ++roots;
      }
    }
  }
  EXPECT_GT(roots, 50);
}

TEST_F(Cli, FilterDoesNotChangeOutput) {
  for (const auto& e : fs::directory_iterator(BVS_CORPUS_DIR)) {
    if (e.path().extension() != ".sys") continue;
    for (const char* s : {"grid", "mrur", "grur"}) {
      auto a = run_cli({"--solver", s, "--format", "structured", "mult", e.path().string()});
      auto b = run_cli({"--solver", s, "--format", "structured", "--no-filter", "mult", e.path().string()});
      EXPECT_EQ(a.code, b.code);
      EXPECT_EQ(a.out, b.out) << e.path();
      EXPECT_EQ(a.err, b.err) << e.path();
    }
  }
}

TEST_F(Cli, BenchAgreesOnCorpus) {
  auto r = run_cli({"bench", BVS_CORPUS_DIR});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_GE(count_lines(r.out, "bench: "), 25);
  EXPECT_EQ(r.out.find("DISAGREE"), std::string::npos);
  EXPECT_EQ(run_cli({"bench", file("x.sys", "x\ny\n")}).code, 1);  // not a directory
}

TEST_F(Cli, VerboseGoesToStderr) {
  auto r = run_cli({"--verbose", "solve", file("a.sys", "x^2 + y^2 - 2\nx - y\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("total endpoint bitsize"), std::string::npos);
  EXPECT_EQ(r.out.find("bitsize"), std::string::npos);
}
