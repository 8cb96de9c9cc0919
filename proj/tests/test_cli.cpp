#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.hpp"
#include "torusweyl/io/json.hpp"
#include "torusweyl/testing/random_inputs.hpp"
#include "torusweyl/torusweyl.hpp"

using namespace torusweyl;
using torusweyl::testing::RandomInputs;
using C = std::complex<double>;
using Mat = Matrix<double>;
using Rep = Representation<double>;
using Tp = TrigPolynomial<double>;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(TORUSWEYL_TEST_TMP) / ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::create_directories(dir_);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string put(const std::string& name, const io::json& j) const {
    io::write_file(path(name), io::dump(j));
    return path(name);
  }

  std::string put_text(const std::string& name, const std::string& text) const {
    io::write_file(path(name), text);
    return path(name);
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "torusweyl");
    out_.str({});
    err_.str({});
    return cli::run(args, out_, err_);
  }

  io::json read(const std::string& name) const { return io::read_file(path(name)); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

Mat sigma(char which) {
  Mat m(2, 2);
  if (which == 'x') m << 0, 1, 1, 0;
  if (which == 'z') m << 1, 0, 0, -1;
  return m;
}

}  // namespace

TEST_F(Cli, QuantizeAlphaZ) {
  const auto in = put("alpha_z.json", io::to_json(Tp::mode(1, 0)));
  for (const char* route : {"fourier", "sampled"}) {
    ASSERT_EQ(run({"quantize", in, "--N", "2", "--route", route, "-o", path("op.json")}), 0) << err_.str();
    EXPECT_LT(max_deviation(io::operator_from_json(read("op.json")), sigma('z')), 1e-14);
  }
}

TEST_F(Cli, QuantizeConstantGrid) {
  const Rep rep(0.25, 0.5, 3);
  const auto in = put("one.json", io::to_json(SampledSymbol<double>::constant(rep, 1.0)));
  ASSERT_EQ(run({"quantize", in, "-o", path("op.json")}), 0) << err_.str();
  EXPECT_LT(max_deviation(io::operator_from_json(read("op.json")), Mat::Identity(3, 3)), 1e-14);
}

TEST_F(Cli, QuantizeBothRoutes) {
  RandomInputs rnd(61);
  const auto in = put("tp.json", io::to_json(rnd.trig_polynomial(12, 10)));
  ASSERT_EQ(run({"quantize", in, "--N", "4", "--theta1", "0.3", "--theta2", "0.8", "--route", "both", "-o",
                 path("both.json")}),
            0)
      << err_.str();
  const auto j = read("both.json");
  EXPECT_LT(j["max_discrepancy"].get<double>(), 1e-9);
  EXPECT_NE(out_.str().find("max discrepancy"), std::string::npos);
  EXPECT_LT(max_deviation(io::operator_from_json(j["fourier"]), io::operator_from_json(j["sampled"])), 1e-9);
}

TEST_F(Cli, QuantizeErrors) {
  EXPECT_EQ(run({"quantize", put_text("bad.json", "{\"N\": 2, ")}), 2);
  EXPECT_NE(err_.str().find("parse error"), std::string::npos);
  const auto grid = put("grid.json", io::to_json(SampledSymbol<double>::constant(Rep(0, 0, 2), 1.0)));
  EXPECT_EQ(run({"quantize", grid, "--N", "3"}), 3);
  EXPECT_EQ(run({"quantize", grid, "--theta1", "0.5"}), 3);
  EXPECT_EQ(run({"quantize", grid, "--route", "fourier"}), 2);
  EXPECT_EQ(run({"quantize", put("tp.json", io::to_json(Tp::constant(1.0)))}), 2);  // --N missing
  EXPECT_EQ(run({"quantize", grid, "--route", "bogus"}), 2);
  EXPECT_EQ(run({"quantize"}), 2);
}

TEST_F(Cli, DequantizeSigmaX) {
  const auto in = put("sx.json", io::operator_to_json(sigma('x')));
  ASSERT_EQ(run({"dequantize", in, "--theta1", "0.2", "-o", path("sym.json"), "--table", path("sym.csv")}), 0)
      << err_.str();
  Mat expected(4, 4);
  expected << 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 1, 0, -1, 0;
  const auto sym = io::sampled_symbol_from_json(read("sym.json"));
  EXPECT_LT(max_deviation(sym.grid(), expected), 1e-15);
  EXPECT_DOUBLE_EQ(sym.rep().theta1(), 0.2);

  std::ifstream csv(path("sym.csv"));
  std::string line;
  int lines = 0;
  std::getline(csv, line);
  EXPECT_EQ(line, "x,p,re,im");
  while (std::getline(csv, line)) ++lines;
  EXPECT_EQ(lines, 16);
}

TEST_F(Cli, DequantizeZeroAndRoundTrip) {
  ASSERT_EQ(run({"dequantize", put("zero.json", io::operator_to_json(Mat(Mat::Zero(3, 3)))), "-o", path("z.json")}), 0);
  EXPECT_EQ(detail::max_abs(io::sampled_symbol_from_json(read("z.json")).grid()), 0.0);

  RandomInputs rnd(62);
  const Mat A = rnd.matrix(5, 5);
  const auto in = put("a.json", io::operator_to_json(A));
  ASSERT_EQ(run({"dequantize", in, "--theta1", "0.7", "--theta2", "0.1", "-o", path("sym.json")}), 0);
  ASSERT_EQ(run({"quantize", path("sym.json"), "-o", path("back.json")}), 0) << err_.str();
  EXPECT_LT(max_deviation(io::operator_from_json(read("back.json")), A), 1e-10);
}

TEST_F(Cli, DequantizeNonSquare) {
  const io::json j = {{"N", 2}, {"entries", io::json::array({{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}})}};
  EXPECT_EQ(run({"dequantize", put("ns.json", j)}), 3);
}

TEST_F(Cli, WignerGroundState) {
  const auto in = put("u0.json", io::json::array({{1.0, 0.0}, {0.0, 0.0}}));
  ASSERT_EQ(run({"wigner", in, "-o", path("w.json"), "--csv", path("w.csv")}), 0) << err_.str();
  const auto j = read("w.json");
  const auto table = io::wigner_table_from_json(j);
  Mat expected(4, 4);
  expected << 1, 1, 1, 1, 0, 0, 0, 0, 1, -1, 1, -1, 0, 0, 0, 0;
  EXPECT_LT(max_deviation(table.grid, Mat(expected / 4.0)), 1e-15);
  EXPECT_EQ(table.kind, WignerKind::StatePair);
  EXPECT_DOUBLE_EQ(j["summary"]["mass"][0].get<double>(), 1.0);
  EXPECT_EQ(j["summary"]["symmetry_residual"].get<double>(), 0.0);
  EXPECT_EQ(j["summary"]["marginal_x"].size(), 4u);
  EXPECT_TRUE(fs::exists(path("w.csv")));
}

TEST_F(Cli, WignerPairMass) {
  RandomInputs rnd(63);
  const auto psi = rnd.state(3), phi = rnd.state(3);
  ASSERT_EQ(run({"wigner", put("psi.json", io::state_to_json(psi)), put("phi.json", io::state_to_json(phi)),
                 "--theta2", "0.4", "-o", path("w.json")}),
            0);
  const auto mass = read("w.json")["summary"]["mass"];
  EXPECT_LT(std::abs(C(mass[0].get<double>(), mass[1].get<double>()) - psi.dot(phi)), 1e-13);
  EXPECT_EQ(run({"wigner", path("psi.json"), put("short.json", io::state_to_json(rnd.state(2)))}), 3);
}

TEST_F(Cli, EvolveTrivialCases) {
  RandomInputs rnd(64);
  const Rep rep = rnd.representation(3);
  const auto a0 = rnd.grid(rep);
  const auto sym = put("a0.json", io::to_json(a0));
  const auto h = put("h.json", io::to_json(sample(Tp::mode(1, 0, 0.5) + Tp::mode(-1, 0, 0.5), rep)));
  ASSERT_EQ(run({"evolve", h, sym, "--t", "0", "--steps", "5", "-o", path("e0.json")}), 0) << err_.str();
  EXPECT_LT(max_deviation(io::sampled_symbol_from_json(read("e0.json")["symbol"]).grid(), a0.grid()), 1e-15);

  const auto c = put("c.json", io::to_json(SampledSymbol<double>::constant(rep, 2.0)));
  ASSERT_EQ(run({"evolve", c, sym, "--t", "1", "--steps", "20", "-o", path("ec.json")}), 0);
  const auto j = read("ec.json");
  EXPECT_LT(j["diagnostics"]["defect"].get<double>(), 1e-10);
  EXPECT_TRUE(equivalent(io::sampled_symbol_from_json(j["symbol"]), a0));
}

TEST_F(Cli, EvolveTrigPolynomialInputs) {
  const auto h = put("h.json", io::to_json(Tp().add(1, 0, 0.25).add(-1, 0, 0.25).add(0, 1, 0.25).add(0, -1, 0.25)));
  const auto a = put("a.json", io::to_json(Tp().add(1, 1, 0.5).add(-1, -1, 0.5)));
  ASSERT_EQ(run({"evolve", h, a, "--N", "3", "--t", "1", "--steps", "1000", "-o", path("e.json")}), 0) << err_.str();
  const auto d = read("e.json")["diagnostics"];
  EXPECT_LT(d["defect"].get<double>(), 1e-6);
  EXPECT_LT(d["defect_half_step"].get<double>(), d["defect"].get<double>());
}

TEST_F(Cli, EvolveRejectsComplexHamiltonian) {
  const Rep rep(0, 0, 2);
  const auto h = put("h.json", io::to_json(SampledSymbol<double>::constant(rep, C(1.0, 1e-9))));
  const auto a = put("a.json", io::to_json(SampledSymbol<double>::constant(rep, 1.0)));
  EXPECT_EQ(run({"evolve", h, a}), 4);
  EXPECT_NE(err_.str().find("domain error"), std::string::npos);
  EXPECT_EQ(run({"evolve", a, a, "--steps", "0"}), 4);
  const auto other = put("b.json", io::to_json(SampledSymbol<double>::constant(Rep(0, 0, 3), 1.0)));
  EXPECT_EQ(run({"evolve", a, other}), 3);
}

TEST_F(Cli, OutputIsDeterministic) {
  RandomInputs rnd(65);
  const auto in = put("a.json", io::operator_to_json(rnd.matrix(4, 4)));
  ASSERT_EQ(run({"dequantize", in, "--theta1", "0.3"}), 0);
  const std::string first = out_.str();
  ASSERT_EQ(run({"dequantize", in, "--theta1", "0.3"}), 0);
  EXPECT_EQ(out_.str(), first);
}

TEST_F(Cli, Selftest) {
  ASSERT_EQ(run({"selftest", "--seed", "7"}), 0) << out_.str();
  const std::string text = out_.str();
  int pass_lines = 0;
  for (std::size_t pos = 0; (pos = text.find("PASS  [", pos)) != std::string::npos; ++pos) ++pass_lines;
  EXPECT_EQ(pass_lines, 12);
}
