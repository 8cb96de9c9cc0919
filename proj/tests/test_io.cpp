#include <gtest/gtest.h>

#include <cstring>
#include <limits>

#include "torusweyl/io/json.hpp"
#include "torusweyl/testing/random_inputs.hpp"

using namespace torusweyl;
using torusweyl::testing::RandomInputs;
using C = std::complex<double>;
using Mat = Matrix<double>;
using Rep = Representation<double>;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool same_bits(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!same_bits(a.data()[i].real(), b.data()[i].real()) || !same_bits(a.data()[i].imag(), b.data()[i].imag()))
      return false;
  }
  return true;
}

}  // namespace

TEST(Json, SampledSymbolRoundTripIsBitExact) {
  RandomInputs rnd(51);
  const Rep rep = rnd.representation(3);
  Mat g = rnd.matrix(6, 6);
  g(0, 0) = C(-0.0, 0.0);
  g(1, 2) = C(1e-300, -std::numeric_limits<double>::denorm_min());
  g(2, 1) = C(0.1, 1.0 / 3.0);
  const SampledSymbol<double> sym(rep, g);
  const auto back = io::sampled_symbol_from_json(io::parse(io::dump(io::to_json(sym))));
  EXPECT_TRUE(same_bits(back.grid(), g));
  EXPECT_TRUE(same_bits(back.rep().theta1(), rep.theta1()));
  EXPECT_TRUE(same_bits(back.rep().theta2(), rep.theta2()));
  EXPECT_TRUE(std::signbit(back.grid()(0, 0).real()));
}

TEST(Json, OperatorAndStateRoundTrip) {
  RandomInputs rnd(52);
  const Mat A = rnd.matrix(4, 4);
  EXPECT_TRUE(same_bits(io::operator_from_json(io::parse(io::dump(io::operator_to_json(A)))), A));
  const Vector<double> v = rnd.state(5);
  const Vector<double> w = io::state_from_json(io::parse(io::dump(io::state_to_json(v))));
  EXPECT_TRUE(same_bits(Mat(w), Mat(v)));
  const auto wrapped = io::state_from_json(io::json{{"components", io::state_to_json(v)}});
  EXPECT_TRUE(same_bits(Mat(wrapped), Mat(v)));
}

TEST(Json, TrigPolynomialAndWignerRoundTrip) {
  RandomInputs rnd(53);
  const auto tp = rnd.trig_polynomial(5, 6);
  const auto back = io::trig_polynomial_from_json(io::parse(io::dump(io::to_json(tp))));
  EXPECT_EQ(back.coefficients(), tp.coefficients());

  const Rep rep = rnd.representation(2);
  const WignerTable<double> table{rep, rnd.matrix(4, 4), WignerKind::Operator};
  const auto t2 = io::wigner_table_from_json(io::parse(io::dump(io::to_json(table))));
  EXPECT_EQ(t2.kind, WignerKind::Operator);
  EXPECT_TRUE(same_bits(t2.grid, table.grid));
}

TEST(Json, StableFormatting) {
  const Mat A = Mat::Identity(1, 1);
  const std::string text = io::dump(io::operator_to_json(A));
  EXPECT_EQ(text, "{\n  \"N\": 1,\n  \"entries\": [\n    [1.0, 0.0]\n  ]\n}\n");
  EXPECT_EQ(io::dump(io::json{{"b", 0.1}, {"a", -0.0}}), "{\n  \"a\": -0.0,\n  \"b\": 0.10000000000000001\n}\n");
}

TEST(Json, Errors) {
  EXPECT_THROW(io::parse("{not json"), io::ParseError);
  EXPECT_THROW(io::operator_from_json(io::json{{"N", 2}, {"entries", io::json::array({{1.0, 0.0}})}}),
               DimensionError);
  EXPECT_THROW(io::sampled_symbol_from_json(io::json{{"N", 1}, {"theta1", 0.0}}), io::ParseError);
  EXPECT_THROW(io::trig_polynomial_from_json(io::json{{"n1", 1}}), io::ParseError);
  EXPECT_THROW(io::wigner_table_from_json(
                   io::json{{"N", 1}, {"theta1", 0.0}, {"theta2", 0.0}, {"kind", "bogus"},
                            {"grid", io::json::array({{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}})}}),
               io::ParseError);
  EXPECT_THROW(io::read_file("/nonexistent/torusweyl.json"), io::ParseError);
}
