#include "torusweyl/io/json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace torusweyl::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::int64_t integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

Complex<double> complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("complex value must be a [re, im] pair");
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

json flat_pairs(const Matrix<double>& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(complex_to_json(m(r, c)));
  }
  return out;
}

Matrix<double> square_from_pairs(const json& j, Eigen::Index side, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  if (static_cast<Eigen::Index>(j.size()) != side * side) {
    throw DimensionError(std::string(what) + " has " + std::to_string(j.size()) + " entries, expected " +
                         std::to_string(side * side));
  }
  Matrix<double> m(side, side);
  for (Eigen::Index r = 0; r < side; ++r) {
    for (Eigen::Index c = 0; c < side; ++c) m(r, c) = complex_from(j[r * side + c]);
  }
  return m;
}

Eigen::Index dimension(const json& j) {
  const std::int64_t N = integer(field(j, "N"), "N");
  if (N < 1) throw DimensionError("N must be >= 1");
  return N;
}

Representation<double> representation(const json& j) {
  return {number(field(j, "theta1"), "theta1"), number(field(j, "theta2"), "theta2"), dimension(j)};
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

bool is_flat(const json& j) {
  for (const auto& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

void emit(std::ostringstream& os, const json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  switch (j.type()) {
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      if (is_flat(j)) {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          emit(os, j[i], indent, depth + 1);
        }
        os << ']';
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        os << pad;
        emit(os, j[i], indent, depth + 1);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << close_pad << ']';
      return;
    }
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        os << pad << json(it.key()).dump() << ": ";
        emit(os, it.value(), indent, depth + 1);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << close_pad << '}';
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

json complex_to_json(Complex<double> z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const Vector<double>& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

json to_json(const TrigPolynomial<double>& tp) {
  json out = json::array();
  for (const auto& [f, c] : tp.coefficients()) {
    out.push_back({{"n1", f.n1}, {"n2", f.n2}, {"re", c.real()}, {"im", c.imag()}});
  }
  return out;
}

json to_json(const SampledSymbol<double>& sym) {
  return {{"theta1", sym.rep().theta1()},
          {"theta2", sym.rep().theta2()},
          {"N", sym.dim()},
          {"grid", flat_pairs(sym.grid())}};
}

json to_json(const WignerTable<double>& table) {
  return {{"theta1", table.rep.theta1()},
          {"theta2", table.rep.theta2()},
          {"N", table.dim()},
          {"kind", table.kind == WignerKind::StatePair ? "state-pair" : "operator"},
          {"grid", flat_pairs(table.grid)}};
}

json operator_to_json(const Matrix<double>& op) {
  return {{"N", op.rows()}, {"entries", flat_pairs(op)}};
}

json state_to_json(const Vector<double>& state) { return vector_to_json(state); }

TrigPolynomial<double> trig_polynomial_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("trig polynomial must be an array of {n1, n2, re, im}");
  TrigPolynomial<double> tp;
  for (const auto& term : j) {
    tp.add(integer(field(term, "n1"), "n1"), integer(field(term, "n2"), "n2"),
           {number(field(term, "re"), "re"), number(field(term, "im"), "im")});
  }
  return tp;
}

SampledSymbol<double> sampled_symbol_from_json(const json& j) {
  const Representation<double> rep = representation(j);
  return {rep, square_from_pairs(field(j, "grid"), rep.lattice_side(), "grid")};
}

WignerTable<double> wigner_table_from_json(const json& j) {
  const Representation<double> rep = representation(j);
  const json& kind = field(j, "kind");
  WignerTable<double> table{rep, square_from_pairs(field(j, "grid"), rep.lattice_side(), "grid")};
  if (kind == "state-pair") {
    table.kind = WignerKind::StatePair;
  } else if (kind == "operator") {
    table.kind = WignerKind::Operator;
  } else {
    throw ParseError("kind must be \"state-pair\" or \"operator\"");
  }
  return table;
}

Matrix<double> operator_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("operator must be a JSON object");
  const json& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("entries must be an array");
  const Eigen::Index N = dimension(j);
  if (static_cast<Eigen::Index>(entries.size()) != N * N) {
    throw DimensionError("operator is not square: " + std::to_string(entries.size()) +
                         " entries for N = " + std::to_string(N));
  }
  return square_from_pairs(entries, N, "entries");
}

Vector<double> state_from_json(const json& j) {
  const json& comps = j.is_object() ? field(j, "components") : j;
  if (!comps.is_array() || comps.empty()) throw ParseError("state must be a non-empty array of [re, im]");
  Vector<double> v(static_cast<Eigen::Index>(comps.size()));
  for (std::size_t i = 0; i < comps.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from(comps[i]);
  return v;
}

std::string dump(const json& j, int indent) {
  std::ostringstream os;
  emit(os, j, indent, 0);
  os << '\n';
  return os.str();
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace torusweyl::io
