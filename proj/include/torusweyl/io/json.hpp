#ifndef TORUSWEYL_IO_JSON_HPP
#define TORUSWEYL_IO_JSON_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "torusweyl/moyal.hpp"
#include "torusweyl/wigner.hpp"

namespace torusweyl::io {

using json = nlohmann::json;

/// Malformed JSON text or a document that does not follow the schema.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Schemas. Complex numbers are [re, im] pairs; grids and operators are flat
// row-major arrays of pairs.
//
//   TrigPolynomial  [{"n1", "n2", "re", "im"}, ...]
//   SampledSymbol   {"theta1", "theta2", "N", "grid"}
//   Operator        {"N", "entries"}
//   WignerTable     {"theta1", "theta2", "N", "kind", "grid"}
//   State           [[re, im], ...]  or  {"components": [[re, im], ...]}

json to_json(const TrigPolynomial<double>& tp);
json to_json(const SampledSymbol<double>& sym);
json to_json(const WignerTable<double>& table);
json operator_to_json(const Matrix<double>& op);
json state_to_json(const Vector<double>& state);
json complex_to_json(Complex<double> z);
json vector_to_json(const Vector<double>& v);

TrigPolynomial<double> trig_polynomial_from_json(const json& j);
SampledSymbol<double> sampled_symbol_from_json(const json& j);
WignerTable<double> wigner_table_from_json(const json& j);
Matrix<double> operator_from_json(const json& j);
Vector<double> state_from_json(const json& j);

/// Deterministic text: keys sorted, floats printed with 17 significant
/// digits (always with a '.' or exponent, so -0.0 and integral values stay
/// floating point). Parsing the text back reproduces every double exactly.
std::string dump(const json& j, int indent = 2);

json parse(const std::string& text);
json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace torusweyl::io

#endif  // TORUSWEYL_IO_JSON_HPP
