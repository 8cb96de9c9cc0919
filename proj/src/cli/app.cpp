#include "app.hpp"

#include <cstdio>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "torusweyl/io/json.hpp"
#include "torusweyl/testing/acceptance.hpp"
#include "torusweyl/torusweyl.hpp"

namespace torusweyl::cli {

namespace {

using io::json;
using Rep = Representation<double>;
using Sym = SampledSymbol<double>;

/// --theta1/--theta2/--N as given on the command line.
struct LatticeFlags {
  double theta1 = 0.0;
  double theta2 = 0.0;
  long N = 0;
  CLI::Option* theta1_opt = nullptr;
  CLI::Option* theta2_opt = nullptr;
  CLI::Option* n_opt = nullptr;

  void attach(CLI::App* cmd, bool with_n) {
    theta1_opt = cmd->add_option("--theta1", theta1, "Representation parameter theta1 (default 0)");
    theta2_opt = cmd->add_option("--theta2", theta2, "Representation parameter theta2 (default 0)");
    if (with_n) n_opt = cmd->add_option("--N", N, "Hilbert space dimension")->check(CLI::PositiveNumber);
  }

  bool has_n() const { return n_opt != nullptr && n_opt->count() > 0; }
  bool has_theta() const { return theta1_opt->count() > 0 || theta2_opt->count() > 0; }

  Rep rep() const {
    if (!has_n()) throw io::ParseError("--N is required when the symbol is a trig polynomial");
    return Rep(theta1, theta2, N);
  }

  Rep rep(Eigen::Index dim) const { return Rep(theta1, theta2, dim); }

  /// Flags that were given must agree with a representation read from a file.
  void check(const Rep& rep, const std::string& what) const {
    if (has_n() && N != rep.dim()) {
      throw DimensionError(what + " has N = " + std::to_string(rep.dim()) + " but --N " + std::to_string(N));
    }
    if (has_theta() && !(Rep(theta1, theta2, rep.dim()) == rep)) {
      throw DimensionError(what + " was sampled for a different theta than --theta1/--theta2");
    }
  }
};

/// A grid JSON object is used as is; a trig polynomial array is sampled on
/// the lattice given by the flags.
Sym load_symbol(const std::string& path, const LatticeFlags& flags) {
  const json j = io::read_file(path);
  if (j.is_array()) return sample(io::trig_polynomial_from_json(j), flags.rep());
  Sym sym = io::sampled_symbol_from_json(j);
  flags.check(sym.rep(), path);
  return sym;
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << io::dump(j);
  } else {
    io::write_file(path, io::dump(j));
  }
}

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Presentation export: x, p, re, im per lattice point.
void write_lattice_csv(const std::string& path, const Rep& rep, const Matrix<double>& grid) {
  std::ofstream csv(path);
  if (!csv) throw std::runtime_error("cannot write " + path);
  const double N = static_cast<double>(rep.dim());
  csv << "x,p,re,im\n";
  for (Eigen::Index r = 0; r < grid.rows(); ++r) {
    for (Eigen::Index s = 0; s < grid.cols(); ++s) {
      const double x = static_cast<double>(r) / (2 * N) + rep.theta1() / N;
      const double p = static_cast<double>(s) / (2 * N) + rep.theta2() / N;
      csv << number(x) << ',' << number(p) << ',' << number(grid(r, s).real()) << ','
          << number(grid(r, s).imag()) << '\n';
    }
  }
}

struct QuantizeArgs {
  std::string input;
  std::string output;
  std::string route = "sampled";
  LatticeFlags lattice;
};

int cmd_quantize(const QuantizeArgs& a, std::ostream& out) {
  if (a.route == "sampled") {
    emit(io::operator_to_json(quantize_sampled(load_symbol(a.input, a.lattice))), a.output, out);
    return kOk;
  }
  const json j = io::read_file(a.input);
  if (!j.is_array()) throw io::ParseError("--route " + a.route + " needs a trig polynomial (JSON array)");
  const auto tp = io::trig_polynomial_from_json(j);
  const Rep rep = a.lattice.rep();
  const Matrix<double> fourier = quantize_fourier(tp, rep);
  if (a.route == "fourier") {
    emit(io::operator_to_json(fourier), a.output, out);
    return kOk;
  }
  const Matrix<double> sampled = quantize_sampled(sample(tp, rep));
  const double discrepancy = max_deviation(fourier, sampled);
  emit({{"fourier", io::operator_to_json(fourier)},
        {"sampled", io::operator_to_json(sampled)},
        {"max_discrepancy", discrepancy}},
       a.output, out);
  if (!a.output.empty()) out << "max discrepancy: " << number(discrepancy) << '\n';
  return kOk;
}

struct DequantizeArgs {
  std::string input;
  std::string output;
  std::string table;
  LatticeFlags lattice;
};

int cmd_dequantize(const DequantizeArgs& a, std::ostream& out) {
  const Matrix<double> A = io::operator_from_json(io::read_file(a.input));
  const Rep rep = a.lattice.rep(A.rows());
  const Sym sym = dequantize(rep, A);
  emit(io::to_json(sym), a.output, out);
  if (!a.table.empty()) write_lattice_csv(a.table, rep, sym.grid());
  return kOk;
}

struct WignerArgs {
  std::vector<std::string> states;
  std::string output;
  std::string csv;
  LatticeFlags lattice;
};

int cmd_wigner(const WignerArgs& a, std::ostream& out) {
  const Vector<double> psi = io::state_from_json(io::read_file(a.states.at(0)));
  const Vector<double> phi = a.states.size() > 1 ? io::state_from_json(io::read_file(a.states[1])) : psi;
  if (phi.size() != psi.size()) {
    throw DimensionError("states have different lengths (" + std::to_string(psi.size()) + " and " +
                         std::to_string(phi.size()) + ")");
  }
  const Rep rep = a.lattice.rep(psi.size());
  const auto table = wigner_state(rep, psi, phi);
  json j = io::to_json(table);
  j["summary"] = {{"mass", io::complex_to_json(total_mass(table))},
                  {"marginal_x", io::vector_to_json(marginal_x(table))},
                  {"marginal_p", io::vector_to_json(marginal_p(table))},
                  {"symmetry_residual", check_symmetries(table)}};
  emit(j, a.output, out);
  if (!a.csv.empty()) write_lattice_csv(a.csv, rep, table.grid);
  return kOk;
}

struct EvolveArgs {
  std::string hamiltonian;
  std::string symbol;
  std::string output;
  double t = 1.0;
  long steps = 1000;
  LatticeFlags lattice;
};

int cmd_evolve(const EvolveArgs& a, std::ostream& out) {
  const Sym h = load_symbol(a.hamiltonian, a.lattice);
  const Sym a0 = load_symbol(a.symbol, a.lattice);
  require_same(h.rep(), a0.rep(), "evolve");
  const HamiltonianSystem<double> sys(h);
  const Matrix<double> exact = evolve_operator(sys, quantize_sampled(a0), a.t);
  const Sym evolved = evolve_symbol(sys, a0, a.t, a.steps);
  const double defect = max_deviation(quantize_sampled(evolved), exact);
  const double defect_half = max_deviation(quantize_sampled(evolve_symbol(sys, a0, a.t, 2 * a.steps)), exact);
  emit({{"symbol", io::to_json(evolved)},
        {"diagnostics",
         {{"t", a.t},
          {"steps", a.steps},
          {"defect", defect},
          {"defect_half_step", defect_half},
          {"exact_operator", io::operator_to_json(exact)}}}},
       a.output, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weyl quantization, Wigner functions and Moyal calculus on the torus", "torusweyl"};
  app.require_subcommand(1);

  QuantizeArgs qa;
  auto* quantize = app.add_subcommand("quantize", "Symbol JSON -> Operator JSON");
  quantize->add_option("symbol", qa.input, "TrigPolynomial or SampledSymbol JSON")->required();
  quantize->add_option("--route", qa.route, "fourier | sampled | both")
      ->check(CLI::IsMember({"fourier", "sampled", "both"}));
  quantize->add_option("-o,--output", qa.output, "Output file (default stdout)");
  qa.lattice.attach(quantize, true);

  DequantizeArgs da;
  auto* deq = app.add_subcommand("dequantize", "Operator JSON -> canonical SampledSymbol JSON");
  deq->add_option("operator", da.input, "Operator JSON")->required();
  deq->add_option("-o,--output", da.output, "Output file (default stdout)");
  deq->add_option("--table", da.table, "Also write the grid as CSV");
  da.lattice.attach(deq, false);

  WignerArgs wa;
  auto* wig = app.add_subcommand("wigner", "State JSON(s) -> WignerTable JSON with summary");
  wig->add_option("states", wa.states, "One or two state JSON files")->required()->expected(1, 2);
  wig->add_option("-o,--output", wa.output, "Output file (default stdout)");
  wig->add_option("--csv", wa.csv, "Also write the table as CSV");
  wa.lattice.attach(wig, false);

  EvolveArgs ea;
  auto* evo = app.add_subcommand("evolve", "Integrate the symbol dynamics and compare with exact evolution");
  evo->add_option("hamiltonian", ea.hamiltonian, "Real Hamiltonian symbol JSON")->required();
  evo->add_option("symbol", ea.symbol, "Initial symbol JSON")->required();
  evo->add_option("--t", ea.t, "Final time (default 1)");
  evo->add_option("--steps", ea.steps, "RK4 steps (default 1000)");
  evo->add_option("-o,--output", ea.output, "Output file (default stdout)");
  ea.lattice.attach(evo, true);

  std::uint64_t seed = 20240607u;
  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
  self->add_option("--seed", seed, "Random seed");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend() - (args.empty() ? 0 : 1)));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }

  try {
    if (*quantize) return cmd_quantize(qa, out);
    if (*deq) return cmd_dequantize(da, out);
    if (*wig) return cmd_wigner(wa, out);
    if (*evo) return cmd_evolve(ea, out);
    return testing::report(out, testing::run_acceptance(seed)) ? kOk : kFailure;
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const json::exception& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << '\n';
    return kDimensionError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace torusweyl::cli
