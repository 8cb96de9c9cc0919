#ifndef TORUSWEYL_WIGNER_HPP
#define TORUSWEYL_WIGNER_HPP

#include "torusweyl/symbols.hpp"

namespace torusweyl {

enum class WignerKind { StatePair, Operator };

/// Values of the discrete Wigner transform on L(theta, N). The distribution
/// on the torus is the Dirac comb sum_{r,s} grid(r,s) delta at
/// (r/2N + theta1/N, s/2N + theta2/N); only the weights are stored.
template <typename Real = double>
struct WignerTable {
  Representation<Real> rep;
  Matrix<Real> grid;
  WignerKind kind = WignerKind::StatePair;

  Eigen::Index dim() const { return rep.dim(); }
  /// Independent lattice block (first N rows and columns).
  Matrix<Real> principal_block() const { return grid.topLeftCorner(dim(), dim()); }
};

namespace detail {

template <typename Real>
void require_state(const Representation<Real>& rep, const Vector<Real>& v, const char* where) {
  if (v.size() != rep.dim()) throw DimensionError(std::string(where) + ": state length must equal N");
}

/// Shared kernel of the state-pair and operator transforms:
/// W(r, s) = (1/2N) sum_l F(l, r-l) e^{-pi i (2l - r) s / N}.
template <typename Real, typename Entry>
Matrix<Real> wigner_grid(std::int64_t N, Entry&& entry) {
  const std::int64_t side = 2 * N;
  Matrix<Real> W(side, side);
  for (std::int64_t r = 0; r < side; ++r) {
    for (std::int64_t s = 0; s < side; ++s) {
      Complex<Real> acc(0);
      for (std::int64_t l = 0; l < N; ++l) {
        acc += entry(l, mod(r - l, N)) * root_of_unity<Real>(-(2 * l - r) * s, side);
      }
      W(r, s) = acc / static_cast<Real>(side);
    }
  }
  return W;
}

}  // namespace detail

/// V(psi, phi)(n1, n2) = <psi, T(n1, n2) phi>, antilinear in psi.
template <typename Real>
Complex<Real> fourier_wigner(const Representation<Real>& rep, const Vector<Real>& psi,
                             const Vector<Real>& phi, std::int64_t n1, std::int64_t n2) {
  detail::require_state(rep, psi, "fourier_wigner");
  detail::require_state(rep, phi, "fourier_wigner");
  return psi.dot(heisenberg(rep, n1, n2) * phi);
}

template <typename Real>
WignerTable<Real> wigner_state(const Representation<Real>& rep, const Vector<Real>& psi,
                               const Vector<Real>& phi) {
  detail::require_state(rep, psi, "wigner_state");
  detail::require_state(rep, phi, "wigner_state");
  auto entry = [&](std::int64_t l, std::int64_t rl) { return std::conj(psi(rl)) * phi(l); };
  return {rep, detail::wigner_grid<Real>(rep.dim(), entry), WignerKind::StatePair};
}

template <typename Real>
WignerTable<Real> wigner_operator(const Representation<Real>& rep, const Matrix<Real>& F) {
  if (F.rows() != rep.dim() || F.cols() != rep.dim()) {
    throw DimensionError("wigner_operator: operator must be N x N");
  }
  auto entry = [&](std::int64_t l, std::int64_t rl) { return F(l, rl); };
  return {rep, detail::wigner_grid<Real>(rep.dim(), entry), WignerKind::Operator};
}

/// Row sums over momentum. For a state pair v(2j) = conj(psi_j) phi_j and
/// odd slots vanish.
template <typename Real>
Vector<Real> marginal_x(const WignerTable<Real>& table) {
  if (table.kind != WignerKind::StatePair) throw DomainError("marginal_x: table is not a state pair");
  return table.grid.rowwise().sum();
}

/// Column sums over position. For a state pair w(2j) = conj(psi^_j) phi^_j / N
/// with psi^_j = sum_m psi_m e^{-2 pi i m j / N}; odd slots vanish.
template <typename Real>
Vector<Real> marginal_p(const WignerTable<Real>& table) {
  if (table.kind != WignerKind::StatePair) throw DomainError("marginal_p: table is not a state pair");
  return table.grid.colwise().sum().transpose();
}

template <typename Real>
Complex<Real> total_mass(const WignerTable<Real>& table) {
  return table.grid.sum();
}

/// Sum over the lattice of symbol x Wigner weights; equals
/// <psi, Op(sym) phi>.
template <typename Real>
Complex<Real> pairing(const SampledSymbol<Real>& sym, const Vector<Real>& psi, const Vector<Real>& phi) {
  const WignerTable<Real> w = wigner_state(sym.rep(), psi, phi);
  return sym.grid().cwiseProduct(w.grid).sum();
}

/// Largest residual of the three N-shift symmetries of a 2N x 2N table.
template <typename Real>
Real check_symmetries(const Matrix<Real>& grid) {
  if (grid.rows() != grid.cols() || grid.rows() % 2 != 0) {
    throw DimensionError("check_symmetries: grid must be 2N x 2N");
  }
  const std::int64_t N = grid.rows() / 2;
  Real worst = 0;
  for (std::int64_t m = 0; m < N; ++m) {
    for (std::int64_t l = 0; l < N; ++l) {
      const Complex<Real> v = grid(m, l);
      worst = std::max(worst, std::abs(grid(m + N, l) - Real(detail::parity_sign(l)) * v));
      worst = std::max(worst, std::abs(grid(m, l + N) - Real(detail::parity_sign(m)) * v));
      worst = std::max(worst, std::abs(grid(m + N, l + N) - Real(detail::parity_sign(m + l + N)) * v));
    }
  }
  return worst;
}

template <typename Real>
Real check_symmetries(const WignerTable<Real>& table) {
  return check_symmetries(table.grid);
}

/// Unnormalized DFT psi^_j = sum_m psi_m e^{-2 pi i m j / N}.
template <typename Real>
Vector<Real> dft(const Vector<Real>& v) {
  const std::int64_t N = v.size();
  Vector<Real> out = Vector<Real>::Zero(N);
  for (std::int64_t j = 0; j < N; ++j) {
    for (std::int64_t m = 0; m < N; ++m) out(j) += v(m) * detail::root_of_unity<Real>(-m * j, N);
  }
  return out;
}

}  // namespace torusweyl

#endif  // TORUSWEYL_WIGNER_HPP
