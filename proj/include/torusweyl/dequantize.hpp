#ifndef TORUSWEYL_DEQUANTIZE_HPP
#define TORUSWEYL_DEQUANTIZE_HPP

#include <stdexcept>

#include "torusweyl/quantize.hpp"
#include "torusweyl/wigner.hpp"

namespace torusweyl {

/// Canonical symbol N * W~_N(A). It carries the three N-shift symmetries and
/// quantizes back to A.
template <typename Real>
SampledSymbol<Real> dequantize(const Representation<Real>& rep, const Matrix<Real>& A) {
  const WignerTable<Real> w = wigner_operator(rep, A);
  return SampledSymbol<Real>(rep, static_cast<Real>(rep.dim()) * w.grid);
}

/// Reduced symbol shared by every symbol quantizing to A:
/// 4N times the principal block of W~_N(A).
template <typename Real>
ReducedSymbol<Real> canonical_class(const Representation<Real>& rep, const Matrix<Real>& A) {
  const WignerTable<Real> w = wigner_operator(rep, A);
  return {static_cast<Real>(4 * rep.dim()) * w.principal_block()};
}

template <typename Real = double>
struct PauliSet {
  Matrix<Real> identity;
  Matrix<Real> x;
  Matrix<Real> y;
  Matrix<Real> z;
};

namespace detail {

template <typename Real>
void require_spin_half(const Representation<Real>& rep, const char* where) {
  if (rep.dim() != 2) throw DimensionError(std::string(where) + ": requires N = 2");
}

template <typename Real>
void require_label(const Representation<Real>& rep, std::int64_t r, std::int64_t s, const char* where) {
  const std::int64_t side = rep.lattice_side();
  if (r < 0 || s < 0 || r >= side || s >= side) {
    throw std::out_of_range(std::string(where) + ": label outside 0..2N-1");
  }
}

}  // namespace detail

/// The standard Pauli matrices; independent of theta.
template <typename Real>
PauliSet<Real> pauli(const Representation<Real>& rep2) {
  detail::require_spin_half(rep2, "pauli");
  using C = Complex<Real>;
  const C i(0, 1);
  PauliSet<Real> p{Matrix<Real>(2, 2), Matrix<Real>(2, 2), Matrix<Real>(2, 2), Matrix<Real>(2, 2)};
  p.identity << C(1), C(0), C(0), C(1);
  p.x << C(0), C(1), C(1), C(0);
  p.y << C(0), -i, i, C(0);
  p.z << C(1), C(0), C(0), C(-1);
  return p;
}

/// Largest deviation of sigma_z = e^{-pi i theta1} T(1,0),
/// sigma_x = e^{-pi i theta2} T(0,1) and sigma_y = -e^{-pi i (theta1+theta2)} T(1,1).
/// The minus sign in the last relation is required by the definition of T:
/// T(1,1) u_0 = -i e^{pi i (theta1+theta2)} u_1.
template <typename Real>
Real pauli_generator_deviation(const Representation<Real>& rep2) {
  const PauliSet<Real> p = pauli(rep2);
  const Real t1 = rep2.theta1();
  const Real t2 = rep2.theta2();
  const Real dz = max_deviation(detail::turn<Real>(-t1 / 2) * heisenberg(rep2, 1, 0), p.z);
  const Real dx = max_deviation(detail::turn<Real>(-t2 / 2) * heisenberg(rep2, 0, 1), p.x);
  const Real dy = max_deviation(-detail::turn<Real>(-(t1 + t2) / 2) * heisenberg(rep2, 1, 1), p.y);
  return std::max({dz, dx, dy});
}

template <typename Real = double>
struct PauliSymbols {
  TrigPolynomial<Real> identity;
  TrigPolynomial<Real> x;
  TrigPolynomial<Real> y;
  TrigPolynomial<Real> z;
};

/// alpha_I = 1, alpha_x = e^{2 pi i (p - theta2/2)},
/// alpha_y = -e^{2 pi i (x - theta1/2)} e^{2 pi i (p - theta2/2)},
/// alpha_z = e^{2 pi i (x - theta1/2)}.
template <typename Real>
PauliSymbols<Real> pauli_symbols(const Representation<Real>& rep2) {
  detail::require_spin_half(rep2, "pauli_symbols");
  const Real t1 = rep2.theta1();
  const Real t2 = rep2.theta2();
  return {TrigPolynomial<Real>::constant(Real(1)),
          TrigPolynomial<Real>::mode(0, 1, detail::turn<Real>(-t2 / 2)),
          TrigPolynomial<Real>::mode(1, 1, -detail::turn<Real>(-(t1 + t2) / 2)),
          TrigPolynomial<Real>::mode(1, 0, detail::turn<Real>(-t1 / 2))};
}

/// N-dimensional Pauli matrix
/// B^{[r,s]} = sum_j e^{-pi i (r - 2j) s / N} E_{j, r-j}.
template <typename Real>
Matrix<Real> big_pauli(const Representation<Real>& rep, std::int64_t r, std::int64_t s) {
  detail::require_label(rep, r, s, "big_pauli");
  const std::int64_t N = rep.dim();
  Matrix<Real> B = Matrix<Real>::Zero(N, N);
  for (std::int64_t j = 0; j < N; ++j) {
    B(j, detail::mod(r - j, N)) = detail::root_of_unity<Real>(-(r - 2 * j) * s, 2 * N);
  }
  return B;
}

/// Symbol of B^{[r,s]}: coefficients
/// (1/2N) e^{-2 pi i k (r/2N + theta1/N)} e^{-2 pi i m (s/2N + theta2/N)},
/// k, m in 0..2N-1. Its lattice sampling is 2N at (r, s) and 0 elsewhere.
template <typename Real>
TrigPolynomial<Real> big_pauli_symbol(const Representation<Real>& rep, std::int64_t r, std::int64_t s) {
  detail::require_label(rep, r, s, "big_pauli_symbol");
  const std::int64_t side = rep.lattice_side();
  const Real N = static_cast<Real>(rep.dim());
  typename TrigPolynomial<Real>::Coefficients coeffs;
  for (std::int64_t k = 0; k < side; ++k) {
    for (std::int64_t m = 0; m < side; ++m) {
      Real shift = -(static_cast<Real>(k) * rep.theta1() + static_cast<Real>(m) * rep.theta2()) / N;
      shift -= std::floor(shift);
      const Real lattice = static_cast<Real>(detail::mod(-(k * r + m * s), side)) / static_cast<Real>(side);
      coeffs[{k, m}] = detail::turn<Real>(lattice + shift) / static_cast<Real>(side);
    }
  }
  return TrigPolynomial<Real>(std::move(coeffs));
}

}  // namespace torusweyl

#endif  // TORUSWEYL_DEQUANTIZE_HPP
