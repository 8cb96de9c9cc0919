#ifndef TORUSWEYL_QUANTIZE_HPP
#define TORUSWEYL_QUANTIZE_HPP

#include "torusweyl/symbols.hpp"

namespace torusweyl {

/// Op^W(alpha) = sum over coefficients of alpha_hat(n1, n2) T(n1, n2).
/// Frequencies are passed to heisenberg() as given, without folding.
template <typename Real>
Matrix<Real> quantize_fourier(const TrigPolynomial<Real>& tp, const Representation<Real>& rep) {
  Matrix<Real> op = Matrix<Real>::Zero(rep.dim(), rep.dim());
  for (const auto& [f, c] : tp.coefficients()) op += c * heisenberg(rep, f.n1, f.n2);
  return op;
}

/// Forward DFT along the second lattice index, unnormalized:
/// F2(m, r) = sum_j grid(m, j) e^{-2 pi i r j / 2N}. Direct summation.
template <typename Real>
Matrix<Real> dft_second_index(const Matrix<Real>& grid) {
  const std::int64_t side = grid.cols();
  Matrix<Real> kernel(side, side);
  for (std::int64_t j = 0; j < side; ++j) {
    for (std::int64_t r = 0; r < side; ++r) kernel(j, r) = detail::root_of_unity<Real>(-r * j, side);
  }
  return grid * kernel;
}

/// Weyl quantization from lattice samples:
/// <u_n, Op u_j> = (F2(j+n, j-n) + F2(j+n+N, j-n+N)) / 2N, indices mod 2N.
template <typename Real>
Matrix<Real> quantize_sampled(const SampledSymbol<Real>& sym) {
  const Eigen::Index N = sym.dim();
  const Eigen::Index side = 2 * N;
  const Matrix<Real> F = dft_second_index(sym.grid());
  Matrix<Real> op(N, N);
  for (Eigen::Index n = 0; n < N; ++n) {
    for (Eigen::Index j = 0; j < N; ++j) {
      op(n, j) = (F(detail::wrap(j + n, side), detail::wrap(j - n, side)) +
                  F(detail::wrap(j + n + N, side), detail::wrap(j - n + N, side))) /
                 static_cast<Real>(side);
    }
  }
  return op;
}

/// Entrywise conjugate; quantizes to the adjoint operator.
template <typename Real>
SampledSymbol<Real> adjoint_symbol(const SampledSymbol<Real>& sym) {
  return SampledSymbol<Real>(sym.rep(), sym.grid().conjugate());
}

/// Rebuilds the operator from its reduced symbol:
/// A_{m,l} = (1/2N) sum_{s<N} R_{m+l, s} e^{pi i s (m-l)/N}.
/// Row m+l >= N is read through the symmetric extension,
/// R_{m+l, s} = (-1)^s R_{m+l-N, s}.
template <typename Real>
Matrix<Real> operator_from_reduced(const ReducedSymbol<Real>& red) {
  const std::int64_t N = red.dim();
  if (red.grid.cols() != N) throw DimensionError("operator_from_reduced: reduced symbol must be square");
  Matrix<Real> op(N, N);
  for (std::int64_t m = 0; m < N; ++m) {
    for (std::int64_t l = 0; l < N; ++l) {
      const std::int64_t row = m + l;
      Complex<Real> acc(0);
      for (std::int64_t s = 0; s < N; ++s) {
        Complex<Real> v = red.grid(row % N, s);
        if (row >= N && (s & 1)) v = -v;
        acc += v * detail::root_of_unity<Real>(s * (m - l), 2 * N);
      }
      op(m, l) = acc / static_cast<Real>(2 * N);
    }
  }
  return op;
}

}  // namespace torusweyl

#endif  // TORUSWEYL_QUANTIZE_HPP
