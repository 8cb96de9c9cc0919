#ifndef TORUSWEYL_MOYAL_HPP
#define TORUSWEYL_MOYAL_HPP

#include <Eigen/Eigenvalues>

#include "torusweyl/quantize.hpp"

namespace torusweyl {

namespace detail {

/// Phi(a, b) = e^{pi i a b / N}, a, b in 0..2N-1.
template <typename Real>
Matrix<Real> moyal_phase_table(std::int64_t N) {
  const std::int64_t side = 2 * N;
  Matrix<Real> phi(side, side);
  for (std::int64_t a = 0; a < side; ++a) {
    for (std::int64_t b = 0; b < side; ++b) phi(a, b) = root_of_unity<Real>(a * b, side);
  }
  return phi;
}

/// Grid rolled so that entry (r, s) reads g(j + r, k + s).
template <typename Real>
Matrix<Real> rolled(const Matrix<Real>& g, Eigen::Index j, Eigen::Index k) {
  const Eigen::Index side = g.rows();
  Matrix<Real> out(side, side);
  for (Eigen::Index r = 0; r < side; ++r) {
    for (Eigen::Index s = 0; s < side; ++s) out(r, s) = g((j + r) % side, (k + s) % side);
  }
  return out;
}

}  // namespace detail

/// Moyal product on the lattice:
/// (a # b)(j, k) = (2N)^{-2} sum a(j+r1, k+s1) b(j+r2, k+s2) e^{(pi i/N)(r1 s2 - r2 s1)}.
///
/// The kernel factors as e^{pi i r1 s2/N} e^{-pi i r2 s1/N}, so the inner
/// double sum over (r2, s2) is two 2N x 2N matrix products per output point.
/// Quantizes to Op(a) Op(b). The kernel does not involve theta.
template <typename Real>
SampledSymbol<Real> moyal_product(const SampledSymbol<Real>& a, const SampledSymbol<Real>& b) {
  require_same(a.rep(), b.rep(), "moyal_product");
  const Eigen::Index side = a.rep().lattice_side();
  const Matrix<Real> phi = detail::moyal_phase_table<Real>(a.dim());
  const Matrix<Real> phi_conj = phi.conjugate();
  Matrix<Real> out(side, side);
  for (Eigen::Index j = 0; j < side; ++j) {
    for (Eigen::Index k = 0; k < side; ++k) {
      // D(r2, r1) = sum_s2 b(j+r2, k+s2) e^{pi i r1 s2/N}
      const Matrix<Real> D = detail::rolled(b.grid(), j, k) * phi;
      // C(r1, s1) = sum_r2 e^{-pi i r2 s1/N} D(r2, r1)
      const Matrix<Real> C = D.transpose() * phi_conj;
      out(j, k) = detail::rolled(a.grid(), j, k).cwiseProduct(C).sum();
    }
  }
  out /= static_cast<Real>(side * side);
  return SampledSymbol<Real>(a.rep(), std::move(out));
}

/// Moyal bracket with kernel 2i sin((pi/N)(r1 s2 - r2 s1)) / (2N)^2, i.e.
/// a # b - b # a. Quantizes to the commutator [Op(a), Op(b)].
template <typename Real>
SampledSymbol<Real> moyal_bracket(const SampledSymbol<Real>& a, const SampledSymbol<Real>& b) {
  return moyal_product(a, b) - moyal_product(b, a);
}

/// Exact Poisson bracket {a, b} = a_x b_p - a_p b_x of two trig polynomials.
/// Mode pairs contribute -4 pi^2 (n1 m2 - n2 m1) a^(n) b^(m) at n + m.
template <typename Real>
TrigPolynomial<Real> poisson_bracket(const TrigPolynomial<Real>& a, const TrigPolynomial<Real>& b) {
  const Real four_pi_sq = Real(4) * std::numbers::pi_v<Real> * std::numbers::pi_v<Real>;
  TrigPolynomial<Real> out;
  for (const auto& [n, ca] : a.coefficients()) {
    for (const auto& [m, cb] : b.coefficients()) {
      const std::int64_t cross = n.n1 * m.n2 - n.n2 * m.n1;
      if (cross == 0) continue;
      out.add(n.n1 + m.n1, n.n2 + m.n2, -four_pi_sq * static_cast<Real>(cross) * ca * cb);
    }
  }
  return out;
}

/// max over L(theta, N) of |(2 pi N / i) {a, b}_# - {a, b}|.
template <typename Real>
Real semiclassical_residual(const TrigPolynomial<Real>& a, const TrigPolynomial<Real>& b,
                            const Representation<Real>& rep) {
  const Real N = static_cast<Real>(rep.dim());
  const Complex<Real> scale(0, -Real(2) * std::numbers::pi_v<Real> * N);  // 2 pi N / i
  const SampledSymbol<Real> quantum = moyal_bracket(sample(a, rep), sample(b, rep));
  const SampledSymbol<Real> classical = sample(poisson_bracket(a, b), rep);
  return max_deviation(scale * quantum.grid(), classical.grid());
}

/// A real classical Hamiltonian sampled on the lattice. Real samples make
/// H = Op(hamiltonian) Hermitian.
template <typename Real = double>
class HamiltonianSystem {
 public:
  /// Imaginary parts above imag_tol are rejected; the rest are dropped.
  explicit HamiltonianSystem(const SampledSymbol<Real>& hamiltonian, Real imag_tol = Real(1e-12))
      : hamiltonian_(hamiltonian.rep(), hamiltonian.grid().real().template cast<Complex<Real>>()) {
    if (detail::max_abs(hamiltonian.grid().imag().template cast<Complex<Real>>()) > imag_tol) {
      throw DomainError("HamiltonianSystem: Hamiltonian samples must be real");
    }
  }

  const SampledSymbol<Real>& hamiltonian() const { return hamiltonian_; }
  const Representation<Real>& rep() const { return hamiltonian_.rep(); }

  Matrix<Real> operator_hamiltonian() const {
    const Matrix<Real> H = quantize_sampled(hamiltonian_);
    return (H + H.adjoint()) / Real(2);
  }

 private:
  SampledSymbol<Real> hamiltonian_;
};

/// Heisenberg picture A(t) = U(-t) A0 U(t), U(t) = e^{-2 pi i N t H},
/// through the eigendecomposition of H.
template <typename Real>
Matrix<Real> evolve_operator(const HamiltonianSystem<Real>& sys, const Matrix<Real>& A0, Real t) {
  const Eigen::Index N = sys.rep().dim();
  if (A0.rows() != N || A0.cols() != N) throw DimensionError("evolve_operator: operator must be N x N");
  Eigen::SelfAdjointEigenSolver<Matrix<Real>> eig(sys.operator_hamiltonian());
  const Real omega = Real(2) * std::numbers::pi_v<Real> * static_cast<Real>(N) * t;
  Vector<Real> phases(N);
  for (Eigen::Index k = 0; k < N; ++k) phases(k) = std::polar(Real(1), omega * eig.eigenvalues()(k));
  const Matrix<Real>& V = eig.eigenvectors();
  const Matrix<Real> U = V * phases.asDiagonal() * V.adjoint();  // e^{+2 pi i N t H}
  return U * A0 * U.adjoint();
}

/// The linear map alpha -> {H, alpha}_# as a (2N)^2 x (2N)^2 matrix acting
/// on column-major flattened grids.
template <typename Real>
Matrix<Real> bracket_map(const SampledSymbol<Real>& H) {
  const Eigen::Index side = H.rep().lattice_side();
  const Eigen::Index n = side * side;
  Matrix<Real> L(n, n);
  Matrix<Real> unit = Matrix<Real>::Zero(side, side);
  for (Eigen::Index col = 0; col < n; ++col) {
    unit(col % side, col / side) = Real(1);
    const SampledSymbol<Real> image = moyal_bracket(H, SampledSymbol<Real>(H.rep(), unit));
    L.col(col) = image.grid().reshaped();
    unit(col % side, col / side) = Real(0);
  }
  return L;
}

/// Integrates the symbol ODE d alpha/dt = 2 pi i N {H, alpha}_# with
/// fixed-step classical RK4. The quantized trajectory follows
/// evolve_operator up to O(step^4).
template <typename Real>
SampledSymbol<Real> evolve_symbol(const HamiltonianSystem<Real>& sys, const SampledSymbol<Real>& a0,
                                  Real t, long steps) {
  require_same(sys.rep(), a0.rep(), "evolve_symbol");
  if (steps < 1) throw DomainError("evolve_symbol: steps must be >= 1");
  const Eigen::Index side = a0.rep().lattice_side();
  const Complex<Real> rate(0, Real(2) * std::numbers::pi_v<Real> * static_cast<Real>(sys.rep().dim()));
  const Matrix<Real> generator = rate * bracket_map(sys.hamiltonian());

  const Real h = t / static_cast<Real>(steps);
  Vector<Real> a = a0.grid().reshaped();
  for (long i = 0; i < steps; ++i) {
    const Vector<Real> k1 = generator * a;
    const Vector<Real> k2 = generator * (a + (h / 2) * k1);
    const Vector<Real> k3 = generator * (a + (h / 2) * k2);
    const Vector<Real> k4 = generator * (a + h * k3);
    a += (h / 6) * (k1 + Real(2) * k2 + Real(2) * k3 + k4);
  }
  return SampledSymbol<Real>(a0.rep(), a.reshaped(side, side));
}

}  // namespace torusweyl

#endif  // TORUSWEYL_MOYAL_HPP
