#ifndef TORUSWEYL_CORE_HPP
#define TORUSWEYL_CORE_HPP

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace torusweyl {

template <typename Real>
using Complex = std::complex<Real>;

/// Dense complex matrix. Used for operators (N x N), lattice grids (2N x 2N)
/// and reduced symbols (N x N).
template <typename Real>
using Matrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using Vector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

/// Operand shapes or representations do not agree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-shaped but outside the operation's domain (non-finite
/// samples, non-real Hamiltonian, non-positive step count, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

/// Nonnegative representative of a modulo m (m > 0).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline Eigen::Index wrap(Eigen::Index a, Eigen::Index m) {
  const Eigen::Index r = a % m;
  return r < 0 ? r + m : r;
}

/// (-1)^k for any integer k.
inline int parity_sign(std::int64_t k) { return (k & 1) ? -1 : 1; }

/// e^{2 pi i t}, with t first reduced to [0, 1).
template <typename Real>
Complex<Real> turn(Real t) {
  t -= std::floor(t);
  const Real angle = Real(2) * std::numbers::pi_v<Real> * t;
  return {std::cos(angle), std::sin(angle)};
}

/// e^{2 pi i k / m} for integers k, m with m > 0. For even m the upper half
/// is the exact negation of the lower half, so (-1) factors are bit-exact.
template <typename Real>
Complex<Real> root_of_unity(std::int64_t k, std::int64_t m) {
  std::int64_t r = mod(k, m);
  if (m % 2 == 0 && r >= m / 2) return -root_of_unity<Real>(r - m / 2, m);
  if (r == 0) return Complex<Real>(1);
  return turn<Real>(static_cast<Real>(r) / static_cast<Real>(m));
}

template <typename Derived>
auto max_abs(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  return m.size() == 0 ? Real(0) : m.cwiseAbs().maxCoeff();
}

}  // namespace detail

/// Largest entrywise modulus of a - b.
template <typename DerivedA, typename DerivedB>
auto max_deviation(const Eigen::MatrixBase<DerivedA>& a,
                   const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("max_deviation: shape mismatch");
  }
  return detail::max_abs(a - b);
}

}  // namespace torusweyl

#endif  // TORUSWEYL_CORE_HPP
