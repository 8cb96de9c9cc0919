#ifndef TORUSWEYL_REPRESENTATION_HPP
#define TORUSWEYL_REPRESENTATION_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>

#include "torusweyl/core.hpp"

namespace torusweyl {

/// The N-dimensional unitary representation of the discrete Heisenberg group
/// labelled by theta = (theta1, theta2) on the torus. Fixes h = 1/N.
///
/// Theta components are reduced into [0, 1) on construction; two
/// representations compare equal only if the reduced values match bit for bit.
template <typename Real = double>
class Representation {
 public:
  Representation(Real theta1, Real theta2, Eigen::Index dim)
      : theta1_(reduce(theta1)), theta2_(reduce(theta2)), dim_(dim) {
    if (dim < 1) throw DomainError("Representation: dimension must be >= 1");
    if (!std::isfinite(theta1) || !std::isfinite(theta2)) {
      throw DomainError("Representation: theta must be finite");
    }
  }

  Real theta1() const { return theta1_; }
  Real theta2() const { return theta2_; }
  Eigen::Index dim() const { return dim_; }
  /// Side of the sampling lattice, 2N.
  Eigen::Index lattice_side() const { return 2 * dim_; }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  static Real reduce(Real t) {
    Real r = t - std::floor(t);
    // floor can round a tiny negative value up to exactly 1
    return r >= Real(1) ? Real(0) : r;
  }

  Real theta1_;
  Real theta2_;
  Eigen::Index dim_;
};

template <typename Real>
Representation(Real, Real, Eigen::Index) -> Representation<Real>;

template <typename Real>
void require_same(const Representation<Real>& a, const Representation<Real>& b,
                  const char* where) {
  if (!(a == b)) throw DimensionError(std::string(where) + ": representation mismatch");
}

/// T_{theta,N}(n1, n2): column j carries
/// e^{-pi i n1 n2/N} e^{2 pi i n1 (j + theta1)/N} e^{2 pi i n2 theta2/N}
/// in row j - n2 (mod N). Each entry is a single complex exponential whose
/// integer part is reduced exactly before the real part is added.
template <typename Real>
Matrix<Real> heisenberg(const Representation<Real>& rep, std::int64_t n1,
                        std::int64_t n2) {
  const std::int64_t N = rep.dim();
  const Real invN = Real(1) / static_cast<Real>(N);
  // Exact rational part of the cocycle phase, in units of 1/(2N) turns.
  const std::int64_t cocycle = detail::mod(-detail::mod(n1, 2 * N) * detail::mod(n2, 2 * N), 2 * N);
  const Real theta_part =
      static_cast<Real>(n1) * rep.theta1() * invN + static_cast<Real>(n2) * rep.theta2() * invN;

  Matrix<Real> T = Matrix<Real>::Zero(N, N);
  for (std::int64_t j = 0; j < N; ++j) {
    // 2 n1 j / (2N): combine with the cocycle into one integer numerator
    const std::int64_t numer = detail::mod(cocycle + 2 * detail::mod(n1, N) * j, 2 * N);
    const Real t = static_cast<Real>(numer) / static_cast<Real>(2 * N) + theta_part;
    T(detail::mod(j - n2, N), j) = detail::turn<Real>(t);
  }
  return T;
}

/// Clock generator t1 = T(1, 0): diag(e^{2 pi i (j + theta1)/N}).
template <typename Real>
Matrix<Real> generator_t1(const Representation<Real>& rep) {
  return heisenberg(rep, 1, 0);
}

/// Shift generator t2 = T(0, 1): u_j -> e^{2 pi i theta2/N} u_{j-1}.
template <typename Real>
Matrix<Real> generator_t2(const Representation<Real>& rep) {
  return heisenberg(rep, 0, 1);
}

/// One sampled integer tuple for the representation-law check. (m1, m2) is
/// the second group element; it doubles as the shift count for the
/// periodicity laws.
struct LawSample {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;
};

template <typename Real>
struct RepresentationLawReport {
  Real adjoint = 0;        // T(n)* = T(-n)
  Real product = 0;        // T(n)T(m) = e^{-pi i (n1 m2 - n2 m1)/N} T(n+m)
  Real commutation = 0;    // t1^a t2^b = e^{-2 pi i a b/N} t2^b t1^a
  Real period_2n = 0;      // T(n + 2N m) = e^{2 pi i (2 m1 theta1 + 2 m2 theta2)} T(n)
  Real period_n = 0;       // T(n1 + m1 N, 0), T(0, n2 + m2 N)
  Real unitarity = 0;      // T T* = I

  Real max() const {
    return std::max({adjoint, product, commutation, period_2n, period_n, unitarity});
  }
};

namespace detail {

template <typename Real>
Matrix<Real> matrix_power(const Matrix<Real>& unitary, std::int64_t k) {
  Matrix<Real> base = k < 0 ? Matrix<Real>(unitary.adjoint()) : unitary;
  Matrix<Real> out = Matrix<Real>::Identity(unitary.rows(), unitary.cols());
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

}  // namespace detail

/// Evaluates the algebraic laws of T_{theta,N} on every sample and returns
/// the largest elementwise deviation per law. Never throws on a violated law;
/// callers assert on the report.
template <typename Real>
RepresentationLawReport<Real> check_representation_laws(const Representation<Real>& rep,
                                                        std::span<const LawSample> samples) {
  using C = Complex<Real>;
  const std::int64_t N = rep.dim();
  const Matrix<Real> I = Matrix<Real>::Identity(N, N);
  const Matrix<Real> t1 = generator_t1(rep);
  const Matrix<Real> t2 = generator_t2(rep);

  RepresentationLawReport<Real> report;
  auto bump = [](Real& slot, Real value) { slot = std::max(slot, value); };

  for (const LawSample& s : samples) {
    const Matrix<Real> Tn = heisenberg(rep, s.n1, s.n2);
    const Matrix<Real> Tm = heisenberg(rep, s.m1, s.m2);

    bump(report.unitarity, max_deviation(Tn * Tn.adjoint(), I));
    bump(report.adjoint, max_deviation(Tn.adjoint(), heisenberg(rep, -s.n1, -s.n2)));

    const C cocycle = detail::root_of_unity<Real>(-(s.n1 * s.m2 - s.n2 * s.m1), 2 * N);
    bump(report.product,
         max_deviation(Tn * Tm, cocycle * heisenberg(rep, s.n1 + s.m1, s.n2 + s.m2)));

    const Matrix<Real> a = detail::matrix_power(t1, s.n1);
    const Matrix<Real> b = detail::matrix_power(t2, s.n2);
    const C twist = detail::root_of_unity<Real>(-s.n1 * s.n2, N);
    bump(report.commutation, max_deviation(a * b, twist * (b * a)));

    const C shift2n = detail::turn<Real>(Real(2) * static_cast<Real>(s.m1) * rep.theta1() +
                                         Real(2) * static_cast<Real>(s.m2) * rep.theta2());
    bump(report.period_2n,
         max_deviation(heisenberg(rep, s.n1 + 2 * N * s.m1, s.n2 + 2 * N * s.m2),
                       shift2n * Tn));

    const C shift1 = detail::turn<Real>(static_cast<Real>(s.m1) * rep.theta1());
    const C shift2 = detail::turn<Real>(static_cast<Real>(s.m2) * rep.theta2());
    bump(report.period_n, max_deviation(heisenberg(rep, s.n1 + s.m1 * N, 0),
                                        shift1 * heisenberg(rep, s.n1, 0)));
    bump(report.period_n, max_deviation(heisenberg(rep, 0, s.n2 + s.m2 * N),
                                        shift2 * heisenberg(rep, 0, s.n2)));
  }
  return report;
}

}  // namespace torusweyl

#endif  // TORUSWEYL_REPRESENTATION_HPP
