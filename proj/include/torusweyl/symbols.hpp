#ifndef TORUSWEYL_SYMBOLS_HPP
#define TORUSWEYL_SYMBOLS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <random>

#include "torusweyl/representation.hpp"

namespace torusweyl {

/// Integer frequency (n1, n2) of a Fourier mode e^{2 pi i (n1 x + n2 p)}.
struct Frequency {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  friend auto operator<=>(const Frequency&, const Frequency&) = default;
};

/// A symbol given in closed form by finitely many Fourier coefficients.
template <typename Real = double>
class TrigPolynomial {
 public:
  using Coefficients = std::map<Frequency, Complex<Real>>;

  TrigPolynomial() = default;
  explicit TrigPolynomial(Coefficients coeffs) : coeffs_(std::move(coeffs)) {}

  static TrigPolynomial constant(Complex<Real> c) { return mode(0, 0, c); }
  static TrigPolynomial mode(std::int64_t n1, std::int64_t n2, Complex<Real> c = Real(1)) {
    return TrigPolynomial().add(n1, n2, c);
  }

  /// Adds c to the coefficient of (n1, n2).
  TrigPolynomial& add(std::int64_t n1, std::int64_t n2, Complex<Real> c) {
    coeffs_[{n1, n2}] += c;
    return *this;
  }

  Complex<Real> coefficient(std::int64_t n1, std::int64_t n2) const {
    auto it = coeffs_.find({n1, n2});
    return it == coeffs_.end() ? Complex<Real>(0) : it->second;
  }

  const Coefficients& coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }

  friend TrigPolynomial operator+(TrigPolynomial a, const TrigPolynomial& b) {
    for (const auto& [f, c] : b.coeffs_) a.coeffs_[f] += c;
    return a;
  }
  friend TrigPolynomial operator*(Complex<Real> s, TrigPolynomial a) {
    for (auto& [f, c] : a.coeffs_) c *= s;
    return a;
  }

 private:
  Coefficients coeffs_;
};

/// Values of a symbol on the lattice L(theta, N):
/// grid(r, s) = alpha(r/2N + theta1/N, s/2N + theta2/N), r, s in Z_{2N}.
/// Rows follow the position index r, columns the momentum index s.
template <typename Real = double>
class SampledSymbol {
 public:
  SampledSymbol(Representation<Real> rep, Matrix<Real> grid)
      : rep_(std::move(rep)), grid_(std::move(grid)) {
    const Eigen::Index side = rep_.lattice_side();
    if (grid_.rows() != side || grid_.cols() != side) {
      throw DimensionError("SampledSymbol: grid must be 2N x 2N");
    }
    if (!grid_.allFinite()) throw DomainError("SampledSymbol: non-finite sample");
  }

  static SampledSymbol zero(const Representation<Real>& rep) {
    const Eigen::Index side = rep.lattice_side();
    return SampledSymbol(rep, Matrix<Real>::Zero(side, side));
  }
  static SampledSymbol constant(const Representation<Real>& rep, Complex<Real> c) {
    const Eigen::Index side = rep.lattice_side();
    return SampledSymbol(rep, Matrix<Real>::Constant(side, side, c));
  }

  const Representation<Real>& rep() const { return rep_; }
  const Matrix<Real>& grid() const { return grid_; }
  Eigen::Index dim() const { return rep_.dim(); }

  /// Entry at lattice indices taken modulo 2N.
  Complex<Real> at(Eigen::Index r, Eigen::Index s) const {
    const Eigen::Index side = rep_.lattice_side();
    return grid_(detail::wrap(r, side), detail::wrap(s, side));
  }

  /// Lattice coordinates (x, p) of slot (r, s).
  std::pair<Real, Real> point(Eigen::Index r, Eigen::Index s) const {
    const Real twoN = static_cast<Real>(rep_.lattice_side());
    const Real N = static_cast<Real>(rep_.dim());
    return {static_cast<Real>(r) / twoN + rep_.theta1() / N,
            static_cast<Real>(s) / twoN + rep_.theta2() / N};
  }

  friend SampledSymbol operator+(const SampledSymbol& a, const SampledSymbol& b) {
    require_same(a.rep_, b.rep_, "SampledSymbol +");
    return SampledSymbol(a.rep_, a.grid_ + b.grid_);
  }
  friend SampledSymbol operator-(const SampledSymbol& a, const SampledSymbol& b) {
    require_same(a.rep_, b.rep_, "SampledSymbol -");
    return SampledSymbol(a.rep_, a.grid_ - b.grid_);
  }
  friend SampledSymbol operator*(Complex<Real> s, const SampledSymbol& a) {
    return SampledSymbol(a.rep_, s * a.grid_);
  }

 private:
  Representation<Real> rep_;
  Matrix<Real> grid_;
};

/// N x N image of a lattice grid under the four-term fold Delta. Two symbols
/// quantize to the same operator exactly when their reduced symbols agree.
template <typename Real = double>
struct ReducedSymbol {
  Matrix<Real> grid;
  Eigen::Index dim() const { return grid.rows(); }
};

/// Exact finite Fourier sum at (x mod 1, p mod 1).
template <typename Real>
Complex<Real> evaluate(const TrigPolynomial<Real>& tp, Real x, Real p) {
  x -= std::floor(x);
  p -= std::floor(p);
  Complex<Real> sum(0);
  for (const auto& [f, c] : tp.coefficients()) {
    // frac(n x) computed separately per axis keeps the phase argument small
    Real tx = static_cast<Real>(f.n1) * x;
    Real tp_ = static_cast<Real>(f.n2) * p;
    tx -= std::floor(tx);
    tp_ -= std::floor(tp_);
    sum += c * detail::turn<Real>(tx + tp_);
  }
  return sum;
}

/// The sampling operator mu_{theta,N}.
template <typename Real>
SampledSymbol<Real> sample(const TrigPolynomial<Real>& tp, const Representation<Real>& rep) {
  const std::int64_t side = rep.lattice_side();
  const Real N = static_cast<Real>(rep.dim());
  Matrix<Real> grid = Matrix<Real>::Zero(side, side);
  for (const auto& [f, c] : tp.coefficients()) {
    // n1 x = n1 r/2N + n1 theta1/N: the first term is reduced exactly
    Real shift = static_cast<Real>(f.n1) * rep.theta1() / N +
                 static_cast<Real>(f.n2) * rep.theta2() / N;
    shift -= std::floor(shift);
    for (std::int64_t r = 0; r < side; ++r) {
      for (std::int64_t s = 0; s < side; ++s) {
        const std::int64_t numer = detail::mod(f.n1 * r + f.n2 * s, side);
        grid(r, s) += c * detail::turn<Real>(static_cast<Real>(numer) / static_cast<Real>(side) + shift);
      }
    }
  }
  return SampledSymbol<Real>(rep, std::move(grid));
}

/// Delta(A)_{j,k} = A_{j,k} + (-1)^k A_{j+N,k} + (-1)^j A_{j,k+N}
///                + (-1)^{j+k+N} A_{j+N,k+N}, for a raw 2N x 2N grid.
template <typename Derived>
auto delta(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  using Out = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (A.rows() != A.cols() || A.rows() % 2 != 0) {
    throw DimensionError("delta: grid must be 2N x 2N");
  }
  const Eigen::Index N = A.rows() / 2;
  Out D(N, N);
  for (Eigen::Index j = 0; j < N; ++j) {
    for (Eigen::Index k = 0; k < N; ++k) {
      D(j, k) = A(j, k) + Scalar(detail::parity_sign(k)) * A(j + N, k) +
                Scalar(detail::parity_sign(j)) * A(j, k + N) +
                Scalar(detail::parity_sign(j + k + N)) * A(j + N, k + N);
    }
  }
  return D;
}

template <typename Real>
ReducedSymbol<Real> delta(const SampledSymbol<Real>& sym) {
  return {delta(sym.grid())};
}

/// Extends an N x N block to the unique 2N x 2N grid obeying
/// g(m+N, l) = (-1)^l g(m, l), g(m, l+N) = (-1)^m g(m, l),
/// g(m+N, l+N) = (-1)^{m+l+N} g(m, l). Delta maps the result to 4 x block.
template <typename Derived>
auto symmetric_extension(const Eigen::MatrixBase<Derived>& block) {
  using Scalar = typename Derived::Scalar;
  using Out = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (block.rows() != block.cols()) throw DimensionError("symmetric_extension: block must be square");
  const Eigen::Index N = block.rows();
  Out g(2 * N, 2 * N);
  for (Eigen::Index m = 0; m < N; ++m) {
    for (Eigen::Index l = 0; l < N; ++l) {
      const Scalar v = block(m, l);
      g(m, l) = v;
      g(m + N, l) = Scalar(detail::parity_sign(l)) * v;
      g(m, l + N) = Scalar(detail::parity_sign(m)) * v;
      g(m + N, l + N) = Scalar(detail::parity_sign(m + l + N)) * v;
    }
  }
  return g;
}

/// True iff Delta(a) and Delta(b) agree to tol relative to the larger grid
/// magnitude (floored at 1).
template <typename Real>
bool equivalent(const SampledSymbol<Real>& a, const SampledSymbol<Real>& b, Real tol = Real(1e-10)) {
  if (a.dim() != b.dim()) throw DimensionError("equivalent: incompatible representations");
  require_same(a.rep(), b.rep(), "equivalent");
  const Real scale = std::max({Real(1), detail::max_abs(a.grid()), detail::max_abs(b.grid())});
  return max_deviation(delta(a.grid()), delta(b.grid())) <= tol * scale;
}

/// A random element of Ker Delta. The three off-principal blocks are drawn
/// from a seeded complex normal; the principal block is solved so that every
/// four-term fold vanishes. Seed 0 yields the zero grid.
template <typename Real>
SampledSymbol<Real> kernel_element(const Representation<Real>& rep, std::uint64_t seed) {
  const Eigen::Index N = rep.dim();
  Matrix<Real> g = Matrix<Real>::Zero(2 * N, 2 * N);
  if (seed == 0) return SampledSymbol<Real>(rep, std::move(g));

  std::mt19937_64 rng(seed);
  std::normal_distribution<Real> normal;
  auto draw = [&] { return Complex<Real>(normal(rng), normal(rng)); };
  for (Eigen::Index j = 0; j < N; ++j) {
    for (Eigen::Index k = 0; k < N; ++k) {
      g(j + N, k) = draw();
      g(j, k + N) = draw();
      g(j + N, k + N) = draw();
    }
  }
  for (Eigen::Index j = 0; j < N; ++j) {
    for (Eigen::Index k = 0; k < N; ++k) {
      g(j, k) = -(Real(detail::parity_sign(k)) * g(j + N, k) +
                  Real(detail::parity_sign(j)) * g(j, k + N) +
                  Real(detail::parity_sign(j + k + N)) * g(j + N, k + N));
    }
  }
  return SampledSymbol<Real>(rep, std::move(g));
}

}  // namespace torusweyl

#endif  // TORUSWEYL_SYMBOLS_HPP
