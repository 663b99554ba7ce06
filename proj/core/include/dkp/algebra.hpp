#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dkp {

/// Exact Gaussian integer a + i b.  Beta-matrix entries never leave
/// {0, +-1, +-i}, so triple products stay far inside 64-bit range and
/// every algebra check below is exact, with no floating tolerance.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  friend constexpr GaussInt operator+(GaussInt x, GaussInt y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend constexpr GaussInt operator-(GaussInt x, GaussInt y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend constexpr GaussInt operator*(GaussInt x, GaussInt y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend constexpr bool operator==(GaussInt x, GaussInt y) = default;

  constexpr GaussInt conj() const { return {re, -im}; }
  constexpr bool is_zero() const { return re == 0 && im == 0; }
  /// Chebyshev magnitude max(|re|, |im|); 0 iff the entry is 0.
  constexpr std::int64_t max_abs() const {
    std::int64_t ar = re < 0 ? -re : re;
    std::int64_t ai = im < 0 ? -im : im;
    return ar > ai ? ar : ai;
  }
};

/// Dense square matrix over Gaussian integers.
class GaussMatrix {
 public:
  GaussMatrix() = default;
  explicit GaussMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static GaussMatrix identity(int n) {
    GaussMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = {1, 0};
    return m;
  }

  int size() const { return n_; }

  GaussInt& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const GaussInt& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  friend GaussMatrix operator*(const GaussMatrix& x, const GaussMatrix& y);
  friend GaussMatrix operator+(const GaussMatrix& x, const GaussMatrix& y);
  friend GaussMatrix operator-(const GaussMatrix& x, const GaussMatrix& y);

  GaussMatrix scaled(std::int64_t s) const;
  GaussMatrix dagger() const;  // conjugate transpose
  GaussMatrix transpose() const;
  GaussInt trace() const;
  std::int64_t max_abs() const;  // max entry magnitude
  bool is_diagonal() const;

  friend bool operator==(const GaussMatrix& x, const GaussMatrix& y) = default;

 private:
  int n_ = 0;
  std::vector<GaussInt> a_;
};

enum class SpinSector { spin0, spin1 };

/// One irreducible DKP representation: the four beta matrices together with
/// eta0 = 2 beta^0 beta^0 - 1, which makes them Hermitian in the DKP sense.
struct BetaRep {
  SpinSector sector = SpinSector::spin0;
  int dimension = 0;                // 5 (spin-0) or 10 (spin-1)
  std::array<GaussMatrix, 4> beta;  // beta^0 .. beta^3
  GaussMatrix eta0;
};

/// Build the standard 5-dim (spin-0) or 10-dim (spin-1) representation.
BetaRep build_rep(SpinSector sector);

/// Max entry magnitude over all 64 index triples (mu, nu, la) of
///   b^mu b^nu b^la + b^la b^nu b^mu - g^{mu nu} b^la - g^{la nu} b^mu
/// with metric diag(1,-1,-1,-1).  Zero iff the trilinear algebra holds.
std::int64_t check_dkp_algebra(const BetaRep& rep);

/// Max entry magnitude over mu of (eta0 b^mu)^dagger - eta0 b^mu.
std::int64_t check_eta_hermiticity(const BetaRep& rep);

}  // namespace dkp
