#include "dkp/algebra.hpp"

namespace dkp {

GaussMatrix operator*(const GaussMatrix& x, const GaussMatrix& y) {
  const int n = x.n_;
  if (n != y.n_) throw std::invalid_argument("GaussMatrix: size mismatch");
  GaussMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const GaussInt xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        r.at(i, j) = r.at(i, j) + xik * y.at(k, j);
      }
    }
  }
  return r;
}

GaussMatrix operator+(const GaussMatrix& x, const GaussMatrix& y) {
  const int n = x.n_;
  if (n != y.n_) throw std::invalid_argument("GaussMatrix: size mismatch");
  GaussMatrix r(n);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
  return r;
}

GaussMatrix operator-(const GaussMatrix& x, const GaussMatrix& y) {
  const int n = x.n_;
  if (n != y.n_) throw std::invalid_argument("GaussMatrix: size mismatch");
  GaussMatrix r(n);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
  return r;
}

GaussMatrix GaussMatrix::scaled(std::int64_t s) const {
  GaussMatrix r(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * GaussInt{s, 0};
  return r;
}

GaussMatrix GaussMatrix::dagger() const {
  GaussMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

GaussMatrix GaussMatrix::transpose() const {
  GaussMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

GaussInt GaussMatrix::trace() const {
  GaussInt t{0, 0};
  for (int i = 0; i < n_; ++i) t = t + at(i, i);
  return t;
}

std::int64_t GaussMatrix::max_abs() const {
  std::int64_t m = 0;
  for (const auto& e : a_) m = std::max(m, e.max_abs());
  return m;
}

bool GaussMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

namespace {

BetaRep build_spin0() {
  BetaRep rep;
  rep.sector = SpinSector::spin0;
  rep.dimension = 5;
  for (auto& b : rep.beta) b = GaussMatrix(5);

  // beta^0 = [[theta, 0], [0, 0]] with theta = [[0,1],[1,0]].
  rep.beta[0].at(0, 1) = {1, 0};
  rep.beta[0].at(1, 0) = {1, 0};

  // beta^i = [[0, rho_i], [-rho_i^T, 0]], rho_i a 2x3 block whose only
  // nonzero entry is (rho_i)_{1i} = -1.
  for (int i = 1; i <= 3; ++i) {
    rep.beta[i].at(0, 1 + i) = {-1, 0};
    rep.beta[i].at(1 + i, 0) = {1, 0};
  }
  return rep;
}

BetaRep build_spin1() {
  BetaRep rep;
  rep.sector = SpinSector::spin1;
  rep.dimension = 10;
  for (auto& b : rep.beta) b = GaussMatrix(10);

  // Row/column blocks: {0}, {1..3}, {4..6}, {7..9}.
  // beta^0 couples blocks 2 and 3 through identity blocks.
  for (int j = 0; j < 3; ++j) {
    rep.beta[0].at(1 + j, 4 + j) = {1, 0};
    rep.beta[0].at(4 + j, 1 + j) = {1, 0};
  }

  // beta^i: e_i row in block (1,3), -e_i^T in (3,1), and -i s_i in the
  // (2,4) and (4,2) blocks with (s_i)_{jk} = -i eps_{ijk}, so the -i s_i
  // entries are real: (-i s_i)_{jk} = -eps_{ijk}.
  auto eps = [](int i, int j, int k) -> int {
    return ((i - j) * (j - k) * (k - i)) / 2;  // Levi-Civita on {1,2,3}
  };
  for (int i = 1; i <= 3; ++i) {
    rep.beta[i].at(0, 4 + (i - 1)) = {1, 0};
    rep.beta[i].at(4 + (i - 1), 0) = {-1, 0};
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        const int e = eps(i, j, k);
        if (e == 0) continue;
        rep.beta[i].at(1 + (j - 1), 7 + (k - 1)) = {-e, 0};
        rep.beta[i].at(7 + (j - 1), 1 + (k - 1)) = {-e, 0};
      }
    }
  }
  return rep;
}

}  // namespace

BetaRep build_rep(SpinSector sector) {
  BetaRep rep = (sector == SpinSector::spin0) ? build_spin0() : build_spin1();
  rep.eta0 = (rep.beta[0] * rep.beta[0]).scaled(2) -
             GaussMatrix::identity(rep.dimension);
  return rep;
}

std::int64_t check_dkp_algebra(const BetaRep& rep) {
  static constexpr std::array<std::int64_t, 4> metric{1, -1, -1, -1};
  auto g = [](int mu, int nu) -> std::int64_t {
    return mu == nu ? metric[mu] : 0;
  };
  std::int64_t worst = 0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      for (int la = 0; la < 4; ++la) {
        const GaussMatrix& bm = rep.beta[mu];
        const GaussMatrix& bn = rep.beta[nu];
        const GaussMatrix& bl = rep.beta[la];
        GaussMatrix lhs = bm * bn * bl + bl * bn * bm;
        GaussMatrix rhs = bl.scaled(g(mu, nu)) + bm.scaled(g(la, nu));
        worst = std::max(worst, (lhs - rhs).max_abs());
      }
    }
  }
  return worst;
}

std::int64_t check_eta_hermiticity(const BetaRep& rep) {
  std::int64_t worst = 0;
  for (int mu = 0; mu < 4; ++mu) {
    GaussMatrix m = rep.eta0 * rep.beta[mu];
    worst = std::max(worst, (m.dagger() - m).max_abs());
  }
  return worst;
}

}  // namespace dkp
