#pragma once

// Test-only reference computations. Nothing here calls into the library's
// numerics: determinants by permutation expansion, inverses by Gauss-Jordan,
// and the soliton fields from hand-expanded scalar formulas.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;
const C I{0.0, 1.0};

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<C>(n)); }

// Leibniz expansion; fine up to n = 7 (5040 terms).
inline C leibniz_det(const Mat& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  C total = 0.0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    C term = inversions % 2 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) term *= a[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Gauss-Jordan with partial pivoting on [A | I].
inline Mat gauss_jordan_inverse(Mat a) {
  const std::size_t n = a.size();
  Mat inv = zeros(n);
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    std::swap(a[c], a[p]);
    std::swap(inv[c], inv[p]);
    const C d = a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] /= d;
      inv[c][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const C f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

// TypeII N = 1, lambda = i eta: theta = -eta x + 4 eta^3 t is real and M is
// the scalar (2 S e^{2 theta} + e^{-2 theta}) / (2 i eta), so
// u = 2i c e^{theta} e^{-theta} / M = -4 eta c / (2 S e^{2 theta} + e^{-2 theta}).
inline std::array<C, 3> type2_one_soliton(C a, C g, C r, double eta, double x, double t) {
  const double th = -eta * x + 4.0 * eta * eta * eta * t;
  const double s = std::norm(a) + std::norm(g) + std::norm(r);
  const double den = 2.0 * s * std::exp(2.0 * th) + std::exp(-2.0 * th);
  const double f = -4.0 * eta / den;
  return {f * a, f * g, f * r};
}

struct TypeOneSeed {
  C alpha, beta, gamma, mu, rho, delta;
};

// TypeI N-soliton with the 2N x 2N matrix written out block by block.
// Base index j carries w_j = (alpha, beta, gamma, mu, rho, delta) with
// exponent theta_j; mirrored index N + j carries sigma conj(w_j) with
// exponent conj(theta_j), because theta(-conj l) = conj(theta(l)).
// With s_j = sigma conj(w_j) and <a,b> = sum conj(a_i) b_i:
//   base/base     (<w_k,w_j> e^{conj th_k + th_j} + e^{-conj th_k - th_j}) / (l_j - conj l_k)
//   base/mirror   (<w_k,s_j> e^{conj th_k + conj th_j} + e^{-conj th_k - conj th_j}) / (-conj l_j - conj l_k)
//   mirror/base   (<s_k,w_j> e^{th_k + th_j} + e^{-th_k - th_j}) / (l_j + l_k)
//   mirror/mirror (<s_k,s_j> e^{th_k + conj th_j} + e^{-th_k - conj th_j}) / (l_k - conj l_j)
// and u_m = 2i sum_kj (v_k)_{2m-1} (vhat_j)_7 (M^{-1})_kj.
inline std::array<C, 3> type1_block_fields(const std::vector<C>& lam, const std::vector<TypeOneSeed>& seeds,
                                           double x, double t) {
  const std::size_t n = lam.size();
  auto w = [&](std::size_t j) {
    const auto& s = seeds[j];
    return std::array<C, 6>{s.alpha, s.beta, s.gamma, s.mu, s.rho, s.delta};
  };
  auto sig_conj = [&](std::size_t j) {
    const auto v = w(j);
    return std::array<C, 6>{std::conj(v[1]), std::conj(v[0]), std::conj(v[3]),
                            std::conj(v[2]), std::conj(v[5]), std::conj(v[4])};
  };
  auto th = [&](std::size_t j) { return I * lam[j] * x + 4.0 * I * lam[j] * lam[j] * lam[j] * t; };
  auto herm = [](const std::array<C, 6>& a, const std::array<C, 6>& b) {
    C s = 0.0;
    for (std::size_t i = 0; i < 6; ++i) s += std::conj(a[i]) * b[i];
    return s;
  };

  Mat m = zeros(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      const C tk = th(k), tj = th(j);
      m[k][j] = (herm(w(k), w(j)) * std::exp(std::conj(tk) + tj) + std::exp(-std::conj(tk) - tj)) /
                (lam[j] - std::conj(lam[k]));
      m[k][n + j] = (herm(w(k), sig_conj(j)) * std::exp(std::conj(tk) + std::conj(tj)) +
                     std::exp(-std::conj(tk) - std::conj(tj))) /
                    (-std::conj(lam[j]) - std::conj(lam[k]));
      m[n + k][j] = (herm(sig_conj(k), w(j)) * std::exp(tk + tj) + std::exp(-tk - tj)) / (lam[j] + lam[k]);
      m[n + k][n + j] = (herm(sig_conj(k), sig_conj(j)) * std::exp(tk + std::conj(tj)) +
                         std::exp(-tk - std::conj(tj))) /
                        (-std::conj(lam[j]) + lam[k]);
    }
  }
  const Mat inv = gauss_jordan_inverse(m);

  std::array<C, 3> u{};
  for (std::size_t k = 0; k < 2 * n; ++k) {
    const bool mk = k >= n;
    const std::size_t bk = mk ? k - n : k;
    const auto col = mk ? sig_conj(bk) : w(bk);
    const C ek = mk ? std::exp(std::conj(th(bk))) : std::exp(th(bk));
    for (std::size_t j = 0; j < 2 * n; ++j) {
      const bool mj = j >= n;
      const std::size_t bj = mj ? j - n : j;
      // (vhat_j)_7 = conj(e^{-theta}) of the j-th exponent
      const C row7 = mj ? std::exp(-th(bj)) : std::exp(-std::conj(th(bj)));
      for (std::size_t q = 0; q < 3; ++q) u[q] += 2.0 * I * col[2 * q] * ek * row7 * inv[k][j];
    }
  }
  return u;
}

// N = 1 P1 from the rank-one formula
//   P1(l) = I - (l1 - conj l1) / (l - conj l1) * v v^dagger / (v^dagger v).
inline Mat rank_one_P1(const std::array<C, 7>& v, C l1, C l) {
  C vv = 0.0;
  for (const C& c : v) vv += std::norm(c);
  Mat p = zeros(7);
  const C f = (l1 - std::conj(l1)) / ((l - std::conj(l1)) * vv);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) p[i][j] = (i == j ? 1.0 : 0.0) - f * v[i] * std::conj(v[j]);
  return p;
}

}  // namespace oracle
