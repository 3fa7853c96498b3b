#include <doctest.h>

#include <cmath>

#include "tccss/errors.hpp"
#include "tccss/lax.hpp"
#include "tccss/soliton.hpp"

using namespace tccss;

namespace {

FieldEvaluator zero_field() {
  return [](double, double) { return FieldSample{}; };
}

SpectrumConfig bright() { return SpectrumConfig::type_two({{0.0, 1.0}}, {TypeIISeed{1.0, 2.0, 3.0}}); }

SpectrumConfig two_bell() {
  return SpectrumConfig::type_two({{0.0, 0.3}, {0.0, 0.5}},
                                  {TypeIISeed{1.0, {1.0, 1.0}, {1.0, 1.0}}, TypeIISeed{kI, 0.5 * kI, kI}});
}

FieldSample sample(Complex a, Complex b, Complex c) {
  FieldSample s;
  s.u = {a, b, c};
  return s;
}

GridSpec small_grid() { return GridSpec{-5.0, 5.0, 41, -0.5, 0.5, 11}; }

// Q-template matrices for arbitrary samples, built entry by entry.
ComplexMatrix template_Q(Complex a, Complex b, Complex c) {
  ComplexMatrix q(7, 7);
  const Complex col[6] = {a, std::conj(a), b, std::conj(b), c, std::conj(c)};
  for (std::size_t i = 0; i < 6; ++i) {
    q(i, 6) = col[i];
    q(6, i) = -std::conj(col[i]);
  }
  return q;
}

}  // namespace

TEST_CASE("build_Q template") {
  CHECK(build_Q(FieldSample{}).max_abs() == 0.0);

  const ComplexMatrix q = build_Q(sample(1.0, 0.0, 0.0));
  ComplexMatrix want(7, 7);
  want(0, 6) = want(1, 6) = 1.0;
  want(6, 0) = want(6, 1) = -1.0;
  CHECK((q - want).max_abs() == 0.0);

  const FieldSample s = sample({0.3, -1.2}, {2.0, 0.5}, {-0.7, 0.1});
  const ComplexMatrix g = build_Q(s);
  CHECK((g.adjoint() + g).max_abs() == 0.0);
  CHECK((g - template_Q(s[0], s[1], s[2])).max_abs() == 0.0);
  CHECK(std::abs(g.trace()) == 0.0);
}

TEST_CASE("build_U") {
  const ComplexMatrix q = build_Q(sample({0.3, -1.2}, {2.0, 0.5}, {-0.7, 0.1}));
  CHECK((build_U(0.0, q) - q).max_abs() == 0.0);
  CHECK((build_U(1.0, ComplexMatrix(7, 7)) - sigma3() * kI).max_abs() == 0.0);
  const Complex l(0.4, -1.1);
  CHECK(std::abs(build_U(l, q).trace() - 5.0 * kI * l) < 1e-15);
}

TEST_CASE("build_V") {
  const Complex l(0.6, 0.25);
  const ComplexMatrix z(7, 7);
  CHECK((build_V(l, z, z, z) - sigma3() * (4.0 * kI * l * l * l)).max_abs() < 1e-15);

  const ComplexMatrix q = template_Q({0.3, -1.2}, {2.0, 0.5}, {-0.7, 0.1});
  const ComplexMatrix qx = template_Q({1.0, 0.2}, {-0.5, 0.0}, {0.0, 0.9});
  const ComplexMatrix qxx = template_Q({-0.4, 0.4}, {0.1, 1.3}, {2.0, -2.0});
  const ComplexMatrix at0 = qx * q - q * qx - qxx + q * q * q * 2.0;
  CHECK((build_V(0.0, q, qx, qxx) - at0).max_abs() < 1e-13);

  // term-by-term reassembly at nonzero lambda
  const ComplexMatrix full = sigma3() * (4.0 * kI * l * l * l) + q * (4.0 * l * l) +
                             (q * q + qx) * sigma3() * (2.0 * kI * l) + at0;
  const ComplexMatrix v = build_V(l, q, qx, qxx);
  CHECK((v - full).max_abs() < 1e-13);
  CHECK(std::abs((v - sigma3() * (4.0 * kI * l * l * l)).trace()) < 1e-12);
}

TEST_CASE("zero field has zero residuals") {
  const StencilSpec st;
  for (Complex l : {Complex(0.3, 0.0), Complex(1.1, 0.4), Complex(-2.0, 0.1)})
    CHECK(zero_curvature_residual(zero_field(), l, 0.2, -0.1, st) == 0.0);
  CHECK(pde_residual_tccss(zero_field(), small_grid(), st).max_abs == 0.0);
  CHECK(gauge_transform_and_cnls_residual(zero_field(), small_grid(), st).max_abs == 0.0);
}

TEST_CASE("zero-curvature residual of the bright soliton") {
  const FieldEvaluator f = make_evaluator(bright());
  const StencilSpec st;
  CHECK(zero_curvature_residual(f, {0.7, 0.2}, 0.3, 0.1, st) < 1e-6);
  // the same bound for every lambda: the identity is polynomial in lambda
  for (Complex l : {Complex(0.3, 0.0), Complex(1.1, 0.4), Complex(-2.0, 0.1)})
    CHECK(zero_curvature_residual(f, l, 0.3, 0.1, st) < 1e-6);
  // a field that is not a solution fails loudly
  const FieldEvaluator wrong = [&](double x, double t) { return f(x, t) * Complex(1.3, 0.0); };
  CHECK(zero_curvature_residual(wrong, {0.7, 0.2}, 0.3, 0.1, st) > 1e-2);
}

TEST_CASE("tccSS residual on the one- and two-soliton grids") {
  const StencilSpec st;
  CHECK(pde_residual_tccss(make_evaluator(bright()), small_grid(), st).max_abs < 1e-5);
  CHECK(pde_residual_tccss(make_evaluator(two_bell()), small_grid(), st).max_abs < 1e-4);
  const auto rep = pde_residual_tccss(make_evaluator(bright()), small_grid(), st);
  CHECK(rep.rms <= rep.max_abs);
  CHECK_FALSE(rep.grid.empty());

  // time-reversed soliton is not a solution
  const FieldEvaluator f = make_evaluator(bright());
  const FieldEvaluator rev = [f](double x, double t) { return f(x, -t); };
  CHECK(pde_residual_tccss(rev, small_grid(), st).max_abs > 1e-1);
}

TEST_CASE("gauge-transformed field solves the higher-order CNLS system") {
  const StencilSpec st;
  const FieldEvaluator f = make_evaluator(bright());
  CHECK(gauge_transform_and_cnls_residual(f, small_grid(), st).max_abs < 1e-4);

  const FieldEvaluator q = gauge_transformed(f);
  for (double X : {-1.0, 0.0, 2.5})
    for (double T : {-0.4, 0.3}) {
      const FieldSample a = q(X, T), b = f(X - T / 12.0, T);
      for (std::size_t m = 0; m < 3; ++m) CHECK(std::abs(std::abs(a[m]) - std::abs(b[m])) < 1e-15);
      // phase exp{(i/6)(X - T/18)}
      const Complex ph = std::exp(kI * (X - T / 18.0) / 6.0);
      CHECK(max_abs_diff(a, b * ph) < 1e-15);
    }

  // the untransformed field does not satisfy the CNLS residual
  double worst = 0.0;
  for (double X : {-0.5, 0.0, 0.5}) worst = std::max(worst, max_abs_diff(cnls_residual_at(f, X, 0.0, st), {}));
  CHECK(worst > 1e-2);
}

TEST_CASE("finite-difference convergence order") {
  // Truncation dominates at h = 0.04 and 0.02 (rounding is ~1e-13 there).
  // log2 of the ratio must be within 0.3 of the stencil order.
  const FieldEvaluator f = make_evaluator(bright());
  for (int order : {2, 4}) {
    auto zc = [&](double h) { return zero_curvature_residual(f, {0.7, 0.2}, 0.3, 0.1, StencilSpec{h, h, order}); };
    const double r1 = zc(0.04), r2 = zc(0.02);
    const double slope = std::log2(r1 / r2);
    INFO("order " << order << " zero curvature ratio " << r1 / r2);
    CHECK(std::abs(slope - order) < 0.3);
    if (order == 4) {
      CHECK(r1 / r2 >= 10.0);
      CHECK(r1 / r2 <= 22.0);
    }

    auto pde = [&](double h) { return max_abs_diff(tccss_residual_at(f, 0.3, 0.1, StencilSpec{h, h, order}), {}); };
    const double p1 = pde(0.04), p2 = pde(0.02);
    INFO("order " << order << " pde ratio " << p1 / p2);
    CHECK(std::abs(std::log2(p1 / p2) - order) < 0.3);
  }
}

TEST_CASE("pde and zero-curvature verdicts agree") {
  const StencilSpec st;
  const GridSpec g{-4.0, 4.0, 9, -0.4, 0.4, 3};
  for (const auto& cfg : {bright(), two_bell()}) {
    const FieldEvaluator f = make_evaluator(cfg);
    const double pde = pde_residual_tccss(f, g, st).max_abs;
    double zc = 0.0;
    for (std::size_t j = 0; j < g.nt; ++j)
      for (std::size_t i = 0; i < g.nx; ++i)
        zc = std::max(zc, zero_curvature_residual(f, {0.7, 0.2}, g.x(i), g.t(j), st));
    if (pde < 1e-5) CHECK(zc < 1e-4);
    if (zc < 1e-5) CHECK(pde < 1e-4);
  }
}

TEST_CASE("stencil validation") {
  CHECK_NOTHROW(StencilSpec{}.validate());
  CHECK_THROWS_AS((StencilSpec{0.0, 1e-3, 4}.validate()), ValidationError);
  CHECK_THROWS_AS((StencilSpec{1e-3, 0.2, 4}.validate()), ValidationError);
  CHECK_THROWS_AS((StencilSpec{1e-3, 1e-3, 3}.validate()), ValidationError);
  CHECK_THROWS_AS((StencilSpec{std::nan(""), 1e-3, 2}.validate()), ValidationError);
  CHECK_THROWS_AS(pde_residual_tccss(zero_field(), small_grid(), StencilSpec{-1.0, 1e-3, 4}), ValidationError);
}
