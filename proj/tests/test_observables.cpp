#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dicke/observables.hpp"
#include "dicke/scaling.hpp"

using namespace dicke;

namespace {

// Normalized Gaussian amplitude with <q^2> = sigma^2 on a fine grid.
WaveFunction gaussian(double sigma, double q_max = 12.0, std::size_t points = 4001) {
  WaveFunction wf;
  wf.grid = GridSpec{q_max, points};
  wf.values.resize(points);
  const double c = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
  for (std::size_t i = 0; i < points; ++i) {
    const double q = wf.grid.node(i);
    wf.values[i] = c * std::exp(-q * q / (4.0 * sigma * sigma));
  }
  wf.values.front() = wf.values.back() = 0.0;
  return wf;
}

// Composite Simpson rule of f over [-a, a] with 2m intervals.
template <class F>
double simpson(F f, double a, int m) {
  const double h = a / m;
  double s = f(-a) + f(a);
  for (int i = 1; i < 2 * m; ++i) s += (i % 2 ? 4.0 : 2.0) * f(-a + i * h);
  return s * h / 3.0;
}

}  // namespace

TEST_SUITE("observables") {

TEST_CASE("moments and momentum variance of a Gaussian") {
  const double sigma = 1.3;
  const WaveFunction wf = gaussian(sigma);
  CHECK(moment(wf, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(moment(wf, 2) == doctest::Approx(sigma * sigma).epsilon(1e-10));
  CHECK(moment(wf, 4) == doctest::Approx(3.0 * std::pow(sigma, 4)).epsilon(1e-10));
  CHECK(moment(wf, 3) == 0.0);
  CHECK_THROWS_AS(moment(wf, -2), std::invalid_argument);
  // finite differences of the amplitude, second order in h
  CHECK(momentum_variance(wf) == doctest::Approx(1.0 / (4.0 * sigma * sigma)).epsilon(1e-5));
}

TEST_CASE("phi_nu of a Gaussian against Simpson quadrature") {
  const double sigma = 2.0;
  const WaveFunction wf = gaussian(sigma, 16.0, 6001);
  const auto p = DimensionlessParams::from_alpha(1.7, 10.0, 5);
  for (double nu : {-1.0, -0.5, 0.5, 1.0}) {
    const double ref = simpson(
        [&](double q) {
          const double g = std::exp(-q * q / (2.0 * sigma * sigma)) / std::sqrt(2.0 * std::numbers::pi * sigma * sigma);
          return g * std::pow(1.0 + 2.0 * p.alpha * q * q / p.nd, nu);
        },
        16.0, 20000);
    CHECK(phi_nu(wf, nu, p) == doctest::Approx(ref).epsilon(1e-10));
  }
  CHECK(phi_half_excess(wf, p) == doctest::Approx(phi_nu(wf, 0.5, p) - 1.0).epsilon(1e-9));
}

TEST_CASE("decoupled limit") {
  const int n = 8;
  const auto p = DimensionlessParams::from_alpha(0.0, 10.0, n);
  const ObservableSet o = full_observables(p, n);
  CHECK(o.sx_per_n == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(o.sx2_per_n2 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(o.sz2_per_n2 == doctest::Approx(1.0 / n).epsilon(1e-12));
  CHECK(o.q2 == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(o.p2 == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(o.e0_reduced == doctest::Approx(1.0 - p.nd).epsilon(1e-12));
}

TEST_CASE("exact spin identities on random points (property)") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> alpha(0.0, 2.5);
  for (int i = 0; i < 25; ++i) {
    const int n = 1 << (i % 12);
    const auto p = DimensionlessParams::from_alpha(alpha(rng), 10.0, n);
    const ObservableSet o = full_observables(p, n);
    CHECK(o.sy2_per_n2 == 1.0 / n);
    CHECK(o.sz2_per_n2 == (1.0 + 1.0 / n) - o.sx2_per_n2);
    CHECK(o.sx_per_n == -o.phi.minus_half);
    CHECK(o.sx_per_n >= -1.0 - 1e-12);
    CHECK(o.sx_per_n < 0.0);
    // Jensen: Phi_{-1/2}^2 <= Phi_{-1} and Phi_{1/2} >= 1
    CHECK(o.phi.minus_half * o.phi.minus_half <= o.phi.minus_one + 1e-12);
    CHECK(o.phi.plus_half >= 1.0 - 1e-14);
    CHECK(o.bookkeeping_residual <= 1e-6 * std::max(1.0, std::abs(o.e0_shifted)));
  }
}

TEST_CASE("virial theorem on the critical quartic problem") {
  // H = P^2 + Q^4 / (2 ND): <P^2> = 2 <Q^4> / (2 ND)
  DimensionlessParams p;
  p.alpha = 1.0;
  p.nd = 500.0;
  const GroundState gs = solve_ground(quartic_profile(p));
  const ObservableSet o = assemble_observables(gs, p, 50, PotentialKind::kQuartic);
  CHECK(o.p2 == doctest::Approx(o.q4 / p.nd).epsilon(1e-7));
  CHECK(o.e0_shifted == doctest::Approx(1.5 * o.q4 / p.nd).epsilon(1e-7));
}

TEST_CASE("moment recursion regenerates the critical moments") {
  const QuarticConstants c = quartic_constants(1e-10);
  DimensionlessParams p;
  p.alpha = 1.0;
  p.nd = 2000.0;
  SolverOptions opts;
  opts.tolerance = 1e-10;
  const GroundState gs = solve_ground(quartic_profile(p), opts);
  const auto residuals = moment_recursion_residuals(gs, p.nd, c.beta0, 8);
  for (double r : residuals) CHECK(r < 1e-6);

  const double q2 = extrapolate(gs, [](const WaveFunction& wf) { return moment(wf, 2); });
  const auto generated = moments_from_recursion(q2, p.nd, c.beta0, 10);
  for (int k = 0; k <= 10; k += 2) {
    const double direct = extrapolate(gs, [k](const WaveFunction& wf) { return moment(wf, k); });
    CHECK(generated[k / 2] == doctest::Approx(direct).epsilon(1e-6));
  }
}

TEST_CASE("Feynman-Hellmann on a few points") {
  for (auto [alpha, nd] : {std::pair{0.0, 50.0}, {0.7, 300.0}, {1.0, 1e5}, {1.8, 40.0}}) {
    DimensionlessParams p;
    p.alpha = alpha;
    p.nd = nd;
    const auto r = feynman_hellmann_check(p);
    CHECK(r.residual_alpha <= 1e-5);
    CHECK(r.residual_nd <= 1e-5);
  }
}

TEST_CASE("observables depend on (alpha, ND) only") {
  for (PotentialKind kind : {PotentialKind::kFull, PotentialKind::kQuartic}) {
    const auto a = full_observables(DimensionlessParams::from_alpha(1.2, 10.0, 100), 100, 1e-8, kind);
    const auto b = full_observables(DimensionlessParams::from_alpha(1.2, 100.0, 10), 10, 1e-8, kind);
    CHECK(a.sx_per_n == doctest::Approx(b.sx_per_n).epsilon(1e-8));
    CHECK(a.q2 == doctest::Approx(b.q2).epsilon(1e-8));
    CHECK(a.q4 == doctest::Approx(b.q4).epsilon(1e-8));
    CHECK(a.p2 == doctest::Approx(b.p2).epsilon(1e-8));
    CHECK(a.e0_shifted == doctest::Approx(b.e0_shifted).epsilon(1e-8));
    CHECK(a.phi.minus_one == doctest::Approx(b.phi.minus_one).epsilon(1e-8));
  }
}

TEST_CASE("sx_per_n rises with alpha at fixed N") {
  for (int n : {4, 256}) {
    double prev = -2.0;
    for (int i = 0; i <= 30; ++i) {
      const auto p = DimensionlessParams::from_alpha(0.1 * i, 10.0, n);
      const double sx = full_observables(p, n).sx_per_n;
      CHECK(sx >= prev - 1e-10);
      prev = sx;
    }
  }
}

TEST_CASE("large N approaches the thermodynamic branches") {
  const int n = 1 << 14;
  const auto super = full_observables(DimensionlessParams::from_alpha(2.0, 10.0, n), n);
  CHECK(super.sx_per_n == doctest::Approx(-0.5).epsilon(0.01));
  CHECK(super.e0_reduced / n == doctest::Approx(-12.5).epsilon(0.01));
  CHECK(super.order_param == doctest::Approx(7.5).epsilon(0.02));
  const auto normal = full_observables(DimensionlessParams::from_alpha(0.5, 10.0, n), n);
  CHECK(normal.sx_per_n == doctest::Approx(-1.0).epsilon(0.01));
}

TEST_CASE("critical moments follow the leading expansions") {
  const QuarticConstants c = quartic_constants(1e-8);
  const int n = 1 << 16;
  const auto p = DimensionlessParams::from_alpha(1.0, 10.0, n);
  const ObservableSet o = full_observables(p, n);
  const double x = 2.0 * p.nd;
  CHECK(o.q2 / (c.beta1 * std::cbrt(x)) == doctest::Approx(1.0).epsilon(0.02));
  CHECK(o.q4 / (c.beta0 / 3.0 * std::pow(x, 2.0 / 3.0)) == doctest::Approx(1.0).epsilon(0.02));
}

}  // TEST_SUITE
