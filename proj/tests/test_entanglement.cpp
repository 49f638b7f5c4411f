#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dicke/entanglement.hpp"
#include "dicke/kernels.hpp"
#include "dicke/observables.hpp"
#include "oracles.hpp"

using namespace dicke;

namespace {

struct Solved {
  DimensionlessParams p;
  int n;
  GroundState gs;
};

Solved solved(double alpha, int n, double d = 10.0) {
  const auto p = DimensionlessParams::from_alpha(alpha, d, n);
  return {p, n, solve_ground(full_profile(p))};
}

}  // namespace

TEST_SUITE("entanglement") {

TEST_CASE("purity quadrature against the plain pow() double sum") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (int n : {4, 16, 64}) {
      const Solved s = solved(alpha, n);
      const WaveFunction& wf = s.gs.wavefunction();
      std::vector<double> q(wf.values.size());
      for (std::size_t i = 0; i < q.size(); ++i) q[i] = wf.grid.node(i);
      const double ref = oracle::purity_bruteforce(q, wf.values, wf.grid.spacing(), alpha, s.p.nd, n);
      CHECK(purity_qubits(wf, s.p, n) == doctest::Approx(ref).epsilon(1e-11));
    }
  }
}

TEST_CASE("parallel kernel equals the serial reference and ignores the worker count") {
  const Solved s = solved(1.0, 256);
  const WaveFunction& wf = s.gs.wavefunction();
  const double serial = purity_qubits_reference(wf, s.p, s.n);
  const int saved = kernels::worker_count();
  kernels::set_worker_count(1);
  const double one = purity_qubits(wf, s.p, s.n);
  kernels::set_worker_count(4);
  const double four = purity_qubits(wf, s.p, s.n);
  kernels::set_worker_count(saved);
  CHECK(one == four);
  CHECK(one == doctest::Approx(serial).epsilon(1e-12));
}

TEST_CASE("pairwise_sum") {
  std::vector<double> v(1000, 0.1);
  CHECK(kernels::pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(kernels::pairwise_sum(std::vector<double>{}) == 0.0);
}

TEST_CASE("log_overlap is the log of the per-qubit overlap") {
  for (double d : {0.0, 1e-9, 0.3, 1.0, 3.0}) {
    CHECK(std::exp(kernels::log_overlap(d)) == doctest::Approx(0.5 * (1.0 + std::cos(d))).epsilon(1e-14));
  }
}

TEST_CASE("overlap formula") {
  const int n = 7;
  const auto p = DimensionlessParams::from_alpha(1.3, 2.0, n);
  for (auto [a, b] : {std::pair{0.3, -1.2}, {2.0, 2.0}, {-4.0, 5.5}}) {
    const double expected =
        0.5 * (1.0 + (p.d_ratio * p.d_ratio + p.l_coupling * p.l_coupling * a * b / n) / (theta(a, p, n) * theta(b, p, n)));
    CHECK(qubit_overlap(a, b, p) == doctest::Approx(expected).epsilon(1e-13));
  }
  CHECK(qubit_overlap(1.7, 1.7, p) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("product state at zero coupling") {
  for (int n : {1, 8, 4096}) {
    const Solved s = solved(0.0, n);
    const TangleResult t = tangles(s.gs, s.p, n);
    CHECK(std::abs(t.purity - 1.0) <= 1e-12);
    CHECK(std::abs(t.tau_n) <= 1e-11);
    CHECK(std::abs(t.tau1) <= 1e-12);
  }
}

TEST_CASE("tau1 from the spin equals tau1 from the explicit qubit state") {
  for (double alpha : {0.3, 1.0, 1.6, 3.0}) {
    for (int n : {2, 50, 3000}) {
      const Solved s = solved(alpha, n);
      const WaveFunction& wf = s.gs.wavefunction();
      const QubitState rho = single_qubit_state(wf, s.p, n);
      CHECK(rho.plus_plus + rho.minus_minus == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(std::abs(tau_one(-phi_nu(wf, -0.5, s.p)) - 2.0 * (1.0 - rho.purity())) <= 1e-8);
    }
  }
}

TEST_CASE("one qubit: the oscillator-qubits tangle is tau1") {
  for (double alpha : {0.5, 1.0, 2.5}) {
    const Solved s = solved(alpha, 1, 3.0);
    const TangleResult t = tangles(s.gs, s.p, 1);
    CHECK(t.eta == 2.0);
    CHECK(t.tau_n == doctest::Approx(t.tau1).epsilon(1e-8));
  }
}

TEST_CASE("normalization") {
  CHECK(tangle_normalization(1) == 2.0);
  CHECK(tangle_normalization(2) == doctest::Approx(4.0 / 3.0));
  CHECK(tangle_normalization(100) == 1.0);
}

TEST_CASE("finite-size quenching at the critical point") {
  double prev = 0.0;
  for (int n : {4, 16, 64, 256}) {
    const Solved s = solved(1.0, n);
    const double t = tangles(s.gs, s.p, n).tau_n;
    CHECK(t > prev);
    CHECK(t < 1.0);
    prev = t;
  }
}

TEST_CASE("thermodynamic tangle") {
  CHECK(tau_infinity(0.0, 10.0) == 0.0);
  CHECK(tau_infinity(1.0, 10.0) == 1.0);
  CHECK(tau_infinity(2.0, 10.0) == doctest::Approx(1.0 - 0.5 / std::sqrt(1.0 + 1.0 / (40.0 * std::sqrt(3.0)))));
  CHECK(tau_infinity(2.0, 10.0) == doctest::Approx(0.5036).epsilon(1e-4 / 0.5036));
  CHECK(tau_infinity(0.5, 10.0) == doctest::Approx(0.033584).epsilon(1e-5));
}

TEST_CASE("finite N approaches tau_infinity away from the critical point") {
  for (double alpha : {0.5, 2.0}) {
    const Solved s = solved(alpha, 1024);
    CHECK(tangles(s.gs, s.p, 1024).tau_n == doctest::Approx(tau_infinity(alpha, 10.0)).epsilon(0.02));
  }
}

TEST_CASE("single-qubit tangle near the critical point") {
  const QuarticConstants c = quartic_constants(1e-8);
  const int n = 10000;
  const Solved s = solved(1.0, n);
  const double expected = 4.0 * c.beta1 / std::pow(2.0 * s.p.nd, 2.0 / 3.0);
  CHECK(tangles(s.gs, s.p, n).tau1 == doctest::Approx(expected).epsilon(0.05));
}

TEST_CASE("critical purity approaches its large-N asymptote") {
  const QuarticConstants c = quartic_constants(1e-8);
  double prev_gap = 1.0;
  for (int k : {8, 12, 16, 20}) {
    const int n = 1 << k;
    const Solved s = solved(1.0, n);
    const double ratio = tangles(s.gs, s.p, n).purity / critical_purity_asymptote(n, 10.0, c.k_const);
    const double gap = std::abs(1.0 - ratio);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 0.05);
}

TEST_CASE("printed large-N tangle formula") {
  CHECK(tau_n_critical_prediction(1000000, 10.0, 0.46) == doctest::Approx(0.970).epsilon(1e-3));
  CHECK(tau_n_critical_prediction(1 << 30, 10.0, 0.46) > tau_n_critical_prediction(1 << 20, 10.0, 0.46));
  CHECK(tau_n_critical_prediction(64, 1e12, 0.46) == doctest::Approx(1.0).epsilon(1e-4));
}

}  // TEST_SUITE
