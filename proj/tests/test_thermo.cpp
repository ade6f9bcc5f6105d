#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "eiwe/constants.hpp"
#include "eiwe/measurement.hpp"
#include "eiwe/rng.hpp"
#include "eiwe/states.hpp"
#include "eiwe/thermo.hpp"

using namespace eiwe;

namespace {

ThermalOccupation boltzmann(double n_bar, double omega = 1.2e15) {
  return ThermalOccupation::from_occupation(
      n_bar, omega, OccupationModel::boltzmann_approx);
}

}  // namespace

TEST_SUITE("thermo") {

TEST_CASE("mode entropy h") {
  CHECK(mode_entropy(0.5) == 0.0);
  CHECK(mode_entropy(1.5) ==
        doctest::Approx(1.3862943611198906).epsilon(1e-12));

  // brute-force check against the geometric number distribution of a thermal
  // mode: S = -sum p_n ln p_n with p_n = n^n / (n+1)^(n+1)
  const double n_bar = 1.0;
  double brute = 0.0, p = 1.0 / (n_bar + 1.0);
  for (int n = 0; n < 400; ++n) {
    brute -= p * std::log(p);
    p *= n_bar / (n_bar + 1.0);
  }
  CHECK(mode_entropy(n_bar + 0.5) == doctest::Approx(brute).epsilon(1e-9));

  CHECK_THROWS_AS(mode_entropy(0.4), std::invalid_argument);
  // slack region just below 1/2 is clamped to zero
  CHECK(mode_entropy(0.5 - 1e-11) == 0.0);

  // non-negative and strictly increasing above 1/2
  double prev_h = 0.0;
  for (double nu = 0.51; nu < 6.0; nu += 0.07) {
    const double h = mode_entropy(nu);
    CHECK(h > prev_h);
    prev_h = h;
  }
}

TEST_CASE("entropy of Gaussian states") {
  CHECK(von_neumann_entropy(thermal_state(0.0, 1, 1.0).cov) == 0.0);
  CHECK(von_neumann_entropy(thermal_state(1.0, 1, 1.0).cov) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));

  // globally pure TMSV, mixed marginal
  const GaussianState tmsv = two_mode_squeezed_thermal(0.0, 0.7);
  CHECK(von_neumann_entropy(tmsv.cov) < 1e-9);
  const double marginal = von_neumann_entropy(partial_trace(tmsv, 0).cov);
  CHECK(marginal == doctest::Approx(mode_entropy(0.5 * std::cosh(1.4)))
                        .epsilon(1e-9));
  CHECK(marginal > 0.1);

  // additivity over block-diagonal covariances
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    const double na = 3.0 * rng.uniform(), nb = 3.0 * rng.uniform();
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(4, 4);
    cov.block<2, 2>(0, 0) = (na + 0.5) * Eigen::Matrix2d::Identity();
    cov.block<2, 2>(2, 2) = (nb + 0.5) * Eigen::Matrix2d::Identity();
    const double joint = von_neumann_entropy(CovarianceMatrix(cov));
    const double parts = mode_entropy(na + 0.5) + mode_entropy(nb + 0.5);
    CHECK(std::abs(joint - parts) < 1e-12);
  }
}

TEST_CASE("xi") {
  CHECK(xi(0.0) == 0.0);
  CHECK(xi(0.5) == doctest::Approx(0.21355226703407259).epsilon(1e-12));
  CHECK(1.0 - xi(20.0) < 2e-17);
  CHECK(xi(20.0) <= 1.0);

  // even and strictly increasing on r >= 0
  double prev = -1.0;
  for (double r = 0.0; r <= 5.0; r += 0.1) {
    const double v = xi(r);
    CHECK(v == xi(-r));
    CHECK(v > prev);
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
    prev = v;
  }
}

TEST_CASE("extracted_work") {
  CHECK(extracted_work(0.7, 0.7, 300.0) == 0.0);
  CHECK(extracted_work(1.5, 0.5, 300.0) ==
        doctest::Approx(4.141947e-21).epsilon(1e-12));
  CHECK(extracted_work(0.5, 1.5, 300.0) < 0.0);  // sign is preserved
  CHECK_THROWS_AS(extracted_work(1.0, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(extracted_work(1.0, 0.5, -10.0), std::invalid_argument);
}

TEST_CASE("eiwe_closed_form") {
  CHECK(eiwe_closed_form(0.3, 1e15, 0.0) == 0.0);
  CHECK(eiwe_closed_form(1e-4, 1.2e15, 0.6) ==
        doctest::Approx(3.6499435578955643e-24).epsilon(1e-12));
  // xi -> 1 limit releases the entire thermal energy n_bar hbar omega
  CHECK(eiwe_closed_form(1e-4, 1.2e15, 20.0) ==
        doctest::Approx(1e-4 * constants::hbar * 1.2e15).epsilon(1e-15));
}

TEST_CASE("eiwe_pipeline basics") {
  // no squeezing, no work, bit-exactly
  const WorkReport flat = eiwe_pipeline(boltzmann(0.3), 0.0, eiwe_measurement());
  CHECK(flat.work == 0.0);
  CHECK(flat.work_closed_form == 0.0);
  CHECK(flat.relative_deviation == 0.0);

  // the documented asymptotic example
  const WorkReport rep =
      eiwe_pipeline(boltzmann(1e-4), 0.6, eiwe_measurement());
  CHECK(rep.relative_deviation <= 0.05);
  CHECK(rep.relative_deviation ==
        doctest::Approx(0.0175096978492968).epsilon(1e-6));
  CHECK(rep.entropy_eq >= rep.entropy_cond);
  CHECK(rep.xi == doctest::Approx(xi(0.6)).epsilon(1e-15));

  // work is continuous in the measurement strength around lambda = 1
  const double w1 = eiwe_pipeline(boltzmann(0.2), 0.5, eiwe_measurement()).work;
  for (double lambda : {1.0 + 1e-6, 1.0 - 1e-6}) {
    const double w = eiwe_pipeline(boltzmann(0.2), 0.5,
                                   GaussianMeasurement(lambda, 0.0, 1))
                         .work;
    CHECK(std::abs(w - w1) / w1 <= 1e-4);
  }
}

TEST_CASE("work does not depend on the basis angle at lambda = 1") {
  Rng rng(91);
  for (int i = 0; i < 20; ++i) {
    const double n_bar = 0.5 * rng.uniform() + 1e-3;
    const double r = 2.0 * rng.uniform() + 0.1;
    const double ref =
        eiwe_pipeline(boltzmann(n_bar), r, eiwe_measurement()).work;
    for (double phi : {0.37, 1.9, 3.1}) {
      const double w = eiwe_pipeline(boltzmann(n_bar), r,
                                     GaussianMeasurement(1.0, phi, 1))
                           .work;
      CHECK(std::abs(w - ref) / ref <= 1e-12);
    }
  }
}

TEST_CASE("deviation from the closed form decays like 1 / ln(1/n_bar)") {
  const std::vector<double> n_bars = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  std::vector<double> devs;
  for (double n : n_bars)
    devs.push_back(
        eiwe_pipeline(boltzmann(n), 0.6, eiwe_measurement()).relative_deviation);

  for (std::size_t i = 1; i < devs.size(); ++i) CHECK(devs[i] < devs[i - 1]);

  // log-log slope against ln(1/n_bar) within +-30% of -1
  const double slope = std::log(devs.back() / devs.front()) /
                       std::log(std::log(1e6) / std::log(1e2));
  CHECK(slope < -0.7);
  CHECK(slope > -1.3);
}

TEST_CASE("work is non-negative on the engine grid") {
  for (double n_bar = 0.05; n_bar <= 1.0 + 1e-12; n_bar += 0.05) {
    for (double r = 0.0; r <= 3.0 + 1e-12; r += 0.25) {
      const auto occ = ThermalOccupation::from_occupation(
          n_bar, 1.2e15, OccupationModel::bose_einstein);
      const WorkReport rep = eiwe_pipeline(occ, r, eiwe_measurement());
      CHECK(rep.work >= -1e-14);
    }
  }
}

TEST_CASE("discrete_comparison") {
  CHECK(discrete_comparison(0.0, 1e15) == 0.0);
  CHECK(discrete_comparison(0.01, 1.2e15) ==
        doctest::Approx(1.2654861811753877e-21).epsilon(1e-12));
  // identical to the fully entangled limit of the closed form
  for (double x : {1e-4, 0.01, 0.3}) {
    const double lhs = discrete_comparison(x, 1.2e15);
    const double rhs = eiwe_closed_form(x, 1.2e15, 20.0);
    CHECK(std::abs(lhs - rhs) / rhs < 1e-12);
  }
  CHECK_THROWS_AS(discrete_comparison(1.0, 1e15), std::invalid_argument);
  CHECK_THROWS_AS(discrete_comparison(-0.1, 1e15), std::invalid_argument);
}

}  // TEST_SUITE
