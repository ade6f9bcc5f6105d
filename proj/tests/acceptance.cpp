// Acceptance suite: every criterion prints exactly one [PASS]/[FAIL] line and
// the binary exits with the number of failures.  An optional argument runs a
// single criterion by id (A1..A9).

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "eiwe/constants.hpp"
#include "eiwe/curvature.hpp"
#include "eiwe/fock.hpp"
#include "eiwe/measurement.hpp"
#include "eiwe/rng.hpp"
#include "eiwe/states.hpp"
#include "eiwe/thermo.hpp"

using namespace eiwe;
using complex = std::complex<double>;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& label) {
    if (!condition) {
      ok = false;
      detail << "  violated: " << label << "\n";
    }
  }
};

ThermalOccupation boltzmann(double n_bar, double omega = 1.2e15) {
  return ThermalOccupation::from_occupation(
      n_bar, omega, OccupationModel::boltzmann_approx);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

// solve xi(r) = target on r in [0, 20] by bisection
double r_for_xi(double target) {
  double lo = 0.0, hi = 20.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (xi(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------- criteria ---

// Asymptotic work law at r = 0.6: graded deviation gates and strict decrease
// over the occupation ladder.
void a1(Check& c) {
  const double r = 0.6;
  const std::vector<double> ladder = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  std::vector<double> devs;
  for (double n : ladder) {
    devs.push_back(
        eiwe_pipeline(boltzmann(n), r, eiwe_measurement()).relative_deviation);
    c.detail << "  n_bar=" << fmt(n) << " rel_dev=" << fmt(devs.back()) << "\n";
  }
  c.require(devs[1] <= 0.10, "rel_dev(1e-3) <= 10%");
  c.require(devs[2] <= 0.05, "rel_dev(1e-4) <= 5%");
  c.require(devs[4] <= 0.02, "rel_dev(1e-6) <= 2%");
  for (std::size_t i = 1; i < devs.size(); ++i)
    c.require(devs[i] < devs[i - 1], "strict decrease along the ladder");
}

// Work-law deviation across the entanglement range at n_bar = 1e-5.
void a2(Check& c) {
  for (double target : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double r = r_for_xi(target);
    const WorkReport rep =
        eiwe_pipeline(boltzmann(1e-5), r, eiwe_measurement());
    c.detail << "  xi=" << fmt(target) << " r=" << fmt(r)
             << " rel_dev=" << fmt(rep.relative_deviation) << "\n";
    c.require(rep.relative_deviation <= 0.05,
              "rel_dev <= 5% at xi=" + fmt(target));
  }
}

// Outcome independence of the conditional covariance, Gaussian and
// brute-force paths.
void a3(Check& c) {
  const GaussianState tmst = two_mode_squeezed_thermal(0.2, 0.5);
  const GaussianMeasurement m = eiwe_measurement();
  const Eigen::Matrix2d ref = conditional_covariance(block_decompose(tmst), m);
  double spread = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto [outcome, cond] = sample_and_condition(tmst, m, seed);
    spread = std::max(spread,
                      (cond.cov.matrix() - ref).cwiseAbs().maxCoeff());
  }
  c.detail << "  gaussian spread over 1000 outcomes: " << fmt(spread) << "\n";
  c.require(spread <= 1e-12, "gaussian conditional-covariance spread <= 1e-12");

  const fock::FockDensityMatrix rho = fock::tmst_fock(0.2, 0.5, 60);
  Eigen::MatrixXd first;
  double fock_spread = 0.0;
  for (complex alpha : {complex(0.0, 0.0), complex(0.5, 0.0), complex(0.0, 0.5),
                        complex(-0.4, 0.2), complex(0.7, 0.6)}) {
    const Eigen::MatrixXd cov =
        fock::quadrature_covariance(fock::coherent_condition(rho, alpha));
    if (first.size() == 0)
      first = cov;
    else
      fock_spread =
          std::max(fock_spread, (cov - first).cwiseAbs().maxCoeff());
  }
  c.detail << "  fock spread over 5 outcomes (cutoff 60): " << fmt(fock_spread)
           << "\n";
  c.require(fock_spread <= 1e-5, "fock conditional-covariance spread <= 1e-5");
}

// Gaussian pipeline against the truncated Fock brute force.
void a4(Check& c) {
  const auto occ = boltzmann(0.2);
  const double r = 0.5;

  const WorkReport rep = eiwe_pipeline(occ, r, eiwe_measurement());
  const fock::OracleRun run = fock::oracle_run(occ, r, complex(0.0, 0.0), 60);
  const double work_dev = std::abs(rep.work - run.work) / std::abs(rep.work);
  const double s_eq_dev = std::abs(rep.entropy_eq - run.entropy_eq);
  const double s_cond_dev = std::abs(rep.entropy_cond - run.entropy_cond);
  c.detail << "  work rel dev: " << fmt(work_dev)
           << ", entropy devs: " << fmt(s_eq_dev) << " / " << fmt(s_cond_dev)
           << "\n";
  c.require(work_dev <= 1e-5, "work agreement within 1e-5 relative");
  c.require(s_eq_dev <= 1e-6, "equilibrium entropy within 1e-6 nats");
  c.require(s_cond_dev <= 1e-6, "conditional entropy within 1e-6 nats");

  // cutoff-doubling convergence of the conditional entropy, 10x per doubling
  // until the 1e-9 floor
  const double floor = 1e-9;
  std::vector<double> discrepancy;
  for (int cutoff : {8, 16, 32, 64}) {
    const double s = fock::fock_entropy(
        fock::coherent_condition(fock::tmst_fock(0.2, r, cutoff), 0.0));
    discrepancy.push_back(std::abs(s - rep.entropy_cond));
    c.detail << "  cutoff " << cutoff
             << ": |S_fock - S_gauss| = " << fmt(discrepancy.back()) << "\n";
  }
  for (std::size_t i = 1; i < discrepancy.size(); ++i) {
    const bool at_floor = discrepancy[i - 1] <= floor;
    c.require(at_floor || discrepancy[i] <= discrepancy[i - 1] / 10.0,
              "10x reduction per doubling (step " + std::to_string(i) + ")");
  }
}

// Homodyne limits of the conditional covariance.
void a5(Check& c) {
  Rng rng(505);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double n_bar = 2.0 * rng.uniform();
    const double r = 3.0 * rng.uniform() - 1.5;
    const TwoModeBlocks blocks =
        block_decompose(two_mode_squeezed_thermal(n_bar, r));
    const double err_x =
        (conditional_covariance(blocks, GaussianMeasurement(1e-9, 0.0, 1)) -
         homodyne_limit(blocks, Quadrature::x))
            .cwiseAbs()
            .maxCoeff();
    const double err_p =
        (conditional_covariance(blocks, GaussianMeasurement(1e9, 0.0, 1)) -
         homodyne_limit(blocks, Quadrature::p))
            .cwiseAbs()
            .maxCoeff();
    worst = std::max({worst, err_x, err_p});
  }
  c.detail << "  worst deviation over 50 states: " << fmt(worst) << "\n";
  c.require(worst <= 1e-6, "homodyne limits matched within 1e-6");
}

// Basis-angle invariance of the extracted work at lambda = 1.
void a6(Check& c) {
  Rng rng(606);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double n_bar = 0.5 * rng.uniform() + 1e-3;
    const double r = 2.0 * rng.uniform() + 0.05;
    const double ref =
        eiwe_pipeline(boltzmann(n_bar), r, eiwe_measurement()).work;
    for (double phi : {0.0, 0.37, std::numbers::pi / 3, std::numbers::pi / 2}) {
      const double w = eiwe_pipeline(boltzmann(n_bar), r,
                                     GaussianMeasurement(1.0, phi, 1))
                           .work;
      worst = std::max(worst, std::abs(w - ref) / std::abs(ref));
    }
  }
  c.detail << "  worst relative angle dependence: " << fmt(worst) << "\n";
  c.require(worst <= 1e-12, "work identical within 1e-12 across angles");
}

// Discrete two-level benchmark equals the fully entangled limit.
void a7(Check& c) {
  double worst = 0.0;
  for (double x : {1e-6, 1e-4, 0.01, 0.2, 0.9}) {
    const double lhs = discrete_comparison(x, 1.2e15);
    const double rhs = eiwe_closed_form(x, 1.2e15, 20.0);
    worst = std::max(worst, std::abs(lhs - rhs) / rhs);
  }
  c.detail << "  worst relative mismatch: " << fmt(worst) << "\n";
  c.require(worst <= 1e-8, "discrete benchmark within 1e-8 of the xi=1 limit");
}

// Curvature formula against an independent constant evaluation; linearity.
void a8(Check& c) {
  const double g = 6.67430e-11;
  const double c_l = 299792458.0;
  const double independent = (32.0 / (c_l * c_l)) * (g / (c_l * c_l));
  const double got = delta_ricci({1.0, 1.0});
  const double rel = std::abs(got - independent) / independent;
  c.detail << "  delta_R(1, 1 Pa) = " << fmt(got) << ", rel dev " << fmt(rel)
           << "\n";
  c.require(rel <= 1e-10, "constant evaluation within 1e-10");

  c.require(delta_ricci({0.5, 3.0}) == 0.5 * delta_ricci({1.0, 3.0}),
            "exact linearity in xi (power-of-two factor)");
  c.require(delta_ricci({0.3, 8.0}) == 8.0 * delta_ricci({0.3, 1.0}),
            "exact linearity in p0 (power-of-two factor)");
  Rng rng(808);
  for (int i = 0; i < 20; ++i) {
    const double xi_v = rng.uniform();
    const double p = 100.0 * rng.uniform();
    const double lhs = delta_ricci({xi_v, p});
    const double rhs = xi_v * p * delta_ricci({1.0, 1.0});
    c.require(std::abs(lhs - rhs) <= 4e-16 * std::max(lhs, rhs) + 1e-300,
              "linearity to roundoff");
  }
}

// Randomized property suites, >= 500 cases total.
void a9(Check& c) {
  int cases = 0;
  Rng rng(909);

  // symplectic-form preservation for every generated matrix
  const Eigen::MatrixXd omega = symplectic_form(2);
  const SymplecticKind kinds[] = {
      SymplecticKind::rotation, SymplecticKind::single_mode_squeeze,
      SymplecticKind::two_mode_squeeze, SymplecticKind::beam_splitter};
  for (int i = 0; i < 160; ++i, ++cases) {
    const SymplecticKind kind = kinds[i % 4];
    const double param = 6.0 * rng.uniform() - 3.0;
    const std::vector<int> targets =
        (kind == SymplecticKind::rotation ||
         kind == SymplecticKind::single_mode_squeeze)
            ? std::vector<int>{i % 2}
            : std::vector<int>{0, 1};
    const auto s = build_symplectic(kind, param, targets, 2);
    const double defect =
        (s.matrix() * omega * s.matrix().transpose() - omega)
            .cwiseAbs()
            .maxCoeff();
    c.require(defect <= 1e-12, "symplectic identity");
  }

  // bona-fide covariance checks: physical constructions validate, sub-vacuum
  // matrices do not
  for (int i = 0; i < 100; ++i, ++cases) {
    const double n_bar = 3.0 * rng.uniform();
    const double r = 4.0 * rng.uniform() - 2.0;
    const GaussianState state = two_mode_squeezed_thermal(n_bar, r);
    c.require(validate_covariance(state.cov).valid, "TMST is bona fide");
    // scale the smallest symplectic eigenvalue below the vacuum floor
    const double factor = 0.45 / (n_bar + 0.5);
    const CovarianceMatrix scaled((factor * state.cov.matrix()).eval());
    c.require(!validate_covariance(scaled).valid,
              "scaled-down covariance violates uncertainty");
  }

  // entropy non-negativity and additivity
  for (int i = 0; i < 100; ++i, ++cases) {
    const double na = 3.0 * rng.uniform(), nb = 3.0 * rng.uniform();
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(4, 4);
    cov.block<2, 2>(0, 0) = (na + 0.5) * Eigen::Matrix2d::Identity();
    cov.block<2, 2>(2, 2) = (nb + 0.5) * Eigen::Matrix2d::Identity();
    const double joint = von_neumann_entropy(CovarianceMatrix(cov));
    c.require(joint >= 0.0, "entropy non-negative");
    c.require(std::abs(joint - mode_entropy(na + 0.5) - mode_entropy(nb + 0.5)) <=
                  1e-12,
              "entropy additive over modes");
  }

  // xi monotone on a randomized grid of ordered pairs
  for (int i = 0; i < 80; ++i, ++cases) {
    const double r1 = 5.0 * rng.uniform();
    const double r2 = r1 + 5.0 * rng.uniform() + 1e-6;
    c.require(xi(r2) > xi(r1), "xi strictly increasing");
    c.require(xi(r1) >= 0.0 && xi(r2) < 1.0, "xi within [0, 1)");
  }

  // engine work non-negative across the grid
  for (int i = 0; i < 100; ++i, ++cases) {
    const double n_bar = 1e-3 + (1.0 - 1e-3) * rng.uniform();
    const double r = 3.0 * rng.uniform();
    const auto occ = ThermalOccupation::from_occupation(
        n_bar, 1.2e15, OccupationModel::bose_einstein);
    const WorkReport rep = eiwe_pipeline(occ, r, eiwe_measurement());
    c.require(rep.work >= -1e-14, "work non-negative");
  }

  c.detail << "  randomized cases: " << cases << "\n";
  c.require(cases >= 500, "at least 500 randomized cases");
}

struct Criterion {
  const char* id;
  const char* label;
  double time_limit_s;
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"A1", "asymptotic work law, occupation ladder at r=0.6", 1.0, a1},
      {"A2", "work-law deviation across the xi sweep at n_bar=1e-5", 1.0, a2},
      {"A3", "outcome independence of the conditional covariance", 30.0, a3},
      {"A4", "Gaussian pipeline vs. Fock brute force", 60.0, a4},
      {"A5", "homodyne limits of the conditional covariance", 1.0, a5},
      {"A6", "basis-angle invariance of the work at lambda=1", 1.0, a6},
      {"A7", "discrete benchmark equals the xi=1 limit", 1.0, a7},
      {"A8", "curvature formula and linearity", 1.0, a8},
      {"A9", "randomized property suites", 30.0, a9},
  };

  const std::string filter = argc > 1 ? argv[1] : "";
  int failures = 0;
  bool matched = false;

  for (const Criterion& criterion : criteria) {
    if (!filter.empty() && filter != criterion.id) continue;
    matched = true;

    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail << "  exception: " << e.what() << "\n";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed >= criterion.time_limit_s) {
      check.ok = false;
      check.detail << "  runtime " << fmt(elapsed) << " s exceeds limit "
                   << fmt(criterion.time_limit_s) << " s\n";
    }

    std::printf("[%s] %s — %s (%.2f s)\n", check.ok ? "PASS" : "FAIL",
                criterion.id, criterion.label, elapsed);
    std::fputs(check.detail.str().c_str(), stdout);
    if (!check.ok) ++failures;
  }

  if (!matched) {
    std::fprintf(stderr, "unknown criterion '%s'\n", filter.c_str());
    return 2;
  }
  return failures;
}
