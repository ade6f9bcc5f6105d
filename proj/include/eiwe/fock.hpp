#pragma once

#include <complex>

#include <Eigen/Dense>

#include "eiwe/states.hpp"

namespace eiwe::fock {

// Truncated number-basis brute force used to cross-check the Gaussian
// pipeline.  States are dense matrices over |n> (one mode) or |n_a, n_b>
// (two modes, index n_a * cutoff + n_b).  trace_defect = 1 - trace measures
// the probability weight the truncation discarded.

inline constexpr double kThermalDefectBound = 1e-8;  // thermal_fock gate
inline constexpr double kAcceptDefectBound = 0.01;   // hard gate on tmst_fock
inline constexpr double kOracleDefectBound = 1e-6;   // gate for oracle runs

struct FockDensityMatrix {
  int cutoff;   // per-mode dimension, >= 2
  int n_modes;  // 1 or 2
  Eigen::MatrixXcd entries;
  double trace_defect;
};

// Diagonal Bose-Einstein mixture p_n = n_bar^n / (n_bar + 1)^(n+1).
// Throws TruncationError if the discarded tail exceeds 1e-8.
FockDensityMatrix thermal_fock(double n_bar, int cutoff);

// Two-mode squeezed thermal state: exp[r (a+ b+ - a b)] applied to
// thermal x thermal.  Built by exponentiating the generator on an enlarged
// internal space and restricting to the requested cutoff, so entries are
// essentially exact and trace_defect genuinely measures the weight squeezed
// past the cutoff.  Throws TruncationError when the defect exceeds 0.01.
FockDensityMatrix tmst_fock(double n_bar, double r, int cutoff);

// Conditional state of mode a after finding the b mode in the coherent state
// |alpha>: <alpha| rho |alpha>_b, normalized.  Requires |alpha|^2 <= cutoff/4
// so the outcome is representable; throws DegenerateOutcome when the outcome
// probability is below 1e-300.  trace_defect is inherited from the input.
FockDensityMatrix coherent_condition(const FockDensityMatrix& rho,
                                     std::complex<double> alpha);

// -sum lambda_i ln lambda_i over eigenvalues above 1e-14.
double fock_entropy(const FockDensityMatrix& rho);

// Quadrature mean vector (length 2 n_modes) and symmetrized covariance, with
// x = (a + a+)/sqrt(2), p = (a - a+)/(i sqrt(2)) per mode.
Eigen::VectorXd quadrature_mean(const FockDensityMatrix& rho);
Eigen::MatrixXd quadrature_covariance(const FockDensityMatrix& rho);

struct OracleRun {
  double work;         // J
  double entropy_eq;   // nats
  double entropy_cond; // nats
  double trace_defect; // of the conditioned TMST
};

// End-to-end brute-force work:
//   k_B T [ S(thermal_fock) - S(coherent_condition(tmst_fock)) ].
// Enforces trace_defect <= 1e-6 on the TMST (oracle-grade runs only).
OracleRun oracle_run(const ThermalOccupation& occ, double r,
                     std::complex<double> alpha, int cutoff);
double oracle_work(const ThermalOccupation& occ, double r,
                   std::complex<double> alpha, int cutoff);

}  // namespace eiwe::fock
