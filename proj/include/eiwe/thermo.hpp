#pragma once

#include "eiwe/gaussian.hpp"
#include "eiwe/measurement.hpp"
#include "eiwe/states.hpp"

namespace eiwe {

// Entropy-difference work extraction for the two-mode squeezed thermal engine.
// Entropies are in nats; k_B enters only in extracted_work.

struct WorkReport {
  double entropy_eq;          // nats, equilibrium (thermal) entropy of mode a
  double entropy_cond;        // nats, post-measurement entropy of mode a
  double work;                // J
  double work_closed_form;    // J, xi(r) * n_bar * hbar * omega
  double xi;                  // entanglement degree, in [0, 1]
  double n_bar;
  double omega;               // rad/s
  double temperature;         // K
  double lambda;
  double relative_deviation;  // |work - closed| / max(closed, 1e-300)
};

// Entropy contribution of one symplectic eigenvalue:
//   h(nu) = (nu + 1/2) ln(nu + 1/2) - (nu - 1/2) ln(nu - 1/2),  h(1/2) = 0.
double mode_entropy(double nu);

// Sum of h over all symplectic eigenvalues.  Throws for unphysical input
// (some nu < 1/2 - 1e-10).
double von_neumann_entropy(const CovarianceMatrix& cov);

// Entanglement degree of a two-mode squeezed state:
//   xi(r) = 1 - 2 / (1 + cosh 2r),  even, increasing in |r|, sup = 1.
double xi(double r);

// W = k_B T (S_eq - S_cond).  May be negative for arbitrary inputs; the
// pipeline checks non-negativity separately for the lambda = 1 engine.
double extracted_work(double entropy_eq, double entropy_cond,
                      double temperature);

// Closed-form work law: xi(r) * n_bar * hbar * omega.
double eiwe_closed_form(double n_bar, double omega, double r);

// Full pipeline: build the TMST, condition mode a on the measurement, take
// the entropy drop against the thermal equilibrium state, convert to joules
// and compare with the closed form.
WorkReport eiwe_pipeline(const ThermalOccupation& occ, double r,
                         const GaussianMeasurement& m);

// Discrete two-level benchmark: measuring one excitation in the ancilla of
// the maximally entangled mixture extracts x hbar omega, the same value the
// xi = 1 limit of the closed form gives.
double discrete_comparison(double x, double omega);

}  // namespace eiwe
