#include "eiwe/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "eiwe/constants.hpp"
#include "eiwe/errors.hpp"

namespace eiwe::fock {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using complex = std::complex<double>;

// p_n = n_bar^n / (n_bar + 1)^(n+1), evaluated by recurrence.
std::vector<double> thermal_weights(double n_bar, int dim) {
  std::vector<double> p(dim, 0.0);
  if (n_bar <= 0.0) {
    p[0] = 1.0;
    return p;
  }
  const double q = n_bar / (n_bar + 1.0);
  p[0] = 1.0 / (n_bar + 1.0);
  for (int n = 1; n < dim; ++n) p[n] = p[n - 1] * q;
  return p;
}

// exp of the two-mode-squeeze generator on the subspace with fixed photon
// number difference d >= 0, basis |k + d, k>, k = 0..m-1.  The generator is
// real antisymmetric tridiagonal with G(k+1, k) = r sqrt((k+d+1)(k+1)); the
// exponential comes from the Hermitian eigendecomposition of i G.
MatrixXd squeeze_block_exp(double r, int d, int m) {
  if (m == 1) return MatrixXd::Identity(1, 1);
  MatrixXcd h = MatrixXcd::Zero(m, m);
  for (int k = 0; k + 1 < m; ++k) {
    const double c = r * std::sqrt(double(k + d + 1) * double(k + 1));
    h(k + 1, k) = complex(0.0, c);
    h(k, k + 1) = complex(0.0, -c);
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("tmst_fock: block eigen-solve failed");
  const VectorXd& w = solver.eigenvalues();
  MatrixXcd phases = MatrixXcd::Zero(m, m);
  for (int k = 0; k < m; ++k)
    phases(k, k) = std::exp(complex(0.0, -w(k)));
  const MatrixXcd e =
      solver.eigenvectors() * phases * solver.eigenvectors().adjoint();
  return e.real();
}

void require_modes(const FockDensityMatrix& rho, int n, const char* what) {
  if (rho.n_modes != n)
    throw std::invalid_argument(std::string(what) + ": wrong mode count");
}

// tr(rho (A kron B)) for a two-mode rho and per-mode operators A, B.
complex trace_kron(const FockDensityMatrix& rho, const MatrixXcd& a,
                   const MatrixXcd& b) {
  const int cut = rho.cutoff;
  complex total(0.0, 0.0);
  for (int n = 0; n < cut; ++n) {
    for (int np = 0; np < cut; ++np) {
      const complex an = a(np, n);
      if (an == complex(0.0, 0.0)) continue;
      // tr(rho_block(n, np) * B) with rho_block the (m, m') sub-matrix
      const auto block = rho.entries.block(n * cut, np * cut, cut, cut);
      total += an * block.cwiseProduct(b.transpose()).sum();
    }
  }
  return total;
}

complex trace_single(const FockDensityMatrix& rho, const MatrixXcd& op) {
  return (rho.entries.cwiseProduct(op.transpose())).sum();
}

MatrixXcd annihilation(int cutoff) {
  MatrixXcd a = MatrixXcd::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

}  // namespace

FockDensityMatrix thermal_fock(double n_bar, int cutoff) {
  if (n_bar < 0.0 || !std::isfinite(n_bar))
    throw std::invalid_argument("thermal_fock: n_bar must be >= 0");
  if (cutoff < 2)
    throw std::invalid_argument("thermal_fock: cutoff must be >= 2");

  const double defect =
      n_bar > 0.0 ? std::pow(n_bar / (n_bar + 1.0), double(cutoff)) : 0.0;
  if (defect > kThermalDefectBound)
    throw TruncationError("thermal_fock: cutoff too small (defect " +
                              std::to_string(defect) + ")",
                          defect);

  const std::vector<double> p = thermal_weights(n_bar, cutoff);
  MatrixXcd entries = MatrixXcd::Zero(cutoff, cutoff);
  for (int n = 0; n < cutoff; ++n) entries(n, n) = p[n];
  return FockDensityMatrix{cutoff, 1, std::move(entries), defect};
}

FockDensityMatrix tmst_fock(double n_bar, double r, int cutoff) {
  if (n_bar < 0.0 || !std::isfinite(n_bar))
    throw std::invalid_argument("tmst_fock: n_bar must be >= 0");
  if (!std::isfinite(r) || std::abs(r) > 10.0)
    throw std::invalid_argument("tmst_fock: |r| must be <= 10");
  if (cutoff < 2)
    throw std::invalid_argument("tmst_fock: cutoff must be >= 2");

  // Work space: large enough that the squeeze exponential's matrix elements
  // inside the cutoff are converged (elements reach ~tanh(r)^margin past the
  // band) and the thermal tail is negligible.
  const int margin =
      std::max(cutoff, 32) + static_cast<int>(std::ceil(60.0 * std::abs(r)));
  const int work = cutoff + margin;
  if (work > 4096)
    throw std::invalid_argument("tmst_fock: cutoff/r combination too large");

  const std::vector<double> p = thermal_weights(n_bar, work);
  const int dim = cutoff * cutoff;
  MatrixXcd entries = MatrixXcd::Zero(dim, dim);
  double trace = 0.0;

  // The generator preserves n_a - n_b, and the thermal input is diagonal, so
  // the result is block-diagonal over the difference d.  Blocks with
  // |d| >= cutoff lie entirely outside the restriction.  The d < 0 block
  // equals the d > 0 one (symmetric occupations), written at mirrored
  // indices.
  for (int d = 0; d < cutoff; ++d) {
    const int m = work - d;
    const MatrixXd e = squeeze_block_exp(r, d, m);
    VectorXd weights(m);
    for (int k = 0; k < m; ++k) weights(k) = p[k + d] * p[k];
    const MatrixXd block = e * weights.asDiagonal() * e.transpose();

    const int keep = cutoff - d;
    for (int k1 = 0; k1 < keep; ++k1) {
      const int row_hi = (k1 + d) * cutoff + k1;  // |k1+d, k1>
      const int row_lo = k1 * cutoff + (k1 + d);  // |k1, k1+d>
      for (int k2 = 0; k2 < keep; ++k2) {
        const double v = block(k1, k2);
        entries(row_hi, (k2 + d) * cutoff + k2) = v;
        if (d > 0) entries(row_lo, k2 * cutoff + (k2 + d)) = v;
      }
      trace += (d > 0 ? 2.0 : 1.0) * block(k1, k1);
    }
  }

  double defect = 1.0 - trace;
  if (defect < 0.0) {
    if (defect < -1e-9)
      throw NumericalFailure("tmst_fock: trace exceeds 1 beyond roundoff");
    defect = 0.0;
  }
  if (defect > kAcceptDefectBound)
    throw TruncationError("tmst_fock: cutoff too small (defect " +
                              std::to_string(defect) + ")",
                          defect);
  return FockDensityMatrix{cutoff, 2, std::move(entries), defect};
}

FockDensityMatrix coherent_condition(const FockDensityMatrix& rho,
                                     std::complex<double> alpha) {
  require_modes(rho, 2, "coherent_condition");
  const int cut = rho.cutoff;
  const double mag2 = std::norm(alpha);
  if (!(mag2 <= cut / 4.0))
    throw std::invalid_argument(
        "coherent_condition: |alpha|^2 must be <= cutoff / 4");

  // Coherent amplitudes c_m = e^{-|a|^2/2} alpha^m / sqrt(m!).
  Eigen::VectorXcd c(cut);
  c(0) = std::exp(-mag2 / 2.0);
  for (int m = 1; m < cut; ++m) c(m) = c(m - 1) * alpha / std::sqrt(double(m));

  // rho_a(n, n') = sum_{m, m'} conj(c_m) c_{m'} rho[(n, m), (n', m')]
  MatrixXcd cond = MatrixXcd::Zero(cut, cut);
  for (int np = 0; np < cut; ++np) {
    const Eigen::VectorXcd y =
        rho.entries.middleCols(np * cut, cut) * c;  // length cut^2
    for (int n = 0; n < cut; ++n)
      cond(n, np) = c.dot(y.segment(n * cut, cut));  // c^dagger y_slice
  }

  const double norm = cond.trace().real();
  if (!(norm > 1e-300))
    throw DegenerateOutcome(
        "coherent_condition: outcome probability vanishes");
  cond /= norm;
  cond = ((cond + cond.adjoint()) / 2.0).eval();
  return FockDensityMatrix{cut, 1, std::move(cond), rho.trace_defect};
}

double fock_entropy(const FockDensityMatrix& rho) {
  const double herm_defect =
      (rho.entries - rho.entries.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect > 1e-10)
    throw std::invalid_argument("fock_entropy: matrix not Hermitian");

  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(rho.entries,
                                                  Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("fock_entropy: eigen-solve failed");

  double entropy = 0.0;
  for (int i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lam = solver.eigenvalues()(i);
    if (lam < -1e-10)
      throw NumericalFailure("fock_entropy: negative eigenvalue " +
                             std::to_string(lam));
    if (lam > 1e-14) entropy -= lam * std::log(lam);
  }
  return entropy;
}

Eigen::VectorXd quadrature_mean(const FockDensityMatrix& rho) {
  const int cut = rho.cutoff;
  const MatrixXcd a = annihilation(cut);
  const double s = 1.0 / std::sqrt(2.0);
  const MatrixXcd x = s * (a + a.adjoint());
  const MatrixXcd p = complex(0.0, -s) * (a - a.adjoint());

  if (rho.n_modes == 1) {
    Eigen::VectorXd mean(2);
    mean << trace_single(rho, x).real(), trace_single(rho, p).real();
    return mean;
  }
  require_modes(rho, 2, "quadrature_mean");
  const MatrixXcd id = MatrixXcd::Identity(cut, cut);
  Eigen::VectorXd mean(4);
  mean << trace_kron(rho, x, id).real(), trace_kron(rho, p, id).real(),
      trace_kron(rho, id, x).real(), trace_kron(rho, id, p).real();
  return mean;
}

Eigen::MatrixXd quadrature_covariance(const FockDensityMatrix& rho) {
  const int cut = rho.cutoff;
  const MatrixXcd a = annihilation(cut);
  const double s = 1.0 / std::sqrt(2.0);
  const MatrixXcd x = s * (a + a.adjoint());
  const MatrixXcd p = complex(0.0, -s) * (a - a.adjoint());
  const MatrixXcd id = MatrixXcd::Identity(cut, cut);
  const Eigen::VectorXd mean = quadrature_mean(rho);

  const int n_q = 2 * rho.n_modes;
  // quadrature i -> (mode, per-mode operator)
  auto factor = [&](int i) -> const MatrixXcd& { return (i % 2 == 0) ? x : p; };

  Eigen::MatrixXd cov(n_q, n_q);
  for (int i = 0; i < n_q; ++i) {
    for (int j = i; j < n_q; ++j) {
      complex second;
      if (rho.n_modes == 1) {
        const MatrixXcd sym =
            (factor(i) * factor(j) + factor(j) * factor(i)) / 2.0;
        second = trace_single(rho, sym);
      } else {
        const int mi = i / 2, mj = j / 2;
        if (mi == mj) {
          const MatrixXcd sym =
              (factor(i) * factor(j) + factor(j) * factor(i)) / 2.0;
          second = (mi == 0) ? trace_kron(rho, sym, id)
                             : trace_kron(rho, id, sym);
        } else {
          // operators on different modes commute
          second = trace_kron(rho, factor(i), factor(j));
        }
      }
      cov(i, j) = cov(j, i) = second.real() - mean(i) * mean(j);
    }
  }
  return cov;
}

OracleRun oracle_run(const ThermalOccupation& occ, double r,
                     std::complex<double> alpha, int cutoff) {
  const FockDensityMatrix thermal = thermal_fock(occ.n_bar, cutoff);
  const FockDensityMatrix tmst = tmst_fock(occ.n_bar, r, cutoff);
  if (tmst.trace_defect > kOracleDefectBound)
    throw TruncationError("oracle_run: trace defect " +
                              std::to_string(tmst.trace_defect) +
                              " above oracle bound",
                          tmst.trace_defect);

  const double s_eq = fock_entropy(thermal);
  const double s_cond = fock_entropy(coherent_condition(tmst, alpha));
  const double work =
      constants::k_boltzmann * occ.temperature * (s_eq - s_cond);
  return OracleRun{work, s_eq, s_cond, tmst.trace_defect};
}

double oracle_work(const ThermalOccupation& occ, double r,
                   std::complex<double> alpha, int cutoff) {
  return oracle_run(occ, r, alpha, cutoff).work;
}

}  // namespace eiwe::fock
