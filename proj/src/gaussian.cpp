#include "eiwe/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "eiwe/errors.hpp"

namespace eiwe {

namespace {

void check_even_square(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(what) + ": matrix must be square");
  if (m.rows() < 2 || m.rows() % 2 != 0)
    throw std::invalid_argument(std::string(what) +
                                ": dimension must be even and positive");
  if (!m.allFinite())
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Eigen::MatrixXd entries)
    : entries_(std::move(entries)) {
  check_even_square(entries_, "CovarianceMatrix");
  n_modes_ = static_cast<int>(entries_.rows()) / 2;
}

SymplecticMatrix::SymplecticMatrix(Eigen::MatrixXd entries)
    : entries_(std::move(entries)) {
  check_even_square(entries_, "SymplecticMatrix");
  n_modes_ = static_cast<int>(entries_.rows()) / 2;
  const Eigen::MatrixXd omega = symplectic_form(n_modes_);
  const double defect =
      (entries_ * omega * entries_.transpose() - omega).cwiseAbs().maxCoeff();
  const double scale = entries_.cwiseAbs().maxCoeff();
  if (defect > kSymmetryTol * std::max(1.0, scale * scale))
    throw std::invalid_argument(
        "SymplecticMatrix: S Omega S^T != Omega (defect " +
        std::to_string(defect) + ")");
}

GaussianState::GaussianState(CovarianceMatrix cov_, Eigen::VectorXd mean_,
                             Eigen::VectorXd omegas_)
    : cov(std::move(cov_)), mean(std::move(mean_)), omegas(std::move(omegas_)) {
  const int n = cov.n_modes();
  if (mean.size() != 2 * n)
    throw std::invalid_argument("GaussianState: mean length must be 2 n_modes");
  if (omegas.size() != n)
    throw std::invalid_argument("GaussianState: one omega per mode required");
  if (!mean.allFinite() || !omegas.allFinite())
    throw std::invalid_argument("GaussianState: non-finite entries");
  if ((omegas.array() <= 0.0).any())
    throw std::invalid_argument("GaussianState: omegas must be positive");
}

Eigen::MatrixXd symplectic_form(int n_modes) {
  if (n_modes < 1)
    throw std::invalid_argument("symplectic_form: n_modes must be >= 1");
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cov) {
  const Eigen::MatrixXd& s = cov.matrix();
  const double asym = (s - s.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol)
    throw std::invalid_argument(
        "symplectic_eigenvalues: covariance not symmetric (defect " +
        std::to_string(asym) + ")");

  const int n = cov.n_modes();
  const Eigen::MatrixXd m = symplectic_form(n) * s;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("symplectic_eigenvalues: eigen-solve failed");

  // Eigenvalues of Omega sigma come in pairs +-i nu; collapse by sorting the
  // moduli and averaging consecutive pairs.
  std::vector<double> mods(2 * n);
  for (int i = 0; i < 2 * n; ++i) mods[i] = std::abs(solver.eigenvalues()[i]);
  std::sort(mods.begin(), mods.end());
  std::vector<double> nus(n);
  for (int k = 0; k < n; ++k) nus[k] = 0.5 * (mods[2 * k] + mods[2 * k + 1]);
  return nus;
}

ValidityReport validate_covariance(const CovarianceMatrix& cov) {
  ValidityReport report;
  const Eigen::MatrixXd& s = cov.matrix();
  report.symmetry_defect = (s - s.transpose()).cwiseAbs().maxCoeff();

  // Use the symmetrized matrix so a report is produced even when the input is
  // slightly (or badly) asymmetric.
  const CovarianceMatrix sym(((s + s.transpose()) / 2.0).eval());
  const std::vector<double> nus = symplectic_eigenvalues(sym);
  report.min_symplectic_eigenvalue = nus.front();
  report.valid = report.symmetry_defect <= kSymmetryTol &&
                 report.min_symplectic_eigenvalue >= 0.5 - kPhysicalitySlack;
  return report;
}

SymplecticMatrix build_symplectic(SymplecticKind kind, double parameter,
                                  const std::vector<int>& targets,
                                  int n_modes) {
  if (n_modes < 1)
    throw std::invalid_argument("build_symplectic: n_modes must be >= 1");
  if (!std::isfinite(parameter))
    throw std::invalid_argument("build_symplectic: parameter must be finite");
  const std::size_t expected =
      (kind == SymplecticKind::rotation ||
       kind == SymplecticKind::single_mode_squeeze)
          ? 1
          : 2;
  if (targets.size() != expected)
    throw std::invalid_argument("build_symplectic: wrong number of targets");
  for (int t : targets)
    if (t < 0 || t >= n_modes)
      throw std::invalid_argument("build_symplectic: target mode out of range");
  if (expected == 2 && targets[0] == targets[1])
    throw std::invalid_argument("build_symplectic: target modes must differ");

  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  switch (kind) {
    case SymplecticKind::rotation: {
      const int t = 2 * targets[0];
      const double c = std::cos(parameter), sn = std::sin(parameter);
      s(t, t) = c;
      s(t, t + 1) = -sn;
      s(t + 1, t) = sn;
      s(t + 1, t + 1) = c;
      break;
    }
    case SymplecticKind::single_mode_squeeze: {
      const int t = 2 * targets[0];
      s(t, t) = std::exp(-parameter);
      s(t + 1, t + 1) = std::exp(parameter);
      break;
    }
    case SymplecticKind::two_mode_squeeze: {
      const int a = 2 * targets[0], b = 2 * targets[1];
      const double ch = std::cosh(parameter), sh = std::sinh(parameter);
      s(a, a) = s(a + 1, a + 1) = s(b, b) = s(b + 1, b + 1) = ch;
      s(a, b) = s(b, a) = sh;          // x-x, plus sign
      s(a + 1, b + 1) = s(b + 1, a + 1) = -sh;  // p-p, minus sign
      break;
    }
    case SymplecticKind::beam_splitter: {
      const int a = 2 * targets[0], b = 2 * targets[1];
      const double c = std::cos(parameter), sn = std::sin(parameter);
      s(a, a) = s(a + 1, a + 1) = s(b, b) = s(b + 1, b + 1) = c;
      s(a, b) = s(a + 1, b + 1) = sn;
      s(b, a) = s(b + 1, a + 1) = -sn;
      break;
    }
  }
  return SymplecticMatrix(std::move(s));
}

GaussianState apply_symplectic(const SymplecticMatrix& s,
                               const GaussianState& state) {
  if (s.n_modes() != state.n_modes())
    throw std::invalid_argument("apply_symplectic: mode count mismatch");
  const Eigen::MatrixXd& m = s.matrix();
  Eigen::MatrixXd cov = m * state.cov.matrix() * m.transpose();
  // Congruence is symmetric up to roundoff; symmetrize so downstream symmetry
  // checks at 1e-12 stay meaningful.
  cov = ((cov + cov.transpose()) / 2.0).eval();
  return GaussianState(CovarianceMatrix(std::move(cov)), m * state.mean,
                       state.omegas);
}

double purity(const CovarianceMatrix& cov) {
  const double det = cov.matrix().determinant();
  if (!(det > 0.0))
    throw NumericalFailure("purity: non-positive covariance determinant");
  return std::pow(0.5, cov.n_modes()) / std::sqrt(det);
}

}  // namespace eiwe
