#pragma once

#include <Eigen/Dense>
#include <vector>

namespace eiwe {

// Symplectic linear algebra over quadrature covariance matrices.
//
// Conventions (shared project-wide):
//   * quadrature ordering is interleaved: (x1, p1, x2, p2, ...)
//   * covariance entries are dimensionless with vacuum variance 1/2 per
//     quadrature, i.e. sigma_vac = I/2 and a pure mode has symplectic
//     eigenvalue nu = 1/2

inline constexpr double kSymmetryTol = 1e-12;      // symmetry / symplectic identity
inline constexpr double kPhysicalitySlack = 1e-10; // roundoff slack on nu >= 1/2

// Real symmetric 2n x 2n matrix of second moments.  Construction checks shape
// and finiteness only; symmetry and the bona-fide condition are the business
// of validate_covariance so that unphysical candidates can still be examined.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Eigen::MatrixXd entries);

  int n_modes() const { return n_modes_; }
  const Eigen::MatrixXd& matrix() const { return entries_; }

 private:
  int n_modes_;
  Eigen::MatrixXd entries_;
};

// Real 2n x 2n matrix S with S Omega S^T = Omega.  The identity is verified on
// construction with a tolerance scaled by the squared magnitude of the largest
// entry (roundoff in the congruence grows like |S|^2 eps).
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(Eigen::MatrixXd entries);

  int n_modes() const { return n_modes_; }
  const Eigen::MatrixXd& matrix() const { return entries_; }

 private:
  int n_modes_;
  Eigen::MatrixXd entries_;
};

// Gaussian state: covariance, mean vector (length 2n, quadrature units) and
// one angular frequency per mode (rad/s, all positive).
struct GaussianState {
  GaussianState(CovarianceMatrix cov_, Eigen::VectorXd mean_,
                Eigen::VectorXd omegas_);

  int n_modes() const { return cov.n_modes(); }

  CovarianceMatrix cov;
  Eigen::VectorXd mean;
  Eigen::VectorXd omegas;
};

struct ValidityReport {
  bool valid = false;
  double min_symplectic_eigenvalue = 0.0;
  double symmetry_defect = 0.0;
};

enum class SymplecticKind {
  rotation,            // planar rotation in (x, p) of one mode
  single_mode_squeeze, // diag(e^-r, e^r) on one mode
  two_mode_squeeze,    // cosh/sinh mixing, +x correlation / -p correlation
  beam_splitter        // cos/sin mixing of two modes
};

// Standard symplectic form: block-diagonal copies of [[0, 1], [-1, 0]].
Eigen::MatrixXd symplectic_form(int n_modes);

// Moduli of the eigenvalues of i Omega sigma, collapsed to n values, sorted
// ascending.  All >= 1/2 for a bona-fide state.
std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& cov);

ValidityReport validate_covariance(const CovarianceMatrix& cov);

// Embedded 2n x 2n generator.  rotation and single_mode_squeeze take one
// target mode, two_mode_squeeze and beam_splitter take two distinct ones.
SymplecticMatrix build_symplectic(SymplecticKind kind, double parameter,
                                  const std::vector<int>& targets,
                                  int n_modes);

// cov' = S cov S^T, mean' = S mean; symplectic eigenvalues are unchanged.
GaussianState apply_symplectic(const SymplecticMatrix& s,
                               const GaussianState& state);

// (1/2)^n / sqrt(det sigma); equals 1 iff every nu_k = 1/2.
double purity(const CovarianceMatrix& cov);

}  // namespace eiwe
