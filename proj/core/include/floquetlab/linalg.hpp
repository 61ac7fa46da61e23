#ifndef FLOQUETLAB_LINALG_HPP
#define FLOQUETLAB_LINALG_HPP

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "floquetlab/errors.hpp"
#include "floquetlab/tolerances.hpp"

namespace floquetlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

double hermiticity_defect(const Matrix& m);   // ||M - M^dag||_F
double unitarity_defect(const Matrix& m);     // ||M^dag M - Id||_F

bool all_finite(const Matrix& m);
bool all_finite(const Vector& v);

// Hermitian operator; construction enforces ||M - M^dag||_F <= tol*||M||_F
// and finiteness of every entry.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix m,
                             const Tolerances& tol = default_tolerances());
  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Matrix m_;
};

// Unitary operator; construction records the unitarity defect and rejects
// matrices outside tolerance.
class UnitaryOperator {
 public:
  explicit UnitaryOperator(Matrix m,
                           const Tolerances& tol = default_tolerances());
  const Matrix& matrix() const { return m_; }
  double unitarity_defect() const { return defect_; }
  Eigen::Index dim() const { return m_.rows(); }
  UnitaryOperator adjoint() const;

 private:
  Matrix m_;
  double defect_;
};

// Ascending eigenvalues with orthonormal column eigenvectors.
struct EigenSystem {
  RealVector values;
  Matrix vectors;
};

// Eigenphases a_j in [0, 2pi) sorted ascending, eigenvalue = e^{-i a_j}.
// Phases closer than the cluster gap are grouped; vectors within a cluster
// are jointly orthonormalized.  clusters holds [first, last] index ranges.
struct UnitaryEigensystem {
  RealVector phases;
  Matrix vectors;
  RealVector residuals;  // ||U v - e^{-i a} v||
  std::vector<std::pair<int, int>> clusters;
};

EigenSystem hermitian_eig(const HermitianOperator& h,
                          const Tolerances& tol = default_tolerances());

// exp(-i s H); eigenphases are s * values(H) mod 2pi.
UnitaryOperator expm_i_hermitian(const HermitianOperator& h, double s,
                                 const Tolerances& tol = default_tolerances());

// Unitary polar factor of a nonsingular matrix; drift control for long
// propagations.
UnitaryOperator polar_unitarize(const Matrix& m,
                                const Tolerances& tol = default_tolerances());

UnitaryEigensystem unitary_eigenphases(
    const UnitaryOperator& u, const Tolerances& tol = default_tolerances());

// Wraps x into [0, 2pi).
double wrap_two_pi(double x);

}  // namespace floquetlab

#endif
