#ifndef FLOQUETLAB_TOLERANCES_HPP
#define FLOQUETLAB_TOLERANCES_HPP

namespace floquetlab {

// Single tolerance authority for the whole library.  Operations take a
// Tolerances value defaulting to default_tolerances(); acceptance tests
// read the same numbers.
struct Tolerances {
  double hermiticity_rel = 1e-12;        // ||M - M^dag||_F <= tol * ||M||_F
  double unitarity = 1e-10;              // ||U^dag U - Id||_F
  double polar_unitarity = 1e-12;        // unitarity of the polar factor
  double smallest_singular = 1e-14;      // polar_unitarize pre-condition
  double eigen_orthonormality = 1e-10;   // ||V^dag V - Id||_F
  double eigen_reconstruction_rel = 1e-10;
  double eigenvalue_modulus = 1e-10;     // | |mu| - 1 | for unitary spectra
  double eigenphase_residual = 1e-8;     // ||U xi - e^{-i a} xi||
  double phase_cluster_gap = 1e-9;       // joint orthonormalization window
  double norm_drift_accept = 1e-8;       // OrbitSample invariant
  double norm_drift_abort = 1e-6;        // propagate() hard failure
  double parseval = 1e-10;
};

const Tolerances& default_tolerances();

}  // namespace floquetlab

#endif
