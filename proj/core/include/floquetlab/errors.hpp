#ifndef FLOQUETLAB_ERRORS_HPP
#define FLOQUETLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace floquetlab {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error { using Error::Error; };

// linalg
struct NonHermitianInput : Error { using Error::Error; };
struct NonUnitaryInput : Error { using Error::Error; };
struct ConvergenceFailure : Error { using Error::Error; };
struct SingularInput : Error { using Error::Error; };

// models
struct GeneratorNotAvailable : Error { using Error::Error; };
struct NoClosedForm : Error { using Error::Error; };
struct KickInstant : Error { using Error::Error; };
struct IndexOutOfSequence : Error { using Error::Error; };
struct DerivativeNotAvailable : Error { using Error::Error; };

// propagator
struct NormDriftExceeded : Error { using Error::Error; };
struct TimeNotOnGrid : Error { using Error::Error; };
struct NotAnEigenvector : Error { using Error::Error; };

// spectral
struct IncompleteBasis : Error { using Error::Error; };
struct AliasedQuadrature : Error { using Error::Error; };
struct ExpansionResidualTooLarge : Error { using Error::Error; };
struct GridTooCoarse : Error { using Error::Error; };

// diagnostics
struct GridMismatch : Error { using Error::Error; };
struct HorizonTooShort : Error { using Error::Error; };

// enlarged space
struct ShiftMismatch : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };

// cli
struct ConfigInvalid : Error { using Error::Error; };
struct FileNotFound : Error { using Error::Error; };

}  // namespace floquetlab

#endif
