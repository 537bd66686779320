#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace teleport {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Raised when an input violates a documented domain invariant
/// (unnormalized state, non-hermitian operator, wrong shape, ...).
class InvariantViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a dense routine fails to produce a finite result.
class NumericFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Subsystem { A, B };

/// Largest row or column count any routine will build.
inline constexpr Eigen::Index kMaxDimension = 4096;

struct HermitianEigenResult {
  RealVector eigenvalues;     // ascending
  ComplexMatrix eigenvectors; // columns, orthonormal
};

struct SvdResult {
  ComplexMatrix u;
  RealVector singular_values; // descending, non-negative
  ComplexMatrix v;
};

bool all_finite(const ComplexMatrix& m);
void require_finite(const ComplexMatrix& m, const char* what);
void require_square(const ComplexMatrix& m, const char* what);

/// Largest entrywise |m - m^dagger|.
double hermiticity_error(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transpose of the A (first) or B (second) tensor factor of a d^2 x d^2 operator.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, int d, Subsystem which);

double trace_norm(const ComplexMatrix& m);

SvdResult svd(const ComplexMatrix& m);

/// Requires hermiticity within 1e-10 entrywise.
HermitianEigenResult herm_eig(const ComplexMatrix& m);

/// exp(i * t * h) for hermitian h, built from its eigendecomposition so the
/// result is unitary to rounding.
ComplexMatrix unitary_exp(const ComplexMatrix& h, double t);

/// Row-major reshape of a length d*d vector into a d x d matrix and back.
ComplexMatrix unvec(const ComplexVector& v, int d);
ComplexVector vec(const ComplexMatrix& m);

} // namespace teleport
