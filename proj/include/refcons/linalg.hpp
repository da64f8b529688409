// linalg.hpp — dense complex matrix aliases and the Hermitian eigensolver

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace refcons {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kNormTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;

/// max |m(i,j) - conj(m(j,i))|; infinity for non-square input.
double hermitian_deviation(const Matrix& m);

/// max |m m^dagger - 1| entrywise.
double unitarity_deviation(const Matrix& m);

/// Largest entrywise magnitude of a - b.
double max_abs_diff(const Matrix& a, const Matrix& b);

struct EigenDecomposition {
    RealVector values;  // descending
    Matrix vectors;     // columns, first significant component real and positive

    Matrix reconstruct() const;
};

/// Spectral decomposition of a Hermitian matrix. Eigenvalues are sorted
/// descending; within a degenerate cluster (gap below 1e-12) columns are
/// ordered by the position of their first significant component.
/// Throws ValidationError if the input deviates from Hermitian by more than
/// kHermitianTol.
EigenDecomposition hermitian_eigendecomposition(const Matrix& m);

} // namespace refcons
