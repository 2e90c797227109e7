#pragma once

#include "jband/complex_matrix.hpp"

#include <vector>

namespace jband {

/// Default requested eigenvalue accuracy, relative to 1 + ||H||_2.
inline constexpr double kDefaultEigenTolerance = 1e-12;

/// Inputs are accepted as Hermitian when max|H - H*| <= kHermitianTolerance * (1 + max|H|).
inline constexpr double kHermitianTolerance = 1e-10;

/// Eigenvalues of a PSD input in [-kPsdClampTolerance * (1 + max|M|), 0) are treated as 0.
inline constexpr double kPsdClampTolerance = 1e-10;

/// Jacobi sweeps stop once the off-diagonal Frobenius mass is below this fraction of ||H||_F.
inline constexpr double kJacobiOffDiagonalRatio = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // columns are eigenvectors, in the order of `values`
};

/// Throws SymmetryError when H is not Hermitian within kHermitianTolerance,
/// DimensionError when H is not square, NonFiniteError on NaN/Inf.
void require_hermitian(const ComplexMatrix& h, const char* what);

/// All eigenvalues of a Hermitian matrix in ascending order.
///
/// Cyclic complex Jacobi rotations on (H + H*)/2 with a fixed sweep order, so
/// identical input bits produce identical output bits. `tol` scales the
/// stopping threshold; throws ConvergenceError after kJacobiMaxSweeps sweeps.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h,
                                          double tol = kDefaultEigenTolerance);

/// Eigenvalues and an orthonormal eigenvector basis. Values are bit-identical
/// to hermitian_eigenvalues(h, tol).
EigenSystem hermitian_eigensystem(const ComplexMatrix& h, double tol = kDefaultEigenTolerance);

/// Principal square root of a Hermitian positive semidefinite matrix.
/// Throws NotPsdError when an eigenvalue lies below the clamp tolerance.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Singular values in descending order, min(rows, cols) of them.
///
/// Read off the Hermitian dilation [[0, A], [A*, 0]], whose spectrum is {±sigma_i};
/// this keeps absolute accuracy eps * ||A|| even for tiny singular values.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Tr((A A*)^{1/2}), the sum of singular values.
double nuclear_norm(const ComplexMatrix& a);

/// Largest singular value (0 for an empty matrix).
double spectral_norm(const ComplexMatrix& a);

} // namespace jband
