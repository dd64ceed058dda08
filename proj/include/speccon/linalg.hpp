#pragma once

#include <vector>

#include "speccon/matrix.hpp"

namespace speccon::linalg {

// Fixed library tolerances. These are the single source of contract numbers
// for the dense kernels; nothing overrides them at runtime.
inline constexpr double kCholReconstructTol = 1e-10;  // relative Frobenius
inline constexpr double kInvertMaxEntryTol = 1e-8;    // a*inv(a) vs identity
inline constexpr double kEigenReconstructTol = 1e-8;  // V diag(l) V^T vs a

// Lower-triangular Cholesky factor L with L*L^T == a.
// Throws NotPositiveDefinite when a pivot fails; this doubles as the
// library-wide positive-definiteness test.
Matrix cholesky(const SymMatrix& a);

// log(det(a)) for positive definite a, via 2*sum(log(L_ii)).
double log_det(const SymMatrix& a);

// Inverse of a positive definite matrix, via the Cholesky factor.
SymMatrix invert(const SymMatrix& a);

// Solves a*x = b for positive definite a given its Cholesky factor.
std::vector<double> cholesky_solve(const Matrix& chol_lower, const std::vector<double>& b);

struct EigenSym {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k pairs with values[k]; orthonormal
};

// Full symmetric eigendecomposition: Householder tridiagonalization followed
// by implicit-shift QL iteration. Handles any finite symmetric input.
EigenSym eigen_sym(const SymMatrix& a);

// Proximal operator of t*|.|: sign(x)*max(|x|-t, 0). Requires t >= 0.
double soft_threshold(double x, double t);

// --- dense helpers shared by the solvers ---

// c = a*b (row-major, kernel-backed inner loops).
Matrix matmul(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);
double frobenius_distance(const SymMatrix& a, const SymMatrix& b);

// Largest eigenvalue magnitude estimate by power iteration (symmetric input).
double spectral_norm_sym(const SymMatrix& a, int iters = 60);

// Complex Hermitian positive definite Cholesky (L*L^H == a) and inverse.
// Used by the partial-coherence screen where spectra are complex.
std::vector<cplx> herm_cholesky(const HermMatrix& a);
HermMatrix herm_invert(const HermMatrix& a);

}  // namespace speccon::linalg
