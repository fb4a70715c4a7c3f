#pragma once

#include <vector>

#include "framemult/complex_mat.hpp"

namespace framemult {

namespace tol {
/// Relative tolerance on ||A - A*||_F / ||A||_F for the Hermitian contract.
inline constexpr double kHermitian = 1e-10;
/// Default relative rank / singularity threshold (against sigma_max).
inline constexpr double kRank = 1e-10;
/// Frobenius tolerance for dual-pair tests.
inline constexpr double kDual = 1e-9;
/// Frobenius tolerance for inverse compositions.
inline constexpr double kInverse = 1e-9;
/// Relative floor for semi-normalized symbols: inf|m| > kSymbol * sup|m|.
inline constexpr double kSymbol = 1e-12;
/// Singular values computed through the Gram matrix are only accurate to
/// about sqrt(eps) * sigma_max, so rank decisions clamp the relative
/// threshold at this floor.
inline constexpr double kSigmaFloor = 1e-7;
}  // namespace tol

/// Eigendecomposition A = V diag(lambda) V* of a Hermitian matrix.
struct EigResult {
    std::vector<double> eigenvalues;  ///< ascending
    CMatrix eigenvectors;             ///< unitary; column k pairs with eigenvalues[k]
};

/// Orthonormal basis e_1..e_d of C^d (identity columns).
std::vector<CVector> standard_basis(std::size_t d);

/// Cyclic complex Jacobi diagonalization. A must be square and Hermitian
/// within herm_tol (relative Frobenius); throws NotHermitianError otherwise.
EigResult hermitian_eig(const CMatrix& A, double herm_tol = tol::kHermitian);

/// Singular values of A, descending, from the eigendecomposition of the
/// smaller Gram matrix.
std::vector<double> singular_values(const CMatrix& A);

/// Moore-Penrose pseudoinverse; singular values <= tol * sigma_max are
/// truncated.
CMatrix pinv(const CMatrix& A, double tol = tol::kRank);

/// Pseudoinverse of a Hermitian matrix straight from its eigendecomposition,
/// avoiding the squared conditioning of the Gram route.
CMatrix hermitian_pinv(const CMatrix& A, double tol = tol::kRank);

/// Solve Ax = b for square invertible A. Throws SingularMatrixError (with a
/// condition estimate) when sigma_min <= tol * sigma_max.
CVector solve(const CMatrix& A, const CVector& b, double tol = tol::kRank);

/// Numerical rank: number of singular values > tol * sigma_max.
std::size_t rank(const CMatrix& A, double tol = tol::kRank);

/// True iff the column space of A is contained in the column space of B,
/// decided by rank([B | A]) == rank(B). Row counts must match.
bool column_space_leq(const CMatrix& A, const CMatrix& B, double tol = tol::kRank);

}  // namespace framemult
