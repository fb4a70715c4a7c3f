#pragma once

#include <cstdint>
#include <vector>

#include "framemult/linalg.hpp"

namespace framemult {

/// Ordered finite sequence of N vectors in C^d. Being a frame (spanning) is
/// a tested property, not an invariant; zero vectors are allowed.
class FrameSeq {
public:
    FrameSeq(std::size_t dim, std::vector<CVector> vectors);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }
    const CVector& operator[](std::size_t n) const { return vectors_[n]; }
    const std::vector<CVector>& vectors() const { return vectors_; }

private:
    std::size_t dim_;
    std::vector<CVector> vectors_;
};

/// Optimal frame bounds: A = lambda_min(S), B = lambda_max(S).
struct FrameBounds {
    double lower = 0.0;
    double upper = 0.0;
};

struct FrameClass {
    enum class Kind { SpanningFrame, RieszBasis, NonSpanning };
    Kind kind = Kind::NonSpanning;
    bool minimal = false;  // linearly independent (finite-dimensional minimality)
};

// In C^d every finite sequence is Bessel and all sums converge, so the
// Bessel/unconditional-convergence hypotheses of the underlying theory hold
// vacuously throughout this module.

/// Analysis coefficients (<h, phi_n>)_n.
CVector analysis(const FrameSeq& phi, const CVector& h);

/// Synthesis sum_n c_n phi_n.
CVector synthesis(const FrameSeq& phi, const CVector& coeffs);

/// N x d matrix of the analysis operator; row n is phi_n^*.
CMatrix analysis_matrix(const FrameSeq& phi);

/// d x N matrix of the synthesis operator; column n is phi_n.
CMatrix synthesis_matrix(const FrameSeq& phi);

/// Frame operator S = T U = sum_n phi_n phi_n^*; Hermitian PSD.
CMatrix frame_operator(const FrameSeq& phi);

FrameBounds frame_bounds(const FrameSeq& phi);

/// True iff lambda_min(S) > tol * lambda_max(S).
bool is_frame(const FrameSeq& phi, double tol = tol::kRank);

/// Canonical dual (S^-1 phi_n). Throws NotAFrameError for non-spanning input.
FrameSeq canonical_dual(const FrameSeq& phi);

/// True iff ||T_{phid} U_phi - I||_F <= tol.
bool is_dual_pair(const FrameSeq& phi, const FrameSeq& phid, double tol = tol::kDual);

/// A dual of phi distinct from the canonical one whenever N > d, built from a
/// seeded random perturbation in the kernel of the synthesis operator.
FrameSeq random_dual(const FrameSeq& phi, std::uint64_t seed);

FrameClass classify(const FrameSeq& phi, double tol = tol::kRank);

/// R(U_phi) = R(U_psi): two-sided column-space inclusion of the analysis
/// matrices (phi and psi are equivalent frames).
bool are_equivalent(const FrameSeq& phi, const FrameSeq& psi, double tol = tol::kRank);

/// R(U_phi) subset of R(U_psi): psi is partial equivalent to phi.
bool is_partial_equivalent(const FrameSeq& psi, const FrameSeq& phi, double tol = tol::kRank);

}  // namespace framemult
