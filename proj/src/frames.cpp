#include "framemult/frames.hpp"

#include <cmath>

#include "framemult/random.hpp"

namespace framemult {

FrameSeq::FrameSeq(std::size_t dim, std::vector<CVector> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
    if (dim_ == 0) throw DimensionError("FrameSeq: ambient dimension must be positive");
    if (vectors_.empty()) throw DimensionError("FrameSeq: sequence must be nonempty");
    for (const auto& v : vectors_) {
        if (v.dim() != dim_) throw DimensionError("FrameSeq: vector dimension mismatch");
        if (!v.is_finite()) throw InputError("FrameSeq: non-finite entry");
    }
}

CVector analysis(const FrameSeq& phi, const CVector& h) {
    if (h.dim() != phi.dim()) throw DimensionError("analysis: vector dimension mismatch");
    CVector c(phi.size());
    for (std::size_t n = 0; n < phi.size(); ++n) c[n] = inner(h, phi[n]);
    return c;
}

CVector synthesis(const FrameSeq& phi, const CVector& coeffs) {
    if (coeffs.dim() != phi.size()) throw DimensionError("synthesis: coefficient length mismatch");
    CVector h(phi.dim());
    for (std::size_t n = 0; n < phi.size(); ++n) {
        for (std::size_t i = 0; i < phi.dim(); ++i) h[i] += coeffs[n] * phi[n][i];
    }
    return h;
}

CMatrix analysis_matrix(const FrameSeq& phi) {
    CMatrix U(phi.size(), phi.dim());
    for (std::size_t n = 0; n < phi.size(); ++n)
        for (std::size_t j = 0; j < phi.dim(); ++j) U(n, j) = std::conj(phi[n][j]);
    return U;
}

CMatrix synthesis_matrix(const FrameSeq& phi) {
    CMatrix T(phi.dim(), phi.size());
    for (std::size_t n = 0; n < phi.size(); ++n) T.set_column(n, phi[n]);
    return T;
}

CMatrix frame_operator(const FrameSeq& phi) {
    return synthesis_matrix(phi) * analysis_matrix(phi);
}

FrameBounds frame_bounds(const FrameSeq& phi) {
    const EigResult eig = hermitian_eig(frame_operator(phi));
    FrameBounds b;
    b.lower = std::max(eig.eigenvalues.front(), 0.0);
    b.upper = std::max(eig.eigenvalues.back(), 0.0);
    return b;
}

bool is_frame(const FrameSeq& phi, double tol) {
    const FrameBounds b = frame_bounds(phi);
    return b.lower > tol * b.upper && b.upper > 0.0;
}

FrameSeq canonical_dual(const FrameSeq& phi) {
    if (!is_frame(phi)) throw NotAFrameError("canonical_dual: sequence does not span");
    const CMatrix s_inv = hermitian_pinv(frame_operator(phi));
    std::vector<CVector> duals;
    duals.reserve(phi.size());
    for (std::size_t n = 0; n < phi.size(); ++n) duals.push_back(s_inv * phi[n]);
    return FrameSeq(phi.dim(), std::move(duals));
}

bool is_dual_pair(const FrameSeq& phi, const FrameSeq& phid, double tol) {
    if (phi.dim() != phid.dim() || phi.size() != phid.size())
        throw DimensionError("is_dual_pair: shapes differ");
    const CMatrix R = synthesis_matrix(phid) * analysis_matrix(phi);
    return identity_residual(R) <= tol;
}

FrameSeq random_dual(const FrameSeq& phi, std::uint64_t seed) {
    if (!is_frame(phi)) throw NotAFrameError("random_dual: sequence does not span");
    const CMatrix U = analysis_matrix(phi);
    const CMatrix T = synthesis_matrix(phi);
    const CMatrix canon = hermitian_pinv(frame_operator(phi)) * T;  // S^-1 T, d x N
    Rng rng(seed);
    const CMatrix W = rng.matrix(phi.dim(), phi.size());
    const CMatrix L = canon + W * (CMatrix::identity(phi.size()) - U * canon);
    std::vector<CVector> duals;
    duals.reserve(phi.size());
    for (std::size_t n = 0; n < phi.size(); ++n) duals.push_back(L.column(n));
    return FrameSeq(phi.dim(), std::move(duals));
}

FrameClass classify(const FrameSeq& phi, double tol) {
    FrameClass fc;
    const bool spanning = is_frame(phi, tol);
    if (spanning) {
        fc.kind = phi.size() == phi.dim() ? FrameClass::Kind::RieszBasis
                                          : FrameClass::Kind::SpanningFrame;
    } else {
        fc.kind = FrameClass::Kind::NonSpanning;
    }
    fc.minimal = rank(synthesis_matrix(phi), tol) == phi.size();
    return fc;
}

bool are_equivalent(const FrameSeq& phi, const FrameSeq& psi, double tol) {
    return is_partial_equivalent(psi, phi, tol) && is_partial_equivalent(phi, psi, tol);
}

bool is_partial_equivalent(const FrameSeq& psi, const FrameSeq& phi, double tol) {
    if (phi.dim() != psi.dim() || phi.size() != psi.size())
        throw DimensionError("is_partial_equivalent: shapes differ");
    return column_space_leq(analysis_matrix(phi), analysis_matrix(psi), tol);
}

}  // namespace framemult
