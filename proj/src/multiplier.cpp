#include "framemult/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace framemult {

SymbolSeq::SymbolSeq(std::vector<Complex> values) : values_(std::move(values)) {
    if (values_.empty()) throw DimensionError("SymbolSeq: empty symbol");
    inf_abs_ = std::abs(values_.front());
    sup_abs_ = inf_abs_;
    for (const auto& x : values_) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
            throw InputError("SymbolSeq: non-finite entry");
        const double a = std::abs(x);
        inf_abs_ = std::min(inf_abs_, a);
        sup_abs_ = std::max(sup_abs_, a);
    }
}

SymbolSeq SymbolSeq::constant(Complex c, std::size_t count) {
    return SymbolSeq(std::vector<Complex>(count, c));
}

bool SymbolSeq::semi_normalized() const {
    return sup_abs_ > 0.0 && inf_abs_ > tol::kSymbol * sup_abs_;
}

SymbolSeq SymbolSeq::conj() const {
    std::vector<Complex> v(values_.size());
    for (std::size_t n = 0; n < v.size(); ++n) v[n] = std::conj(values_[n]);
    return SymbolSeq(std::move(v));
}

SymbolSeq SymbolSeq::reciprocal() const {
    if (!semi_normalized())
        throw NotSemiNormalizedError("SymbolSeq::reciprocal: symbol has (near-)zero entries");
    std::vector<Complex> v(values_.size());
    for (std::size_t n = 0; n < v.size(); ++n) v[n] = 1.0 / values_[n];
    return SymbolSeq(std::move(v));
}

std::optional<Complex> SymbolSeq::constant_value() const {
    const Complex c = values_.front();
    for (const auto& x : values_) {
        if (std::abs(x - c) > 1e-14 * std::max(1.0, sup_abs_)) return std::nullopt;
    }
    return c;
}

Multiplier::Multiplier(SymbolSeq symbol, FrameSeq phi_seq, FrameSeq psi_seq)
    : m(std::move(symbol)), phi(std::move(phi_seq)), psi(std::move(psi_seq)) {
    if (m.size() != phi.size() || m.size() != psi.size())
        throw DimensionError("Multiplier: symbol and sequence lengths differ");
    if (phi.dim() != psi.dim())
        throw DimensionError("Multiplier: ambient dimensions differ");
}

CVector apply(const Multiplier& M, const CVector& h) {
    if (h.dim() != M.dim()) throw DimensionError("apply: vector dimension mismatch");
    CVector out(M.dim());
    for (std::size_t n = 0; n < M.size(); ++n) {
        const Complex w = M.m[n] * inner(h, M.psi[n]);
        for (std::size_t i = 0; i < M.dim(); ++i) out[i] += w * M.phi[n][i];
    }
    return out;
}

CMatrix to_matrix(const Multiplier& M) {
    return synthesis_matrix(M.phi) * CMatrix::diagonal(M.m.values()) * analysis_matrix(M.psi);
}

bool is_invertible(const Multiplier& M, double tol) {
    const std::vector<double> sv = singular_values(to_matrix(M));
    return sv.front() > 0.0 && sv.back() > std::max(tol, tol::kSigmaFloor) * sv.front();
}

InverseResiduals verify_inverse(const Multiplier& M, const Multiplier& Minv) {
    const CMatrix A = to_matrix(M);
    const CMatrix B = to_matrix(Minv);
    return {identity_residual(B * A), identity_residual(A * B)};
}

Multiplier riesz_inverse(const Multiplier& M) {
    if (classify(M.phi).kind != FrameClass::Kind::RieszBasis ||
        classify(M.psi).kind != FrameClass::Kind::RieszBasis)
        throw NotRieszError("riesz_inverse: both sequences must be Riesz bases");
    if (!M.m.semi_normalized())
        throw NotSemiNormalizedError("riesz_inverse: symbol not semi-normalized");
    return Multiplier(M.m.reciprocal(), canonical_dual(M.psi), canonical_dual(M.phi));
}

DaggerDuals dagger_duals(const Multiplier& M) {
    if (!M.m.semi_normalized())
        throw NotSemiNormalizedError("dagger_duals: symbol not semi-normalized");
    if (!is_frame(M.phi) || !is_frame(M.psi))
        throw NotAFrameError("dagger_duals: both sequences must span");
    if (!is_invertible(M)) throw NotInvertibleError("dagger_duals: multiplier is singular");

    const CMatrix minv = pinv(to_matrix(M));
    const CMatrix minv_adj = minv.adjoint();
    std::vector<CVector> psi_dagger, phi_dagger;
    psi_dagger.reserve(M.size());
    phi_dagger.reserve(M.size());
    for (std::size_t n = 0; n < M.size(); ++n) {
        psi_dagger.push_back(minv * (M.m[n] * M.phi[n]));
        phi_dagger.push_back(minv_adj * (std::conj(M.m[n]) * M.psi[n]));
    }
    return {FrameSeq(M.dim(), std::move(psi_dagger)), FrameSeq(M.dim(), std::move(phi_dagger))};
}

std::pair<Multiplier, Multiplier> inverse_as_multiplier(const Multiplier& M,
                                                        const FrameSeq& phi_dual,
                                                        const FrameSeq& psi_dual) {
    if (!is_dual_pair(M.phi, phi_dual)) throw NotADualError("inverse_as_multiplier: phi_dual");
    if (!is_dual_pair(M.psi, psi_dual)) throw NotADualError("inverse_as_multiplier: psi_dual");
    DaggerDuals dd = dagger_duals(M);
    const SymbolSeq recip = M.m.reciprocal();
    return {Multiplier(recip, std::move(dd.psi_dagger), phi_dual),
            Multiplier(recip, psi_dual, std::move(dd.phi_dagger))};
}

namespace {

FrameSeq reweight(const FrameSeq& phi, const SymbolSeq& w) {
    std::vector<CVector> vs;
    vs.reserve(phi.size());
    for (std::size_t n = 0; n < phi.size(); ++n) vs.push_back(w[n] * phi[n]);
    return FrameSeq(phi.dim(), std::move(vs));
}

/// Magnitude split m = c * conj(d) with d a real power of two near sqrt|m|,
/// keeping the product exact in floating point.
void pow2_split(const std::vector<Complex>& m, std::vector<Complex>& c,
                std::vector<Complex>& d) {
    c.resize(m.size());
    d.resize(m.size());
    for (std::size_t n = 0; n < m.size(); ++n) {
        const double a = std::abs(m[n]);
        if (a == 0.0) {
            c[n] = 0.0;
            d[n] = 1.0;
        } else {
            const double s = std::exp2(std::round(0.5 * std::log2(a)));
            d[n] = s;
            c[n] = m[n] / s;
        }
    }
}

bool same_sequence(const FrameSeq& a, const FrameSeq& b) {
    if (a.dim() != b.dim() || a.size() != b.size()) return false;
    double scale = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) scale = std::max(scale, a[n].norm());
    for (std::size_t n = 0; n < a.size(); ++n) {
        if ((a[n] - b[n]).norm() > 1e-14 * std::max(1.0, scale)) return false;
    }
    return true;
}

}  // namespace

SymbolFactorization factor_symbol(const Multiplier& M) {
    const bool same = same_sequence(M.phi, M.psi);
    const bool minimal = classify(M.phi).minimal;

    double inf_product = std::numeric_limits<double>::infinity();
    double sup_product = 0.0;
    for (std::size_t n = 0; n < M.size(); ++n) {
        const double p = std::abs(M.m[n]) * M.phi[n].norm() * M.psi[n].norm();
        inf_product = std::min(inf_product, p);
        sup_product = std::max(sup_product, p);
    }
    const bool weighted_below = sup_product > 0.0 && inf_product > tol::kSymbol * sup_product;

    if (!same && !minimal && !weighted_below)
        throw NoFactorizationStrategyError(
            "factor_symbol: no hypothesis holds (phi != psi, phi not minimal, "
            "inf |m_n| ||phi_n|| ||psi_n|| = 0)");

    // Candidate splits, tried in order; each must yield two spanning frames.
    std::vector<std::pair<std::vector<Complex>, std::vector<Complex>>> splits;
    {
        std::vector<Complex> c, d;
        if (same) {
            pow2_split(M.m.values(), c, d);
            splits.emplace_back(c, d);
            splits.emplace_back(M.m.values(), std::vector<Complex>(M.size(), 1.0));
        } else {
            splits.emplace_back(M.m.values(), std::vector<Complex>(M.size(), 1.0));
            pow2_split(M.m.values(), c, d);
            splits.emplace_back(c, d);
        }
    }

    for (auto& [cv, dv] : splits) {
        SymbolSeq c(cv), d(dv);
        FrameSeq cphi = reweight(M.phi, c);
        FrameSeq dpsi = reweight(M.psi, d);
        if (!is_frame(cphi) || !is_frame(dpsi)) continue;
        Multiplier rw(SymbolSeq::constant(1.0, M.size()), std::move(cphi), std::move(dpsi));
        return {std::move(c), std::move(d), std::move(rw)};
    }
    throw NoFactorizationStrategyError(
        "factor_symbol: no split produced two spanning reweighted frames");
}

InverseReport constant_symbol_inverse(const Multiplier& M, double tol) {
    const std::optional<Complex> c = M.m.constant_value();
    if (!c) throw NonConstantSymbolError("constant_symbol_inverse: symbol not constant");
    if (std::abs(*c) < 1e-15) throw ZeroSymbolError("constant_symbol_inverse: zero symbol");
    if (!is_frame(M.phi) || !is_frame(M.psi))
        throw NotAFrameError("constant_symbol_inverse: both sequences must span");

    const CMatrix u_phi = analysis_matrix(M.phi);
    const CMatrix u_psi = analysis_matrix(M.psi);
    const bool phi_in_psi = column_space_leq(u_phi, u_psi);
    const bool psi_in_phi = column_space_leq(u_psi, u_phi);

    InverseReport report;
    if (phi_in_psi || psi_in_phi) {
        Multiplier candidate(SymbolSeq::constant(1.0 / *c, M.size()), canonical_dual(M.psi),
                             canonical_dual(M.phi));
        const InverseResiduals res = verify_inverse(M, candidate);
        report.left_residual = res.left;
        report.right_residual = res.right;
        report.residual = std::max(res.left, res.right);
        if (phi_in_psi && psi_in_phi) {
            if (report.residual > tol)
                throw NotADualError(
                    "constant_symbol_inverse: equal ranges but candidate residual above "
                    "tolerance (ill-conditioned duals)");
            report.classification = InverseReport::Classification::TwoSided;
            report.inverse = std::move(candidate);
        } else {
            // Strict inclusion either way: the multiplier cannot be invertible.
            // The candidate is one-sided only, so it is not reported as an inverse.
            report.classification = InverseReport::Classification::NotInvertible;
        }
        return report;
    }

    // Incomparable ranges: both outcomes are possible, so fall back to the
    // direct matrix test and never emit a dual-based inverse formula.
    report.classification = is_invertible(M, tol::kRank)
                                ? InverseReport::Classification::TwoSided
                                : InverseReport::Classification::NotInvertible;
    return report;
}

}  // namespace framemult
