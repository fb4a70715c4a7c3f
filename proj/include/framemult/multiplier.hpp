#pragma once

#include <optional>
#include <utility>

#include "framemult/frames.hpp"

namespace framemult {

/// Length-N complex scalar sequence weighting a multiplier.
class SymbolSeq {
public:
    explicit SymbolSeq(std::vector<Complex> values);
    static SymbolSeq constant(Complex c, std::size_t count);

    std::size_t size() const { return values_.size(); }
    const Complex& operator[](std::size_t n) const { return values_[n]; }
    const std::vector<Complex>& values() const { return values_; }

    double inf_abs() const { return inf_abs_; }
    double sup_abs() const { return sup_abs_; }

    /// inf|m_n| bounded away from zero: inf > kSymbol * sup.
    bool semi_normalized() const;

    SymbolSeq conj() const;
    /// (1/m_n); throws NotSemiNormalizedError when some entry is (numerically) zero.
    SymbolSeq reciprocal() const;

    /// Constant value when all entries coincide within roundoff.
    std::optional<Complex> constant_value() const;

private:
    std::vector<Complex> values_;
    double inf_abs_, sup_abs_;
};

/// The operator h -> sum_n m_n <h, psi_n> phi_n.
struct Multiplier {
    SymbolSeq m;
    FrameSeq phi;  // output (synthesis) side
    FrameSeq psi;  // input (analysis) side

    Multiplier(SymbolSeq symbol, FrameSeq phi_seq, FrameSeq psi_seq);

    std::size_t size() const { return m.size(); }
    std::size_t dim() const { return phi.dim(); }
};

struct InverseReport {
    enum class Classification { TwoSided, LeftOnly, RightOnly, NotInvertible };
    Classification classification = Classification::NotInvertible;
    std::optional<Multiplier> inverse;
    std::optional<double> left_residual;   // ||inv * M - I||_F of the candidate
    std::optional<double> right_residual;  // ||M * inv - I||_F of the candidate
    double residual = 0.0;                 // max of the candidate residuals, 0 when none
};

CVector apply(const Multiplier& M, const CVector& h);

/// Dense matrix T_phi diag(m) U_psi.
CMatrix to_matrix(const Multiplier& M);

bool is_invertible(const Multiplier& M, double tol = tol::kRank);

/// Left/right composition residuals of a claimed inverse.
struct InverseResiduals {
    double left;   // ||Minv M - I||_F
    double right;  // ||M Minv - I||_F
};
InverseResiduals verify_inverse(const Multiplier& M, const Multiplier& Minv);

/// Riesz-basis inverse (1/m, dual(psi), dual(phi)); requires both sequences
/// to be Riesz bases and m semi-normalized.
Multiplier riesz_inverse(const Multiplier& M);

/// The dual frames arising from an invertible frame multiplier:
/// psi_dagger_n = M^-1(m_n phi_n), a dual of psi, and
/// phi_dagger_n = (M^-1)*(conj(m_n) psi_n), a dual of phi.
struct DaggerDuals {
    FrameSeq psi_dagger;
    FrameSeq phi_dagger;
};
DaggerDuals dagger_duals(const Multiplier& M);

/// Both inverse representations (1/m, psi_dagger, phi_dual) and
/// (1/m, psi_dual, phi_dagger); valid for ANY supplied duals.
std::pair<Multiplier, Multiplier> inverse_as_multiplier(const Multiplier& M,
                                                        const FrameSeq& phi_dual,
                                                        const FrameSeq& psi_dual);

/// Split m_n = c_n * conj(d_n) (exactly) with (c_n phi_n) and (d_n psi_n)
/// spanning frames, reducing M to a symbol-(1) multiplier.
struct SymbolFactorization {
    SymbolSeq c;
    SymbolSeq d;
    Multiplier reweighted;  // (1), (c_n phi_n), (d_n psi_n)
};
SymbolFactorization factor_symbol(const Multiplier& M);

/// Range-inclusion classification for constant symbols, with the candidate
/// inverse (1/c, dual(psi), dual(phi)) where it is justified.
InverseReport constant_symbol_inverse(const Multiplier& M, double tol = tol::kInverse);

}  // namespace framemult
