#pragma once

#include <cstdint>

#include "framemult/multiplier.hpp"

namespace framemult {

/// Separable lattice {(omega, tau)} in Z_L x Z_L with time step a and
/// frequency step b, both dividing L.
struct Lattice {
    std::size_t L;
    std::size_t a;  // time step
    std::size_t b;  // frequency step

    Lattice(std::size_t L_, std::size_t a_, std::size_t b_);

    std::size_t points() const { return (L / a) * (L / b); }

    struct Point {
        std::size_t omega;
        std::size_t tau;
    };
    /// Fixed enumeration order: tau outer ascending, omega inner ascending.
    std::vector<Point> enumerate() const;
};

struct GaborSystem {
    CVector window;  // g in C^L
    Lattice lattice;

    GaborSystem(CVector g, Lattice lat);
};

/// Cyclic translation (T_tau f)[x] = f[(x - tau) mod L].
CVector translate(const CVector& f, std::int64_t tau);

/// Modulation (E_omega f)[x] = e^{2 pi i omega x / L} f[x].
CVector modulate(const CVector& f, std::int64_t omega);

/// pi(lambda) = E_omega T_tau (modulation after translation).
CVector tf_shift(std::int64_t omega, std::int64_t tau, const CVector& f);

/// The sequence (pi(lambda) g) in lattice enumeration order.
FrameSeq gabor_frame(const GaborSystem& G);

/// g_tilde = S^-1 g; the canonical dual of the Gabor frame is the Gabor
/// system generated by g_tilde over the same lattice.
CVector canonical_dual_window(const GaborSystem& G);

/// max_lambda ||V pi(lambda) g - pi(lambda) V g|| <= tol * ||V||_F ||g||.
bool commutes_on_window(const CMatrix& V, const GaborSystem& G, double tol = tol::kInverse);

/// V commutes with every pi(lambda), checked on the standard basis of C^L.
bool commutes_all(const CMatrix& V, const Lattice& lat, double tol = tol::kInverse);

/// Represent a lattice-commuting V as M_{(1), (pi(lambda) V g), (g_tilde_lambda)}.
Multiplier as_gabor_multiplier(const CMatrix& V, const GaborSystem& G);

/// Represent V^-1 as M_{(1), (g_lambda), (h_tilde_lambda)} with
/// h_lambda = pi(lambda) V g.
Multiplier inverse_gabor_multiplier(const CMatrix& V, const GaborSystem& G);

/// Residuals of the four equivalent conditions for an invertible V:
/// commutation on the window, commutation on all of C^L, representation as a
/// symbol-(1) Gabor multiplier, and representation of the inverse.
struct CommutationReport {
    double window_commutation = 0.0;       // condition 1, relative
    double full_commutation = 0.0;         // condition 2, relative
    double representation_residual = 0.0;  // condition 3: ||multiplier - V||_F / ||V||_F
    double inverse_composition = 0.0;      // condition 4: ||inv * V - I||_F
    bool all_pass = false;
};
CommutationReport check_commutation_equivalences(const CMatrix& V, const GaborSystem& G,
                                   double tol = tol::kInverse);

}  // namespace framemult
