#include "framemult/gabor.hpp"

#include <cmath>
#include <limits>

namespace framemult {

Lattice::Lattice(std::size_t L_, std::size_t a_, std::size_t b_) : L(L_), a(a_), b(b_) {
    if (L == 0 || a == 0 || b == 0) throw InputError("Lattice: parameters must be positive");
    if (L % a != 0) throw InputError("Lattice: time step must divide L");
    if (L % b != 0) throw InputError("Lattice: frequency step must divide L");
}

std::vector<Lattice::Point> Lattice::enumerate() const {
    std::vector<Point> pts;
    pts.reserve(points());
    for (std::size_t tau = 0; tau < L; tau += a)
        for (std::size_t omega = 0; omega < L; omega += b) pts.push_back({omega, tau});
    return pts;
}

GaborSystem::GaborSystem(CVector g, Lattice lat) : window(std::move(g)), lattice(lat) {
    if (window.dim() != lattice.L) throw DimensionError("GaborSystem: window length != L");
    if (!window.is_finite()) throw InputError("GaborSystem: non-finite window entry");
}

namespace {

std::size_t mod_index(std::int64_t x, std::size_t L) {
    const auto l = static_cast<std::int64_t>(L);
    std::int64_t r = x % l;
    if (r < 0) r += l;
    return static_cast<std::size_t>(r);
}

}  // namespace

CVector translate(const CVector& f, std::int64_t tau) {
    const std::size_t L = f.dim();
    CVector out(L);
    for (std::size_t x = 0; x < L; ++x)
        out[x] = f[mod_index(static_cast<std::int64_t>(x) - tau, L)];
    return out;
}

CVector modulate(const CVector& f, std::int64_t omega) {
    const std::size_t L = f.dim();
    CVector out(L);
    for (std::size_t x = 0; x < L; ++x) {
        const double angle = 2.0 * M_PI * static_cast<double>(mod_index(
                                 static_cast<std::int64_t>(x) * omega, L)) /
                             static_cast<double>(L);
        out[x] = std::polar(1.0, angle) * f[x];
    }
    return out;
}

CVector tf_shift(std::int64_t omega, std::int64_t tau, const CVector& f) {
    return modulate(translate(f, tau), omega);
}

FrameSeq gabor_frame(const GaborSystem& G) {
    std::vector<CVector> vs;
    vs.reserve(G.lattice.points());
    for (const auto& p : G.lattice.enumerate())
        vs.push_back(tf_shift(static_cast<std::int64_t>(p.omega),
                              static_cast<std::int64_t>(p.tau), G.window));
    return FrameSeq(G.lattice.L, std::move(vs));
}

CVector canonical_dual_window(const GaborSystem& G) {
    const FrameSeq frame = gabor_frame(G);
    if (!is_frame(frame)) throw NotAFrameError("canonical_dual_window: system does not span");
    return hermitian_pinv(frame_operator(frame)) * G.window;
}

namespace {

double window_commutation_residual(const CMatrix& V, const GaborSystem& G) {
    double worst = 0.0;
    for (const auto& p : G.lattice.enumerate()) {
        const CVector shifted = tf_shift(static_cast<std::int64_t>(p.omega),
                                         static_cast<std::int64_t>(p.tau), G.window);
        const CVector lhs = V * shifted;
        const CVector rhs = tf_shift(static_cast<std::int64_t>(p.omega),
                                     static_cast<std::int64_t>(p.tau), V * G.window);
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

}  // namespace

bool commutes_on_window(const CMatrix& V, const GaborSystem& G, double tol) {
    if (V.rows() != G.lattice.L || V.cols() != G.lattice.L)
        throw DimensionError("commutes_on_window: operator shape != L x L");
    return window_commutation_residual(V, G) <=
           tol * V.frobenius_norm() * G.window.norm();
}

bool commutes_all(const CMatrix& V, const Lattice& lat, double tol) {
    if (V.rows() != lat.L || V.cols() != lat.L)
        throw DimensionError("commutes_all: operator shape != L x L");
    double worst = 0.0;
    for (const CVector& e : standard_basis(lat.L)) {
        const GaborSystem basis_system(e, lat);
        worst = std::max(worst, window_commutation_residual(V, basis_system));
    }
    return worst <= tol * V.frobenius_norm();
}

Multiplier as_gabor_multiplier(const CMatrix& V, const GaborSystem& G) {
    if (!commutes_on_window(V, G))
        throw DoesNotCommuteError("as_gabor_multiplier: V does not commute on the window");
    const CVector g_dual = canonical_dual_window(G);  // throws NotAFrameError
    const CVector vg = V * G.window;
    std::vector<CVector> phi, psi;
    phi.reserve(G.lattice.points());
    psi.reserve(G.lattice.points());
    for (const auto& p : G.lattice.enumerate()) {
        const auto om = static_cast<std::int64_t>(p.omega);
        const auto ta = static_cast<std::int64_t>(p.tau);
        phi.push_back(tf_shift(om, ta, vg));
        psi.push_back(tf_shift(om, ta, g_dual));
    }
    return Multiplier(SymbolSeq::constant(1.0, G.lattice.points()),
                      FrameSeq(G.lattice.L, std::move(phi)),
                      FrameSeq(G.lattice.L, std::move(psi)));
}

Multiplier inverse_gabor_multiplier(const CMatrix& V, const GaborSystem& G) {
    const std::vector<double> sv = singular_values(V);
    if (sv.front() == 0.0 || sv.back() <= tol::kRank * sv.front())
        throw NotInvertibleError("inverse_gabor_multiplier: V is singular");
    if (!commutes_on_window(V, G))
        throw DoesNotCommuteError("inverse_gabor_multiplier: V does not commute on the window");

    const GaborSystem h_system(V * G.window, G.lattice);
    const CVector h_dual = canonical_dual_window(h_system);  // throws NotAFrameError
    std::vector<CVector> phi, psi;
    phi.reserve(G.lattice.points());
    psi.reserve(G.lattice.points());
    for (const auto& p : G.lattice.enumerate()) {
        const auto om = static_cast<std::int64_t>(p.omega);
        const auto ta = static_cast<std::int64_t>(p.tau);
        phi.push_back(tf_shift(om, ta, G.window));
        psi.push_back(tf_shift(om, ta, h_dual));
    }
    return Multiplier(SymbolSeq::constant(1.0, G.lattice.points()),
                      FrameSeq(G.lattice.L, std::move(phi)),
                      FrameSeq(G.lattice.L, std::move(psi)));
}

CommutationReport check_commutation_equivalences(const CMatrix& V, const GaborSystem& G, double tol) {
    CommutationReport rep;
    const double v_scale = std::max(V.frobenius_norm(), 1e-300);
    rep.window_commutation = window_commutation_residual(V, G) / (v_scale * G.window.norm());

    double worst = 0.0;
    for (const CVector& e : standard_basis(G.lattice.L)) {
        const GaborSystem basis_system(e, G.lattice);
        worst = std::max(worst, window_commutation_residual(V, basis_system));
    }
    rep.full_commutation = worst / v_scale;

    try {
        const Multiplier repr = as_gabor_multiplier(V, G);
        rep.representation_residual = frobenius_distance(to_matrix(repr), V) / v_scale;
    } catch (const Error&) {
        rep.representation_residual = std::numeric_limits<double>::infinity();
    }
    try {
        const Multiplier inv = inverse_gabor_multiplier(V, G);
        rep.inverse_composition = identity_residual(to_matrix(inv) * V);
    } catch (const Error&) {
        rep.inverse_composition = std::numeric_limits<double>::infinity();
    }

    rep.all_pass = rep.window_commutation <= tol && rep.full_commutation <= tol &&
                   rep.representation_residual <= tol && rep.inverse_composition <= tol;
    return rep;
}

}  // namespace framemult
