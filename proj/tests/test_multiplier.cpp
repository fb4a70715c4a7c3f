#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "framemult/multiplier.hpp"
#include "framemult/random.hpp"

using namespace framemult;

namespace {

FrameSeq duplicated_basis(std::size_t d) {
    std::vector<CVector> vs;
    for (const auto& e : standard_basis(d)) {
        vs.push_back(e);
        vs.push_back(e);
    }
    return FrameSeq(d, std::move(vs));
}

Multiplier random_invertible_multiplier(Rng& rng, std::size_t d, std::size_t N) {
    for (;;) {
        Multiplier M(SymbolSeq(rng.semi_normalized_symbol(N)), rng.frame(d, N),
                     rng.frame(d, N));
        if (is_invertible(M, 1e-4)) return M;
    }
}

}  // namespace

TEST_CASE("SymbolSeq basics") {
    CHECK_THROWS_AS(SymbolSeq({}), DimensionError);
    const SymbolSeq m({1.0, Complex(0.0, 2.0), -0.5});
    CHECK(m.inf_abs() == doctest::Approx(0.5));
    CHECK(m.sup_abs() == doctest::Approx(2.0));
    CHECK(m.semi_normalized());
    CHECK(!SymbolSeq({1.0, 0.0}).semi_normalized());
    CHECK_THROWS_AS(SymbolSeq({1.0, 0.0}).reciprocal(), NotSemiNormalizedError);

    const SymbolSeq r = m.reciprocal();
    for (std::size_t n = 0; n < 3; ++n)
        CHECK(std::abs(m[n] * r[n] - Complex(1.0)) <= 1e-15);

    CHECK(SymbolSeq::constant(2.0, 4).constant_value().value() == Complex(2.0));
    CHECK(!SymbolSeq({1.0, 2.0}).constant_value().has_value());
}

TEST_CASE("apply matches the dense matrix") {
    Rng rng(31);
    const Multiplier M(SymbolSeq(rng.semi_normalized_symbol(9)), rng.frame(4, 9),
                       rng.frame(4, 9));
    const CMatrix A = to_matrix(M);
    for (int i = 0; i < 10; ++i) {
        const CVector h = rng.vector(4);
        CHECK((apply(M, h) - A * h).norm() <= 1e-12 * h.norm() * A.frobenius_norm());
    }
    CHECK_THROWS_AS(apply(M, CVector(3)), DimensionError);
}

TEST_CASE("multiplier shape validation") {
    Rng rng(32);
    const FrameSeq phi = rng.frame(3, 5);
    CHECK_THROWS_AS(Multiplier(SymbolSeq::constant(1.0, 4), phi, phi), DimensionError);
    CHECK_THROWS_AS(Multiplier(SymbolSeq::constant(1.0, 5), phi, rng.frame(4, 5)),
                    DimensionError);
}

TEST_CASE("riesz_inverse inverts Riesz-basis multipliers") {
    Rng rng(33);
    std::vector<CVector> phi_v, psi_v;
    const CMatrix A = rng.invertible(5, 100.0);
    const CMatrix B = rng.invertible(5, 100.0);
    for (std::size_t j = 0; j < 5; ++j) {
        phi_v.push_back(A.column(j));
        psi_v.push_back(B.column(j));
    }
    const Multiplier M(SymbolSeq(rng.semi_normalized_symbol(5)), FrameSeq(5, phi_v),
                       FrameSeq(5, psi_v));
    const Multiplier Minv = riesz_inverse(M);
    const InverseResiduals res = verify_inverse(M, Minv);
    CHECK(res.left <= 1e-9);
    CHECK(res.right <= 1e-9);
}

TEST_CASE("riesz_inverse rejects non-Riesz or degenerate symbols") {
    Rng rng(34);
    const FrameSeq redundant = rng.frame(3, 6);
    CHECK_THROWS_AS(riesz_inverse(Multiplier(SymbolSeq::constant(1.0, 6), redundant, redundant)),
                    NotRieszError);
    const FrameSeq basis(3, standard_basis(3));
    CHECK_THROWS_AS(riesz_inverse(Multiplier(SymbolSeq({1.0, 1.0, 0.0}), basis, basis)),
                    NotSemiNormalizedError);
}

TEST_CASE("dagger duals are duals and yield inverse representations") {
    Rng rng(35);
    const Multiplier M = random_invertible_multiplier(rng, 5, 11);
    const DaggerDuals dd = dagger_duals(M);
    CHECK(is_dual_pair(M.psi, dd.psi_dagger));
    CHECK(is_dual_pair(M.phi, dd.phi_dagger));

    const auto [inv_a, inv_b] =
        inverse_as_multiplier(M, canonical_dual(M.phi), canonical_dual(M.psi));
    const InverseResiduals ra = verify_inverse(M, inv_a);
    const InverseResiduals rb = verify_inverse(M, inv_b);
    CHECK(std::max({ra.left, ra.right, rb.left, rb.right}) <= 1e-9);

    const auto [inv_c, inv_d] =
        inverse_as_multiplier(M, random_dual(M.phi, 5), random_dual(M.psi, 6));
    const InverseResiduals rc = verify_inverse(M, inv_c);
    const InverseResiduals rd = verify_inverse(M, inv_d);
    CHECK(std::max({rc.left, rc.right, rd.left, rd.right}) <= 1e-9);
}

TEST_CASE("inverse_as_multiplier rejects sequences that are not duals") {
    Rng rng(36);
    const Multiplier M = random_invertible_multiplier(rng, 4, 8);
    CHECK_THROWS_AS(inverse_as_multiplier(M, rng.frame(4, 8), canonical_dual(M.psi)),
                    NotADualError);
}

TEST_CASE("dagger_duals guards") {
    Rng rng(37);
    const FrameSeq basis(2, standard_basis(2));
    CHECK_THROWS_AS(dagger_duals(Multiplier(SymbolSeq({1.0, 0.0}), basis, basis)),
                    NotSemiNormalizedError);
    // Singular multiplier: psi pair collapses onto e1 only.
    const auto b = standard_basis(2);
    const FrameSeq psi_flat(2, {b[0], b[0]});
    CHECK_THROWS_AS(dagger_duals(Multiplier(SymbolSeq::constant(1.0, 2), basis, psi_flat)),
                    NotAFrameError);
}

TEST_CASE("factor_symbol splits the symbol exactly") {
    Rng rng(38);
    const std::size_t N = 9;
    const FrameSeq phi = rng.frame(4, N);
    SUBCASE("shared sequence") {
        const Multiplier M(SymbolSeq(rng.semi_normalized_symbol(N)), phi, phi);
        const SymbolFactorization f = factor_symbol(M);
        for (std::size_t n = 0; n < N; ++n)
            CHECK(std::abs(M.m[n] - f.c[n] * std::conj(f.d[n])) == 0.0);
        CHECK(is_frame(f.reweighted.phi));
        CHECK(is_frame(f.reweighted.psi));
        CHECK(frobenius_distance(to_matrix(f.reweighted), to_matrix(M)) <= 1e-12);
    }
    SUBCASE("distinct sequences with weights bounded below") {
        const Multiplier M(SymbolSeq(rng.semi_normalized_symbol(N)), phi, rng.frame(4, N));
        const SymbolFactorization f = factor_symbol(M);
        for (std::size_t n = 0; n < N; ++n)
            CHECK(std::abs(M.m[n] - f.c[n] * std::conj(f.d[n])) == 0.0);
        CHECK(frobenius_distance(to_matrix(f.reweighted), to_matrix(M)) <= 1e-12);
    }
}

TEST_CASE("factor_symbol throws when no hypothesis holds") {
    // phi != psi, phi redundant (not minimal), and one zero weight.
    const auto b = standard_basis(2);
    const FrameSeq phi(2, {b[0], b[0], b[1]});
    const FrameSeq psi(2, {b[1], b[0], b[1]});
    CHECK_THROWS_AS(factor_symbol(Multiplier(SymbolSeq({0.0, 1.0, 1.0}), phi, psi)),
                    NoFactorizationStrategyError);
}

TEST_CASE("constant_symbol_inverse guards") {
    Rng rng(39);
    const FrameSeq phi = rng.frame(3, 6);
    CHECK_THROWS_AS(constant_symbol_inverse(Multiplier(SymbolSeq({1.0, 2.0, 1.0, 1.0, 1.0, 1.0}),
                                                       phi, phi)),
                    NonConstantSymbolError);
    CHECK_THROWS_AS(constant_symbol_inverse(Multiplier(SymbolSeq::constant(0.0, 6), phi, phi)),
                    ZeroSymbolError);
    const auto b = standard_basis(3);
    CHECK_THROWS_AS(constant_symbol_inverse(Multiplier(SymbolSeq::constant(1.0, 6), phi,
                                                       FrameSeq(3, {b[0], b[0], b[0], b[0],
                                                                    b[0], b[0]}))),
                    NotAFrameError);
}

TEST_CASE("constant_symbol_inverse on equal-range instances") {
    Rng rng(40);
    const FrameSeq phi = rng.frame(4, 9);
    const CMatrix G = rng.invertible(4, 50.0);
    std::vector<CVector> ps;
    for (std::size_t n = 0; n < phi.size(); ++n) ps.push_back(G * phi[n]);
    const Multiplier M(SymbolSeq::constant(Complex(0.5, 0.25), 9), phi,
                       FrameSeq(4, std::move(ps)));
    const InverseReport rep = constant_symbol_inverse(M);
    CHECK(rep.classification == InverseReport::Classification::TwoSided);
    REQUIRE(rep.inverse.has_value());
    CHECK(rep.residual <= 1e-9);
}

TEST_CASE("constant_symbol_inverse detects singular incomparable instances") {
    // phi = (e1, e1, e2, e2), psi = (e1, -e1, e2, e2): M = 2 e2 e2^*, singular,
    // with incomparable analysis ranges.
    const auto b = standard_basis(2);
    const FrameSeq phi(2, {b[0], b[0], b[1], b[1]});
    const FrameSeq psi(2, {b[0], Complex(-1.0) * b[0], b[1], b[1]});
    const Multiplier M(SymbolSeq::constant(1.0, 4), phi, psi);
    CMatrix expected(2, 2);
    expected(1, 1) = 2.0;
    CHECK(frobenius_distance(to_matrix(M), expected) <= 1e-14);
    const InverseReport rep = constant_symbol_inverse(M);
    CHECK(rep.classification == InverseReport::Classification::NotInvertible);
    CHECK(!rep.inverse.has_value());
}
