#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "framemult/frames.hpp"
#include "framemult/random.hpp"

using namespace framemult;

namespace {

FrameSeq orthonormal_basis_frame(std::size_t d) { return FrameSeq(d, standard_basis(d)); }

FrameSeq duplicated_basis(std::size_t d) {
    std::vector<CVector> vs;
    for (const auto& e : standard_basis(d)) {
        vs.push_back(e);
        vs.push_back(e);
    }
    return FrameSeq(d, std::move(vs));
}

}  // namespace

TEST_CASE("FrameSeq validation") {
    CHECK_THROWS_AS(FrameSeq(0, {CVector{1.0}}), DimensionError);
    CHECK_THROWS_AS(FrameSeq(2, {}), DimensionError);
    CHECK_THROWS_AS(FrameSeq(2, {CVector{1.0}}), DimensionError);
    CHECK_THROWS_AS(FrameSeq(1, {CVector{Complex(1.0 / 0.0)}}), InputError);
}

TEST_CASE("analysis and synthesis are adjoint") {
    Rng rng(21);
    const FrameSeq phi = rng.frame(4, 9);
    for (int i = 0; i < 10; ++i) {
        const CVector h = rng.vector(4);
        const CVector c = rng.vector(9);
        const Complex lhs = inner(analysis(phi, h), c);
        const Complex rhs = inner(h, synthesis(phi, c));
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    }
    CHECK(frobenius_distance(analysis_matrix(phi), synthesis_matrix(phi).adjoint()) == 0.0);
}

TEST_CASE("frame operator is Hermitian positive semidefinite") {
    Rng rng(22);
    const FrameSeq phi = rng.frame(5, 8);
    const CMatrix S = frame_operator(phi);
    CHECK(frobenius_distance(S, S.adjoint()) <= 1e-12 * S.frobenius_norm());
    const FrameBounds b = frame_bounds(phi);
    CHECK(b.lower >= 0.0);
    CHECK(b.upper >= b.lower);
}

TEST_CASE("optimal bounds of structured frames") {
    const FrameBounds onb = frame_bounds(orthonormal_basis_frame(4));
    CHECK(onb.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(onb.upper == doctest::Approx(1.0).epsilon(1e-12));
    const FrameBounds dup = frame_bounds(duplicated_basis(4));
    CHECK(dup.lower == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(dup.upper == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("is_frame rejects non-spanning sequences") {
    const auto basis = standard_basis(3);
    CHECK(is_frame(FrameSeq(3, basis)));
    CHECK(!is_frame(FrameSeq(3, {basis[0], basis[1]})));
    CHECK(!is_frame(FrameSeq(2, {CVector(2), CVector(2)})));
}

TEST_CASE("canonical dual of structured frames") {
    const FrameSeq onb = orthonormal_basis_frame(3);
    const FrameSeq onb_dual = canonical_dual(onb);
    for (std::size_t n = 0; n < 3; ++n) CHECK((onb_dual[n] - onb[n]).norm() <= 1e-12);

    const FrameSeq dup = duplicated_basis(3);
    const FrameSeq dup_dual = canonical_dual(dup);
    for (std::size_t n = 0; n < dup.size(); ++n)
        CHECK((dup_dual[n] - Complex(0.5) * dup[n]).norm() <= 1e-12);
    CHECK(is_dual_pair(dup, dup_dual));

    CHECK_THROWS_AS(canonical_dual(FrameSeq(2, {CVector{1.0, 0.0}})), NotAFrameError);
}

TEST_CASE("canonical dual reconstructs on random frames") {
    Rng rng(23);
    const FrameSeq phi = rng.frame(6, 13);
    const FrameSeq dual = canonical_dual(phi);
    CHECK(is_dual_pair(phi, dual));
    CHECK(is_dual_pair(dual, phi));
    for (int i = 0; i < 5; ++i) {
        const CVector h = rng.vector(6);
        CHECK((synthesis(phi, analysis(dual, h)) - h).norm() <= 1e-10 * h.norm());
    }
}

TEST_CASE("random dual differs from the canonical dual for redundant frames") {
    Rng rng(24);
    const FrameSeq phi = rng.frame(4, 9);
    const FrameSeq canon = canonical_dual(phi);
    const FrameSeq rand1 = random_dual(phi, 7);
    const FrameSeq rand2 = random_dual(phi, 7);
    CHECK(is_dual_pair(phi, rand1));
    double diff = 0.0;
    for (std::size_t n = 0; n < phi.size(); ++n) diff += (rand1[n] - canon[n]).norm();
    CHECK(diff > 1e-3);  // kernel perturbation is nontrivial when N > d
    // Deterministic in the seed.
    for (std::size_t n = 0; n < phi.size(); ++n) CHECK((rand1[n] - rand2[n]).norm() == 0.0);
    CHECK_THROWS_AS(random_dual(FrameSeq(2, {CVector{1.0, 0.0}}), 1), NotAFrameError);
}

TEST_CASE("classification of sequences") {
    const FrameClass onb = classify(orthonormal_basis_frame(3));
    CHECK(onb.kind == FrameClass::Kind::RieszBasis);
    CHECK(onb.minimal);

    const FrameClass dup = classify(duplicated_basis(3));
    CHECK(dup.kind == FrameClass::Kind::SpanningFrame);
    CHECK(!dup.minimal);

    const auto basis = standard_basis(3);
    const FrameClass partial = classify(FrameSeq(3, {basis[0], basis[1]}));
    CHECK(partial.kind == FrameClass::Kind::NonSpanning);
    CHECK(partial.minimal);

    const FrameClass dep = classify(FrameSeq(3, {basis[0], basis[0]}));
    CHECK(dep.kind == FrameClass::Kind::NonSpanning);
    CHECK(!dep.minimal);
}

TEST_CASE("equivalence of frames under invertible maps") {
    Rng rng(25);
    const FrameSeq phi = rng.frame(4, 8);
    const CMatrix G = rng.invertible(4, 100.0);
    std::vector<CVector> transformed;
    for (std::size_t n = 0; n < phi.size(); ++n) transformed.push_back(G * phi[n]);
    const FrameSeq psi(4, std::move(transformed));
    CHECK(are_equivalent(phi, psi));
    CHECK(is_partial_equivalent(psi, phi));
    CHECK(is_partial_equivalent(phi, psi));
}

TEST_CASE("weighted pairs give incomparable analysis ranges") {
    const auto basis = standard_basis(2);
    const FrameSeq phi(2, {basis[0], basis[0], basis[1], basis[1]});
    const FrameSeq psi(2, {Complex(0.25) * basis[0], Complex(0.75) * basis[0],
                           Complex(0.5) * basis[1], Complex(0.5) * basis[1]});
    CHECK(!is_partial_equivalent(psi, phi));
    CHECK(!is_partial_equivalent(phi, psi));
    CHECK(!are_equivalent(phi, psi));
    CHECK_THROWS_AS(is_partial_equivalent(phi, FrameSeq(2, {basis[0]})), DimensionError);
}
