#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "framemult/linalg.hpp"
#include "framemult/random.hpp"

using namespace framemult;

namespace {

CMatrix reconstruct(const EigResult& eig) {
    const std::size_t n = eig.eigenvalues.size();
    std::vector<Complex> lambda(n);
    for (std::size_t k = 0; k < n; ++k) lambda[k] = eig.eigenvalues[k];
    return eig.eigenvectors * CMatrix::diagonal(lambda) * eig.eigenvectors.adjoint();
}

CMatrix random_hermitian(Rng& rng, std::size_t n) {
    const CMatrix A = rng.matrix(n, n);
    return Complex(0.5) * (A + A.adjoint());
}

}  // namespace

TEST_CASE("standard basis") {
    const auto basis = standard_basis(3);
    REQUIRE(basis.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(basis[i][j] == (i == j ? Complex(1.0) : Complex(0.0)));
    CHECK_THROWS_AS(standard_basis(0), std::domain_error);
}

TEST_CASE("hermitian_eig on a known 2x2 matrix") {
    // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
    const CMatrix A{{2.0, Complex(0.0, 1.0)}, {Complex(0.0, -1.0), 2.0}};
    const EigResult eig = hermitian_eig(A);
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(frobenius_distance(reconstruct(eig), A) <= 1e-12);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    const CMatrix A{{1.0, 2.0}, {3.0, 4.0}};
    CHECK_THROWS_AS(hermitian_eig(A), NotHermitianError);
    CHECK_THROWS_AS(hermitian_eig(CMatrix(2, 3)), NotHermitianError);
}

TEST_CASE("hermitian_eig properties on random matrices") {
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 2 + static_cast<std::size_t>(i % 7);
        const CMatrix A = random_hermitian(rng, n);
        const EigResult eig = hermitian_eig(A);
        for (std::size_t k = 1; k < n; ++k)
            CHECK(eig.eigenvalues[k - 1] <= eig.eigenvalues[k]);
        CHECK(identity_residual(eig.eigenvectors.adjoint() * eig.eigenvectors) <= 1e-12);
        CHECK(frobenius_distance(reconstruct(eig), A) <=
              1e-12 * std::max(1.0, A.frobenius_norm()));
    }
}

TEST_CASE("singular values of a diagonal matrix") {
    const CMatrix A = CMatrix::diagonal({3.0, -1.0, 2.0});
    const auto sv = singular_values(A);
    REQUIRE(sv.size() == 3);
    CHECK(sv[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(sv[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sv[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("singular values of rectangular matrices match both Gram routes") {
    Rng rng(12);
    const CMatrix A = rng.matrix(6, 3);
    const auto sv_a = singular_values(A);
    const auto sv_b = singular_values(A.adjoint());
    REQUIRE(sv_a.size() == 3);
    REQUIRE(sv_b.size() == 3);
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(sv_a[k] == doctest::Approx(sv_b[k]).epsilon(1e-10));
}

TEST_CASE("pinv satisfies the Penrose identities") {
    Rng rng(13);
    for (const auto [m, n] : {std::pair<std::size_t, std::size_t>{5, 3}, {3, 5}, {4, 4}}) {
        const CMatrix A = rng.matrix(m, n);
        const CMatrix P = pinv(A);
        CHECK(frobenius_distance(A * P * A, A) <= 1e-10);
        CHECK(frobenius_distance(P * A * P, P) <= 1e-10);
        CHECK(frobenius_distance((A * P).adjoint(), A * P) <= 1e-10);
        CHECK(frobenius_distance((P * A).adjoint(), P * A) <= 1e-10);
    }
}

TEST_CASE("pinv of a rank-deficient matrix projects onto the range") {
    // Columns (1,0,0) and (2,0,0): rank one.
    CMatrix A(3, 2);
    A(0, 0) = 1.0;
    A(0, 1) = 2.0;
    const CMatrix P = pinv(A);
    CHECK(rank(A) == 1);
    // A pinv(A) is the orthogonal projection onto span{e1}.
    CMatrix proj(3, 3);
    proj(0, 0) = 1.0;
    CHECK(frobenius_distance(A * P, proj) <= 1e-12);
}

TEST_CASE("hermitian_pinv inverts well-conditioned Hermitian matrices") {
    Rng rng(14);
    const CMatrix B = rng.invertible(5, 50.0);
    const CMatrix A = B * B.adjoint();  // Hermitian positive definite
    CHECK(identity_residual(hermitian_pinv(A) * A) <= 1e-10);
    CHECK(frobenius_distance(hermitian_pinv(A), pinv(A)) <= 1e-8 * A.frobenius_norm());
}

TEST_CASE("solve recovers the solution of a well-posed system") {
    Rng rng(15);
    const CMatrix A = rng.invertible(6, 100.0);
    const CVector x = rng.vector(6);
    const CVector got = solve(A, A * x);
    CHECK((got - x).norm() <= 1e-10 * x.norm());
}

TEST_CASE("solve reports singularity with a condition estimate") {
    CMatrix A(2, 2);
    A(0, 0) = 1.0;  // second row zero: singular
    try {
        solve(A, CVector{1.0, 1.0});
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(std::isinf(e.condition));
    }
}

TEST_CASE("rank on constructed matrices") {
    CHECK(rank(CMatrix::identity(4)) == 4);
    CHECK(rank(CMatrix(3, 3)) == 0);
    CMatrix A(3, 3);
    A(0, 0) = 1.0;
    A(1, 1) = 1e-14;  // below the relative cut
    CHECK(rank(A) == 1);
}

TEST_CASE("column_space_leq detects containment") {
    CMatrix A(3, 1), B(3, 2);
    A(0, 0) = 1.0;
    B(0, 0) = 1.0;
    B(1, 1) = 1.0;
    CHECK(column_space_leq(A, B));
    CHECK(!column_space_leq(B, A));
    CHECK_THROWS_AS(column_space_leq(CMatrix(2, 1), CMatrix(3, 1)), DimensionError);
}
