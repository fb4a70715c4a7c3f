#include "framemult/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace framemult {

std::vector<CVector> standard_basis(std::size_t d) {
    if (d == 0) throw std::domain_error("standard_basis: dimension must be positive");
    std::vector<CVector> basis;
    basis.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        CVector e(d);
        e[k] = 1.0;
        basis.push_back(std::move(e));
    }
    return basis;
}

namespace {

double hermitian_defect(const CMatrix& A) {
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) s += std::norm(A(i, j) - std::conj(A(j, i)));
    return std::sqrt(s);
}

double offdiag_norm(const CMatrix& A) {
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = i + 1; j < A.cols(); ++j) s += std::norm(A(i, j));
    return std::sqrt(2.0 * s);
}

/// One unitary Jacobi rotation zeroing W(p,q); W Hermitian, V accumulates.
void jacobi_rotate(CMatrix& W, CMatrix& V, std::size_t p, std::size_t q) {
    const std::size_t n = W.rows();
    const Complex apq = W(p, q);
    const double h = std::abs(apq);
    if (h == 0.0) return;
    const Complex phase = apq / h;
    const double app = W(p, p).real();
    const double aqq = W(q, q).real();

    // Real 2x2 Jacobi angle for [[app, h], [h, aqq]], smaller-root branch.
    const double theta = (app - aqq) / (2.0 * h);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(1.0, theta));
    const double c = 1.0 / std::hypot(1.0, t);
    const double s = t * c;

    // U differs from identity only in rows/cols p,q:
    //   U(p,p) = phase*c, U(p,q) = -phase*s, U(q,p) = s, U(q,q) = c.
    const Complex upp = phase * c;
    const Complex upq = -phase * s;

    // W <- U* W U: columns first, then rows.
    for (std::size_t k = 0; k < n; ++k) {
        const Complex wkp = W(k, p), wkq = W(k, q);
        W(k, p) = wkp * upp + wkq * s;
        W(k, q) = wkp * upq + wkq * c;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex wpk = W(p, k), wqk = W(q, k);
        W(p, k) = std::conj(upp) * wpk + s * wqk;
        W(q, k) = std::conj(upq) * wpk + c * wqk;
    }
    W(p, q) = 0.0;
    W(q, p) = 0.0;
    W(p, p) = W(p, p).real();
    W(q, q) = W(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = V(k, p), vkq = V(k, q);
        V(k, p) = vkp * upp + vkq * s;
        V(k, q) = vkp * upq + vkq * c;
    }
}

}  // namespace

EigResult hermitian_eig(const CMatrix& A, double herm_tol) {
    if (A.rows() != A.cols()) throw NotHermitianError("hermitian_eig: matrix not square");
    const std::size_t n = A.rows();
    const double scale = A.frobenius_norm();
    if (hermitian_defect(A) > herm_tol * std::max(1.0, scale)) {
        throw NotHermitianError("hermitian_eig: matrix not Hermitian within tolerance");
    }

    CMatrix W = A;
    // Fold the (tiny) skew-Hermitian part away so the iteration sees an
    // exactly Hermitian matrix.
    for (std::size_t i = 0; i < n; ++i) {
        W(i, i) = W(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex m = 0.5 * (W(i, j) + std::conj(W(j, i)));
            W(i, j) = m;
            W(j, i) = std::conj(m);
        }
    }

    CMatrix V = CMatrix::identity(n);
    const double stop = 1e-15 * std::max(scale, 1e-300);
    constexpr int kMaxSweeps = 64;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_norm(W) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(W, V, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return W(a, a).real() < W(b, b).real(); });

    EigResult res;
    res.eigenvalues.resize(n);
    res.eigenvectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        res.eigenvalues[k] = W(order[k], order[k]).real();
        res.eigenvectors.set_column(k, V.column(order[k]));
    }
    return res;
}

namespace {

/// Eigendecomposition of the smaller Gram matrix of A; shared by the
/// SVD-derived routines. Returns ascending eigenvalues clamped at zero.
struct GramEig {
    bool used_ata;  // true: Gram = A*A (cols x cols), false: Gram = AA* (rows x rows)
    EigResult eig;
};

GramEig gram_eig(const CMatrix& A) {
    GramEig g;
    g.used_ata = A.rows() >= A.cols();
    const CMatrix gram = g.used_ata ? A.adjoint() * A : A * A.adjoint();
    g.eig = hermitian_eig(gram);
    for (auto& lambda : g.eig.eigenvalues) lambda = std::max(lambda, 0.0);
    return g;
}

}  // namespace

std::vector<double> singular_values(const CMatrix& A) {
    GramEig g = gram_eig(A);
    std::vector<double> sv(g.eig.eigenvalues.size());
    for (std::size_t i = 0; i < sv.size(); ++i)
        sv[i] = std::sqrt(g.eig.eigenvalues[sv.size() - 1 - i]);
    return sv;
}

CMatrix pinv(const CMatrix& A, double tol) {
    if (A.rows() < A.cols()) return pinv(A.adjoint(), tol).adjoint();

    GramEig g = gram_eig(A);  // Gram = A*A, eigenvectors are right singular vectors
    const std::size_t n = A.cols();
    const double sigma_max = std::sqrt(g.eig.eigenvalues.empty() ? 0.0 : g.eig.eigenvalues.back());
    CMatrix P(A.cols(), A.rows());
    if (sigma_max == 0.0) return P;
    const double cut = tol * sigma_max;
    for (std::size_t k = 0; k < n; ++k) {
        const double sigma = std::sqrt(g.eig.eigenvalues[k]);
        if (sigma <= cut) continue;
        const CVector v = g.eig.eigenvectors.column(k);
        const CVector av = A * v;  // sigma * u_k
        const double inv_lambda = 1.0 / g.eig.eigenvalues[k];
        for (std::size_t i = 0; i < P.rows(); ++i)
            for (std::size_t j = 0; j < P.cols(); ++j)
                P(i, j) += inv_lambda * v[i] * std::conj(av[j]);
    }
    return P;
}

CMatrix hermitian_pinv(const CMatrix& A, double tol) {
    const EigResult eig = hermitian_eig(A);
    const std::size_t n = A.rows();
    double lambda_max = 0.0;
    for (double l : eig.eigenvalues) lambda_max = std::max(lambda_max, std::abs(l));
    CMatrix P(n, n);
    if (lambda_max == 0.0) return P;
    const double cut = tol * lambda_max;
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = eig.eigenvalues[k];
        if (std::abs(lambda) <= cut) continue;
        const CVector v = eig.eigenvectors.column(k);
        const double inv_lambda = 1.0 / lambda;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                P(i, j) += inv_lambda * v[i] * std::conj(v[j]);
    }
    return P;
}

CVector solve(const CMatrix& A, const CVector& b, double tol) {
    if (A.rows() != A.cols()) throw DimensionError("solve: matrix not square");
    const std::vector<double> sv = singular_values(A);
    const double sigma_max = sv.empty() ? 0.0 : sv.front();
    const double sigma_min = sv.empty() ? 0.0 : sv.back();
    if (sigma_min <= tol * sigma_max || sigma_max == 0.0) {
        const double cond = sigma_min > 0.0 ? sigma_max / sigma_min
                                            : std::numeric_limits<double>::infinity();
        throw SingularMatrixError("solve: matrix singular within tolerance", cond);
    }
    return pinv(A, tol) * b;
}

std::size_t rank(const CMatrix& A, double tol) {
    const std::vector<double> sv = singular_values(A);
    if (sv.empty() || sv.front() == 0.0) return 0;
    const double cut = std::max(tol, tol::kSigmaFloor) * sv.front();
    std::size_t r = 0;
    for (double s : sv)
        if (s > cut) ++r;
    return r;
}

bool column_space_leq(const CMatrix& A, const CMatrix& B, double tol) {
    if (A.rows() != B.rows()) throw DimensionError("column_space_leq: row counts differ");
    return rank(hstack(B, A), tol) == rank(B, tol);
}

}  // namespace framemult
