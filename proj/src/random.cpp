#include "framemult/random.hpp"

#include <cmath>

namespace framemult {

double Rng::real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
}

double Rng::gaussian() {
    return std::normal_distribution<double>(0.0, 1.0)(gen_);
}

Complex Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

CVector Rng::vector(std::size_t dim) {
    CVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = complex_gaussian();
    return v;
}

CMatrix Rng::matrix(std::size_t rows, std::size_t cols) {
    CMatrix A(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) A(i, j) = complex_gaussian();
    return A;
}

CMatrix Rng::unitary(std::size_t n) {
    CMatrix A = matrix(n, n);
    // Modified Gram-Schmidt on columns.
    for (std::size_t j = 0; j < n; ++j) {
        CVector v = A.column(j);
        for (std::size_t k = 0; k < j; ++k) {
            const CVector u = A.column(k);
            const Complex proj = inner(v, u);
            v = v - proj * u;
        }
        const double nrm = v.norm();
        if (nrm < 1e-12) return unitary(n);  // degenerate draw, retry
        A.set_column(j, Complex(1.0 / nrm) * v);
    }
    return A;
}

CMatrix Rng::invertible(std::size_t n, double max_condition) {
    for (;;) {
        CMatrix A = matrix(n, n);
        const std::vector<double> sv = singular_values(A);
        if (sv.back() > 0.0 && sv.front() / sv.back() <= max_condition) return A;
    }
}

FrameSeq Rng::frame(std::size_t dim, std::size_t count) {
    std::vector<CVector> vs;
    vs.reserve(count);
    for (std::size_t n = 0; n < count; ++n) vs.push_back(vector(dim));
    return FrameSeq(dim, std::move(vs));
}

std::vector<Complex> Rng::semi_normalized_symbol(std::size_t count, double lo_abs,
                                                 double hi_abs) {
    std::vector<Complex> m(count);
    for (auto& x : m) {
        const double r = real(lo_abs, hi_abs);
        const double phase = real(0.0, 2.0 * M_PI);
        x = std::polar(r, phase);
    }
    return m;
}

}  // namespace framemult
