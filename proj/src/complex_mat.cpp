#include "framemult/complex_mat.hpp"

#include <cmath>

namespace framemult {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" +
                             std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

double CVector::norm() const {
    double s = 0.0;
    for (const auto& x : data_) s += std::norm(x);
    return std::sqrt(s);
}

bool CVector::is_finite() const {
    for (const auto& x : data_) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    }
    return true;
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ > 0 ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("CMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
}

CMatrix CMatrix::diagonal(const std::vector<Complex>& d) {
    CMatrix D(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) D(i, i) = d[i];
    return D;
}

CMatrix CMatrix::adjoint() const {
    CMatrix R(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) R(j, i) = std::conj((*this)(i, j));
    return R;
}

CMatrix CMatrix::transpose() const {
    CMatrix R(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) R(j, i) = (*this)(i, j);
    return R;
}

CMatrix CMatrix::conj() const {
    CMatrix R(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) R(i, j) = std::conj((*this)(i, j));
    return R;
}

CVector CMatrix::column(std::size_t j) const {
    CVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

CVector CMatrix::row(std::size_t i) const {
    CVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

void CMatrix::set_column(std::size_t j, const CVector& v) {
    require_same_dim(v.dim(), rows_, "set_column");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : data_) s += std::norm(x);
    return std::sqrt(s);
}

bool CMatrix::is_finite() const {
    for (const auto& x : data_) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    }
    return true;
}

CVector operator+(const CVector& a, const CVector& b) {
    require_same_dim(a.dim(), b.dim(), "vector add");
    CVector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

CVector operator-(const CVector& a, const CVector& b) {
    require_same_dim(a.dim(), b.dim(), "vector sub");
    CVector r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

CVector operator*(Complex s, const CVector& v) {
    CVector r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) r[i] = s * v[i];
    return r;
}

bool operator==(const CVector& a, const CVector& b) {
    return a.entries() == b.entries();
}

Complex inner(const CVector& a, const CVector& b) {
    require_same_dim(a.dim(), b.dim(), "inner product");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

CMatrix operator+(const CMatrix& A, const CMatrix& B) {
    require_same_dim(A.rows(), B.rows(), "matrix add");
    require_same_dim(A.cols(), B.cols(), "matrix add");
    CMatrix R(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) R(i, j) = A(i, j) + B(i, j);
    return R;
}

CMatrix operator-(const CMatrix& A, const CMatrix& B) {
    require_same_dim(A.rows(), B.rows(), "matrix sub");
    require_same_dim(A.cols(), B.cols(), "matrix sub");
    CMatrix R(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) R(i, j) = A(i, j) - B(i, j);
    return R;
}

CMatrix operator*(const CMatrix& A, const CMatrix& B) {
    require_same_dim(A.cols(), B.rows(), "matrix product");
    CMatrix R(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const Complex a = A(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < B.cols(); ++j) R(i, j) += a * B(k, j);
        }
    }
    return R;
}

CMatrix operator*(Complex s, const CMatrix& A) {
    CMatrix R(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) R(i, j) = s * A(i, j);
    return R;
}

CVector operator*(const CMatrix& A, const CVector& v) {
    require_same_dim(A.cols(), v.dim(), "matrix-vector product");
    CVector r(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < A.cols(); ++j) s += A(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

bool operator==(const CMatrix& A, const CMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (A(i, j) != B(i, j)) return false;
    return true;
}

CMatrix hstack(const CMatrix& A, const CMatrix& B) {
    require_same_dim(A.rows(), B.rows(), "hstack");
    CMatrix R(A.rows(), A.cols() + B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) R(i, j) = A(i, j);
        for (std::size_t j = 0; j < B.cols(); ++j) R(i, A.cols() + j) = B(i, j);
    }
    return R;
}

double frobenius_distance(const CMatrix& A, const CMatrix& B) {
    return (A - B).frobenius_norm();
}

double identity_residual(const CMatrix& A) {
    if (A.rows() != A.cols()) throw DimensionError("identity_residual: matrix not square");
    return frobenius_distance(A, CMatrix::identity(A.rows()));
}

}  // namespace framemult
