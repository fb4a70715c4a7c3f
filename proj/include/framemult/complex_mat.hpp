#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "framemult/errors.hpp"

namespace framemult {

using Complex = std::complex<double>;

/// Dense complex vector, an element of C^d.
class CVector {
public:
    CVector() = default;
    explicit CVector(std::size_t dim) : data_(dim) {}
    CVector(std::initializer_list<Complex> xs) : data_(xs) {}
    explicit CVector(std::vector<Complex> xs) : data_(std::move(xs)) {}

    std::size_t dim() const { return data_.size(); }
    Complex& operator[](std::size_t i) { return data_[i]; }
    const Complex& operator[](std::size_t i) const { return data_[i]; }

    const std::vector<Complex>& entries() const { return data_; }

    auto begin() { return data_.begin(); }
    auto end() { return data_.end(); }
    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    double norm() const;
    bool is_finite() const;

private:
    std::vector<Complex> data_;
};

/// Dense complex matrix, row-major.
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(const std::vector<Complex>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    CMatrix conj() const;

    CVector column(std::size_t j) const;
    CVector row(std::size_t i) const;
    void set_column(std::size_t j, const CVector& v);

    double frobenius_norm() const;
    bool is_finite() const;

private:
    std::size_t rows_, cols_;
    std::vector<Complex> data_;
};

// Vector arithmetic.
CVector operator+(const CVector& a, const CVector& b);
CVector operator-(const CVector& a, const CVector& b);
CVector operator*(Complex s, const CVector& v);
bool operator==(const CVector& a, const CVector& b);

/// Inner product <a, b> = sum a_j conj(b_j); conjugate-linear in the second argument.
Complex inner(const CVector& a, const CVector& b);

// Matrix arithmetic.
CMatrix operator+(const CMatrix& A, const CMatrix& B);
CMatrix operator-(const CMatrix& A, const CMatrix& B);
CMatrix operator*(const CMatrix& A, const CMatrix& B);
CMatrix operator*(Complex s, const CMatrix& A);
CVector operator*(const CMatrix& A, const CVector& v);
bool operator==(const CMatrix& A, const CMatrix& B);

/// Horizontal concatenation [A | B]; row counts must match.
CMatrix hstack(const CMatrix& A, const CMatrix& B);

/// ||A - B||_F.
double frobenius_distance(const CMatrix& A, const CMatrix& B);

/// ||A - I||_F; A must be square.
double identity_residual(const CMatrix& A);

}  // namespace framemult
