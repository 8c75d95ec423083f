#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hilbmod/algebra/rational.hpp"

namespace hilbmod {

/// Dense matrix of exact rationals, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(const std::vector<Rational>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transpose() const;
    /// Conjugate transpose; entries are real, so this is the transpose.
    Matrix adjoint() const { return transpose(); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Rational& c) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Fraction-free (Bareiss) determinant.
    Rational determinant() const;
    /// Rank by fraction-free elimination on the row-scaled integer matrix.
    std::size_t rank() const;
    /// Determinants of the k x k leading blocks, k = 1..n.
    std::vector<Rational> leading_principal_minors() const;
    /// All leading principal minors strictly positive (symmetric input assumed).
    bool is_positive_definite() const;
    /// Throws SingularityError when the matrix is singular.
    Matrix inverse() const;
    /// Solves A x = b; throws SingularityError when A is singular.
    std::vector<Rational> solve(const std::vector<Rational>& b) const;
    /// Basis of {x : A x = 0}, from the reduced row echelon form.
    std::vector<std::vector<Rational>> nullspace() const;
    /// Reduced row echelon form and the pivot columns.
    Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;

    bool is_zero() const;
    bool is_symmetric() const;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Incrementally maintained row echelon basis; answers "does this vector
/// enlarge the span" exactly.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    /// Reduces v against the basis; inserts and returns true when independent.
    bool insert(std::vector<Rational> v);
    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

private:
    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace hilbmod
