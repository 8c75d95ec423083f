#include "hilbmod/algebra/matrix.hpp"

#include <sstream>
#include <utility>

#include "hilbmod/algebra/errors.hpp"

namespace hilbmod {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data))
{
    if (data_.size() != rows * cols) {
        throw ShapeError("matrix data size does not match its shape");
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Rational(1);
    }
    return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& d)
{
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
    }
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw ShapeError("matrix sum shape mismatch");
    }
    Matrix r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        r.data_[i] += o.data_[i];
    }
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    return *this + o * Rational(-1);
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_) {
        throw ShapeError("matrix product shape mismatch");
    }
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < o.cols_; ++j) {
                r(i, j) += a * o(k, j);
            }
        }
    }
    return r;
}

Matrix Matrix::operator*(const Rational& c) const
{
    Matrix r(*this);
    for (auto& v : r.data_) {
        v *= c;
    }
    return r;
}

std::vector<Rational> Matrix::operator*(const std::vector<Rational>& v) const
{
    if (v.size() != cols_) {
        throw ShapeError("matrix-vector shape mismatch");
    }
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out[i] += (*this)(i, j) * v[j];
        }
    }
    return out;
}

Rational Matrix::determinant() const
{
    if (!is_square()) {
        throw ShapeError("determinant of a non-square matrix");
    }
    const std::size_t n = rows_;
    if (n == 0) {
        return Rational(1);
    }
    // Bareiss: every intermediate division is exact.
    Matrix a(*this);
    Rational prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k).is_zero()) {
                ++swap;
            }
            if (swap == n) {
                return Rational(0);
            }
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(k, c), a(swap, c));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = Rational(0);
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

std::size_t Matrix::rank() const
{
    // Clear denominators row by row, then run integer Bareiss with pivoting.
    std::vector<std::vector<mpz_class>> a(rows_, std::vector<mpz_class>(cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
        mpz_class l(1);
        for (std::size_t c = 0; c < cols_; ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*this)(r, c).raw().get_den_mpz_t());
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            const mpq_class& q = (*this)(r, c).raw();
            a[r][c] = q.get_num() * (l / q.get_den());
        }
    }
    std::size_t rank = 0;
    mpz_class prev(1);
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t piv = rank;
        while (piv < rows_ && a[piv][col] == 0) {
            ++piv;
        }
        if (piv == rows_) {
            continue;
        }
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            for (std::size_t j = col + 1; j < cols_; ++j) {
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]);
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<Rational> Matrix::leading_principal_minors() const
{
    if (!is_square()) {
        throw ShapeError("leading minors of a non-square matrix");
    }
    std::vector<Rational> out;
    out.reserve(rows_);
    for (std::size_t k = 1; k <= rows_; ++k) {
        Matrix block(k, k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                block(i, j) = (*this)(i, j);
            }
        }
        out.push_back(block.determinant());
    }
    return out;
}

bool Matrix::is_positive_definite() const
{
    for (const auto& m : leading_principal_minors()) {
        if (m.sign() <= 0) {
            return false;
        }
    }
    return true;
}

Matrix Matrix::inverse() const
{
    if (!is_square()) {
        throw ShapeError("inverse of a non-square matrix");
    }
    const std::size_t n = rows_;
    Matrix a(*this);
    Matrix inv = identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k).is_zero()) {
            ++piv;
        }
        if (piv == n) {
            throw SingularityError("matrix is singular");
        }
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(k, c), a(piv, c));
                std::swap(inv(k, c), inv(piv, c));
            }
        }
        const Rational p = a(k, k).inverse();
        for (std::size_t c = 0; c < n; ++c) {
            a(k, c) *= p;
            inv(k, c) *= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) {
                continue;
            }
            const Rational f = a(i, k);
            for (std::size_t c = 0; c < n; ++c) {
                a(i, c) -= f * a(k, c);
                inv(i, c) -= f * inv(k, c);
            }
        }
    }
    return inv;
}

std::vector<Rational> Matrix::solve(const std::vector<Rational>& b) const
{
    return inverse() * b;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const
{
    Matrix a(*this);
    std::size_t row = 0;
    std::vector<std::size_t> piv_cols;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = row;
        while (piv < rows_ && a(piv, col).is_zero()) {
            ++piv;
        }
        if (piv == rows_) {
            continue;
        }
        for (std::size_t c = 0; c < cols_; ++c) {
            std::swap(a(row, c), a(piv, c));
        }
        const Rational p = a(row, col).inverse();
        for (std::size_t c = 0; c < cols_; ++c) {
            a(row, c) *= p;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || a(i, col).is_zero()) {
                continue;
            }
            const Rational f = a(i, col);
            for (std::size_t c = 0; c < cols_; ++c) {
                a(i, c) -= f * a(row, c);
            }
        }
        piv_cols.push_back(col);
        ++row;
    }
    if (pivots) {
        *pivots = std::move(piv_cols);
    }
    return a;
}

std::vector<std::vector<Rational>> Matrix::nullspace() const
{
    std::vector<std::size_t> piv;
    const Matrix r = rref(&piv);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : piv) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> v(cols_);
        v[free] = Rational(1);
        for (std::size_t k = 0; k < piv.size(); ++k) {
            v[piv[k]] = -r(k, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

bool Matrix::is_zero() const
{
    for (const auto& v : data_) {
        if (!v.is_zero()) {
            return false;
        }
    }
    return true;
}

bool Matrix::is_symmetric() const
{
    return is_square() && transpose() == *this;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) {
            os << (c ? ", " : "") << (*this)(r, c);
        }
    }
    os << "]";
    return os.str();
}

bool EchelonBasis::insert(std::vector<Rational> v)
{
    if (v.size() != dim_) {
        throw ShapeError("echelon basis dimension mismatch");
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational& f = v[pivots_[k]];
        if (f.is_zero()) {
            continue;
        }
        const Rational scale = f;
        for (std::size_t c = pivots_[k]; c < dim_; ++c) {
            if (!rows_[k][c].is_zero()) {
                v[c] -= scale * rows_[k][c];
            }
        }
    }
    std::size_t lead = 0;
    while (lead < dim_ && v[lead].is_zero()) {
        ++lead;
    }
    if (lead == dim_) {
        return false;
    }
    const Rational inv = v[lead].inverse();
    for (std::size_t c = lead; c < dim_; ++c) {
        v[c] *= inv;
    }
    // Keep previous rows reduced against the new pivot so later reductions
    // only need a single pass.
    for (auto& row : rows_) {
        const Rational f = row[lead];
        if (f.is_zero()) {
            continue;
        }
        for (std::size_t c = lead; c < dim_; ++c) {
            row[c] -= f * v[c];
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(lead);
    return true;
}

} // namespace hilbmod
