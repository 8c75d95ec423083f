#include "hilbmod/algebra/series_matrix.hpp"

#include <utility>

#include "hilbmod/algebra/errors.hpp"

namespace hilbmod {

SeriesMatrix::SeriesMatrix(std::size_t t, std::size_t pairs, unsigned degree)
    : dim_(t), pairs_(pairs), degree_(degree), entries_(t * t, TruncSeries(pairs, degree))
{
    if (t == 0) {
        throw ShapeError("series matrix must have dimension >= 1");
    }
}

SeriesMatrix SeriesMatrix::identity(std::size_t t, std::size_t pairs, unsigned degree)
{
    SeriesMatrix m(t, pairs, degree);
    for (std::size_t i = 0; i < t; ++i) {
        m(i, i) = TruncSeries::constant(pairs, degree, Rational(1));
    }
    return m;
}

SeriesMatrix SeriesMatrix::from_constant(const Matrix& a, std::size_t pairs, unsigned degree)
{
    if (!a.is_square()) {
        throw ShapeError("series matrix from a non-square matrix");
    }
    SeriesMatrix m(a.rows(), pairs, degree);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m(i, j) = TruncSeries::constant(pairs, degree, a(i, j));
        }
    }
    return m;
}

void SeriesMatrix::set(std::size_t i, std::size_t j, TruncSeries s)
{
    if (s.pairs() != pairs_ || s.degree() != degree_) {
        throw ShapeError("series matrix entry shape mismatch");
    }
    (*this)(i, j) = std::move(s);
}

Matrix SeriesMatrix::constant_part() const
{
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            m(i, j) = (*this)(i, j).constant_term();
        }
    }
    return m;
}

SeriesMatrix SeriesMatrix::conjugate_transpose() const
{
    SeriesMatrix r(dim_, pairs_, degree_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            r(j, i) = (*this)(i, j).conjugate();
        }
    }
    return r;
}

bool SeriesMatrix::is_hermitian() const
{
    return conjugate_transpose() == *this;
}

SeriesMatrix SeriesMatrix::truncated(unsigned new_degree) const
{
    SeriesMatrix r(dim_, pairs_, new_degree);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        r.entries_[k] = entries_[k].truncated(new_degree);
    }
    return r;
}

SeriesMatrix SeriesMatrix::d_w(std::size_t i) const
{
    if (degree_ == 0) {
        throw TruncationError("cannot differentiate a degree-0 truncation");
    }
    SeriesMatrix r(dim_, pairs_, degree_ - 1);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        r.entries_[k] = entries_[k].d_w(i);
    }
    return r;
}

SeriesMatrix SeriesMatrix::d_wbar(std::size_t i) const
{
    if (degree_ == 0) {
        throw TruncationError("cannot differentiate a degree-0 truncation");
    }
    SeriesMatrix r(dim_, pairs_, degree_ - 1);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        r.entries_[k] = entries_[k].d_wbar(i);
    }
    return r;
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& o) const
{
    if (dim_ != o.dim_) {
        throw ShapeError("series matrix dimension mismatch");
    }
    SeriesMatrix r(*this);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        r.entries_[k] += o.entries_[k];
    }
    return r;
}

SeriesMatrix SeriesMatrix::operator-(const SeriesMatrix& o) const
{
    if (dim_ != o.dim_) {
        throw ShapeError("series matrix dimension mismatch");
    }
    SeriesMatrix r(*this);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        r.entries_[k] -= o.entries_[k];
    }
    return r;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const
{
    if (dim_ != o.dim_) {
        throw ShapeError("series matrix dimension mismatch");
    }
    SeriesMatrix r(dim_, pairs_, degree_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            TruncSeries acc(pairs_, degree_);
            for (std::size_t k = 0; k < dim_; ++k) {
                acc += (*this)(i, k) * o(k, j);
            }
            r(i, j) = std::move(acc);
        }
    }
    return r;
}

SeriesMatrix operator*(const Matrix& a, const SeriesMatrix& m)
{
    if (a.rows() != m.dim_ || a.cols() != m.dim_) {
        throw ShapeError("constant-series matrix product shape mismatch");
    }
    SeriesMatrix r(m.dim_, m.pairs_, m.degree_);
    for (std::size_t i = 0; i < m.dim_; ++i) {
        for (std::size_t j = 0; j < m.dim_; ++j) {
            TruncSeries acc(m.pairs_, m.degree_);
            for (std::size_t k = 0; k < m.dim_; ++k) {
                if (!a(i, k).is_zero()) {
                    acc += m(k, j) * a(i, k);
                }
            }
            r(i, j) = std::move(acc);
        }
    }
    return r;
}

SeriesMatrix SeriesMatrix::operator*(const Matrix& a) const
{
    if (a.rows() != dim_ || a.cols() != dim_) {
        throw ShapeError("series-constant matrix product shape mismatch");
    }
    SeriesMatrix r(dim_, pairs_, degree_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            TruncSeries acc(pairs_, degree_);
            for (std::size_t k = 0; k < dim_; ++k) {
                if (!a(k, j).is_zero()) {
                    acc += (*this)(i, k) * a(k, j);
                }
            }
            r(i, j) = std::move(acc);
        }
    }
    return r;
}

namespace {

TruncSeries cofactor_det(const SeriesMatrix& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols)
{
    const std::size_t n = rows.size();
    if (n == 1) {
        return m(rows[0], cols[0]);
    }
    TruncSeries acc(m.pairs(), m.degree());
    const std::size_t r0 = rows.front();
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < n; ++k) {
        const TruncSeries& a = m(r0, cols[k]);
        if (a.is_zero()) {
            continue;
        }
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(n - 1);
        for (std::size_t c = 0; c < n; ++c) {
            if (c != k) {
                sub_cols.push_back(cols[c]);
            }
        }
        TruncSeries term = a * cofactor_det(m, sub_rows, sub_cols);
        if (k % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc;
}

} // namespace

TruncSeries series_det(const SeriesMatrix& m)
{
    std::vector<std::size_t> rows(m.dim());
    std::vector<std::size_t> cols(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) {
        rows[i] = cols[i] = i;
    }
    return cofactor_det(m, rows, cols);
}

SeriesMatrix series_matrix_inverse(const SeriesMatrix& m)
{
    const std::size_t n = m.dim();
    SeriesMatrix a(m);
    SeriesMatrix inv = SeriesMatrix::identity(n, m.pairs(), m.degree());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k).constant_term().is_zero()) {
            ++piv;
        }
        if (piv == n) {
            throw SingularityError("series matrix has a singular constant part");
        }
        if (piv != k) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(k, c), a(piv, c));
                std::swap(inv(k, c), inv(piv, c));
            }
        }
        const TruncSeries p = series_inverse(a(k, k));
        for (std::size_t c = 0; c < n; ++c) {
            a(k, c) = a(k, c) * p;
            inv(k, c) = inv(k, c) * p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) {
                continue;
            }
            const TruncSeries f = a(i, k);
            for (std::size_t c = 0; c < n; ++c) {
                a(i, c) -= f * a(k, c);
                inv(i, c) -= f * inv(k, c);
            }
        }
    }
    return inv;
}

} // namespace hilbmod
