#pragma once

#include <cstddef>
#include <vector>

#include "hilbmod/algebra/matrix.hpp"
#include "hilbmod/algebra/trunc_series.hpp"

namespace hilbmod {

/// Square matrix of truncated series sharing one shape (pairs, degree).
class SeriesMatrix {
public:
    SeriesMatrix() = default;
    /// t x t zero matrix; throws ShapeError when t == 0.
    SeriesMatrix(std::size_t t, std::size_t pairs, unsigned degree);

    static SeriesMatrix identity(std::size_t t, std::size_t pairs, unsigned degree);
    /// Constant matrix embedded as series.
    static SeriesMatrix from_constant(const Matrix& m, std::size_t pairs, unsigned degree);

    std::size_t dim() const { return dim_; }
    std::size_t pairs() const { return pairs_; }
    unsigned degree() const { return degree_; }

    TruncSeries& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const TruncSeries& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    /// Stores s at (i, j); throws ShapeError when its shape differs.
    void set(std::size_t i, std::size_t j, TruncSeries s);

    /// Constant terms, i.e. the value at the base point.
    Matrix constant_part() const;
    /// Entrywise conjugation followed by transpose.
    SeriesMatrix conjugate_transpose() const;
    bool is_hermitian() const;
    SeriesMatrix truncated(unsigned new_degree) const;
    SeriesMatrix d_w(std::size_t i) const;
    SeriesMatrix d_wbar(std::size_t i) const;

    SeriesMatrix operator+(const SeriesMatrix& o) const;
    SeriesMatrix operator-(const SeriesMatrix& o) const;
    SeriesMatrix operator*(const SeriesMatrix& o) const;
    /// Left / right multiplication by a constant rational matrix.
    friend SeriesMatrix operator*(const Matrix& a, const SeriesMatrix& m);
    SeriesMatrix operator*(const Matrix& a) const;

    friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b)
    {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    std::size_t dim_ = 0;
    std::size_t pairs_ = 0;
    unsigned degree_ = 0;
    std::vector<TruncSeries> entries_;
};

/// Determinant by cofactor expansion (only ring operations, so exact through
/// the truncation degree).
TruncSeries series_det(const SeriesMatrix& m);

/// Gauss-Jordan inverse over the series ring. Throws SingularityError when
/// the constant part is singular.
SeriesMatrix series_matrix_inverse(const SeriesMatrix& m);

} // namespace hilbmod
