#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hilbmod/algebra/series_matrix.hpp"
#include "hilbmod/frames/frame.hpp"

namespace hilbmod::frames {

/// Positive constant prod_k base_k^{exponent_k}, kept symbolically because
/// rational exponents make it irrational in general. Bases are positive.
struct PositiveScale {
    std::vector<std::pair<Rational, Rational>> factors;

    bool is_one() const { return factors.empty(); }
    /// The value when every exponent is an integer.
    std::optional<Rational> exact_value() const;
    long double to_long_double() const;
    std::string str() const;
};

/// Grammian H_ij = <F^i, F^j> expanded in (v, vbar) around the base point.
/// The true metric is scale * h; curvature never sees the scale.
struct MetricSeries {
    SeriesMatrix h;
    std::vector<Rational> base_point;
    PositiveScale scale;

    std::size_t rank() const { return h.dim(); }
    unsigned degree() const { return h.degree(); }
};

/// Closed form on V for ZeroSet frames away from the origin, summation of
/// <F^i_a, F^j_a> / c_a otherwise. Throws DegeneracyError when H(w0) is not
/// positive definite and UnsupportedError when neither route is exact.
MetricSeries grammian(const FrameSeries& frame);

/// sum over the kept a of F^i_a conj(F^j_a) / c_a; exact at the origin once
/// z_degree >= degree + max i_k.
MetricSeries grammian_by_summation(const FrameSeries& frame);

/// Diagonal metric C_k prod_{free i} (1 - |w_i|^2)^{-lambda_i} on V, expanded
/// around w0 in V. ZeroSet frames only.
MetricSeries grammian_closed_form(const FrameSeries& frame);

} // namespace hilbmod::frames
