#include "hilbmod/frames/metric.hpp"

#include <algorithm>
#include <cmath>

#include "hilbmod/algebra/errors.hpp"

namespace hilbmod::frames {

std::optional<Rational> PositiveScale::exact_value() const
{
    Rational v(1);
    for (const auto& [base, e] : factors) {
        if (!e.is_integer()) {
            return std::nullopt;
        }
        v *= base.pow(e.num().get_si());
    }
    return v;
}

long double PositiveScale::to_long_double() const
{
    long double v = 1;
    for (const auto& [base, e] : factors) {
        v *= std::pow(base.to_long_double(), e.to_long_double());
    }
    return v;
}

std::string PositiveScale::str() const
{
    if (factors.empty()) {
        return "1";
    }
    std::string s;
    for (const auto& [base, e] : factors) {
        s += (s.empty() ? "" : " * ") + ("(" + base.str() + ")^(" + e.str() + ")");
    }
    return s;
}

namespace {

void check_positive(const MetricSeries& m)
{
    if (!m.h.constant_part().is_positive_definite()) {
        throw DegeneracyError("frame vectors are linearly dependent at the base point");
    }
}

} // namespace

MetricSeries grammian_by_summation(const FrameSeries& frame)
{
    const std::size_t t = frame.rank();
    MetricSeries out{SeriesMatrix(t, frame.pairs(), frame.degree), frame.base_point, {}};
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = i; j < t; ++j) {
            TruncSeries s(frame.pairs(), frame.degree);
            for (const auto& [a, fi] : frame.frames[i]) {
                const auto it = frame.frames[j].find(a);
                if (it != frame.frames[j].end()) {
                    s += (fi * it->second.conjugate()) * frame.module.coefficient(a).inverse();
                }
            }
            out.h.set(i, j, s);
            if (i != j) {
                out.h.set(j, i, s.conjugate());
            }
        }
    }
    return out;
}

MetricSeries grammian_closed_form(const FrameSeries& frame)
{
    if (frame.kind != FrameSeries::Kind::ZeroSet) {
        throw UnsupportedError("the closed-form Grammian exists on the zero set only");
    }
    const std::size_t m = frame.pairs();
    const unsigned d = frame.degree;
    const auto& lambda = frame.module.weights();
    MetricSeries out{SeriesMatrix(frame.rank(), m, d), frame.base_point, {}};

    // prod over free i of (1 - |w_i|^2)^{-lambda_i} = S * prod (1 + u_i)^{-lambda_i}
    // with a_i = 1 - |w0_i|^2 and u_i = -(w0_i v_i + w0_i vbar_i + v_i vbar_i) / a_i.
    TruncSeries free_part = TruncSeries::constant(m, d, Rational(1));
    for (std::size_t i = 0; i < m; ++i) {
        if (frame.exponents[i]) {
            continue;
        }
        const Rational& w = frame.base_point[i];
        const Rational a = Rational(1) - w * w;
        const TruncSeries v = TruncSeries::w(m, d, i);
        const TruncSeries vb = TruncSeries::wbar(m, d, i);
        const TruncSeries u = (v * w + vb * w + v * vb) * (-a.inverse());
        free_part = free_part * series_binomial_power(TruncSeries::constant(m, d, Rational(1)) + u, -lambda[i]);
        if (a != Rational(1)) {
            out.scale.factors.emplace_back(a, -lambda[i]);
        }
    }
    for (std::size_t j = 0; j < frame.rank(); ++j) {
        const std::size_t k = frame.generator_variables[j];
        const Rational c = pochhammer(lambda[k], frame.exponents[k]) / factorial(frame.exponents[k]);
        out.h.set(j, j, free_part * c);
    }
    check_positive(out);
    return out;
}

MetricSeries grammian(const FrameSeries& frame)
{
    const bool at_origin = std::all_of(frame.base_point.begin(), frame.base_point.end(),
                                       [](const Rational& r) { return r.is_zero(); });
    if (frame.kind == FrameSeries::Kind::ZeroSet && !at_origin) {
        return grammian_closed_form(frame);
    }
    if (!at_origin) {
        throw UnsupportedError("neighbourhood Grammians are exact only at the origin");
    }
    unsigned need = 0;
    for (std::size_t k : frame.generator_variables) {
        need = std::max(need, frame.exponents[k]);
    }
    need += (frame.degree + 1) / 2;
    if (frame.z_degree < need) {
        throw TruncationError("frame kept z-degree " + std::to_string(frame.z_degree) + ", the Grammian needs " +
                              std::to_string(need));
    }
    MetricSeries out = grammian_by_summation(frame);
    check_positive(out);
    return out;
}

} // namespace hilbmod::frames
