#include "hilbmod/rkhs/module.hpp"

#include <algorithm>

#include "hilbmod/algebra/errors.hpp"

namespace hilbmod::rkhs {

WeightedPolydiscModule::WeightedPolydiscModule(std::vector<Rational> weights)
    : dimension_(weights.size()), weights_(std::move(weights))
{
    if (weights_.empty()) {
        throw InputError("a weighted polydisc module needs at least one weight");
    }
    for (const auto& l : weights_) {
        if (l.sign() <= 0) {
            throw InputError("weight " + l.str() + " is not positive");
        }
    }
}

WeightedPolydiscModule WeightedPolydiscModule::with_coefficients(std::size_t dimension, CoefficientFn fn,
                                                                 std::string name)
{
    if (dimension == 0 || !fn) {
        throw InputError("custom module needs a dimension and a coefficient function");
    }
    WeightedPolydiscModule m;
    m.dimension_ = dimension;
    m.custom_ = std::move(fn);
    m.name_ = std::move(name);
    return m;
}

WeightedPolydiscModule WeightedPolydiscModule::hardy(std::size_t dimension)
{
    return WeightedPolydiscModule(std::vector<Rational>(dimension, Rational(1)));
}

bool WeightedPolydiscModule::has_rational_closed_form() const
{
    return !custom_ && std::all_of(weights_.begin(), weights_.end(), [](const Rational& l) { return l.is_integer(); });
}

Rational WeightedPolydiscModule::coefficient(const MultiIndex& a) const
{
    if (a.size() != dimension_) {
        throw ShapeError("multi-index " + a.str() + " has the wrong length for a module of dimension " +
                         std::to_string(dimension_));
    }
    if (custom_) {
        Rational c = custom_(a);
        if (c.sign() <= 0) {
            throw DomainError("kernel coefficient at " + a.str() + " is not positive");
        }
        return c;
    }
    Rational c(1);
    for (std::size_t i = 0; i < dimension_; ++i) {
        c *= pochhammer(weights_[i], a[i]) / factorial(a[i]);
    }
    return c;
}

void WeightedPolydiscModule::check_point(std::span<const Rational> z) const
{
    if (z.size() != dimension_) {
        throw ShapeError("point has " + std::to_string(z.size()) + " coordinates, expected " +
                         std::to_string(dimension_));
    }
    for (const auto& c : z) {
        if (c.abs() >= Rational(1)) {
            throw DomainError("coordinate " + c.str() + " is outside the open unit disc");
        }
    }
}

KernelValue WeightedPolydiscModule::kernel(std::span<const Rational> z, std::span<const Rational> w,
                                           unsigned partial_degree) const
{
    check_point(z);
    check_point(w);
    KernelValue out;
    if (has_rational_closed_form()) {
        out.value = Rational(1);
        for (std::size_t i = 0; i < dimension_; ++i) {
            const long l = weights_[i].num().get_si();
            out.value *= (Rational(1) - z[i] * w[i]).pow(-l);
        }
        return out;
    }
    std::vector<Rational> x(dimension_);
    for (std::size_t i = 0; i < dimension_; ++i) {
        x[i] = z[i] * w[i];
    }
    out.exact = false;
    out.partial_degree = partial_degree;
    for (const auto& a : monomials_up_to(dimension_, partial_degree)) {
        Rational t = coefficient(a);
        for (std::size_t i = 0; i < dimension_; ++i) {
            if (a[i]) {
                t *= x[i].pow(a[i]);
            }
        }
        out.value += t;
    }
    if (!custom_) {
        out.remainder_bound = tail_bound(*this, x, partial_degree);
    }
    return out;
}

std::string WeightedPolydiscModule::str() const
{
    if (custom_) {
        return name_ + " (dimension " + std::to_string(dimension_) + ")";
    }
    std::string s = "weights (";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        s += (i ? ", " : "") + weights_[i].str();
    }
    return s + ")";
}

Rational diag_coeff(const WeightedPolydiscModule& module, const MultiIndex& a)
{
    return module.coefficient(a);
}

Rational poly_inner(const WeightedPolydiscModule& module, const Poly& p, const Poly& q)
{
    const Poly& small = p.term_count() <= q.term_count() ? p : q;
    const Poly& large = &small == &p ? q : p;
    Rational s;
    for (const auto& [a, c] : small.terms()) {
        const Rational d = large.coefficient(a);
        if (!d.is_zero()) {
            s += c * d / module.coefficient(a);
        }
    }
    return s;
}

std::optional<long double> tail_bound(const WeightedPolydiscModule& module, std::span<const Rational> x, unsigned n)
{
    if (!module.is_weighted()) {
        return std::nullopt;
    }
    long double rho = 0;
    for (const auto& v : x) {
        rho = std::max(rho, v.abs().to_long_double());
    }
    long double total = 0;
    for (const auto& l : module.weights()) {
        total += l.to_long_double();
    }
    // The degree-k part of sum c_a rho^|a| is (total)_k / k! rho^k; the ratio
    // of consecutive parts is rho (total + k) / (k + 1).
    const long double ratio = rho * std::max(1.0L, (total + n + 1) / (n + 2));
    if (ratio >= 1) {
        return std::nullopt;
    }
    long double term = 1;
    for (unsigned k = 0; k <= n; ++k) {
        term *= rho * (total + k) / (k + 1);
    }
    return term / (1 - ratio);
}

} // namespace hilbmod::rkhs
