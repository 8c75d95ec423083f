#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilbmod/algebra/poly.hpp"

namespace hilbmod::rkhs {

/// A kernel value together with how it was obtained. Partial sums carry an
/// upper bound on the neglected tail when one is available.
struct KernelValue {
    Rational value;
    bool exact = true;
    unsigned partial_degree = 0;                // 0 when exact
    std::optional<long double> remainder_bound; // only for partial sums
};

/// Hilbert module of holomorphic functions on the unit polydisc with kernel
/// sum_a c_a z^a conj(w)^a. The default coefficients come from the weights,
/// c_a = prod_i (lambda_i)_{a_i} / a_i!, i.e. K = prod_i (1 - z_i conj(w_i))^{-lambda_i}.
class WeightedPolydiscModule {
public:
    using CoefficientFn = std::function<Rational(const MultiIndex&)>;

    /// Throws InputError on an empty weight vector or a weight <= 0.
    explicit WeightedPolydiscModule(std::vector<Rational> weights);

    /// Some other diagonal kernel given by its coefficients. The function
    /// must return c_a > 0; coefficient() throws DomainError otherwise.
    static WeightedPolydiscModule with_coefficients(std::size_t dimension, CoefficientFn fn, std::string name);

    static WeightedPolydiscModule hardy(std::size_t dimension);

    std::size_t dimension() const { return dimension_; }
    /// Empty for a custom-coefficient module.
    const std::vector<Rational>& weights() const { return weights_; }
    bool is_weighted() const { return !custom_; }
    /// Weighted with every weight an integer, so K has a rational closed form.
    bool has_rational_closed_form() const;

    Rational coefficient(const MultiIndex& a) const;

    /// K(z, w) for real rational points; exact when the closed form is
    /// rational, otherwise a partial sum to `partial_degree` with a tail
    /// bound (weighted modules only).
    KernelValue kernel(std::span<const Rational> z, std::span<const Rational> w, unsigned partial_degree = 30) const;

    /// Throws ShapeError on a dimension mismatch and DomainError unless every
    /// coordinate has modulus < 1.
    void check_point(std::span<const Rational> z) const;

    std::string str() const;

private:
    WeightedPolydiscModule() = default;

    std::size_t dimension_ = 0;
    std::vector<Rational> weights_;
    CoefficientFn custom_;
    std::string name_;
};

/// c_a = prod_i (lambda_i)_{a_i} / a_i!, so that ||z^a||^2 = 1 / c_a.
Rational diag_coeff(const WeightedPolydiscModule& module, const MultiIndex& a);

/// <p, q> = sum_a p_a q_a / c_a. Coefficients are real, so no conjugation.
Rational poly_inner(const WeightedPolydiscModule& module, const Poly& p, const Poly& q);

/// Bound on sum_{|a| > n} c_a |x^a| for a weighted module, with
/// x_i = |z_i w_i| <= rho < 1. Empty when the geometric majorant does not
/// converge from degree n + 1 on.
std::optional<long double> tail_bound(const WeightedPolydiscModule& module, std::span<const Rational> x, unsigned n);

} // namespace hilbmod::rkhs
