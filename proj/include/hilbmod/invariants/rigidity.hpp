#pragma once

#include <string>
#include <vector>

#include "hilbmod/ideals/ideal.hpp"

namespace hilbmod::invariants {

/// d1 dbar1 and d2 dbar2 of log det H at the origin for the functions
/// vanishing at 0 in the (lambda, mu) bidisc module.
struct LambdaMuInvariant {
    Rational kappa1;
    Rational kappa2;

    friend bool operator==(const LambdaMuInvariant&, const LambdaMuInvariant&) = default;
};

/// Closed form ((l+1)/2 + l m^2/(l+m)^2, (m+1)/2 + l^2 m/(l+m)^2).
/// Throws InputError unless both weights are positive.
LambdaMuInvariant lambda_mu_invariants(const Rational& lambda, const Rational& mu);

/// Same pair from the frame, Grammian and curvature pipeline at degree d.
LambdaMuInvariant lambda_mu_pipeline(const Rational& lambda, const Rational& mu, unsigned degree = 4);

bool lambda_mu_equivalent(const Rational& lambda, const Rational& mu, const Rational& lambda2, const Rational& mu2);

/// Curvature data of <z1^p> on the bidisc at the origin of V = {z1 = 0}.
struct PrincipalCurvatures {
    Rational log_curvature;       // d2 dbar2 log ||F1||^2, = mu
    Rational plain_hessian;       // d2 dbar2 ||F1||^2, = mu (lambda)_p / p!
    Rational plain_hessian_next;  // same for <z1^{p+1}>
    Rational product;             // mu (lambda)_p
    Rational product_next;        // mu (lambda)_{p+1}
};

/// Throws InputError unless p >= 1 and the weights are positive.
PrincipalCurvatures principal_curvatures(const Rational& lambda, const Rational& mu, unsigned p);

/// Compares mu (lambda)_p and mu (lambda)_{p+1}, both read off the pipeline.
bool principal_rigidity(const Rational& lambda, const Rational& mu, unsigned p, const Rational& lambda2,
                        const Rational& mu2);

struct BatteryEntry {
    std::string name;
    Rational value;
    Rational other;

    bool agrees() const { return value == other; }
};

struct RigidityReport {
    bool equivalent = false;
    std::vector<BatteryEntry> battery;
};

/// For <z_k^{i_k}> with t generators in m > t variables: the log-curvatures
/// d_i dbar_i log ||F_k||^2 = lambda_i along each free direction i, and the
/// plain Hessians of ||F_k||^2 for <.., z_k^{i_k}, ..> and <.., z_k^{i_k+1}, ..>
/// scaled to lambda_i (lambda_k)_{i_k} and lambda_i (lambda_k)_{i_k+1}.
/// Throws InputError when t >= m or the ideal is not of that shape.
RigidityReport polydisc_rigidity_report(const std::vector<Rational>& weights, const ideals::IdealSpec& ideal,
                                        const std::vector<Rational>& weights2);

bool polydisc_rigidity(const std::vector<Rational>& weights, const ideals::IdealSpec& ideal,
                       const std::vector<Rational>& weights2);

} // namespace hilbmod::invariants
