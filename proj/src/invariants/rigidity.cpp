#include "hilbmod/invariants/rigidity.hpp"

#include <algorithm>

#include "hilbmod/algebra/errors.hpp"
#include "hilbmod/curvature/curvature.hpp"
#include "hilbmod/frames/metric.hpp"

namespace hilbmod::invariants {

namespace {

void require_positive(const Rational& w)
{
    if (w.sign() <= 0) {
        throw InputError("weight " + w.str() + " is not positive");
    }
}

// ||F_k||^2 at the origin of V for <z_k^{e_k}>, as a series.
TruncSeries zero_set_norm(const std::vector<Rational>& weights, const std::vector<unsigned>& exponents,
                          std::size_t slot)
{
    const std::size_t m = weights.size();
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < m; ++i) {
        if (exponents[i]) {
            gens.push_back(Poly::variable(m, i).pow(exponents[i]));
        }
    }
    const auto frame = frames::frame_on_zero_set(rkhs::WeightedPolydiscModule(weights),
                                                 ideals::IdealSpec::from_generators(gens),
                                                 std::vector<Rational>(m), 2);
    return frames::grammian(frame).h(slot, slot);
}

} // namespace

LambdaMuInvariant lambda_mu_invariants(const Rational& lambda, const Rational& mu)
{
    require_positive(lambda);
    require_positive(mu);
    const Rational s = (lambda + mu) * (lambda + mu);
    const Rational half(1, 2);
    return {(lambda + Rational(1)) * half + lambda * mu * mu / s, (mu + Rational(1)) * half + lambda * lambda * mu / s};
}

LambdaMuInvariant lambda_mu_pipeline(const Rational& lambda, const Rational& mu, unsigned degree)
{
    require_positive(lambda);
    require_positive(mu);
    const auto frame = frames::decompose_coordinate_ideal(rkhs::WeightedPolydiscModule({lambda, mu}), 2, degree);
    const Matrix k = curvature::det_bundle_curvature(frames::grammian(frame));
    return {k(0, 0), k(1, 1)};
}

bool lambda_mu_equivalent(const Rational& lambda, const Rational& mu, const Rational& lambda2, const Rational& mu2)
{
    return lambda_mu_invariants(lambda, mu) == lambda_mu_invariants(lambda2, mu2);
}

PrincipalCurvatures principal_curvatures(const Rational& lambda, const Rational& mu, unsigned p)
{
    require_positive(lambda);
    require_positive(mu);
    if (p == 0) {
        throw InputError("the exponent p must be at least 1");
    }
    const TruncSeries h = zero_set_norm({lambda, mu}, {p, 0}, 0);
    const TruncSeries next = zero_set_norm({lambda, mu}, {p + 1, 0}, 0);
    PrincipalCurvatures c;
    c.log_curvature = curvature::line_curvature(h, 1, 1);
    c.plain_hessian = curvature::plain_hessian(h, 1, 1);
    c.plain_hessian_next = curvature::plain_hessian(next, 1, 1);
    c.product = c.plain_hessian * factorial(p);
    c.product_next = c.plain_hessian_next * factorial(p + 1);
    return c;
}

bool principal_rigidity(const Rational& lambda, const Rational& mu, unsigned p, const Rational& lambda2,
                        const Rational& mu2)
{
    const auto a = principal_curvatures(lambda, mu, p);
    const auto b = principal_curvatures(lambda2, mu2, p);
    return a.product == b.product && a.product_next == b.product_next;
}

RigidityReport polydisc_rigidity_report(const std::vector<Rational>& weights, const ideals::IdealSpec& ideal,
                                        const std::vector<Rational>& weights2)
{
    const std::size_t m = weights.size();
    if (weights2.size() != m || ideal.nvars() != m) {
        throw InputError("weight vectors and ideal must share the dimension");
    }
    for (const auto& w : weights) {
        require_positive(w);
    }
    for (const auto& w : weights2) {
        require_positive(w);
    }
    const auto exps = ideal.pure_power_exponents();
    if (!exps) {
        throw InputError("polydisc rigidity needs an ideal generated by powers of distinct coordinates");
    }
    if (ideal.size() >= m) {
        throw InputError("polydisc rigidity needs fewer generators than variables");
    }

    RigidityReport r;
    std::size_t slot = 0;
    for (std::size_t k = 0; k < m; ++k) {
        const unsigned e = (*exps)[k];
        if (!e) {
            continue;
        }
        std::vector<unsigned> shifted = *exps;
        shifted[k] = e + 1;
        const TruncSeries h1 = zero_set_norm(weights, *exps, slot);
        const TruncSeries h2 = zero_set_norm(weights2, *exps, slot);
        const TruncSeries s1 = zero_set_norm(weights, shifted, slot);
        const TruncSeries s2 = zero_set_norm(weights2, shifted, slot);
        const std::string f = "F" + std::to_string(slot + 1);
        for (std::size_t i = 0; i < m; ++i) {
            if ((*exps)[i]) {
                continue;
            }
            const std::string d = "d" + std::to_string(i + 1) + " dbar" + std::to_string(i + 1);
            r.battery.push_back({d + " log ||" + f + "||^2", curvature::line_curvature(h1, i, i),
                                 curvature::line_curvature(h2, i, i)});
            r.battery.push_back({d + " ||" + f + "||^2 * i_k!", curvature::plain_hessian(h1, i, i) * factorial(e),
                                 curvature::plain_hessian(h2, i, i) * factorial(e)});
            r.battery.push_back({d + " ||" + f + "||^2 * (i_k+1)!, exponent raised",
                                 curvature::plain_hessian(s1, i, i) * factorial(e + 1),
                                 curvature::plain_hessian(s2, i, i) * factorial(e + 1)});
        }
        ++slot;
    }
    r.equivalent = std::all_of(r.battery.begin(), r.battery.end(), [](const BatteryEntry& b) { return b.agrees(); });
    return r;
}

bool polydisc_rigidity(const std::vector<Rational>& weights, const ideals::IdealSpec& ideal,
                       const std::vector<Rational>& weights2)
{
    return polydisc_rigidity_report(weights, ideal, weights2).equivalent;
}

} // namespace hilbmod::invariants
