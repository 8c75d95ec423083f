#include "hilbmod/ideals/localization.hpp"

#include <map>

#include "hilbmod/algebra/errors.hpp"
#include "hilbmod/algebra/matrix.hpp"

namespace hilbmod::ideals {

namespace {

// Rank of a set of polynomials of degree <= n in monomial coordinates.
std::size_t span_rank(const std::vector<Poly>& polys, std::size_t nvars, unsigned n)
{
    if (polys.empty()) {
        return 0;
    }
    const auto monos = monomials_up_to(nvars, n);
    std::map<MultiIndex, std::size_t> column;
    for (std::size_t k = 0; k < monos.size(); ++k) {
        column.emplace(monos[k], k);
    }
    Matrix a(polys.size(), monos.size());
    for (std::size_t r = 0; r < polys.size(); ++r) {
        for (const auto& [m, c] : polys[r].terms()) {
            a(r, column.at(m)) = c;
        }
    }
    return a.rank();
}

} // namespace

std::vector<Poly> truncated_ideal_span(const IdealSpec& ideal, unsigned n)
{
    std::vector<Poly> out;
    for (const auto& p : ideal.generators()) {
        if (p.degree() > n) {
            continue;
        }
        for (const auto& b : monomials_up_to(ideal.nvars(), n - p.degree())) {
            out.push_back(p.times_monomial(b));
        }
    }
    return out;
}

LocalizationResult localization_dim(const IdealSpec& ideal, std::span<const Rational> w, unsigned n_max,
                                    LocalizationOptions options)
{
    const std::size_t m = ideal.nvars();
    if (w.size() != m) {
        throw InputError("localization point has " + std::to_string(w.size()) + " coordinates, expected " +
                         std::to_string(m));
    }
    const unsigned g = ideal.max_degree();
    if (n_max < g) {
        throw TruncationError("localization degree " + std::to_string(n_max) + " is below the generator degree " +
                              std::to_string(g));
    }

    std::vector<Poly> shifts;
    for (std::size_t i = 0; i < m; ++i) {
        shifts.push_back(Poly::variable(m, i) - Poly::constant(m, w[i]));
    }

    LocalizationResult result;
    std::optional<std::size_t> prev;
    for (unsigned n = g; n <= n_max; ++n) {
        const auto span = truncated_ideal_span(ideal, n);
        std::vector<Poly> shifted;
        if (n > 0) {
            for (const auto& f : truncated_ideal_span(ideal, n - 1)) {
                for (const auto& s : shifts) {
                    shifted.push_back(s * f);
                }
            }
        }
        const std::size_t d = span_rank(span, m, n) - span_rank(shifted, m, n);
        result.history.emplace_back(n, d);
        if (prev && n >= 2 * g && d > *prev) {
            result.monotonicity_violated = true;
        }
        result.dim = d;
        if (prev && *prev == d && n >= options.min_stable_level(g) + 1 && !result.stabilized_at) {
            result.stabilized_at = n;
            if (options.stop_at_stabilization) {
                break;
            }
        }
        prev = d;
    }
    if (!options.stop_at_stabilization && result.stabilized_at) {
        // Report the first stable value rather than the last sweep level.
        for (const auto& [n, d] : result.history) {
            if (n == *result.stabilized_at) {
                result.dim = d;
            }
        }
    }
    return result;
}

} // namespace hilbmod::ideals
