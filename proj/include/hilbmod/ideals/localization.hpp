#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hilbmod/ideals/ideal.hpp"

namespace hilbmod::ideals {

struct LocalizationResult {
    std::size_t dim = 0;
    /// First N with d_N == d_{N-1}; empty when the sweep ran out first.
    std::optional<unsigned> stabilized_at;
    /// (N, d_N) for every level computed.
    std::vector<std::pair<unsigned, std::size_t>> history;
    /// d_N increased somewhere at N >= 2 * max generator degree.
    bool monotonicity_violated = false;
};

struct LocalizationOptions {
    /// Stop at the first stabilization. When false the whole range up to
    /// n_max is swept (history and the monotonicity flag then cover it).
    bool stop_at_stabilization = true;
    /// Lowest level allowed to take part in a stabilization pair. Below
    /// 2 * max generator degree, mixed-degree generating sets can show a
    /// spurious plateau; 0 means that default.
    unsigned min_stable_degree = 0;

    unsigned min_stable_level(unsigned generator_degree) const
    {
        return min_stable_degree ? min_stable_degree : 2 * generator_degree;
    }
};

/// dim I / m_w I estimated as d_N = dim J_N - dim J'_N where
/// J_N = span{z^b p_j : deg <= N} and J'_N = span{(z_i - w_i) f : f in J_{N-1}},
/// for N from the largest generator degree up to n_max. Ranks are exact.
/// The value is reported once d_{N-1} == d_N with N - 1 at or above the
/// options' minimum stable level.
/// Throws TruncationError when n_max is below the largest generator degree.
LocalizationResult localization_dim(const IdealSpec& ideal, std::span<const Rational> w, unsigned n_max,
                                    LocalizationOptions options = {});

/// Spanning set {z^b p_j : deg(z^b p_j) <= n} in deterministic order
/// (generator, then b in graded-lex order).
std::vector<Poly> truncated_ideal_span(const IdealSpec& ideal, unsigned n);

} // namespace hilbmod::ideals
