#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilbmod/algebra/series_matrix.hpp"
#include "hilbmod/ideals/ideal.hpp"
#include "hilbmod/rkhs/module.hpp"

namespace hilbmod::frames {

/// Holomorphic frame of the kernel decomposition K_M(., u) = sum_j conj(p_j(u)) F^j(., u)
/// near a base point w0. Each F^j is stored by its z-coefficients: the
/// coefficient of z^a is a truncated series in v = u - w0 and its conjugate.
/// Only z-degrees up to z_degree are kept; each kept coefficient is exact
/// through the series degree.
struct FrameSeries {
    enum class Kind {
        Neighbourhood, // all directions around w0, from the splitting rule
        ZeroSet,       // u restricted to V: the constrained v_k are zero
    };
    using Coefficients = std::map<MultiIndex, TruncSeries>;

    explicit FrameSeries(rkhs::WeightedPolydiscModule m) : module(std::move(m)) {}

    Kind kind = Kind::Neighbourhood;
    rkhs::WeightedPolydiscModule module;
    /// i_k per variable: generator k is z_k^{i_k}; 0 marks a free variable.
    std::vector<unsigned> exponents;
    std::vector<std::size_t> generator_variables; // the k with i_k > 0, in order
    std::vector<Rational> base_point;
    unsigned degree = 0;
    unsigned z_degree = 0;
    std::vector<Coefficients> frames; // one per generator
    /// How the monomials of K_M were split among generators.
    std::string convention;

    std::size_t rank() const { return frames.size(); }
    std::size_t pairs() const { return module.dimension(); }
    /// Generator k as a polynomial in z.
    Poly generator(std::size_t j) const;
    /// a lies in the support of the ideal's kernel (some z_k^{i_k} divides z^a).
    bool in_support(const MultiIndex& a) const;
};

/// Splitting of K - (rank-one correction at 0) for <z_1, ..., z_t> at the
/// origin: the monomial c_a z^a conj(u)^a goes to generator k in proportion
/// lambda_k a_k / sum_j lambda_j a_j. Throws InputError when t > m or t == 0.
FrameSeries decompose_coordinate_ideal(const rkhs::WeightedPolydiscModule& module, std::size_t t, unsigned degree);

/// Same construction for <z_k^{i_k}>: c_a z^a conj(u)^a is split among the k
/// with a_k >= i_k, in proportion lambda_k a_k. Throws UnsupportedError unless
/// the ideal is generated by pure powers of distinct variables and the module
/// is weighted.
FrameSeries decompose_power_ideal(const rkhs::WeightedPolydiscModule& module, const ideals::IdealSpec& ideal,
                                  unsigned degree);

/// Closed-form frames on V for <z_k^{i_k}> at w* in V:
/// F_k(z, w) = (lambda_k)_{i_k}/i_k! z_k^{i_k} prod_{free i} (1 - z_i conj(w_i))^{-lambda_i},
/// expanded around w* in the free directions. z_degree = 0 picks
/// degree + max i_k. Throws InputError when w* is not on V or not in the polydisc.
FrameSeries frame_on_zero_set(const rkhs::WeightedPolydiscModule& module, const ideals::IdealSpec& ideal,
                              const std::vector<Rational>& w_star, unsigned degree, unsigned z_degree = 0);

/// sum_j conj(p_j(u)) F^j_a(u) - [a in support] c_a conj(u)^a for every kept a;
/// only nonzero entries are returned.
std::map<MultiIndex, TruncSeries> reconstruction_residual(const FrameSeries& frame);

/// Neighbourhood frame with the constrained directions set to zero, as a
/// ZeroSet frame.
FrameSeries restrict_to_zero_set(const FrameSeries& frame);

/// Taylor shift of a ZeroSet frame to another base point on V. Exact when no
/// kept coefficient reaches the truncation degree; throws TruncationError
/// otherwise and InputError when the new point is off V.
FrameSeries reexpand(const FrameSeries& frame, const std::vector<Rational>& new_base);

/// P_M M_i^* applied to F_k(., w0) minus conj(w0_i) F_k(., w0), on the
/// z-coefficients below z_degree. Empty when the eigenvector relation holds.
std::map<MultiIndex, Rational> eigenvector_defect(const FrameSeries& frame, std::size_t k, std::size_t i);

/// s(u) with every variable replaced: z_i -> conj(w0_i) + vbar_i, as a series.
TruncSeries conjugate_substitute(const Poly& p, const std::vector<Rational>& w0, unsigned degree);

} // namespace hilbmod::frames
