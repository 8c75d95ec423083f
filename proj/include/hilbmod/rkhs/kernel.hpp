#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hilbmod/algebra/matrix.hpp"
#include "hilbmod/ideals/ideal.hpp"
#include "hilbmod/rkhs/module.hpp"

namespace hilbmod::rkhs {

/// K restricted to the monomials z^a with a in a support closed under
/// multiplication by monomials, here the up-set of a list of generators.
struct DiagonalFiltered {
    std::vector<MultiIndex> generators;

    bool contains(const MultiIndex& a) const;
};

/// K(z,w) - k_A(z)^T K(A,A)^{-1} k_A(w): the kernel of the functions
/// vanishing at the correction points A.
struct RankOneCorrected {
    std::vector<std::vector<Rational>> points;
};

/// Normal-equation form on an independent polynomial basis b of the
/// truncated ideal: K_N(z, w) = b(z)^T G^{-1} b(w).
struct GramForm {
    std::vector<Poly> basis;
    Matrix gram;
    unsigned truncation = 0;
};

class SubmoduleKernel {
public:
    using Rep = std::variant<DiagonalFiltered, RankOneCorrected, GramForm>;

    SubmoduleKernel(WeightedPolydiscModule module, Rep rep);

    const WeightedPolydiscModule& module() const { return module_; }
    const Rep& rep() const { return rep_; }
    std::string kind() const;

    /// Exact when the ambient kernel has a rational closed form (or for
    /// GramForm, always); otherwise a partial sum with a tail bound.
    KernelValue evaluate(std::span<const Rational> z, std::span<const Rational> w, unsigned partial_degree = 30) const;

    /// DiagonalFiltered only: sum over the support with |a| <= n, exactly.
    Rational partial_sum(std::span<const Rational> z, std::span<const Rational> w, unsigned n) const;

private:
    WeightedPolydiscModule module_;
    Rep rep_;
    Matrix gram_inverse_; // GramForm only
};

/// Monomial ideals give DiagonalFiltered, vanishing-at-a-point ideals give
/// RankOneCorrected, the rest give GramForm at truncation n.
/// Throws TruncationError if n is below the largest generator degree and
/// ShapeError when the variable counts differ.
SubmoduleKernel submodule_kernel(const WeightedPolydiscModule& module, const ideals::IdealSpec& ideal, unsigned n);

/// GramForm regardless of the ideal's family.
SubmoduleKernel gram_form_kernel(const WeightedPolydiscModule& module, const ideals::IdealSpec& ideal, unsigned n);

/// Greedy maximal independent subset of {z^b p_j : deg <= n}, in the
/// deterministic order of truncated_ideal_span.
std::vector<Poly> independent_span(const ideals::IdealSpec& ideal, unsigned n);

/// K_N(z, w) of the GramForm kernel for N = first..last; the values are
/// non-decreasing in N at z = w, which is the only convergence diagnostic
/// offered.
std::vector<std::pair<unsigned, Rational>> gram_truncation_history(const WeightedPolydiscModule& module,
                                                                   const ideals::IdealSpec& ideal,
                                                                   std::span<const Rational> z,
                                                                   std::span<const Rational> w, unsigned first,
                                                                   unsigned last);

} // namespace hilbmod::rkhs
