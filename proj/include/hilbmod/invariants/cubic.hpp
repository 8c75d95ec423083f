#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hilbmod/algebra/rational.hpp"

namespace hilbmod::invariants {

/// Dense univariate polynomial, coefficient k multiplies x^k. No trailing zeros.
using UniPoly = std::vector<Rational>;

Rational evaluate(const UniPoly& p, const Rational& x);

/// p, p', then negated remainders until a constant. Throws InputError for the
/// zero polynomial.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Number of distinct real roots in (a, b], exactly.
std::size_t sturm_count(const std::vector<UniPoly>& seq, const Rational& a, const Rational& b);

/// Bound B with every real root in [-B, B] (Cauchy).
Rational cauchy_bound(const UniPoly& p);

/// Disjoint intervals (a, b], each holding exactly one distinct root in
/// (lo, hi], refined by bisection until b - a <= width.
std::vector<std::pair<Rational, Rational>> isolate_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                                                         const Rational& width);

/// x^3 - (3a - 2) x^2 - (2a - 3) x - a and its positive roots.
struct CubicReport {
    Rational alpha;
    UniPoly coefficients; // low degree first
    std::size_t positive_roots = 0; // distinct
    std::vector<std::pair<Rational, Rational>> intervals;
};

/// Throws InputError unless alpha > 0.
CubicReport cubic_positive_roots(const Rational& alpha);

/// The ratio of the two determinant curvatures as a function of k = lambda / mu:
/// k (1/2 + 1/(1+k)^2) / (1/2 + k^2/(1+k)^2). k is a root of the cubic at this alpha.
Rational curvature_ratio(const Rational& k);

} // namespace hilbmod::invariants
