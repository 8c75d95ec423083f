#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "hilbmod/algebra/multi_index.hpp"
#include "hilbmod/algebra/rational.hpp"

namespace hilbmod {

/// Truncated power series in m conjugate pairs of formal variables
/// w_1..w_m, wbar_1..wbar_m. Variable k < m is w_{k+1}; variable m + k is
/// wbar_{k+1}. Only coefficients of total degree <= degree() are kept and
/// zero coefficients are never stored.
///
/// wbar is an independent variable. Conjugation swaps w_k and wbar_k; since
/// coefficients are real rationals that is the whole involution.
class TruncSeries {
public:
    using TermMap = std::map<MultiIndex, Rational>;

    TruncSeries() = default;
    TruncSeries(std::size_t pairs, unsigned degree) : pairs_(pairs), degree_(degree) {}

    static TruncSeries constant(std::size_t pairs, unsigned degree, const Rational& c);
    static TruncSeries monomial(std::size_t pairs, unsigned degree, const MultiIndex& m, const Rational& c = Rational(1));
    /// w_{i+1} (0-based i).
    static TruncSeries w(std::size_t pairs, unsigned degree, std::size_t i);
    /// wbar_{i+1} (0-based i).
    static TruncSeries wbar(std::size_t pairs, unsigned degree, std::size_t i);

    std::size_t pairs() const { return pairs_; }
    std::size_t nvars() const { return 2 * pairs_; }
    unsigned degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const MultiIndex& m) const;
    Rational constant_term() const;
    /// Adds c to the coefficient of m; silently dropped when deg m > degree().
    void add_term(const MultiIndex& m, const Rational& c);

    /// Same coefficients, lower truncation degree.
    TruncSeries truncated(unsigned new_degree) const;
    /// Swap w_k <-> wbar_k.
    TruncSeries conjugate() const;
    bool is_hermitian() const { return conjugate() == *this; }

    /// d/dw_{i+1}. Exact through degree()-1, so the result carries that degree.
    TruncSeries d_w(std::size_t i) const;
    /// d/dwbar_{i+1}; same degree convention as d_w.
    TruncSeries d_wbar(std::size_t i) const;

    /// Substitute rational values for every variable (w and wbar separately).
    Rational evaluate(std::span<const Rational> values) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const Rational& c);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
    friend TruncSeries operator*(const Rational& c, TruncSeries a) { return a *= c; }
    TruncSeries operator-() const;
    /// Cauchy product truncated to degree(); same as series_mul.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    friend bool operator==(const TruncSeries& a, const TruncSeries& b)
    {
        return a.pairs_ == b.pairs_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// Human-readable sum, e.g. "1 + w1*wb1 - 1/2*w1^2*wb1^2".
    std::string str() const;

private:
    std::size_t pairs_ = 0;
    unsigned degree_ = 0;
    TermMap terms_;
};

/// Result of series_log: log s = log(constant) + series, where series has no
/// constant term. The constant is kept symbolically as its argument.
struct LogSeries {
    Rational log_argument;
    TruncSeries series;
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

/// Multiplicative inverse through degree D. Throws SingularityError on a zero
/// constant term.
TruncSeries series_inverse(const TruncSeries& s);

/// Mercator expansion of log(s / s(0)) plus the recorded constant s(0).
/// Throws DomainError unless s(0) > 0.
LogSeries series_log(const TruncSeries& s);

/// (1 + u)^r for rational r via the binomial series; requires s(0) == 1 and
/// computes s^r.
TruncSeries series_binomial_power(const TruncSeries& s, const Rational& r);

/// Coefficient of w_{i+1} wbar_{j+1}, i.e. d_i dbar_j s at the origin.
/// Throws InputError for out-of-range indices and TruncationError if D < 2.
Rational mixed_hessian(const TruncSeries& s, std::size_t i, std::size_t j);

} // namespace hilbmod
