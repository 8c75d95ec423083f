#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "hilbmod/algebra/multi_index.hpp"
#include "hilbmod/algebra/rational.hpp"

namespace hilbmod {

/// Sparse multivariate polynomial over the rationals in z1..zn.
/// Zero coefficients are never stored.
class Poly {
public:
    using TermMap = std::map<MultiIndex, Rational>;

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c);
    static Poly monomial(std::size_t nvars, const MultiIndex& m, const Rational& c = Rational(1));
    static Poly variable(std::size_t nvars, std::size_t i);

    /// Parses sums of products such as "z1*z2 - 3/2*z1^2 + (z2 - 1)^2".
    /// Variables are `<prefix><k>` with k in 1..nvars. Throws InputError
    /// with a column number on malformed input.
    static Poly parse(std::string_view text, std::size_t nvars, char prefix = 'z');

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    /// Total degree; 0 for the zero polynomial.
    unsigned degree() const;

    Rational coefficient(const MultiIndex& m) const;
    void add_term(const MultiIndex& m, const Rational& c);

    Rational evaluate(std::span<const Rational> point) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly operator-() const;
    Poly times_monomial(const MultiIndex& m) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

    std::string str(char prefix = 'z') const;

private:
    std::size_t nvars_ = 0;
    TermMap terms_;
};

} // namespace hilbmod
