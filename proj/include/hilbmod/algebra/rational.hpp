#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hilbmod {

/// Exact rational number backed by GMP. Always canonical: the denominator is
/// positive and shares no factor with the numerator.
class Rational {
public:
    Rational() = default;
    Rational(int v) : value_(v) {}
    Rational(long v) : value_(v) {}
    Rational(long long v);
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpq_class& q);

    /// Parses "7", "-3/2" or a terminating decimal such as "0.25".
    /// Throws InputError on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    mpz_class num() const { return value_.get_num(); }
    mpz_class den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;
    Rational pow(long exponent) const;

    long double to_long_double() const;
    double to_double() const { return static_cast<double>(to_long_double()); }

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Rising factorial a(a+1)...(a+n-1); 1 when n == 0.
Rational pochhammer(const Rational& a, unsigned n);

Rational factorial(unsigned n);

/// Generalised binomial coefficient r(r-1)...(r-n+1)/n!.
Rational binomial(const Rational& r, unsigned n);

} // namespace hilbmod
