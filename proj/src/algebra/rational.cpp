#include "hilbmod/algebra/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "hilbmod/algebra/errors.hpp"

namespace hilbmod {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

Rational::Rational(long long v)
{
    value_ = mpq_class(mpz_class(std::to_string(v)));
}

Rational::Rational(long num, long den)
{
    if (den == 0) {
        throw SingularityError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) {
        throw SingularityError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q)
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
        s = trim(s);
    }
    Rational out;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const auto n = trim(s.substr(0, slash));
        const auto d = trim(s.substr(slash + 1));
        if (!all_digits(n) || !all_digits(d)) {
            throw InputError("malformed rational '" + std::string(text) + "'");
        }
        const mpz_class den{std::string(d)};
        if (den == 0) {
            throw InputError("zero denominator in '" + std::string(text) + "'");
        }
        out = Rational(mpz_class(std::string(n)), den);
    } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        const auto ip = s.substr(0, dot);
        const auto fp = s.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
            throw InputError("malformed decimal '" + std::string(text) + "'");
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        const mpz_class whole(ip.empty() ? std::string("0") : std::string(ip));
        const mpz_class frac(fp.empty() ? std::string("0") : std::string(fp));
        out = Rational(whole * scale + frac, scale);
    } else {
        if (!all_digits(s)) {
            throw InputError("malformed rational '" + std::string(text) + "'");
        }
        out = Rational(mpz_class(std::string(s)), mpz_class(1));
    }
    return negative ? -out : out;
}

Rational Rational::abs() const
{
    return sign() < 0 ? -*this : *this;
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw SingularityError("inverse of zero rational");
    }
    return Rational(mpq_class(value_.get_den(), value_.get_num()));
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    mpz_class n;
    mpz_class d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

long double Rational::to_long_double() const
{
    // Scale to an integer quotient with ~70 significant bits, convert that in
    // two double-sized pieces, then undo the scaling.
    const mpz_class& n = value_.get_num();
    const mpz_class& d = value_.get_den();
    if (n == 0) {
        return 0.0L;
    }
    const long shift = 70 - (static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2))
                             - static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)));
    mpz_class q;
    if (shift >= 0) {
        mpz_class scaled;
        mpz_mul_2exp(scaled.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(shift));
        mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), d.get_mpz_t());
    } else {
        mpz_class scaled;
        mpz_mul_2exp(scaled.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(-shift));
        mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), scaled.get_mpz_t());
    }
    const double hi = q.get_d();
    const mpz_class rest = q - mpz_class(hi);
    const long double mant = static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
    return std::ldexp(mant, static_cast<int>(-shift));
}

std::string Rational::str() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) {
        throw SingularityError("division by zero rational");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r;
    r.value_ = -value_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

Rational pochhammer(const Rational& a, unsigned n)
{
    Rational out(1);
    for (unsigned k = 0; k < n; ++k) {
        out *= a + Rational(static_cast<long>(k));
    }
    return out;
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f, mpz_class(1));
}

Rational binomial(const Rational& r, unsigned n)
{
    Rational out(1);
    for (unsigned k = 0; k < n; ++k) {
        out *= (r - Rational(static_cast<long>(k))) / Rational(static_cast<long>(k + 1));
    }
    return out;
}

} // namespace hilbmod
