#include "hilbmod/algebra/trunc_series.hpp"

#include <vector>

#include "hilbmod/algebra/errors.hpp"

namespace hilbmod {

namespace {

void require_same_shape(const TruncSeries& a, const TruncSeries& b)
{
    if (a.pairs() != b.pairs() || a.degree() != b.degree()) {
        throw ShapeError("series shape mismatch: (" + std::to_string(a.pairs()) + " pairs, D=" +
                         std::to_string(a.degree()) + ") vs (" + std::to_string(b.pairs()) + " pairs, D=" +
                         std::to_string(b.degree()) + ")");
    }
}

} // namespace

TruncSeries TruncSeries::constant(std::size_t pairs, unsigned degree, const Rational& c)
{
    TruncSeries s(pairs, degree);
    s.add_term(MultiIndex(2 * pairs), c);
    return s;
}

TruncSeries TruncSeries::monomial(std::size_t pairs, unsigned degree, const MultiIndex& m, const Rational& c)
{
    if (m.size() != 2 * pairs) {
        throw ShapeError("monomial variable count mismatch");
    }
    TruncSeries s(pairs, degree);
    s.add_term(m, c);
    return s;
}

TruncSeries TruncSeries::w(std::size_t pairs, unsigned degree, std::size_t i)
{
    if (i >= pairs) {
        throw InputError("variable index out of range");
    }
    return monomial(pairs, degree, MultiIndex::unit(2 * pairs, i));
}

TruncSeries TruncSeries::wbar(std::size_t pairs, unsigned degree, std::size_t i)
{
    if (i >= pairs) {
        throw InputError("variable index out of range");
    }
    return monomial(pairs, degree, MultiIndex::unit(2 * pairs, pairs + i));
}

Rational TruncSeries::coefficient(const MultiIndex& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncSeries::constant_term() const
{
    if (terms_.empty()) {
        return Rational(0);
    }
    const auto& [m, c] = *terms_.begin();
    return m.is_zero() ? c : Rational(0);
}

void TruncSeries::add_term(const MultiIndex& m, const Rational& c)
{
    if (c.is_zero() || m.degree() > degree_) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

TruncSeries TruncSeries::truncated(unsigned new_degree) const
{
    if (new_degree > degree_) {
        throw TruncationError("cannot raise truncation degree from " + std::to_string(degree_) + " to " +
                              std::to_string(new_degree));
    }
    TruncSeries r(pairs_, new_degree);
    for (const auto& [m, c] : terms_) {
        if (m.degree() > new_degree) {
            break;
        }
        r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
}

TruncSeries TruncSeries::conjugate() const
{
    TruncSeries r(pairs_, degree_);
    for (const auto& [m, c] : terms_) {
        std::vector<unsigned> e(2 * pairs_);
        for (std::size_t k = 0; k < pairs_; ++k) {
            e[k] = m[pairs_ + k];
            e[pairs_ + k] = m[k];
        }
        r.terms_.emplace(MultiIndex(std::move(e)), c);
    }
    return r;
}

namespace {

TruncSeries differentiate(const TruncSeries& s, std::size_t var)
{
    if (s.degree() == 0) {
        throw TruncationError("cannot differentiate a degree-0 truncation");
    }
    TruncSeries r(s.pairs(), s.degree() - 1);
    for (const auto& [m, c] : s.terms()) {
        const unsigned e = m[var];
        if (e == 0) {
            continue;
        }
        MultiIndex d = m;
        d.set(var, e - 1);
        r.add_term(d, c * Rational(static_cast<long>(e)));
    }
    return r;
}

} // namespace

TruncSeries TruncSeries::d_w(std::size_t i) const
{
    if (i >= pairs_) {
        throw InputError("variable index out of range");
    }
    return differentiate(*this, i);
}

TruncSeries TruncSeries::d_wbar(std::size_t i) const
{
    if (i >= pairs_) {
        throw InputError("variable index out of range");
    }
    return differentiate(*this, pairs_ + i);
}

Rational TruncSeries::evaluate(std::span<const Rational> values) const
{
    if (values.size() != 2 * pairs_) {
        throw ShapeError("series evaluation needs one value per variable");
    }
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i]) {
                t *= values[i].pow(m[i]);
            }
        }
        acc += t;
    }
    return acc;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o)
{
    require_same_shape(*this, o);
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o)
{
    require_same_shape(*this, o);
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) {
        v *= c;
    }
    return *this;
}

TruncSeries TruncSeries::operator-() const
{
    TruncSeries r(*this);
    r *= Rational(-1);
    return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
    require_same_shape(a, b);
    TruncSeries r(a.pairs_, a.degree_);
    for (const auto& [ma, ca] : a.terms_) {
        if (ma.degree() > a.degree_) {
            break;
        }
        const unsigned room = a.degree_ - ma.degree();
        for (const auto& [mb, cb] : b.terms_) {
            // Terms are graded, so everything after this is too high.
            if (mb.degree() > room) {
                break;
            }
            r.add_term(ma + mb, ca * cb);
        }
    }
    return r;
}

std::string TruncSeries::str() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = c.abs();
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!m[i]) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += (i < pairs_ ? "w" + std::to_string(i + 1) : "wb" + std::to_string(i - pairs_ + 1));
            if (m[i] > 1) {
                mono += "^" + std::to_string(m[i]);
            }
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == Rational(1)) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b)
{
    return a * b;
}

TruncSeries series_inverse(const TruncSeries& s)
{
    const Rational c = s.constant_term();
    if (c.is_zero()) {
        throw SingularityError("series inverse needs a nonzero constant term");
    }
    // 1/s = (1/c) * sum_n (-u)^n with u = s/c - 1, which has no constant term.
    TruncSeries neg_u = s * (-c.inverse());
    neg_u.add_term(MultiIndex(s.nvars()), Rational(1));
    TruncSeries acc = TruncSeries::constant(s.pairs(), s.degree(), Rational(1));
    TruncSeries power = acc;
    for (unsigned n = 1; n <= s.degree(); ++n) {
        power = power * neg_u;
        if (power.is_zero()) {
            break;
        }
        acc += power;
    }
    return acc * c.inverse();
}

LogSeries series_log(const TruncSeries& s)
{
    const Rational c = s.constant_term();
    if (c.sign() <= 0) {
        throw DomainError("series log needs a positive constant term, got " + c.str());
    }
    TruncSeries u = s * c.inverse();
    u.add_term(MultiIndex(s.nvars()), Rational(-1));
    TruncSeries acc(s.pairs(), s.degree());
    TruncSeries power = TruncSeries::constant(s.pairs(), s.degree(), Rational(1));
    for (unsigned n = 1; n <= s.degree(); ++n) {
        power = power * u;
        if (power.is_zero()) {
            break;
        }
        const Rational coef(n % 2 == 1 ? 1L : -1L, static_cast<long>(n));
        acc += power * coef;
    }
    return LogSeries{c, std::move(acc)};
}

TruncSeries series_binomial_power(const TruncSeries& s, const Rational& r)
{
    if (s.constant_term() != Rational(1)) {
        throw DomainError("binomial power needs constant term 1");
    }
    TruncSeries u = s;
    u.add_term(MultiIndex(s.nvars()), Rational(-1));
    TruncSeries acc = TruncSeries::constant(s.pairs(), s.degree(), Rational(1));
    TruncSeries power = acc;
    for (unsigned n = 1; n <= s.degree(); ++n) {
        power = power * u;
        if (power.is_zero()) {
            break;
        }
        acc += power * binomial(r, n);
    }
    return acc;
}

Rational mixed_hessian(const TruncSeries& s, std::size_t i, std::size_t j)
{
    if (i >= s.pairs() || j >= s.pairs()) {
        throw InputError("mixed_hessian index out of range");
    }
    if (s.degree() < 2) {
        throw TruncationError("mixed_hessian needs truncation degree >= 2");
    }
    MultiIndex m(s.nvars());
    m.set(i, 1);
    m.set(s.pairs() + j, 1);
    return s.coefficient(m);
}

} // namespace hilbmod
