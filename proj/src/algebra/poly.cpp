#include "hilbmod/algebra/poly.hpp"

#include <cctype>

#include "hilbmod/algebra/errors.hpp"

namespace hilbmod {

namespace {

void require_same(const Poly& a, const Poly& b)
{
    if (a.nvars() != b.nvars()) {
        throw ShapeError("polynomial variable count mismatch");
    }
}

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t nvars, char prefix)
        : text_(text), nvars_(nvars), prefix_(prefix)
    {
    }

    Poly run()
    {
        skip_ws();
        if (pos_ == text_.size()) {
            fail("empty polynomial");
        }
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail(std::string("unexpected '") + text_[pos_] + "'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("polynomial '" + std::string(text_) + "' column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr()
    {
        Poly acc(nvars_);
        bool first = true;
        for (;;) {
            skip_ws();
            bool negate = false;
            if (accept('-')) {
                negate = true;
            } else if (accept('+')) {
            } else if (!first) {
                break;
            }
            Poly t = term();
            acc = negate ? acc - t : acc + t;
            first = false;
            skip_ws();
            if (pos_ == text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) {
                break;
            }
        }
        return acc;
    }

    Poly term()
    {
        Poly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Poly d = factor();
                if (d.degree() != 0 || d.is_zero()) {
                    pos_ = at;
                    fail("division only by a nonzero constant");
                }
                acc = acc * d.coefficient(MultiIndex(nvars_)).inverse();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly factor()
    {
        Poly base = atom();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected exponent");
            }
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
        }
        return base;
    }

    Poly atom()
    {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = pos_;
            while (pos_ < text_.size()
                   && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
                ++pos_;
            }
            return Poly::constant(nvars_, Rational::parse(text_.substr(start, pos_ - start)));
        }
        if (c == prefix_) {
            ++pos_;
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected variable index");
            }
            const auto k = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (k < 1 || k > nvars_) {
                pos_ = start;
                fail("variable index out of range 1.." + std::to_string(nvars_));
            }
            return Poly::variable(nvars_, k - 1);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t nvars_;
    char prefix_;
    std::size_t pos_ = 0;
};

} // namespace

Poly Poly::constant(std::size_t nvars, const Rational& c)
{
    Poly p(nvars);
    p.add_term(MultiIndex(nvars), c);
    return p;
}

Poly Poly::monomial(std::size_t nvars, const MultiIndex& m, const Rational& c)
{
    if (m.size() != nvars) {
        throw ShapeError("monomial variable count mismatch");
    }
    Poly p(nvars);
    p.add_term(m, c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i)
{
    return monomial(nvars, MultiIndex::unit(nvars, i));
}

Poly Poly::parse(std::string_view text, std::size_t nvars, char prefix)
{
    return PolyParser(text, nvars, prefix).run();
}

unsigned Poly::degree() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

Rational Poly::coefficient(const MultiIndex& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const MultiIndex& m, const Rational& c)
{
    if (c.is_zero()) {
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

Rational Poly::evaluate(std::span<const Rational> point) const
{
    if (point.size() != nvars_) {
        throw ShapeError("evaluation point has wrong dimension");
    }
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i]) {
                t *= point[i].pow(m[i]);
            }
        }
        acc += t;
    }
    return acc;
}

Poly Poly::operator+(const Poly& o) const
{
    require_same(*this, o);
    Poly r(*this);
    for (const auto& [m, c] : o.terms_) {
        r.add_term(m, c);
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const
{
    return *this + (-o);
}

Poly Poly::operator*(const Poly& o) const
{
    require_same(*this, o);
    Poly r(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            r.add_term(ma + mb, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rational& c) const
{
    Poly r(nvars_);
    for (const auto& [m, v] : terms_) {
        r.add_term(m, v * c);
    }
    return r;
}

Poly Poly::operator-() const
{
    return *this * Rational(-1);
}

Poly Poly::times_monomial(const MultiIndex& m) const
{
    Poly r(nvars_);
    for (const auto& [k, v] : terms_) {
        r.terms_.emplace(k + m, v);
    }
    return r;
}

Poly Poly::pow(unsigned e) const
{
    Poly r = constant(nvars_, Rational(1));
    for (unsigned i = 0; i < e; ++i) {
        r = r * *this;
    }
    return r;
}

std::string Poly::str(char prefix) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    // Highest degree first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
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
            mono += prefix + std::to_string(i + 1);
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

} // namespace hilbmod
