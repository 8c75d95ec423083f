#include "hilbmod/invariants/cubic.hpp"

#include <algorithm>

#include "hilbmod/algebra/errors.hpp"

namespace hilbmod::invariants {

namespace {

void trim(UniPoly& p)
{
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

UniPoly derivative(const UniPoly& p)
{
    UniPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) {
        d.push_back(p[k] * Rational(static_cast<long>(k)));
    }
    trim(d);
    return d;
}

UniPoly remainder(UniPoly a, const UniPoly& b)
{
    while (a.size() >= b.size() && !a.empty()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) {
            a[shift + k] -= f * b[k];
        }
        a.pop_back(); // leading term cancels exactly
        trim(a);
    }
    return a;
}

std::size_t sign_changes(const std::vector<UniPoly>& seq, const Rational& x)
{
    std::size_t changes = 0;
    int last = 0;
    for (const auto& p : seq) {
        const int s = evaluate(p, x).sign();
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

} // namespace

Rational evaluate(const UniPoly& p, const Rational& x)
{
    Rational v;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        v = v * x + *it;
    }
    return v;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p)
{
    UniPoly p0 = p;
    trim(p0);
    if (p0.empty()) {
        throw InputError("Sturm sequence of the zero polynomial");
    }
    std::vector<UniPoly> seq{p0};
    UniPoly p1 = derivative(p0);
    while (!p1.empty()) {
        seq.push_back(p1);
        UniPoly r = remainder(seq[seq.size() - 2], p1);
        for (auto& c : r) {
            c = -c;
        }
        p1 = std::move(r);
    }
    return seq;
}

std::size_t sturm_count(const std::vector<UniPoly>& seq, const Rational& a, const Rational& b)
{
    if (b <= a) {
        return 0;
    }
    return sign_changes(seq, a) - sign_changes(seq, b);
}

Rational cauchy_bound(const UniPoly& p)
{
    UniPoly q = p;
    trim(q);
    if (q.empty()) {
        throw InputError("root bound of the zero polynomial");
    }
    Rational m;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
        m = std::max(m, (q[k] / q.back()).abs());
    }
    return m + Rational(1);
}

std::vector<std::pair<Rational, Rational>> isolate_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                                                         const Rational& width)
{
    if (width.sign() <= 0) {
        throw InputError("isolation width must be positive");
    }
    const auto seq = sturm_sequence(p);
    std::vector<std::pair<Rational, Rational>> out;
    std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        const std::size_t n = sturm_count(seq, a, b);
        if (n == 0) {
            continue;
        }
        if (n == 1 && b - a <= width) {
            out.emplace_back(a, b);
            continue;
        }
        const Rational mid = (a + b) / Rational(2);
        // Upper half first so the lower half is processed next.
        stack.emplace_back(mid, b);
        stack.emplace_back(a, mid);
    }
    return out;
}

CubicReport cubic_positive_roots(const Rational& alpha)
{
    if (alpha.sign() <= 0) {
        throw InputError("alpha must be positive, got " + alpha.str());
    }
    CubicReport r;
    r.alpha = alpha;
    r.coefficients = {-alpha, Rational(3) - Rational(2) * alpha, Rational(2) - Rational(3) * alpha, Rational(1)};
    const auto seq = sturm_sequence(r.coefficients);
    const Rational bound = cauchy_bound(r.coefficients);
    r.positive_roots = sturm_count(seq, Rational(0), bound);
    r.intervals = isolate_roots(r.coefficients, Rational(0), bound, Rational(1, 1024));
    return r;
}

Rational curvature_ratio(const Rational& k)
{
    const Rational half(1, 2);
    const Rational s = (Rational(1) + k) * (Rational(1) + k);
    return k * (half + s.inverse()) / (half + k * k / s);
}

} // namespace hilbmod::invariants
