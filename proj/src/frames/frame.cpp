#include "hilbmod/frames/frame.hpp"

#include <algorithm>

#include "hilbmod/algebra/errors.hpp"

namespace hilbmod::frames {

namespace {

const char* kSplittingRule = "monomial c_a z^a conj(u)^a split among generators z_k^{i_k} dividing z^a "
                             "with weight lambda_k a_k / sum_j lambda_j a_j";

// (x + var)^n as a series, var being variable `index` of the series.
TruncSeries shifted_power(std::size_t pairs, unsigned degree, std::size_t index, const Rational& x, unsigned n)
{
    TruncSeries s(pairs, degree);
    for (unsigned j = 0; j <= n; ++j) {
        MultiIndex e(2 * pairs);
        e.set(index, j);
        s.add_term(e, binomial(Rational(static_cast<long>(n)), j) * x.pow(n - j));
    }
    return s;
}

// prod_i (w0_i + vbar_i)^{b_i}.
TruncSeries conj_shift_power(std::size_t pairs, unsigned degree, const std::vector<Rational>& w0, const MultiIndex& b)
{
    TruncSeries s = TruncSeries::constant(pairs, degree, Rational(1));
    for (std::size_t i = 0; i < pairs; ++i) {
        if (b[i]) {
            s = s * shifted_power(pairs, degree, pairs + i, w0[i], b[i]);
        }
    }
    return s;
}

std::vector<unsigned> power_exponents(const rkhs::WeightedPolydiscModule& module, const ideals::IdealSpec& ideal)
{
    if (!module.is_weighted()) {
        throw UnsupportedError("frames need a weighted polydisc module");
    }
    if (ideal.nvars() != module.dimension()) {
        throw ShapeError("ideal in " + std::to_string(ideal.nvars()) + " variables on a module of dimension " +
                         std::to_string(module.dimension()));
    }
    auto e = ideal.pure_power_exponents();
    if (!e) {
        throw UnsupportedError("frames are computed for ideals generated by powers of distinct coordinates, not " +
                               ideal.str());
    }
    return *e;
}

FrameSeries empty_frame(const rkhs::WeightedPolydiscModule& module, std::vector<unsigned> exponents,
                        std::vector<Rational> base, unsigned degree, unsigned z_degree)
{
    FrameSeries f(module);
    f.exponents = std::move(exponents);
    for (std::size_t k = 0; k < f.exponents.size(); ++k) {
        if (f.exponents[k]) {
            f.generator_variables.push_back(k);
        }
    }
    f.base_point = std::move(base);
    f.degree = degree;
    f.z_degree = z_degree;
    f.frames.resize(f.generator_variables.size());
    f.convention = kSplittingRule;
    return f;
}

unsigned max_exponent(const std::vector<unsigned>& e)
{
    return *std::max_element(e.begin(), e.end());
}

// Drops every term that involves a constrained direction.
TruncSeries restrict_series(const TruncSeries& s, const std::vector<unsigned>& exponents)
{
    const std::size_t m = s.pairs();
    TruncSeries out(m, s.degree());
    for (const auto& [mono, c] : s.terms()) {
        bool keep = true;
        for (std::size_t k = 0; k < m && keep; ++k) {
            keep = !exponents[k] || (mono[k] == 0 && mono[m + k] == 0);
        }
        if (keep) {
            out.add_term(mono, c);
        }
    }
    return out;
}

void check_on_zero_set(const FrameSeries& f, const std::vector<Rational>& w)
{
    if (w.size() != f.pairs()) {
        throw InputError("point has " + std::to_string(w.size()) + " coordinates, expected " +
                         std::to_string(f.pairs()));
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (f.exponents[i] && !w[i].is_zero()) {
            throw InputError("point is not on the zero set: coordinate " + std::to_string(i + 1) + " is " +
                             w[i].str());
        }
        if (w[i].abs() >= Rational(1)) {
            throw InputError("point is outside the polydisc: coordinate " + std::to_string(i + 1) + " is " +
                             w[i].str());
        }
    }
}

// s(v + delta) for a series in (v, vbar); delta applies to both v_i and vbar_i.
TruncSeries shift_series(const TruncSeries& s, const std::vector<Rational>& delta)
{
    const std::size_t m = s.pairs();
    TruncSeries out(m, s.degree());
    for (const auto& [mono, c] : s.terms()) {
        TruncSeries term = TruncSeries::constant(m, s.degree(), c);
        for (std::size_t v = 0; v < 2 * m; ++v) {
            if (mono[v]) {
                term = term * shifted_power(m, s.degree(), v, delta[v % m], mono[v]);
            }
        }
        out += term;
    }
    return out;
}

} // namespace

Poly FrameSeries::generator(std::size_t j) const
{
    const std::size_t k = generator_variables.at(j);
    return Poly::variable(pairs(), k).pow(exponents[k]);
}

bool FrameSeries::in_support(const MultiIndex& a) const
{
    return std::any_of(generator_variables.begin(), generator_variables.end(),
                       [&](std::size_t k) { return a[k] >= exponents[k]; });
}

FrameSeries decompose_power_ideal(const rkhs::WeightedPolydiscModule& module, const ideals::IdealSpec& ideal,
                                  unsigned degree)
{
    auto exps = power_exponents(module, ideal);
    const std::size_t m = module.dimension();
    const unsigned z_degree = degree + max_exponent(exps);
    FrameSeries f = empty_frame(module, std::move(exps), std::vector<Rational>(m), degree, z_degree);
    const auto& lambda = module.weights();
    for (const auto& a : monomials_up_to(m, z_degree)) {
        Rational total;
        for (std::size_t k : f.generator_variables) {
            if (a[k] >= f.exponents[k]) {
                total += lambda[k] * Rational(static_cast<long>(a[k]));
            }
        }
        if (total.is_zero()) {
            continue;
        }
        const Rational c = module.coefficient(a);
        for (std::size_t j = 0; j < f.generator_variables.size(); ++j) {
            const std::size_t k = f.generator_variables[j];
            if (a[k] < f.exponents[k] || a.degree() - f.exponents[k] > degree) {
                continue;
            }
            const Rational share = lambda[k] * Rational(static_cast<long>(a[k])) / total;
            std::vector<unsigned> e(2 * m, 0);
            for (std::size_t i = 0; i < m; ++i) {
                e[m + i] = a[i] - (i == k ? f.exponents[k] : 0);
            }
            f.frames[j].emplace(a, TruncSeries::monomial(m, degree, MultiIndex(std::move(e)), share * c));
        }
    }
    return f;
}

FrameSeries decompose_coordinate_ideal(const rkhs::WeightedPolydiscModule& module, std::size_t t, unsigned degree)
{
    if (t == 0 || t > module.dimension()) {
        throw InputError("coordinate ideal with " + std::to_string(t) + " generators in dimension " +
                         std::to_string(module.dimension()));
    }
    std::vector<unsigned> e(module.dimension(), 0);
    std::fill(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(t), 1u);
    return decompose_power_ideal(module, ideals::IdealSpec::coordinate_powers(module.dimension(), e), degree);
}

FrameSeries frame_on_zero_set(const rkhs::WeightedPolydiscModule& module, const ideals::IdealSpec& ideal,
                              const std::vector<Rational>& w_star, unsigned degree, unsigned z_degree)
{
    auto exps = power_exponents(module, ideal);
    const std::size_t m = module.dimension();
    if (z_degree == 0) {
        z_degree = degree + max_exponent(exps);
    }
    FrameSeries f = empty_frame(module, std::move(exps), w_star, degree, z_degree);
    f.kind = FrameSeries::Kind::ZeroSet;
    check_on_zero_set(f, w_star);
    for (const auto& a : monomials_up_to(m, z_degree)) {
        // Exactly one constrained coordinate may appear, at its exponent.
        std::optional<std::size_t> owner;
        bool ok = true;
        for (std::size_t j = 0; j < f.generator_variables.size() && ok; ++j) {
            const std::size_t k = f.generator_variables[j];
            if (a[k] == f.exponents[k] && !owner) {
                owner = j;
            } else if (a[k] != 0) {
                ok = false;
            }
        }
        if (!ok || !owner) {
            continue;
        }
        const std::size_t k = f.generator_variables[*owner];
        std::vector<unsigned> b = a.exponents();
        b[k] = 0;
        TruncSeries s = conj_shift_power(m, degree, w_star, MultiIndex(std::move(b))) * module.coefficient(a);
        if (!s.is_zero()) {
            f.frames[*owner].emplace(a, std::move(s));
        }
    }
    return f;
}

TruncSeries conjugate_substitute(const Poly& p, const std::vector<Rational>& w0, unsigned degree)
{
    const std::size_t m = p.nvars();
    TruncSeries s(m, degree);
    for (const auto& [a, c] : p.terms()) {
        s += conj_shift_power(m, degree, w0, a) * c;
    }
    return s;
}

std::map<MultiIndex, TruncSeries> reconstruction_residual(const FrameSeries& frame)
{
    const std::size_t m = frame.pairs();
    const bool on_v = frame.kind == FrameSeries::Kind::ZeroSet;
    std::vector<TruncSeries> conj_gens;
    for (std::size_t j = 0; j < frame.rank(); ++j) {
        conj_gens.push_back(conjugate_substitute(frame.generator(j), frame.base_point, frame.degree));
    }
    std::map<MultiIndex, TruncSeries> out;
    for (const auto& a : monomials_up_to(m, frame.z_degree)) {
        TruncSeries r(m, frame.degree);
        for (std::size_t j = 0; j < frame.rank(); ++j) {
            const auto it = frame.frames[j].find(a);
            if (it != frame.frames[j].end()) {
                r += conj_gens[j] * it->second;
            }
        }
        if (frame.in_support(a)) {
            r -= conj_shift_power(m, frame.degree, frame.base_point, a) * frame.module.coefficient(a);
        }
        if (on_v) {
            r = restrict_series(r, frame.exponents);
        }
        if (!r.is_zero()) {
            out.emplace(a, std::move(r));
        }
    }
    return out;
}

FrameSeries restrict_to_zero_set(const FrameSeries& frame)
{
    FrameSeries out = frame;
    out.kind = FrameSeries::Kind::ZeroSet;
    check_on_zero_set(out, frame.base_point);
    for (auto& coeffs : out.frames) {
        FrameSeries::Coefficients kept;
        for (const auto& [a, s] : coeffs) {
            auto r = restrict_series(s, frame.exponents);
            if (!r.is_zero()) {
                kept.emplace(a, std::move(r));
            }
        }
        coeffs = std::move(kept);
    }
    return out;
}

FrameSeries reexpand(const FrameSeries& frame, const std::vector<Rational>& new_base)
{
    if (frame.kind != FrameSeries::Kind::ZeroSet) {
        throw UnsupportedError("re-expansion is defined for zero-set frames");
    }
    check_on_zero_set(frame, new_base);
    unsigned min_exp = max_exponent(frame.exponents);
    for (std::size_t k : frame.generator_variables) {
        min_exp = std::min(min_exp, frame.exponents[k]);
    }
    // Coefficient a is a polynomial of degree |a| - i_k; all must be whole.
    if (frame.z_degree > frame.degree + min_exp) {
        throw TruncationError("frame coefficients are truncated; re-expansion needs z_degree <= degree + min i_k");
    }
    std::vector<Rational> delta(frame.pairs());
    for (std::size_t i = 0; i < delta.size(); ++i) {
        delta[i] = new_base[i] - frame.base_point[i];
    }
    FrameSeries out = frame;
    out.base_point = new_base;
    for (auto& coeffs : out.frames) {
        for (auto& [a, s] : coeffs) {
            s = shift_series(s, delta);
        }
    }
    return out;
}

std::map<MultiIndex, Rational> eigenvector_defect(const FrameSeries& frame, std::size_t k, std::size_t i)
{
    if (k >= frame.rank() || i >= frame.pairs()) {
        throw InputError("frame or coordinate index out of range");
    }
    std::map<MultiIndex, Rational> value; // F_k(., w0) by z-coefficient
    for (const auto& [a, s] : frame.frames[k]) {
        const Rational c = s.constant_term();
        if (!c.is_zero()) {
            value.emplace(a, c);
        }
    }
    std::map<MultiIndex, Rational> image;
    for (const auto& [a, c] : value) {
        if (a[i] == 0) {
            continue;
        }
        const MultiIndex b = a - MultiIndex::unit(a.size(), i);
        if (frame.in_support(b)) {
            image[b] += c * frame.module.coefficient(b) / frame.module.coefficient(a);
        }
    }
    std::map<MultiIndex, Rational> out;
    for (const auto& b : monomials_up_to(frame.pairs(), frame.z_degree - 1)) {
        const auto it = value.find(b);
        const Rational expected = it == value.end() ? Rational(0) : frame.base_point[i] * it->second;
        const auto jt = image.find(b);
        const Rational got = jt == image.end() ? Rational(0) : jt->second;
        if (got != expected) {
            out.emplace(b, got - expected);
        }
    }
    return out;
}

} // namespace hilbmod::frames
