#include "hilbmod/rkhs/kernel.hpp"

#include <algorithm>
#include <map>

#include "hilbmod/algebra/errors.hpp"
#include "hilbmod/ideals/localization.hpp"

namespace hilbmod::rkhs {

namespace {

// Inclusion-exclusion beyond this many minimal generators switches to
// plain enumeration of the support.
constexpr std::size_t kMaxInclusionExclusion = 16;

std::vector<MultiIndex> minimal_generators(std::vector<MultiIndex> gens)
{
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<MultiIndex> out;
    for (const auto& g : gens) {
        if (std::none_of(out.begin(), out.end(), [&](const MultiIndex& h) { return h.divides(g); })) {
            out.push_back(g);
        }
    }
    return out;
}

MultiIndex lcm(const MultiIndex& a, const MultiIndex& b)
{
    std::vector<unsigned> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        e[i] = std::max(a[i], b[i]);
    }
    return MultiIndex(std::move(e));
}

// (lcm, sign) for every nonempty subset of the generators.
std::vector<std::pair<MultiIndex, int>> inclusion_exclusion_terms(const std::vector<MultiIndex>& gens)
{
    std::vector<std::pair<MultiIndex, int>> out;
    const std::size_t n = gens.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        MultiIndex l(gens[0].size());
        int sign = -1;
        for (std::size_t k = 0; k < n; ++k) {
            if (mask & (std::size_t{1} << k)) {
                l = lcm(l, gens[k]);
                sign = -sign;
            }
        }
        out.emplace_back(std::move(l), sign);
    }
    return out;
}

// One-variable coefficient (lambda)_n / n!.
Rational univariate_coeff(const Rational& lambda, unsigned n)
{
    return pochhammer(lambda, n) / factorial(n);
}

// sum over a >= g, |a| <= n of c_a x^a, for a weighted module.
Rational graded_tail_sum(const WeightedPolydiscModule& module, std::span<const Rational> x, const MultiIndex& g,
                         unsigned n)
{
    std::vector<Rational> acc(n + 1);
    acc[0] = Rational(1);
    for (std::size_t i = 0; i < module.dimension(); ++i) {
        std::vector<Rational> next(n + 1);
        Rational xp = x[i].pow(g[i]);
        for (unsigned k = g[i]; k <= n; ++k) {
            const Rational t = univariate_coeff(module.weights()[i], k) * xp;
            if (!t.is_zero()) {
                for (unsigned d = 0; d + k <= n; ++d) {
                    if (!acc[d].is_zero()) {
                        next[d + k] += acc[d] * t;
                    }
                }
            }
            xp *= x[i];
        }
        acc = std::move(next);
    }
    Rational s;
    for (const auto& v : acc) {
        s += v;
    }
    return s;
}

// sum over a >= g of c_a x^a in closed form; integer weights only.
Rational closed_tail_sum(const WeightedPolydiscModule& module, std::span<const Rational> x, const MultiIndex& g)
{
    Rational out(1);
    for (std::size_t i = 0; i < module.dimension(); ++i) {
        const Rational& l = module.weights()[i];
        Rational f = (Rational(1) - x[i]).pow(-l.num().get_si());
        Rational xp(1);
        for (unsigned k = 0; k < g[i]; ++k) {
            f -= univariate_coeff(l, k) * xp;
            xp *= x[i];
        }
        out *= f;
    }
    return out;
}

std::vector<Rational> products(std::span<const Rational> z, std::span<const Rational> w)
{
    std::vector<Rational> x(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        x[i] = z[i] * w[i];
    }
    return x;
}

std::vector<Rational> basis_values(const std::vector<Poly>& basis, std::span<const Rational> z)
{
    std::vector<Rational> v;
    v.reserve(basis.size());
    for (const auto& b : basis) {
        v.push_back(b.evaluate(z));
    }
    return v;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

} // namespace

bool DiagonalFiltered::contains(const MultiIndex& a) const
{
    return std::any_of(generators.begin(), generators.end(), [&](const MultiIndex& g) { return g.divides(a); });
}

SubmoduleKernel::SubmoduleKernel(WeightedPolydiscModule module, Rep rep)
    : module_(std::move(module)), rep_(std::move(rep))
{
    const std::size_t m = module_.dimension();
    if (auto* d = std::get_if<DiagonalFiltered>(&rep_)) {
        if (d->generators.empty()) {
            throw InputError("diagonal kernel needs at least one support generator");
        }
        for (const auto& g : d->generators) {
            if (g.size() != m) {
                throw ShapeError("support generator " + g.str() + " has the wrong length");
            }
        }
        d->generators = minimal_generators(d->generators);
    } else if (const auto* r = std::get_if<RankOneCorrected>(&rep_)) {
        if (r->points.empty()) {
            throw InputError("rank-one correction needs at least one point");
        }
        for (const auto& p : r->points) {
            module_.check_point(p);
        }
    } else {
        const auto& g = std::get<GramForm>(rep_);
        if (g.gram.rows() != g.basis.size() || !g.gram.is_square()) {
            throw ShapeError("Gram matrix does not match the basis");
        }
        if (!g.gram.is_symmetric() || !g.gram.is_positive_definite()) {
            throw DegeneracyError("Gram matrix is not positive definite; the basis is dependent");
        }
        gram_inverse_ = g.gram.inverse();
    }
}

std::string SubmoduleKernel::kind() const
{
    switch (rep_.index()) {
    case 0:
        return "diagonal-filtered";
    case 1:
        return "rank-one-corrected";
    default:
        return "gram-form";
    }
}

Rational SubmoduleKernel::partial_sum(std::span<const Rational> z, std::span<const Rational> w, unsigned n) const
{
    const auto* d = std::get_if<DiagonalFiltered>(&rep_);
    if (!d) {
        throw UnsupportedError("partial sums are defined for diagonal kernels only");
    }
    module_.check_point(z);
    module_.check_point(w);
    const auto x = products(z, w);
    if (module_.is_weighted() && d->generators.size() <= kMaxInclusionExclusion) {
        Rational s;
        for (const auto& [g, sign] : inclusion_exclusion_terms(d->generators)) {
            const Rational t = graded_tail_sum(module_, x, g, n);
            s += sign > 0 ? t : -t;
        }
        return s;
    }
    Rational s;
    for (const auto& a : monomials_up_to(module_.dimension(), n)) {
        if (!d->contains(a)) {
            continue;
        }
        Rational t = module_.coefficient(a);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i]) {
                t *= x[i].pow(a[i]);
            }
        }
        s += t;
    }
    return s;
}

KernelValue SubmoduleKernel::evaluate(std::span<const Rational> z, std::span<const Rational> w,
                                      unsigned partial_degree) const
{
    module_.check_point(z);
    module_.check_point(w);
    KernelValue out;
    if (const auto* d = std::get_if<DiagonalFiltered>(&rep_)) {
        const auto x = products(z, w);
        if (module_.has_rational_closed_form() && d->generators.size() <= kMaxInclusionExclusion) {
            for (const auto& [g, sign] : inclusion_exclusion_terms(d->generators)) {
                const Rational t = closed_tail_sum(module_, x, g);
                out.value += sign > 0 ? t : -t;
            }
            return out;
        }
        out.value = partial_sum(z, w, partial_degree);
        out.exact = false;
        out.partial_degree = partial_degree;
        out.remainder_bound = tail_bound(module_, x, partial_degree);
        return out;
    }
    if (const auto* r = std::get_if<RankOneCorrected>(&rep_)) {
        const std::size_t n = r->points.size();
        bool exact = true;
        auto k = [&](std::span<const Rational> a, std::span<const Rational> b) {
            const KernelValue v = module_.kernel(a, b, partial_degree);
            exact = exact && v.exact;
            return v.value;
        };
        Matrix g(n, n);
        std::vector<Rational> kz(n);
        std::vector<Rational> kw(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                g(i, j) = k(r->points[i], r->points[j]);
            }
            kz[i] = k(z, r->points[i]);
            kw[i] = k(r->points[i], w);
        }
        out.value = k(z, w) - dot(kz, g.solve(kw));
        if (!exact) {
            out.exact = false;
            out.partial_degree = partial_degree;
        }
        return out;
    }
    const auto& gf = std::get<GramForm>(rep_);
    out.value = dot(basis_values(gf.basis, z), gram_inverse_ * basis_values(gf.basis, w));
    return out;
}

std::vector<Poly> independent_span(const ideals::IdealSpec& ideal, unsigned n)
{
    const auto monos = monomials_up_to(ideal.nvars(), n);
    std::map<MultiIndex, std::size_t> column;
    for (std::size_t k = 0; k < monos.size(); ++k) {
        column.emplace(monos[k], k);
    }
    EchelonBasis echelon(monos.size());
    std::vector<Poly> out;
    for (auto& p : ideals::truncated_ideal_span(ideal, n)) {
        std::vector<Rational> v(monos.size());
        for (const auto& [a, c] : p.terms()) {
            v[column.at(a)] = c;
        }
        if (echelon.insert(std::move(v))) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

namespace {

void check_request(const WeightedPolydiscModule& module, const ideals::IdealSpec& ideal, unsigned n)
{
    if (ideal.nvars() != module.dimension()) {
        throw ShapeError("ideal in " + std::to_string(ideal.nvars()) + " variables on a module of dimension " +
                         std::to_string(module.dimension()));
    }
    if (n < ideal.max_degree()) {
        throw TruncationError("truncation degree " + std::to_string(n) + " is below the generator degree " +
                              std::to_string(ideal.max_degree()));
    }
}

} // namespace

SubmoduleKernel gram_form_kernel(const WeightedPolydiscModule& module, const ideals::IdealSpec& ideal, unsigned n)
{
    check_request(module, ideal, n);
    GramForm g;
    g.truncation = n;
    g.basis = independent_span(ideal, n);
    g.gram = Matrix(g.basis.size(), g.basis.size());
    for (std::size_t a = 0; a < g.basis.size(); ++a) {
        for (std::size_t b = a; b < g.basis.size(); ++b) {
            g.gram(a, b) = poly_inner(module, g.basis[a], g.basis[b]);
            g.gram(b, a) = g.gram(a, b);
        }
    }
    return SubmoduleKernel(module, std::move(g));
}

SubmoduleKernel submodule_kernel(const WeightedPolydiscModule& module, const ideals::IdealSpec& ideal, unsigned n)
{
    check_request(module, ideal, n);
    switch (ideal.family()) {
    case ideals::Family::Monomial:
        return SubmoduleKernel(module, DiagonalFiltered{ideal.monomial_exponents()});
    case ideals::Family::CoordinateVanishing:
        return SubmoduleKernel(module, RankOneCorrected{{*ideal.vanishing_point()}});
    default:
        return gram_form_kernel(module, ideal, n);
    }
}

std::vector<std::pair<unsigned, Rational>> gram_truncation_history(const WeightedPolydiscModule& module,
                                                                   const ideals::IdealSpec& ideal,
                                                                   std::span<const Rational> z,
                                                                   std::span<const Rational> w, unsigned first,
                                                                   unsigned last)
{
    std::vector<std::pair<unsigned, Rational>> out;
    for (unsigned n = std::max(first, ideal.max_degree()); n <= last; ++n) {
        out.emplace_back(n, gram_form_kernel(module, ideal, n).evaluate(z, w).value);
    }
    return out;
}

} // namespace hilbmod::rkhs
