#include "hilbmod/ideals/ideal.hpp"

#include <algorithm>

#include "hilbmod/algebra/errors.hpp"

namespace hilbmod::ideals {

namespace {

// p == c * (z_i - a) for some nonzero c; returns (i, a).
std::optional<std::pair<std::size_t, Rational>> as_shifted_coordinate(const Poly& p)
{
    if (p.degree() != 1) {
        return std::nullopt;
    }
    std::optional<std::size_t> var;
    Rational lead;
    Rational constant;
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() == 0) {
            constant = c;
            continue;
        }
        if (var) {
            return std::nullopt;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i]) {
                var = i;
            }
        }
        lead = c;
    }
    return std::make_pair(*var, -constant / lead);
}

// Generators equal <z1 z2, z1 - z2> up to order and nonzero scalars.
bool is_product_difference(const std::vector<Poly>& gens, std::size_t nvars)
{
    if (gens.size() != 2 || nvars < 2) {
        return false;
    }
    Poly prod = Poly::monomial(nvars, [&] {
        MultiIndex m(nvars);
        m.set(0, 1);
        m.set(1, 1);
        return m;
    }());
    Poly diff = Poly::variable(nvars, 0) - Poly::variable(nvars, 1);
    auto proportional = [](const Poly& a, const Poly& b) {
        const auto& [m, ca] = *a.terms().begin();
        const Rational cb = b.coefficient(m);
        return a.term_count() == b.term_count() && !cb.is_zero() && a == b * (ca / cb);
    };
    return (proportional(gens[0], prod) && proportional(gens[1], diff))
        || (proportional(gens[0], diff) && proportional(gens[1], prod));
}

} // namespace

std::string to_string(Family f)
{
    switch (f) {
    case Family::Monomial:
        return "monomial";
    case Family::CoordinateVanishing:
        return "coordinate-vanishing";
    case Family::Catalogued:
        return "catalogued";
    case Family::General:
        return "general";
    }
    return "general";
}

IdealSpec IdealSpec::from_generators(std::vector<Poly> generators)
{
    if (generators.empty()) {
        throw InputError("ideal needs at least one generator");
    }
    IdealSpec spec;
    spec.nvars_ = generators.front().nvars();
    for (const auto& g : generators) {
        if (g.is_zero()) {
            throw InputError("ideal generator is the zero polynomial");
        }
        if (g.nvars() != spec.nvars_) {
            throw InputError("ideal generators use different variable counts");
        }
    }
    spec.generators_ = std::move(generators);

    const auto& gens = spec.generators_;
    if (std::all_of(gens.begin(), gens.end(), [](const Poly& g) { return g.is_monomial(); })) {
        spec.family_ = Family::Monomial;
        return spec;
    }
    if (is_product_difference(gens, spec.nvars_)) {
        spec.family_ = Family::Catalogued;
        spec.catalogue_ = kProductDifference;
        return spec;
    }
    if (gens.size() == spec.nvars_) {
        std::vector<bool> seen(spec.nvars_, false);
        bool ok = true;
        for (const auto& g : gens) {
            const auto sc = as_shifted_coordinate(g);
            if (!sc || seen[sc->first]) {
                ok = false;
                break;
            }
            seen[sc->first] = true;
        }
        if (ok) {
            spec.family_ = Family::CoordinateVanishing;
            return spec;
        }
    }
    spec.family_ = Family::General;
    return spec;
}

IdealSpec IdealSpec::parse(const std::vector<std::string>& generators, std::size_t nvars)
{
    std::vector<Poly> polys;
    polys.reserve(generators.size());
    for (const auto& g : generators) {
        polys.push_back(Poly::parse(g, nvars));
    }
    return from_generators(std::move(polys));
}

IdealSpec IdealSpec::coordinate_powers(std::size_t nvars, const std::vector<unsigned>& exponents)
{
    if (exponents.empty() || exponents.size() > nvars) {
        throw InputError("coordinate power ideal needs 1..nvars exponents");
    }
    std::vector<Poly> gens;
    for (std::size_t k = 0; k < exponents.size(); ++k) {
        if (exponents[k] == 0) {
            throw InputError("coordinate power exponents must be positive");
        }
        MultiIndex m(nvars);
        m.set(k, exponents[k]);
        gens.push_back(Poly::monomial(nvars, m));
    }
    return from_generators(std::move(gens));
}

unsigned IdealSpec::max_degree() const
{
    unsigned d = 0;
    for (const auto& g : generators_) {
        d = std::max(d, g.degree());
    }
    return d;
}

std::vector<MultiIndex> IdealSpec::monomial_exponents() const
{
    if (family_ != Family::Monomial) {
        throw UnsupportedError("monomial exponents requested for a " + to_string(family_) + " ideal");
    }
    std::vector<MultiIndex> out;
    for (const auto& g : generators_) {
        out.push_back(g.terms().begin()->first);
    }
    return out;
}

std::optional<std::vector<unsigned>> IdealSpec::pure_power_exponents() const
{
    if (family_ != Family::Monomial) {
        return std::nullopt;
    }
    std::vector<unsigned> out(nvars_, 0);
    for (const auto& m : monomial_exponents()) {
        std::size_t support = 0;
        std::size_t var = 0;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i]) {
                ++support;
                var = i;
            }
        }
        if (support != 1) {
            return std::nullopt;
        }
        // Repeated powers of one variable generate the smallest one.
        out[var] = out[var] == 0 ? m[var] : std::min(out[var], m[var]);
    }
    return out;
}

std::optional<std::vector<Rational>> IdealSpec::vanishing_point() const
{
    if (family_ != Family::CoordinateVanishing) {
        return std::nullopt;
    }
    std::vector<Rational> a(nvars_);
    for (const auto& g : generators_) {
        const auto sc = as_shifted_coordinate(g);
        a[sc->first] = sc->second;
    }
    return a;
}

std::string IdealSpec::str() const
{
    std::string s = "<";
    for (std::size_t k = 0; k < generators_.size(); ++k) {
        s += (k ? ", " : "") + generators_[k].str();
    }
    return s + ">";
}

} // namespace hilbmod::ideals
