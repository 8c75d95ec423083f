#include "hilbmod/ideals/zero_set.hpp"

#include <algorithm>

#include "hilbmod/algebra/errors.hpp"
#include "hilbmod/algebra/matrix.hpp"

namespace hilbmod::ideals {

ZeroSetDescriptor ZeroSetDescriptor::coordinate_subspace(std::size_t ambient_dim, std::vector<std::size_t> coords)
{
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    ZeroSetDescriptor d;
    d.kind = Kind::CoordinateSubspace;
    d.ambient_dim = ambient_dim;
    d.coordinates = std::move(coords);
    return d;
}

ZeroSetDescriptor ZeroSetDescriptor::single_point(std::vector<Rational> p)
{
    ZeroSetDescriptor d;
    d.kind = Kind::Point;
    d.ambient_dim = p.size();
    d.point = std::move(p);
    return d;
}

ZeroSetDescriptor ZeroSetDescriptor::user_parametrized(std::size_t ambient_dim,
                                                       std::vector<std::vector<Rational>> samples,
                                                       std::size_t claimed_codim)
{
    if (claimed_codim > ambient_dim) {
        throw InputError("claimed codimension exceeds the ambient dimension");
    }
    for (const auto& s : samples) {
        if (s.size() != ambient_dim) {
            throw InputError("zero-set sample point has the wrong dimension");
        }
    }
    ZeroSetDescriptor d;
    d.kind = Kind::UserParametrized;
    d.ambient_dim = ambient_dim;
    d.samples = std::move(samples);
    d.claimed_codim = claimed_codim;
    return d;
}

std::size_t ZeroSetDescriptor::codim() const
{
    switch (kind) {
    case Kind::CoordinateSubspace:
        return coordinates.size();
    case Kind::Point:
        return ambient_dim;
    case Kind::UserParametrized:
        return claimed_codim;
    }
    return 0;
}

bool ZeroSetDescriptor::contains(std::span<const Rational> z) const
{
    if (z.size() != ambient_dim) {
        throw ShapeError("point dimension does not match the zero set");
    }
    switch (kind) {
    case Kind::CoordinateSubspace:
        return std::all_of(coordinates.begin(), coordinates.end(), [&](std::size_t i) { return z[i].is_zero(); });
    case Kind::Point:
        return std::equal(point.begin(), point.end(), z.begin());
    case Kind::UserParametrized:
        return std::any_of(samples.begin(), samples.end(),
                           [&](const auto& s) { return std::equal(s.begin(), s.end(), z.begin()); });
    }
    return false;
}

std::string ZeroSetDescriptor::str() const
{
    switch (kind) {
    case Kind::CoordinateSubspace: {
        std::string s = "{";
        for (std::size_t k = 0; k < coordinates.size(); ++k) {
            s += (k ? ", " : "") + std::string("z") + std::to_string(coordinates[k] + 1) + " = 0";
        }
        return s + "}";
    }
    case Kind::Point: {
        std::string s = "{(";
        for (std::size_t k = 0; k < point.size(); ++k) {
            s += (k ? ", " : "") + point[k].str();
        }
        return s + ")}";
    }
    case Kind::UserParametrized:
        return "user-parametrized (" + std::to_string(samples.size()) + " samples, codim " +
               std::to_string(claimed_codim) + " claimed)";
    }
    return "";
}

namespace {

// Zero set of an ideal whose generators all have degree <= 1.
ZeroSetDescriptor affine_zero_set(const IdealSpec& ideal)
{
    const std::size_t m = ideal.nvars();
    Matrix aug(ideal.size(), m + 1);
    for (std::size_t r = 0; r < ideal.size(); ++r) {
        for (const auto& [mono, c] : ideal.generators()[r].terms()) {
            if (mono.degree() == 0) {
                aug(r, m) = -c;
                continue;
            }
            for (std::size_t i = 0; i < m; ++i) {
                if (mono[i]) {
                    aug(r, i) = c;
                }
            }
        }
    }
    std::vector<std::size_t> pivots;
    const Matrix red = aug.rref(&pivots);
    if (!pivots.empty() && pivots.back() == m) {
        throw UnsupportedError("ideal " + ideal.str() + " has an empty zero set");
    }
    // Coordinate type: every reduced row pins a single coordinate.
    std::vector<std::size_t> coords;
    std::vector<Rational> values;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            if (c != pivots[r] && !red(r, c).is_zero()) {
                throw UnsupportedError("zero set of " + ideal.str() + " is not a coordinate subspace");
            }
        }
        coords.push_back(pivots[r]);
        values.push_back(red(r, m));
    }
    const bool through_origin = std::all_of(values.begin(), values.end(), [](const Rational& v) { return v.is_zero(); });
    if (through_origin) {
        return ZeroSetDescriptor::coordinate_subspace(m, coords);
    }
    if (coords.size() == m) {
        std::vector<Rational> p(m);
        for (std::size_t k = 0; k < coords.size(); ++k) {
            p[coords[k]] = values[k];
        }
        return ZeroSetDescriptor::single_point(std::move(p));
    }
    throw UnsupportedError("zero set of " + ideal.str() + " is an affine subspace off the origin");
}

} // namespace

ZeroSetDescriptor zero_set(const IdealSpec& ideal)
{
    switch (ideal.family()) {
    case Family::Monomial: {
        const auto powers = ideal.pure_power_exponents();
        if (!powers) {
            throw UnsupportedError("zero set of " + ideal.str() +
                                   " is a union of coordinate subspaces; supply a user-parametrized descriptor");
        }
        std::vector<std::size_t> coords;
        for (std::size_t i = 0; i < powers->size(); ++i) {
            if ((*powers)[i]) {
                coords.push_back(i);
            }
        }
        return ZeroSetDescriptor::coordinate_subspace(ideal.nvars(), coords);
    }
    case Family::CoordinateVanishing:
        return ZeroSetDescriptor::single_point(*ideal.vanishing_point());
    case Family::Catalogued:
        // z1 z2 = 0 and z1 = z2 force z1 = z2 = 0.
        return ZeroSetDescriptor::coordinate_subspace(ideal.nvars(), {0, 1});
    case Family::General:
        if (ideal.max_degree() <= 1) {
            return affine_zero_set(ideal);
        }
        break;
    }
    throw UnsupportedError("zero set of general ideal " + ideal.str() +
                           " is not computed; supply a user-parametrized descriptor");
}

std::string to_string(Minimality m)
{
    return m == Minimality::MinimalByCodim ? "minimal-by-codim" : "hypothesis-fails";
}

MinimalityReport minimality_certificate(const IdealSpec& ideal, const std::optional<ZeroSetDescriptor>& user_zero_set)
{
    const ZeroSetDescriptor v = user_zero_set ? *user_zero_set : zero_set(ideal);
    MinimalityReport r;
    r.generators = ideal.size();
    r.codim = v.codim();
    r.conditional = v.conditional();
    r.verdict = r.codim == r.generators ? Minimality::MinimalByCodim : Minimality::HypothesisFails;
    return r;
}

} // namespace hilbmod::ideals
