#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilbmod/ideals/ideal.hpp"

namespace hilbmod::ideals {

/// Zero variety V(I) intersected with the polydisc, in one of the shapes the
/// library can describe exactly.
struct ZeroSetDescriptor {
    enum class Kind {
        CoordinateSubspace, // {z_i = 0 : i in coordinates}
        Point,              // the single point `point`
        UserParametrized,   // sample points on V plus a claimed codimension
    };

    Kind kind = Kind::CoordinateSubspace;
    std::size_t ambient_dim = 0;
    std::vector<std::size_t> coordinates; // 0-based, sorted
    std::vector<Rational> point;
    std::vector<std::vector<Rational>> samples;
    std::size_t claimed_codim = 0;

    static ZeroSetDescriptor coordinate_subspace(std::size_t ambient_dim, std::vector<std::size_t> coords);
    static ZeroSetDescriptor single_point(std::vector<Rational> p);
    /// Throws InputError if claimed_codim > ambient_dim.
    static ZeroSetDescriptor user_parametrized(std::size_t ambient_dim, std::vector<std::vector<Rational>> samples,
                                               std::size_t claimed_codim);

    std::size_t codim() const;
    /// Membership test; for UserParametrized only the sample points count.
    bool contains(std::span<const Rational> z) const;
    /// True when the codimension is a user claim the library did not verify.
    bool conditional() const { return kind == Kind::UserParametrized; }

    std::string str() const;
};

/// Exact zero set of Monomial (pure powers), CoordinateVanishing, Catalogued
/// and affine-linear ideals. Throws UnsupportedError otherwise: the caller has
/// to supply a UserParametrized descriptor.
ZeroSetDescriptor zero_set(const IdealSpec& ideal);

enum class Minimality {
    MinimalByCodim,  // codim V == number of generators
    HypothesisFails, // no claim either way
};

std::string to_string(Minimality m);

struct MinimalityReport {
    Minimality verdict = Minimality::HypothesisFails;
    std::size_t generators = 0;
    std::size_t codim = 0;
    bool conditional = false; // codim came from a user claim
};

/// Sufficient minimality test: a generating set of size t is minimal (and
/// stalk-minimal along V) when V has codimension t. Uses `user_zero_set`
/// when given, otherwise zero_set(ideal).
MinimalityReport minimality_certificate(const IdealSpec& ideal,
                                        const std::optional<ZeroSetDescriptor>& user_zero_set = std::nullopt);

} // namespace hilbmod::ideals
