#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilbmod/algebra/poly.hpp"

namespace hilbmod::ideals {

enum class Family {
    Monomial,            // every generator is a single monomial
    CoordinateVanishing, // <z1 - a1, ..., zm - am> with a != 0
    Catalogued,          // a named ideal with a known zero variety
    General,
};

std::string to_string(Family f);

/// Generating set of a polynomial ideal in z1..zm, tagged with the family
/// the rest of the library dispatches on.
class IdealSpec {
public:
    /// Classifies the generators. Throws InputError on an empty list, a zero
    /// generator, or mismatched variable counts.
    static IdealSpec from_generators(std::vector<Poly> generators);
    /// Parses each generator string in `nvars` variables, then classifies.
    static IdealSpec parse(const std::vector<std::string>& generators, std::size_t nvars);

    /// <z_k^{i_k} : k = 1..t>, the ideals used for the polydisc examples.
    static IdealSpec coordinate_powers(std::size_t nvars, const std::vector<unsigned>& exponents);

    std::size_t nvars() const { return nvars_; }
    std::size_t size() const { return generators_.size(); }
    const std::vector<Poly>& generators() const { return generators_; }
    Family family() const { return family_; }
    /// Catalogue entry name; empty unless family() == Catalogued.
    const std::string& catalogue_name() const { return catalogue_; }
    unsigned max_degree() const;

    /// Leading exponents of a Monomial ideal, in generator order.
    std::vector<MultiIndex> monomial_exponents() const;
    /// For Monomial ideals whose generators are pure powers z_k^{i_k} of
    /// distinct variables: i_k per variable (0 = variable unconstrained).
    std::optional<std::vector<unsigned>> pure_power_exponents() const;
    /// The point a of a CoordinateVanishing ideal.
    std::optional<std::vector<Rational>> vanishing_point() const;

    std::string str() const;

private:
    std::size_t nvars_ = 0;
    std::vector<Poly> generators_;
    Family family_ = Family::General;
    std::string catalogue_;
};

/// Name of the catalogued ideal <z1 z2, z1 - z2>.
inline constexpr const char* kProductDifference = "product-difference";

} // namespace hilbmod::ideals
