#include "doctest.h"

#include <random>

#include "hilbmod/algebra/errors.hpp"
#include "hilbmod/ideals/localization.hpp"
#include "hilbmod/ideals/zero_set.hpp"
#include "test_support.hpp"

using namespace hilbmod;
using namespace hilbmod::ideals;

namespace {

std::vector<Rational> pt(std::initializer_list<Rational> v)
{
    return std::vector<Rational>(v);
}

} // namespace

TEST_CASE("family classification")
{
    CHECK(IdealSpec::parse({"z1^2"}, 2).family() == Family::Monomial);
    CHECK(IdealSpec::parse({"z1 - 1/2", "z2 + 1/3"}, 2).family() == Family::CoordinateVanishing);
    CHECK(IdealSpec::parse({"z1*z2", "z1 - z2"}, 3).family() == Family::Catalogued);
    CHECK(IdealSpec::parse({"2*z1 - 2*z2", "-z1*z2"}, 2).catalogue_name() == kProductDifference);
    CHECK(IdealSpec::parse({"z1 + z2^2"}, 2).family() == Family::General);
    CHECK_THROWS_AS(IdealSpec::parse({"z1 - z1"}, 2), InputError);
    CHECK_THROWS_AS(IdealSpec::from_generators({}), InputError);

    const auto a = IdealSpec::parse({"z2 - 1/4", "z1 + 1/2"}, 2).vanishing_point();
    REQUIRE(a);
    CHECK((*a)[0] == Rational(-1, 2));
    CHECK((*a)[1] == Rational(1, 4));
}

TEST_CASE("zero_set examples")
{
    const auto v1 = zero_set(IdealSpec::parse({"z1^3"}, 2));
    CHECK(v1.kind == ZeroSetDescriptor::Kind::CoordinateSubspace);
    CHECK(v1.coordinates == std::vector<std::size_t>{0});
    CHECK(v1.codim() == 1);

    const auto v2 = zero_set(IdealSpec::parse({"z1", "z2", "z3"}, 4));
    CHECK(v2.codim() == 3);

    for (std::size_t m = 2; m <= 4; ++m) {
        const auto v3 = zero_set(IdealSpec::parse({"z1*z2", "z1 - z2"}, m));
        CHECK(v3.coordinates == std::vector<std::size_t>{0, 1});
        CHECK(v3.codim() == 2);
    }

    const auto vp = zero_set(IdealSpec::parse({"z1 - 1/2", "z2 - 1/3"}, 2));
    CHECK(vp.kind == ZeroSetDescriptor::Kind::Point);
    CHECK(vp.contains(pt({Rational(1, 2), Rational(1, 3)})));

    CHECK_THROWS_AS(zero_set(IdealSpec::parse({"z1 + z2^2"}, 2)), UnsupportedError);
    CHECK_THROWS_AS(zero_set(IdealSpec::parse({"z1*z2"}, 2)), UnsupportedError);
}

TEST_CASE("minimality_certificate examples")
{
    CHECK(minimality_certificate(IdealSpec::parse({"z1*z2", "z1 - z2"}, 2)).verdict == Minimality::MinimalByCodim);
    CHECK(minimality_certificate(IdealSpec::parse({"z1", "z1"}, 2)).verdict == Minimality::HypothesisFails);

    const auto lin = IdealSpec::parse({"z1", "z2", "z1 + z2"}, 3);
    CHECK(zero_set(lin).codim() == 2);
    const auto r = minimality_certificate(lin);
    CHECK(r.verdict == Minimality::HypothesisFails);
    CHECK(r.generators == 3);
    CHECK(r.codim == 2);

    // General ideals need a user descriptor; the verdict is then conditional.
    const auto general = IdealSpec::parse({"z1 + z2^2"}, 2);
    CHECK_THROWS_AS(minimality_certificate(general), UnsupportedError);
    const auto user = ZeroSetDescriptor::user_parametrized(2, {{Rational(-1), Rational(1)}}, 1);
    const auto ur = minimality_certificate(general, user);
    CHECK(ur.verdict == Minimality::MinimalByCodim);
    CHECK(ur.conditional);
}

TEST_CASE("localization_dim examples")
{
    const auto pd = IdealSpec::parse({"z1*z2", "z1 - z2"}, 2);
    const auto at0 = localization_dim(pd, pt({0, 0}), 6);
    CHECK(at0.dim == 2);
    REQUIRE(at0.stabilized_at);
    CHECK(*at0.stabilized_at <= 6);

    const auto off = localization_dim(pd, pt({Rational(1, 3), Rational(1, 3)}), 6);
    CHECK(off.dim == 1);
    REQUIRE(off.stabilized_at);

    const auto sq = IdealSpec::parse({"z1^2"}, 2);
    for (const auto& w : {pt({0, 0}), pt({0, Rational(1, 2)}), pt({Rational(1, 5), Rational(-2, 3)})}) {
        CHECK(localization_dim(sq, w, 6).dim == 1);
    }

    CHECK_THROWS_AS(localization_dim(pd, pt({0, 0}), 1), TruncationError);
    CHECK_THROWS_AS(localization_dim(pd, pt({0}), 4), InputError);
}

TEST_CASE("coordinate power ideals localize to their codimension on V")
{
    const std::vector<std::vector<unsigned>> cases = {{1}, {2}, {1, 1}, {2, 1}, {1, 2, 1}};
    for (const auto& e : cases) {
        const std::size_t m = 3;
        const auto ideal = IdealSpec::coordinate_powers(m, e);
        std::vector<Rational> w(m);
        for (std::size_t i = e.size(); i < m; ++i) {
            w[i] = Rational(1, static_cast<long>(i + 2));
        }
        const auto r = localization_dim(ideal, w, 6);
        CHECK(r.dim == e.size());
        CHECK(r.dim == zero_set(ideal).codim());
    }
}

TEST_CASE("localization_dim is invariant under invertible generator changes")
{
    std::mt19937 rng(41);
    const std::vector<std::pair<std::string, std::string>> bases = {
        {"z1*z2", "z1 - z2"}, {"z1^2", "z2"}, {"z1", "z2^2 - z1"}};
    const std::vector<std::vector<Rational>> points = {
        {Rational(0), Rational(0)}, {Rational(1, 3), Rational(1, 3)}, {Rational(0), Rational(1, 2)}};
    for (const auto& [g1, g2] : bases) {
        const auto base = IdealSpec::parse({g1, g2}, 2);
        for (int trial = 0; trial < 4; ++trial) {
            const Matrix a = testing::random_invertible(rng, 2);
            const auto& p = base.generators();
            const auto mixed = IdealSpec::from_generators(
                {p[0] * a(0, 0) + p[1] * a(1, 0), p[0] * a(0, 1) + p[1] * a(1, 1)});
            for (const auto& w : points) {
                CHECK(localization_dim(mixed, w, 6).dim == localization_dim(base, w, 6).dim);
            }
        }
    }
}

TEST_CASE("d_N is non-increasing past twice the generator degree on catalogued families")
{
    const auto pd = IdealSpec::parse({"z1*z2", "z1 - z2"}, 2);
    for (const auto& w : {pt({0, 0}), pt({Rational(1, 3), Rational(1, 3)}), pt({Rational(1, 2), Rational(-1, 4)})}) {
        const auto r = localization_dim(pd, w, 7, {.stop_at_stabilization = false});
        CHECK_FALSE(r.monotonicity_violated);
        CHECK(r.history.size() == 6);
    }
}
