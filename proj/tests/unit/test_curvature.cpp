#include "doctest.h"

#include <cmath>
#include <random>

#include "hilbmod/algebra/errors.hpp"
#include "hilbmod/curvature/curvature.hpp"
#include "hilbmod/curvature/fd_oracle.hpp"
#include "test_support.hpp"

using namespace hilbmod;
using namespace hilbmod::curvature;
using hilbmod::frames::MetricSeries;
using hilbmod::ideals::IdealSpec;
using hilbmod::rkhs::WeightedPolydiscModule;

namespace {

WeightedPolydiscModule weighted(std::vector<Rational> w)
{
    return WeightedPolydiscModule(std::move(w));
}

MetricSeries coordinate_metric(const Rational& l, const Rational& mu, unsigned d = 4)
{
    return frames::grammian(frames::decompose_coordinate_ideal(weighted({l, mu}), 2, d));
}

// Hermitian 2x2 series metric built from random data: A A^* scaled plus a
// random Hermitian perturbation vanishing at 0.
MetricSeries random_metric(std::mt19937& rng, std::size_t t, unsigned d)
{
    SeriesMatrix h(t, 2, d);
    const Matrix a = testing::random_invertible(rng, t);
    const Matrix h0 = a * a.adjoint();
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = i; j < t; ++j) {
            TruncSeries s = TruncSeries::constant(2, d, h0(i, j));
            const TruncSeries p = testing::random_series(rng, 2, d, 5) * Rational(1, 8);
            TruncSeries q = p - TruncSeries::constant(2, d, p.constant_term());
            if (i == j) {
                q = q + q.conjugate();
            }
            s += q;
            h.set(i, j, s);
            if (i != j) {
                h.set(j, i, s.conjugate());
            }
        }
    }
    return MetricSeries{h, {0, 0}, {}};
}

std::vector<Complex> cpoint(std::initializer_list<long double> re)
{
    std::vector<Complex> z;
    for (auto r : re) {
        z.emplace_back(r, 0);
    }
    return z;
}

long double rel_err(long double got, long double want)
{
    return std::fabs(got - want) / std::max(1.0L, std::fabs(want));
}

} // namespace

TEST_CASE("line_curvature examples")
{
    for (const auto& [l, mu, p] : std::vector<std::tuple<Rational, Rational, unsigned>>{
             {1, 1, 1}, {2, 1, 3}, {Rational(3, 2), Rational(5, 2), 2}, {1, 2, 1}}) {
        const auto ideal = IdealSpec::coordinate_powers(2, {p});
        const auto h = frames::grammian(frames::frame_on_zero_set(weighted({l, mu}), ideal, {0, 0}, 4)).h(0, 0);
        CHECK(line_curvature(h, 1, 1) == mu);
        CHECK(plain_hessian(h, 1, 1) == mu * pochhammer(l, p) / factorial(p));
    }
    CHECK(line_curvature(TruncSeries::constant(2, 4, Rational(7)), 0, 0) == Rational(0));
    CHECK_THROWS_AS(line_curvature(TruncSeries::constant(2, 4, Rational(-1)), 0, 0), DomainError);
}

TEST_CASE("line curvature ignores holomorphic factors")
{
    std::mt19937 rng(23);
    const auto phi = TruncSeries::constant(2, 6, Rational(1)) + TruncSeries::w(2, 6, 0) * Rational(1, 2);
    const auto mod = phi * phi.conjugate();
    for (int trial = 0; trial < 10; ++trial) {
        TruncSeries h = random_metric(rng, 1, 6).h(0, 0);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                CHECK(line_curvature(mod * h, i, j) == line_curvature(h, i, j));
            }
        }
    }
}

TEST_CASE("det_bundle_curvature examples")
{
    const auto k11 = det_bundle_curvature(coordinate_metric(1, 1));
    CHECK(k11(0, 0) == Rational(5, 4));
    CHECK(k11(1, 1) == Rational(5, 4));
    const auto k12 = det_bundle_curvature(coordinate_metric(1, 2));
    CHECK(k12(0, 0) == Rational(13, 9));
    CHECK(k12(1, 1) == Rational(31, 18));
    const auto k21 = det_bundle_curvature(coordinate_metric(2, 1));
    CHECK(k21(0, 0) == k12(1, 1));
    CHECK(k21(1, 1) == k12(0, 0));

    MetricSeries sing{SeriesMatrix(2, 2, 4), {0, 0}, {}};
    sing.h.set(0, 0, TruncSeries::constant(2, 4, Rational(1)));
    CHECK_THROWS_AS(det_bundle_curvature(sing), SingularityError);
}

TEST_CASE("curvature_matrix examples")
{
    std::mt19937 rng(29);
    // 1x1: the line curvature.
    for (int trial = 0; trial < 5; ++trial) {
        const auto m = random_metric(rng, 1, 4);
        const auto k = curvature_matrix(m);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                CHECK(k.block(i, j)(0, 0) == line_curvature(m.h(0, 0), i, j));
            }
        }
    }
    // Diagonal metric: diagonal blocks of log-curvatures.
    const auto zs = frames::grammian(frames::frame_on_zero_set(weighted({2, 3, Rational(1, 2)}),
                                                               IdealSpec::parse({"z1", "z2^2"}, 3), {0, 0, 0}, 4));
    const auto kd = curvature_matrix(zs);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(kd.block(i, j)(0, 1) == Rational(0));
            CHECK(kd.block(i, j)(1, 0) == Rational(0));
            for (std::size_t a = 0; a < 2; ++a) {
                CHECK(kd.block(i, j)(a, a) == line_curvature(zs.h(a, a), i, j));
            }
        }
    }
    // Trace identity on the coordinate metric and random metrics.
    std::vector<MetricSeries> metrics = {coordinate_metric(1, 2), coordinate_metric(Rational(1, 2), 3)};
    for (int trial = 0; trial < 5; ++trial) {
        metrics.push_back(random_metric(rng, 2, 4));
    }
    for (const auto& m : metrics) {
        const auto k = curvature_matrix(m);
        const auto det = det_bundle_curvature(m);
        CHECK(k.hermitian_symmetric());
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                const Matrix& b = k.block(i, j);
                CHECK(b(0, 0) + b(1, 1) == det(i, j));
            }
        }
    }
}

TEST_CASE("gauge law for constant frame changes")
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto m = trial % 2 ? coordinate_metric(Rational(trial, 2), 2) : random_metric(rng, 2, 4);
        const GaugeMatrix a(testing::random_invertible(rng, 2));
        const auto k = curvature_matrix(m);
        CHECK(curvature_matrix(transform_metric(m, a)) == gauge_conjugate(k, a));
        CHECK(gauge_conjugate(k, a).metric_at_base == transform_metric(m, a).h.constant_part());
    }
}

TEST_CASE("gauge_conjugate examples")
{
    std::mt19937 rng(37);
    const auto k = curvature_matrix(coordinate_metric(1, 2));
    CHECK(gauge_conjugate(k, GaugeMatrix(Matrix::identity(2))) == k);
    CHECK(gauge_conjugate(k, GaugeMatrix(Matrix::identity(2) * Rational(-3, 2))) == k);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix a = testing::random_invertible(rng, 2);
        CHECK(gauge_conjugate(gauge_conjugate(k, GaugeMatrix(a)), GaugeMatrix(a.inverse())) == k);
    }
    CHECK_THROWS_AS(GaugeMatrix(Matrix(2, 2)), SingularityError);
    CHECK_THROWS_AS(gauge_conjugate(k, GaugeMatrix(Matrix::identity(3))), ShapeError);
}

TEST_CASE("gauge_equivalent examples")
{
    std::mt19937 rng(41);
    const auto k = curvature_matrix(coordinate_metric(1, 2));
    for (int trial = 0; trial < 10; ++trial) {
        const GaugeMatrix a(testing::random_invertible(rng, 2));
        const auto k2 = gauge_conjugate(k, a);
        const auto witness = gauge_equivalent(k, k2);
        REQUIRE(witness);
        CHECK(gauge_conjugate(k, *witness).blocks == k2.blocks);
    }
    const auto self = gauge_equivalent(k, k);
    REQUIRE(self);
    CHECK(gauge_conjugate(k, *self).blocks == k.blocks);

    auto doubled = k;
    for (auto& b : doubled.blocks) {
        b = b * Rational(2);
    }
    CHECK_FALSE(gauge_equivalent(k, doubled));
}

TEST_CASE("fd_oracle examples")
{
    // Hardy <z1> on V at w2 = 0.3: 1 / (1 - 0.09)^2.
    const auto f = zero_set_det_metric({1, 1}, {1, 0});
    const auto e = fd_oracle(f, cpoint({0, 0.3L}), 1, 1, 1e-3L);
    CHECK(rel_err(e.value.real(), 1 / (0.91L * 0.91L)) < 1e-6L);
    CHECK(e.step == 1e-3L);
    const auto exact = frames::grammian(frames::frame_on_zero_set(WeightedPolydiscModule::hardy(2),
                                                                  IdealSpec::parse({"z1"}, 2), {0, Rational(3, 10)}, 4));
    CHECK(line_curvature(exact.h(0, 0), 1, 1) == Rational(10000, 8281));

    // (1,2) determinant bundle at 0.
    const auto det = power_ideal_det_metric({1, 2}, {1, 1});
    CHECK(rel_err(fd_oracle(det, cpoint({0, 0}), 0, 0, 1e-3L).value.real(), 13.0L / 9) < 1e-6L);
    CHECK(rel_err(fd_oracle(det, cpoint({0, 0}), 1, 1, 1e-3L).value.real(), 31.0L / 18) < 1e-6L);
    CHECK(std::abs(fd_oracle(det, cpoint({0, 0}), 0, 1, 1e-3L).value) < 1e-6L);

    CHECK(std::abs(fd_oracle(constant_metric(3.5L), cpoint({0.2L, -0.1L}), 0, 1, 1e-3L).value) < 1e-10L);
    CHECK(std::abs(fd_oracle(constant_metric(3.5L), cpoint({0.2L, -0.1L}), 1, 1, 1e-3L).value) < 1e-10L);

    CHECK_THROWS_AS(fd_oracle(f, cpoint({0, 0.999L}), 1, 1, 1e-3L), DomainError);
    CHECK_THROWS_AS(fd_oracle(f, cpoint({0, 0}), 1, 1, 0), InputError);
}

TEST_CASE("fd_oracle agrees with the exact pipeline on kernel diagonals")
{
    const auto module = weighted({2, Rational(3, 2)});
    const std::vector<std::pair<std::vector<std::string>, std::vector<Rational>>> cases = {
        {{"z1*z2", "z1 - z2"}, {Rational(1, 2), Rational(1, 3)}},
        {{"z1 + z2^2"}, {Rational(-1, 4), Rational(1, 5)}},
    };
    for (const auto& [g, w] : cases) {
        const auto k = rkhs::submodule_kernel(module, IdealSpec::parse(g, 2), 3);
        const auto exact = kernel_diagonal_series(k, w, 4);
        const auto f = kernel_diagonal(k);
        const std::vector<Complex> p{Complex(w[0].to_long_double()), Complex(w[1].to_long_double())};
        CHECK(rel_err(f(p), exact.constant_term().to_long_double()) < 1e-15L);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                const auto fd = fd_oracle(f, p, i, j, 1e-3L).value;
                const long double want = line_curvature(exact, i, j).to_long_double();
                CHECK(rel_err(fd.real(), want) < 1e-6L);
                CHECK(std::fabs(fd.imag()) < 1e-6L);
            }
        }
    }
    // Diagonal kernel at the origin, and the floating point-vanishing kernel.
    const auto mono = rkhs::submodule_kernel(module, IdealSpec::parse({"z1^2", "z2"}, 2), 2);
    const auto exact = kernel_diagonal_series(mono, {0, 0}, 6);
    CHECK(exact.coefficient(MultiIndex{0, 1, 0, 1}) == Rational(3, 2));
    const auto fm = kernel_diagonal(mono);
    CHECK(rel_err(fm(cpoint({0.3L, 0.2L})), mono.evaluate(std::vector<Rational>{Rational(3, 10), Rational(1, 5)},
                                                         std::vector<Rational>{Rational(3, 10), Rational(1, 5)}, 60)
                                                 .value.to_long_double()) < 1e-12L);
    const auto pt = rkhs::submodule_kernel(weighted({1, 2}), IdealSpec::parse({"z1 - 1/2", "z2"}, 2), 1);
    const std::vector<Rational> q{Rational(1, 5), Rational(-1, 3)};
    CHECK(rel_err(kernel_diagonal(pt)(cpoint({0.2L, -1.0L / 3})), pt.evaluate(q, q).value.to_long_double()) <
          1e-15L);
}
