// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "hilbmod/curvature/curvature.hpp"
#include "hilbmod/curvature/fd_oracle.hpp"
#include "hilbmod/ideals/localization.hpp"
#include "hilbmod/invariants/cubic.hpp"
#include "hilbmod/invariants/rigidity.hpp"
#include "test_support.hpp"

using namespace hilbmod;
using curvature::Complex;
using frames::MetricSeries;
using ideals::IdealSpec;
using rkhs::WeightedPolydiscModule;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Collects failures without stopping, so the detail line shows the first few.
class Tally {
public:
    void check(bool cond, const std::string& what)
    {
        ++checks_;
        if (!cond) {
            ++failures_;
            if (failures_ <= 3)
                first_ += (first_.empty() ? "" : "; ") + what;
        }
    }
    std::size_t checks() const { return checks_; }

    Outcome outcome(const std::string& summary) const
    {
        std::ostringstream os;
        os << summary << ", " << checks_ << " checks";
        if (failures_)
            os << ", " << failures_ << " failed: " << first_;
        return {failures_ == 0, os.str()};
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string first_;
};

std::string pair_str(const Rational& a, const Rational& b)
{
    return "(" + a.str() + ", " + b.str() + ")";
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x, int digits = 2)
{
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << x;
    return os.str();
}

IdealSpec powers(std::size_t m, const std::vector<unsigned>& e)
{
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < m; ++i)
        if (e[i])
            gens.push_back(Poly::variable(m, i).pow(e[i]));
    return IdealSpec::from_generators(gens);
}

// Hermitian t x t metric in two pairs: A A^* plus a random Hermitian
// perturbation vanishing at the base point.
MetricSeries random_metric(std::mt19937& rng, std::size_t t, unsigned d)
{
    SeriesMatrix h(t, 2, d);
    const Matrix a = testing::random_invertible(rng, t);
    const Matrix h0 = a * a.adjoint();
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i; j < t; ++j) {
            TruncSeries s = TruncSeries::constant(2, d, h0(i, j));
            const TruncSeries p = testing::random_series(rng, 2, d, 5) * Rational(1, 8);
            TruncSeries q = p - TruncSeries::constant(2, d, p.constant_term());
            if (i == j)
                q = q + q.conjugate();
            s += q;
            h.set(i, j, s);
            if (i != j)
                h.set(j, i, s.conjugate());
        }
    return MetricSeries{h, {0, 0}, {}};
}

long double relative_error(long double got, long double want)
{
    return want == 0 ? std::fabs(got) : std::fabs(got - want) / std::fabs(want);
}

std::vector<Complex> complex_point(const std::vector<Rational>& p)
{
    std::vector<Complex> z;
    for (const auto& x : p)
        z.emplace_back(x.to_long_double(), 0.0L);
    return z;
}

std::vector<long double> floats(const std::vector<Rational>& v)
{
    std::vector<long double> out;
    for (const auto& x : v)
        out.push_back(x.to_long_double());
    return out;
}

Outcome eq31_reproduction()
{
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<Rational> grid = {Rational(1, 2), 1, Rational(3, 2), 2, 3};
    Tally t;
    for (const auto& l : grid)
        for (const auto& mu : grid) {
            const auto f = frames::decompose_coordinate_ideal(WeightedPolydiscModule({l, mu}), 2, 6);
            const auto k = curvature::det_bundle_curvature(frames::grammian(f));
            const Rational s = (l + mu) * (l + mu);
            const Rational k1 = (l + 1) / 2 + l * mu * mu / s;
            const Rational k2 = (mu + 1) / 2 + l * l * mu / s;
            t.check(k(0, 0) == k1 && k(1, 1) == k2,
                    pair_str(l, mu) + " gave " + pair_str(k(0, 0), k(1, 1)) + ", expected " + pair_str(k1, k2));
        }
    const double secs = seconds_since(t0);
    t.check(secs < 10, "took " + fixed(secs) + " s");
    return t.outcome("25 weight pairs at D = 6 in " + fixed(secs) + " s");
}

Outcome single_generator_pair()
{
    Tally t;
    std::size_t differ = 0;
    for (long l = 1; l <= 2; ++l)
        for (long mu = 1; mu <= 2; ++mu)
            for (unsigned p = 1; p <= 3; ++p) {
                const auto f =
                    frames::decompose_power_ideal(WeightedPolydiscModule({l, mu}), IdealSpec::coordinate_powers(2, {p}), 4);
                const auto h = frames::grammian(f).h(0, 0);
                const Rational plain = curvature::plain_hessian(h, 1, 1);
                const Rational logc = curvature::line_curvature(h, 1, 1);
                const Rational want = Rational(mu) * pochhammer(Rational(l), p) / factorial(p);
                const std::string tag = "(" + std::to_string(l) + ", " + std::to_string(mu) + ", " + std::to_string(p) + ")";
                t.check(plain == want, tag + " plain Hessian " + plain.str() + " != " + want.str());
                t.check(logc == Rational(mu), tag + " log-Hessian " + logc.str() + " != " + std::to_string(mu));
                differ += plain != logc;
            }
    return t.outcome("12 cases; note: the Hessian of ||F1||^2 equals mu (lambda)_p / p! only without the log, "
                     "the log-Hessian is mu; the two readings differ in " +
                     std::to_string(differ) + " of 12 cases and both are reported");
}

Outcome rigidity_decisions()
{
    Tally t;
    const std::vector<Rational> s = {Rational(1, 2), 1, 2};
    for (unsigned p = 1; p <= 2; ++p)
        for (const auto& l : s)
            for (const auto& mu : s)
                for (const auto& l2 : s)
                    for (const auto& mu2 : s) {
                        const bool same = l == l2 && mu == mu2;
                        t.check(invariants::principal_rigidity(l, mu, p, l2, mu2) == same,
                                "principal p=" + std::to_string(p) + " " + pair_str(l, mu) + " vs " + pair_str(l2, mu2));
                    }
    const std::vector<std::vector<unsigned>> shapes = {{1, 0, 0}, {1, 2, 0}, {0, 2, 0}};
    std::vector<std::vector<Rational>> tuples;
    for (long a = 1; a <= 2; ++a)
        for (long b = 1; b <= 2; ++b)
            for (long c = 1; c <= 2; ++c)
                tuples.push_back({Rational(a), Rational(b), Rational(c)});
    tuples.push_back({Rational(1, 2), 1, Rational(3, 2)});
    for (const auto& e : shapes) {
        const auto ideal = powers(3, e);
        for (const auto& w1 : tuples)
            for (const auto& w2 : tuples)
                t.check(invariants::polydisc_rigidity(w1, ideal, w2) == (w1 == w2), "polydisc " + ideal.str());
    }
    return t.outcome("principal over 162 and polydisc over 243 weight/exponent combinations");
}

Outcome cubic_root_count()
{
    const auto t0 = std::chrono::steady_clock::now();
    Tally t;
    for (long k = 1; k <= 500; ++k) {
        const Rational a(k, 50);
        const auto rep = invariants::cubic_positive_roots(a);
        t.check(rep.positive_roots == 1, "alpha = " + a.str() + " has " + std::to_string(rep.positive_roots));
    }
    return t.outcome("alpha = k/50, k = 1..500, in " + fixed(seconds_since(t0)) + " s");
}

Outcome localization_dimensions()
{
    Tally t;
    const auto pd = IdealSpec::parse({"z1*z2", "z1 - z2"}, 2);
    const auto at0 = ideals::localization_dim(pd, std::vector<Rational>{0, 0}, 6);
    t.check(at0.dim == 2, "dim at origin " + std::to_string(at0.dim));
    t.check(at0.stabilized_at && *at0.stabilized_at <= 6, "no stabilization by N = 6 at the origin");
    const std::vector<std::vector<Rational>> off = {{Rational(1, 2), Rational(1, 3)},
                                                    {Rational(-1, 2), Rational(1, 4)},
                                                    {Rational(1, 3), 0},
                                                    {0, Rational(2, 3)},
                                                    {Rational(1, 5), Rational(1, 5)}};
    for (const auto& w : off) {
        const auto r = ideals::localization_dim(pd, w, 6);
        t.check(r.dim == 1, "dim at " + pair_str(w[0], w[1]) + " is " + std::to_string(r.dim));
        t.check(r.stabilized_at && *r.stabilized_at <= 6, "no stabilization by N = 6 at " + pair_str(w[0], w[1]));
    }
    const std::vector<std::vector<Rational>> pts = {
        {0, 0}, {0, Rational(1, 2)}, {Rational(1, 2), 0}, {Rational(1, 3), Rational(-1, 4)}};
    for (unsigned p = 1; p <= 3; ++p)
        for (const auto& w : pts) {
            const auto r = ideals::localization_dim(IdealSpec::coordinate_powers(2, {p}), w, 2 * p + 2);
            t.check(r.dim == 1, "<z1^" + std::to_string(p) + "> at " + pair_str(w[0], w[1]));
        }
    return t.outcome("<z1 z2, z1 - z2> at 6 points, <z1^p> for p = 1..3 at 4 points");
}

Outcome gauge_law()
{
    std::mt19937 rng(20240611);
    Tally t;
    std::uniform_int_distribution<long> num(1, 7);
    for (int trial = 0; trial < 20; ++trial) {
        const MetricSeries m =
            trial % 2 ? frames::grammian(frames::decompose_coordinate_ideal(
                            WeightedPolydiscModule({Rational(num(rng), 2), Rational(num(rng), 3)}), 2, 4))
                      : random_metric(rng, 2, 4);
        const curvature::GaugeMatrix a(testing::random_invertible(rng, 2));
        const auto k = curvature::curvature_matrix(m);
        const auto k2 = curvature::gauge_conjugate(k, a);
        t.check(curvature::curvature_matrix(curvature::transform_metric(m, a)) == k2,
                "gauge law, trial " + std::to_string(trial));
        const auto witness = curvature::gauge_equivalent(k, k2);
        t.check(witness && curvature::gauge_conjugate(k, *witness).blocks == k2.blocks,
                "no valid witness, trial " + std::to_string(trial));
    }
    return t.outcome("20 random invertible 2x2 gauges");
}

Outcome oracle_agreement()
{
    Tally t;
    const long double step = 1e-3L;
    const long double tol = 1e-6L;
    long double worst = 0;
    auto compare = [&](long double got, long double want, const std::string& what) {
        const long double err = relative_error(got, want);
        worst = std::max(worst, err);
        t.check(err <= tol, what + ": error " + std::to_string(static_cast<double>(err)));
    };

    // Determinant curvature of <z1, z2> at the origin over the weight grid.
    const std::vector<Rational> grid = {Rational(1, 2), 1, Rational(3, 2), 2, 3};
    for (const auto& l : grid)
        for (const auto& mu : grid) {
            const auto exact = curvature::det_bundle_curvature(
                frames::grammian(frames::decompose_coordinate_ideal(WeightedPolydiscModule({l, mu}), 2, 4)));
            const auto f = curvature::power_ideal_det_metric(floats({l, mu}), {1, 1});
            const auto origin = complex_point({0, 0});
            for (std::size_t i = 0; i < 2; ++i)
                compare(curvature::fd_oracle(f, origin, i, i, step).value.real(), exact(i, i).to_long_double(),
                        "<z1, z2> " + pair_str(l, mu));
        }

    // Mixed power ideal in three variables at the origin.
    {
        const std::vector<Rational> w = {2, Rational(1, 2), Rational(3, 2)};
        const auto exact = curvature::det_bundle_curvature(frames::grammian(
            frames::decompose_power_ideal(WeightedPolydiscModule(w), powers(3, {1, 2, 0}), 4)));
        const auto f = curvature::power_ideal_det_metric(floats(w), {1, 2, 0});
        for (std::size_t i = 0; i < 3; ++i)
            compare(curvature::fd_oracle(f, complex_point({0, 0, 0}), i, i, step).value.real(),
                    exact(i, i).to_long_double(), "<z1, z2^2>");
    }

    // Single generators on their zero set, at and away from the origin.
    for (long l = 1; l <= 2; ++l)
        for (long mu = 1; mu <= 2; ++mu)
            for (unsigned p = 1; p <= 3; ++p)
                for (const Rational& w2 : {Rational(0), Rational(3, 10), Rational(-1, 2)}) {
                    const std::vector<Rational> w0 = {0, w2};
                    const auto h = frames::grammian(frames::frame_on_zero_set(
                        WeightedPolydiscModule({l, mu}), IdealSpec::coordinate_powers(2, {p}), w0, 4));
                    const auto f = curvature::zero_set_det_metric(floats({Rational(l), Rational(mu)}), {p, 0});
                    compare(curvature::fd_oracle(f, complex_point(w0), 1, 1, step).value.real(),
                            curvature::line_curvature(h.h(0, 0), 1, 1).to_long_double(), "<z1^p> on V");
                }

    // Kernel diagonals of non-monomial ideals off the zero set.
    {
        const WeightedPolydiscModule module({2, Rational(3, 2)});
        const std::vector<std::pair<std::vector<std::string>, std::vector<Rational>>> cases = {
            {{"z1*z2", "z1 - z2"}, {Rational(1, 2), Rational(1, 3)}},
            {{"z1*z2", "z1 - z2"}, {Rational(-1, 5), Rational(2, 5)}},
            {{"z1 + z2^2"}, {Rational(-1, 4), Rational(1, 5)}},
        };
        for (const auto& [g, w] : cases) {
            const auto k = rkhs::submodule_kernel(module, IdealSpec::parse(g, 2), 3);
            const auto exact = curvature::kernel_diagonal_series(k, w, 4);
            const auto f = curvature::kernel_diagonal(k);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    const auto fd = curvature::fd_oracle(f, complex_point(w), i, j, step).value;
                    compare(fd.real(), curvature::line_curvature(exact, i, j).to_long_double(), "kernel diagonal");
                    t.check(std::fabs(fd.imag()) <= tol, "kernel diagonal imaginary part");
                }
        }
    }
    const std::size_t fd_checks = t.checks();

    // Diagonal filtering against the Gram form on monomial ideals.
    std::mt19937 rng(20240611);
    const std::vector<std::vector<std::string>> gens = {
        {"z1"}, {"z1^2", "z2"}, {"z1*z2"}, {"z1^2*z2", "z1*z2^3", "z2^4"}, {"z1*z3", "z2^2"}};
    const WeightedPolydiscModule module({Rational(1, 2), 2, Rational(5, 3)});
    for (const auto& g : gens) {
        const auto ideal = IdealSpec::parse(g, 3);
        const auto diag = rkhs::submodule_kernel(module, ideal, ideal.max_degree());
        t.check(diag.kind() == "diagonal-filtered", ideal.str() + " not diagonal-filtered");
        const unsigned n = ideal.max_degree() + 2;
        const auto gram = rkhs::gram_form_kernel(module, ideal, n);
        for (int s = 0; s < 10; ++s) {
            std::vector<Rational> z, w;
            for (int i = 0; i < 3; ++i) {
                z.push_back(Rational(static_cast<long>(rng() % 19) - 9, 10));
                w.push_back(Rational(static_cast<long>(rng() % 19) - 9, 10));
            }
            t.check(gram.evaluate(z, w).value == diag.partial_sum(z, w, n), ideal.str() + " diagonal vs Gram");
        }
    }
    std::ostringstream os;
    os << fd_checks << " finite-difference comparisons (worst relative error " << std::scientific
       << static_cast<double>(worst) << "), 5 monomial ideals at 10 points each";
    return t.outcome(os.str());
}

Outcome invariant_suites()
{
    std::mt19937 rng(20240611);
    Tally t;
    std::uniform_int_distribution<unsigned> expo(0, 2);
    std::uniform_int_distribution<long> num(1, 9);

    // Frames of random power ideals: reconstruction, Hermitian, positive definite.
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = trial % 3 == 0 ? 3 : 2;
        std::vector<unsigned> e(m);
        std::vector<Rational> w(m);
        for (std::size_t i = 0; i < m; ++i) {
            e[i] = expo(rng);
            w[i] = Rational(num(rng), 4);
        }
        if (std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; }))
            e[0] = 1;
        const WeightedPolydiscModule module(w);
        const auto ideal = powers(m, e);
        const auto f = frames::decompose_power_ideal(module, ideal, m == 3 ? 3 : 4);
        t.check(frames::reconstruction_residual(f).empty(), "residual " + ideal.str());
        const auto h = frames::grammian(f);
        t.check(h.h.is_hermitian(), "Hermitian " + ideal.str());
        t.check(h.h.constant_part().is_positive_definite(), "positive definite " + ideal.str());

        // Zero-set frame at a random point of V.
        std::vector<Rational> w0(m, 0);
        for (std::size_t i = 0; i < m; ++i)
            if (e[i] == 0)
                w0[i] = Rational(static_cast<long>(rng() % 15) - 7, 10);
        const auto z = frames::grammian(frames::frame_on_zero_set(module, ideal, w0, 3));
        t.check(z.h.is_hermitian() && z.h.constant_part().is_positive_definite(), "zero-set metric " + ideal.str());
    }

    // Log-factor invariance and the trace identity on random metrics.
    for (int trial = 0; trial < 30; ++trial) {
        const auto m1 = random_metric(rng, 1, 5);
        TruncSeries phi = TruncSeries::constant(2, 5, testing::random_nonzero_rational(rng));
        for (std::size_t i = 0; i < 2; ++i)
            phi += TruncSeries::w(2, 5, i) * testing::random_rational(rng);
        phi += TruncSeries::w(2, 5, 0) * TruncSeries::w(2, 5, 1) * testing::random_rational(rng);
        const TruncSeries mod = phi * phi.conjugate();
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                t.check(curvature::line_curvature(mod * m1.h(0, 0), i, j) ==
                            curvature::line_curvature(m1.h(0, 0), i, j),
                        "log-factor invariance");

        const auto m2 = random_metric(rng, 2, 4);
        const auto k = curvature::curvature_matrix(m2);
        const auto det = curvature::det_bundle_curvature(m2);
        t.check(k.hermitian_symmetric(), "curvature Hermitian symmetry");
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                const Matrix& b = k.block(i, j);
                t.check(b(0, 0) + b(1, 1) == det(i, j), "trace identity");
            }
    }
    return t.outcome("30 random power-ideal frames, 30 random metrics");
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"determinant curvature of <z1, z2> over the weight grid", eq31_reproduction},
        {"single generator: Hessians of ||F1||^2 with and without log", single_generator_pair},
        {"rigidity decisions", rigidity_decisions},
        {"cubic has exactly one positive root", cubic_root_count},
        {"localization dimensions", localization_dimensions},
        {"gauge law and witness recovery", gauge_law},
        {"finite-difference and kernel-construction oracles", oracle_agreement},
        {"frame, metric and curvature invariants on random inputs", invariant_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.ok;
        std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << " - " << criteria[i].first << " ("
                  << o.detail << ")" << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
