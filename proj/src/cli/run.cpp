#include "hilbmod/cli/run.hpp"

#include <algorithm>

#include "hilbmod/curvature/curvature.hpp"
#include "hilbmod/curvature/fd_oracle.hpp"
#include "hilbmod/frames/metric.hpp"
#include "hilbmod/ideals/localization.hpp"
#include "hilbmod/ideals/zero_set.hpp"
#include "hilbmod/invariants/cubic.hpp"
#include "hilbmod/invariants/rigidity.hpp"

namespace hilbmod::cli {

namespace {

std::string join(const std::vector<Rational>& v)
{
    std::string s;
    for (const auto& x : v)
        s += (s.empty() ? "" : ", ") + x.str();
    return s;
}

std::string tuple(const std::vector<Rational>& v)
{
    return "(" + join(v) + ")";
}

std::string idx(std::size_t i)
{
    return std::to_string(i + 1);
}

std::vector<std::pair<std::string, std::string>> echo(const JobConfig& job)
{
    std::vector<std::pair<std::string, std::string>> in;
    if (!job.weights.empty())
        in.emplace_back("weights", join(job.weights));
    if (!job.generators.empty()) {
        std::string g;
        for (const auto& s : job.generators)
            g += (g.empty() ? "" : ", ") + s;
        in.emplace_back("generators", g);
    }
    if (job.family)
        in.emplace_back("family", *job.family);
    if (job.point)
        in.emplace_back("point", tuple(*job.point));
    if (job.second_point)
        in.emplace_back("second_point", tuple(*job.second_point));
    if (job.task != "cubic") {
        in.emplace_back("trunc_degree", std::to_string(job.trunc_degree));
        in.emplace_back("ideal_degree", std::to_string(job.ideal_degree));
    }
    if (job.compare_weights)
        in.emplace_back("compare_weights", join(*job.compare_weights));
    if (job.alpha)
        in.emplace_back("alpha", job.alpha->str());
    return in;
}

ideals::IdealSpec load_ideal(const JobConfig& job)
{
    auto ideal = ideals::IdealSpec::parse(job.generators, job.weights.size());
    if (job.family && *job.family != ideals::to_string(ideal.family()))
        throw ConfigError("family '" + *job.family + "' does not match the generators, which form a " +
                          ideals::to_string(ideal.family()) + " ideal");
    return ideal;
}

std::vector<Rational> point_or_origin(const JobConfig& job)
{
    return job.point ? *job.point : std::vector<Rational>(job.weights.size(), Rational(0));
}

bool is_origin(const std::vector<Rational>& p)
{
    return std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.is_zero(); });
}

void add_curvature_convention(Report& r)
{
    const curvature::Convention c;
    r.convention = {{"sign", c.sign}, {"index_order", c.index_order}};
}

// Frame of a pure-power ideal at the base point: the neighbourhood frame at
// the origin, the closed-form frame on V elsewhere.
frames::FrameSeries power_frame(const JobConfig& job, const rkhs::WeightedPolydiscModule& module,
                                const ideals::IdealSpec& ideal, const std::vector<Rational>& w0, Report& r)
{
    if (!ideal.pure_power_exponents())
        throw UnsupportedError("frames are implemented for ideals generated by powers of distinct variables; got " +
                               ideal.str());
    if (is_origin(w0)) {
        r.diagnostics.push_back("frame: neighbourhood expansion at the origin");
        return frames::decompose_power_ideal(module, ideal, job.trunc_degree);
    }
    r.diagnostics.push_back("frame: closed form on the zero set, expanded at " + tuple(w0));
    return frames::frame_on_zero_set(module, ideal, w0, job.trunc_degree);
}

void run_kernel(const JobConfig& job, Report& r)
{
    const rkhs::WeightedPolydiscModule module(job.weights);
    const auto z = *job.point;
    const auto w = job.second_point ? *job.second_point : z;
    module.check_point(z);
    module.check_point(w);
    if (job.generators.empty()) {
        const auto v = module.kernel(z, w, job.trunc_degree ? job.trunc_degree : 30);
        r.add(v.exact ? "K(z, w)" : "K(z, w) partial sum", v.value);
        if (!v.exact) {
            r.diagnostics.push_back("partial sum through degree " + std::to_string(v.partial_degree));
            if (v.remainder_bound)
                r.add("tail bound", Float{static_cast<double>(*v.remainder_bound), 0});
        }
        r.convention = {{"kernel", "sum_a c_a z^a conj(w)^a, c_a = prod_i (lambda_i)_{a_i} / a_i!"}};
        return;
    }
    const auto ideal = load_ideal(job);
    const auto k = rkhs::submodule_kernel(module, ideal, job.ideal_degree);
    const auto v = k.evaluate(z, w, std::max(job.trunc_degree, 30u));
    r.add("construction", k.kind());
    r.add(v.exact ? "K_[I](z, w)" : "K_[I](z, w) partial sum", v.value);
    if (!v.exact) {
        r.diagnostics.push_back("partial sum through degree " + std::to_string(v.partial_degree));
        if (v.remainder_bound)
            r.add("tail bound", Float{static_cast<double>(*v.remainder_bound), 0});
    }
    if (k.kind() == "gram-form") {
        r.diagnostics.push_back("Gram form truncated at ideal degree " + std::to_string(job.ideal_degree) +
                                "; values increase with the truncation at z = w");
        const unsigned first = std::max(ideal.max_degree(), job.ideal_degree >= 2 ? job.ideal_degree - 2 : 0u);
        for (const auto& [n, val] : rkhs::gram_truncation_history(module, ideal, z, w, first, job.ideal_degree))
            r.diagnostics.push_back("N = " + std::to_string(n) + ": " + val.str());
    }
    r.convention = {{"kernel", "sum_a c_a z^a conj(w)^a restricted to the closure of the ideal"}};
}

void run_decompose(const JobConfig& job, Report& r)
{
    const rkhs::WeightedPolydiscModule module(job.weights);
    const auto ideal = load_ideal(job);
    const auto w0 = point_or_origin(job);
    const auto f = power_frame(job, module, ideal, w0, r);
    r.add("rank", Rational(static_cast<long>(f.rank())));
    const auto residual = frames::reconstruction_residual(f);
    r.add("reconstruction residual is zero", residual.empty());
    // Value of each frame vector's z-coefficients at the base point, for the
    // lowest z-degrees.
    unsigned top = 0;
    for (auto i : f.exponents)
        top = std::max(top, i);
    for (std::size_t k = 0; k < f.rank(); ++k)
        for (const auto& [a, s] : f.frames[k]) {
            if (a.degree() > top + 1)
                continue;
            const Rational c = s.constant_term();
            if (!c.is_zero())
                r.add("F" + idx(k) + "[" + a.str() + "](w0)", c);
        }
    r.diagnostics.push_back("series degree " + std::to_string(f.degree) + ", z-degree " +
                            std::to_string(f.z_degree));
    r.convention = {{"splitting", f.convention}};
}

void run_metric(const JobConfig& job, Report& r)
{
    const rkhs::WeightedPolydiscModule module(job.weights);
    const auto ideal = load_ideal(job);
    const auto w0 = point_or_origin(job);
    const auto f = power_frame(job, module, ideal, w0, r);
    const auto h = frames::grammian(f);
    const Matrix h0 = h.h.constant_part();
    for (std::size_t i = 0; i < h.rank(); ++i)
        for (std::size_t j = 0; j < h.rank(); ++j)
            r.add("H" + idx(i) + idx(j) + "(w0)", h0(i, j));
    r.add("det H(w0)", h0.determinant());
    r.add("hermitian", h.h.is_hermitian());
    r.add("positive definite at w0", h0.is_positive_definite());
    if (!h.scale.is_one()) {
        r.add("scale", h.scale.str());
        r.diagnostics.push_back("the metric is scale * H; curvature does not depend on the scale");
    }
    r.diagnostics.push_back("series degree " + std::to_string(h.degree()));
    r.convention = {{"metric", "H_ab = <F^a, F^b>"}};
}

void run_curvature(const JobConfig& job, Report& r)
{
    const rkhs::WeightedPolydiscModule module(job.weights);
    const auto ideal = load_ideal(job);
    const auto w0 = point_or_origin(job);
    const std::size_t m = job.weights.size();
    add_curvature_convention(r);

    const auto exps = ideal.pure_power_exponents();
    const bool on_v = ideal.pure_power_exponents() && [&] {
        for (std::size_t k = 0; k < m; ++k)
            if ((*exps)[k] > 0 && !w0[k].is_zero())
                return false;
        return true;
    }();

    if (!exps || !on_v) {
        // Off the zero set the module is a line bundle with metric K(w, w).
        const auto k = rkhs::gram_form_kernel(module, ideal, job.ideal_degree);
        const auto diag = curvature::kernel_diagonal_series(k, w0, 2);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                r.add("d" + idx(i) + " dbar" + idx(j) + " log K_N(w, w)", curvature::line_curvature(diag, i, j));
        r.diagnostics.push_back("kernel in Gram form at ideal degree " + std::to_string(job.ideal_degree) +
                                ", a truncation of the submodule kernel");
        return;
    }

    const auto f = power_frame(job, module, ideal, w0, r);
    const auto h = frames::grammian(f);
    const Matrix det_curv = curvature::det_bundle_curvature(h);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            r.add("d" + idx(i) + " dbar" + idx(j) + " log det H", det_curv(i, j));

    if (job.trunc_degree >= 2) {
        const auto tensor = curvature::curvature_matrix(h);
        for (std::size_t i = 0; i < m; ++i) {
            const Matrix& b = tensor.block(i, i);
            for (std::size_t a = 0; a < b.rows(); ++a)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    r.add("K_{" + idx(i) + " " + idx(i) + "bar}[" + idx(a) + "," + idx(c) + "]", b(a, c));
        }
        r.add("curvature hermitian", tensor.hermitian_symmetric());
    }

    if (f.rank() == 1) {
        // One generator: report the Hessian of ||F1||^2 with and without the log.
        for (std::size_t i = 0; i < m; ++i) {
            if ((*exps)[i] > 0)
                continue;
            r.add("d" + idx(i) + " dbar" + idx(i) + " log ||F1||^2", curvature::line_curvature(h.h(0, 0), i, i));
            if (h.scale.is_one())
                r.add("d" + idx(i) + " dbar" + idx(i) + " ||F1||^2", curvature::plain_hessian(h.h(0, 0), i, i));
        }
        if (is_origin(w0))
            r.diagnostics.push_back("for a single generator z_k^p at the origin the log-Hessian of ||F1||^2 is "
                                    "the free weight, while the Hessian without the log carries the extra factor "
                                    "(lambda_k)_p / p!; both are reported");
    }

    // Floating cross-check of the diagonal by finite differences.
    if (m <= 3) {
        std::vector<long double> lw;
        for (const auto& x : job.weights)
            lw.push_back(x.to_long_double());
        const auto fn = is_origin(w0) ? curvature::power_ideal_det_metric(lw, *exps)
                                      : curvature::zero_set_det_metric(lw, *exps);
        std::vector<curvature::Complex> p;
        for (const auto& x : w0)
            p.emplace_back(x.to_long_double(), 0.0L);
        for (std::size_t i = 0; i < m; ++i) {
            try {
                const auto est = curvature::fd_oracle(fn, p, i, i, 1e-3L);
                r.add("fd d" + idx(i) + " dbar" + idx(i) + " log det H", Float{static_cast<double>(est.value.real()), 1e-6});
            } catch (const DomainError&) {
                r.diagnostics.push_back("finite-difference check skipped in direction " + idx(i) +
                                        ": stencil leaves the polydisc");
            }
        }
        r.diagnostics.push_back("finite differences: fourth-order stencil, step 1e-3");
    }
    r.diagnostics.push_back("series degree " + std::to_string(h.degree()));
}

void run_dimension(const JobConfig& job, Report& r)
{
    const auto ideal = load_ideal(job);
    const auto w = point_or_origin(job);
    const auto res = ideals::localization_dim(ideal, w, job.ideal_degree);
    r.add("dim", Rational(static_cast<long>(res.dim)));
    if (res.stabilized_at)
        r.add("stabilized at N", Rational(static_cast<long>(*res.stabilized_at)));
    else
        r.diagnostics.push_back("no stabilization up to N = " + std::to_string(job.ideal_degree) +
                                "; the value is the last level computed");
    for (const auto& [n, d] : res.history)
        r.diagnostics.push_back("d_" + std::to_string(n) + " = " + std::to_string(d));
    if (res.monotonicity_violated)
        r.diagnostics.push_back("d_N increased past twice the generator degree");
    try {
        const auto v = ideals::zero_set(ideal);
        r.add("point on zero set", v.contains(w));
        r.add("zero set", v.str());
    } catch (const UnsupportedError&) {
        r.diagnostics.push_back("zero set not described for this ideal");
    }
    r.convention = {{"dimension", "dim I / m_w I from truncated spans, exact ranks"}};
}

void run_compare(const JobConfig& job, Report& r)
{
    const auto ideal = load_ideal(job);
    const auto& w1 = job.weights;
    const auto& w2 = *job.compare_weights;
    const auto exps = ideal.pure_power_exponents();
    const std::size_t m = w1.size();
    add_curvature_convention(r);

    if (m == 2 && exps && (*exps)[0] == 1 && (*exps)[1] == 1) {
        const auto a = invariants::lambda_mu_invariants(w1[0], w1[1]);
        const auto b = invariants::lambda_mu_invariants(w2[0], w2[1]);
        r.add("kappa1", a.kappa1);
        r.add("kappa2", a.kappa2);
        r.add("kappa1'", b.kappa1);
        r.add("kappa2'", b.kappa2);
        r.add("equivalent", invariants::lambda_mu_equivalent(w1[0], w1[1], w2[0], w2[1]));
        r.diagnostics.push_back("invariant: the pair of determinant curvatures at the origin");
        return;
    }
    if (m == 2 && exps && (*exps)[0] > 0 && (*exps)[1] == 0) {
        const unsigned p = (*exps)[0];
        const auto a = invariants::principal_curvatures(w1[0], w1[1], p);
        const auto b = invariants::principal_curvatures(w2[0], w2[1], p);
        r.add("d2 dbar2 log ||F1||^2", a.log_curvature);
        r.add("d2 dbar2 ||F1||^2", a.plain_hessian);
        r.add("mu (lambda)_p", a.product);
        r.add("mu (lambda)_{p+1}", a.product_next);
        r.add("mu' (lambda')_p", b.product);
        r.add("mu' (lambda')_{p+1}", b.product_next);
        r.add("equivalent", invariants::principal_rigidity(w1[0], w1[1], p, w2[0], w2[1]));
        r.diagnostics.push_back("invariant: mu (lambda)_p and mu (lambda)_{p+1} from z1^p and z1^{p+1}");
        return;
    }
    if (exps && ideal.size() < m) {
        const auto rep = invariants::polydisc_rigidity_report(w1, ideal, w2);
        for (const auto& e : rep.battery) {
            r.add(e.name, e.value);
            r.add(e.name + "'", e.other);
        }
        r.add("equivalent", rep.equivalent);
        return;
    }
    throw UnsupportedError("compare covers <z1, z2> and ideals of powers of fewer than m distinct variables; got " +
                           ideal.str());
}

void run_cubic(const JobConfig& job, Report& r)
{
    const auto rep = invariants::cubic_positive_roots(*job.alpha);
    std::string poly;
    for (std::size_t k = rep.coefficients.size(); k-- > 0;) {
        const Rational& c = rep.coefficients[k];
        if (c.is_zero())
            continue;
        poly += poly.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        const Rational a = c.abs();
        if (k == 0 || a != Rational(1))
            poly += a.is_integer() ? a.str() : "(" + a.str() + ")";
        if (k > 0)
            poly += k == 1 ? "x" : "x^" + std::to_string(k);
    }
    r.add("polynomial", poly);
    r.add("positive roots", Rational(static_cast<long>(rep.positive_roots)));
    for (std::size_t i = 0; i < rep.intervals.size(); ++i) {
        r.add("root " + idx(i) + " lower", rep.intervals[i].first);
        r.add("root " + idx(i) + " upper", rep.intervals[i].second);
    }
    r.diagnostics.push_back("Sturm sequence, exact; intervals are (lower, upper] of width at most 1/1024");
    r.convention = {{"cubic", "x^3 - (3 alpha - 2) x^2 - (2 alpha - 3) x - alpha, x = lambda / mu"}};
}

} // namespace

Report run(const JobConfig& job)
{
    validate(job);
    Report r;
    r.input = echo(job);
    r.task = job.task;
    if (job.task == "kernel")
        run_kernel(job, r);
    else if (job.task == "decompose")
        run_decompose(job, r);
    else if (job.task == "metric")
        run_metric(job, r);
    else if (job.task == "curvature")
        run_curvature(job, r);
    else if (job.task == "dimension")
        run_dimension(job, r);
    else if (job.task == "compare")
        run_compare(job, r);
    else
        run_cubic(job, r);
    return r;
}

int exit_code(const std::exception& e)
{
    if (dynamic_cast<const InputError*>(&e))
        return 2;
    if (dynamic_cast<const UnsupportedError*>(&e))
        return 4;
    if (dynamic_cast<const SingularityError*>(&e) || dynamic_cast<const DomainError*>(&e) ||
        dynamic_cast<const DegeneracyError*>(&e) || dynamic_cast<const TruncationError*>(&e) ||
        dynamic_cast<const ShapeError*>(&e))
        return 3;
    return 1;
}

} // namespace hilbmod::cli
