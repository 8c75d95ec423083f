#include "hilbmod/curvature/curvature.hpp"

#include <random>

#include "hilbmod/algebra/errors.hpp"
#include "hilbmod/frames/frame.hpp"

namespace hilbmod::curvature {

Rational line_curvature(const TruncSeries& h, std::size_t i, std::size_t j)
{
    return mixed_hessian(series_log(h).series, i, j);
}

Rational plain_hessian(const TruncSeries& h, std::size_t i, std::size_t j)
{
    return mixed_hessian(h, i, j);
}

Matrix det_bundle_curvature(const frames::MetricSeries& metric)
{
    const TruncSeries det = series_det(metric.h);
    if (det.constant_term().is_zero()) {
        throw SingularityError("metric is singular at the base point");
    }
    const TruncSeries log_det = series_log(det).series;
    const std::size_t m = metric.h.pairs();
    Matrix out(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            out(i, j) = mixed_hessian(log_det, i, j);
        }
    }
    return out;
}

bool CurvatureTensor::hermitian_symmetric() const
{
    const Matrix h_inv = metric_at_base.inverse();
    for (std::size_t i = 0; i < pairs; ++i) {
        for (std::size_t j = 0; j < pairs; ++j) {
            if (block(j, i).adjoint() != metric_at_base * block(i, j) * h_inv) {
                return false;
            }
        }
    }
    return true;
}

CurvatureTensor curvature_matrix(const frames::MetricSeries& metric)
{
    const unsigned d = metric.degree();
    if (d < 2) {
        throw TruncationError("curvature needs a metric expanded to degree 2 or more");
    }
    const std::size_t m = metric.h.pairs();
    const std::size_t t = metric.rank();
    const SeriesMatrix h_inv = series_matrix_inverse(metric.h).truncated(d - 1);

    CurvatureTensor k;
    k.base_point = metric.base_point;
    k.pairs = m;
    k.metric_at_base = metric.h.constant_part();
    k.blocks.assign(m * m, Matrix(t, t));
    for (std::size_t j = 0; j < m; ++j) {
        const SeriesMatrix g = h_inv * metric.h.d_wbar(j);
        for (std::size_t i = 0; i < m; ++i) {
            const MultiIndex wi = MultiIndex::unit(2 * m, i);
            Matrix& b = k.blocks[i * m + j];
            for (std::size_t r = 0; r < t; ++r) {
                for (std::size_t c = 0; c < t; ++c) {
                    b(r, c) = g(r, c).coefficient(wi);
                }
            }
        }
    }
    return k;
}

GaugeMatrix::GaugeMatrix(Matrix a) : a_(std::move(a))
{
    if (!a_.is_square() || a_.rows() == 0) {
        throw ShapeError("gauge matrix must be square and nonempty");
    }
    if (a_.determinant().is_zero()) {
        throw SingularityError("gauge matrix is singular");
    }
}

frames::MetricSeries transform_metric(const frames::MetricSeries& metric, const GaugeMatrix& a)
{
    if (a.dim() != metric.rank()) {
        throw ShapeError("gauge matrix size does not match the metric");
    }
    frames::MetricSeries out = metric;
    out.h = a.matrix() * metric.h * a.matrix().adjoint();
    return out;
}

CurvatureTensor gauge_conjugate(const CurvatureTensor& k, const GaugeMatrix& a)
{
    if (a.dim() != k.rank()) {
        throw ShapeError("gauge matrix size does not match the curvature");
    }
    const Matrix as = a.matrix().adjoint();
    const Matrix as_inv = as.inverse();
    CurvatureTensor out = k;
    for (auto& b : out.blocks) {
        b = as_inv * b * as;
    }
    out.metric_at_base = a.matrix() * k.metric_at_base * as;
    return out;
}

std::optional<GaugeMatrix> gauge_equivalent(const CurvatureTensor& k1, const CurvatureTensor& k2)
{
    if (k1.pairs != k2.pairs || k1.rank() != k2.rank() || k1.blocks.size() != k2.blocks.size()) {
        throw ShapeError("curvature tensors have different shapes");
    }
    if (!(k1.convention == k2.convention)) {
        throw InputError("curvature tensors were computed in different conventions");
    }
    const std::size_t t = k1.rank();
    // Unknown X_{kc} at column k * t + c; one row per entry (r, c) per block.
    Matrix sys(k1.blocks.size() * t * t, t * t);
    std::size_t row = 0;
    for (std::size_t b = 0; b < k1.blocks.size(); ++b) {
        const Matrix& a1 = k1.blocks[b];
        const Matrix& a2 = k2.blocks[b];
        for (std::size_t r = 0; r < t; ++r) {
            for (std::size_t c = 0; c < t; ++c, ++row) {
                for (std::size_t k = 0; k < t; ++k) {
                    sys(row, k * t + c) += a1(r, k);
                    sys(row, r * t + k) -= a2(k, c);
                }
            }
        }
    }
    const auto basis = sys.nullspace();
    if (basis.empty()) {
        return std::nullopt;
    }
    auto as_matrix = [t](const std::vector<Rational>& v) {
        Matrix x(t, t);
        for (std::size_t k = 0; k < t; ++k) {
            for (std::size_t c = 0; c < t; ++c) {
                x(k, c) = v[k * t + c];
            }
        }
        return x;
    };
    std::vector<std::vector<Rational>> candidates = basis;
    // det X is a polynomial on the solution space; if it is not identically
    // zero, random integer points miss its zero set with high probability.
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int trial = 0; trial < 64; ++trial) {
        std::vector<Rational> v(t * t);
        for (const auto& bv : basis) {
            const Rational c(coef(rng));
            for (std::size_t k = 0; k < v.size(); ++k) {
                v[k] += c * bv[k];
            }
        }
        candidates.push_back(std::move(v));
    }
    for (const auto& v : candidates) {
        const Matrix x = as_matrix(v);
        if (!x.determinant().is_zero()) {
            return GaugeMatrix(x.adjoint());
        }
    }
    return std::nullopt;
}

TruncSeries kernel_diagonal_series(const rkhs::SubmoduleKernel& kernel, const std::vector<Rational>& w0,
                                   unsigned degree)
{
    const auto& module = kernel.module();
    const std::size_t m = module.dimension();
    module.check_point(w0);
    const bool at_origin = std::all_of(w0.begin(), w0.end(), [](const Rational& r) { return r.is_zero(); });
    if (const auto* gf = std::get_if<rkhs::GramForm>(&kernel.rep())) {
        const Matrix g_inv = gf->gram.inverse();
        std::vector<TruncSeries> anti;
        for (const auto& b : gf->basis) {
            anti.push_back(frames::conjugate_substitute(b, w0, degree));
        }
        TruncSeries s(m, degree);
        for (std::size_t a = 0; a < anti.size(); ++a) {
            TruncSeries row(m, degree);
            for (std::size_t b = 0; b < anti.size(); ++b) {
                if (!g_inv(a, b).is_zero()) {
                    row += anti[b] * g_inv(a, b);
                }
            }
            s += anti[a].conjugate() * row;
        }
        return s;
    }
    if (const auto* df = std::get_if<rkhs::DiagonalFiltered>(&kernel.rep()); df && at_origin) {
        TruncSeries s(m, degree);
        for (const auto& a : monomials_up_to(m, degree / 2)) {
            if (df->contains(a)) {
                std::vector<unsigned> e(2 * m);
                for (std::size_t i = 0; i < m; ++i) {
                    e[i] = e[m + i] = a[i];
                }
                s.add_term(MultiIndex(std::move(e)), module.coefficient(a));
            }
        }
        return s;
    }
    throw UnsupportedError("exact kernel diagonal series is available for Gram-form kernels and for diagonal "
                           "kernels at the origin");
}

} // namespace hilbmod::curvature
