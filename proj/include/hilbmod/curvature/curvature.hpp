#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hilbmod/algebra/matrix.hpp"
#include "hilbmod/algebra/series_matrix.hpp"
#include "hilbmod/frames/metric.hpp"
#include "hilbmod/rkhs/kernel.hpp"

namespace hilbmod::curvature {

/// Which sign and index order a curvature was computed in. Two tensors are
/// only comparable when their conventions are equal.
struct Convention {
    std::string sign = "d dbar log h";
    std::string index_order = "K_{i jbar} = d_i (H^{-1} dbar_j H), H_ab = <F^a, F^b>";

    friend bool operator==(const Convention&, const Convention&) = default;
};

/// d_i dbar_j log h at the base point. Throws DomainError unless h(0) > 0.
Rational line_curvature(const TruncSeries& h, std::size_t i, std::size_t j);

/// d_i dbar_j h at the base point, without the logarithm.
Rational plain_hessian(const TruncSeries& h, std::size_t i, std::size_t j);

/// (d_i dbar_j log det H)_{i,j} at the base point. Throws SingularityError
/// when H(0) is singular.
Matrix det_bundle_curvature(const frames::MetricSeries& metric);

/// Curvature blocks K_{i jbar} (t x t each) at the base point, plus the
/// metric value there, which the Hermitian symmetry of the blocks involves.
struct CurvatureTensor {
    std::vector<Rational> base_point;
    std::size_t pairs = 0;
    std::vector<Matrix> blocks; // index i * pairs + j
    Matrix metric_at_base;
    Convention convention;

    std::size_t rank() const { return metric_at_base.rows(); }
    const Matrix& block(std::size_t i, std::size_t j) const { return blocks.at(i * pairs + j); }
    /// K_{j ibar}^* == H K_{i jbar} H^{-1} for every pair, H = metric at base.
    bool hermitian_symmetric() const;

    friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b)
    {
        return a.pairs == b.pairs && a.blocks == b.blocks && a.convention == b.convention;
    }
};

/// Throws SingularityError when H(0) is singular and TruncationError when the
/// metric has degree < 2.
CurvatureTensor curvature_matrix(const frames::MetricSeries& metric);

/// Constant invertible change of frame.
class GaugeMatrix {
public:
    /// Throws ShapeError unless square and SingularityError when det == 0.
    explicit GaugeMatrix(Matrix a);

    const Matrix& matrix() const { return a_; }
    std::size_t dim() const { return a_.rows(); }

private:
    Matrix a_;
};

/// The frame F' = F A^* has metric A H A^*; that is this map.
frames::MetricSeries transform_metric(const frames::MetricSeries& metric, const GaugeMatrix& a);

/// Block by block K -> (A^*)^{-1} K A^*, the curvature of the frame F A^*.
/// Throws ShapeError on a size mismatch.
CurvatureTensor gauge_conjugate(const CurvatureTensor& k, const GaugeMatrix& a);

/// A constant A with k2 = gauge_conjugate(k1, A), if the search finds one.
/// Solves k1_b X = X k2_b for all blocks b exactly; X = A^*. Throws
/// ShapeError when the tensors have different shapes.
std::optional<GaugeMatrix> gauge_equivalent(const CurvatureTensor& k1, const CurvatureTensor& k2);

/// K(w, w) expanded around w0 in (v, vbar). Exact for GramForm kernels at any
/// base point and for DiagonalFiltered kernels at the origin.
TruncSeries kernel_diagonal_series(const rkhs::SubmoduleKernel& kernel, const std::vector<Rational>& w0,
                                   unsigned degree);

} // namespace hilbmod::curvature
