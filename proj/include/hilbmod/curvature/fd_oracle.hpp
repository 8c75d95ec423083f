#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hilbmod/rkhs/kernel.hpp"

namespace hilbmod::curvature {

using Complex = std::complex<long double>;
/// A positive function on the polydisc (a metric entry or a determinant).
using PositiveFunction = std::function<long double(std::span<const Complex>)>;

struct FdEstimate {
    Complex value;
    long double step = 0;
};

/// d_i dbar_j log f (or of f itself when take_log is false) at the point, from
/// fourth-order central differences in the real coordinates with step h.
/// Throws InputError for h <= 0 and DomainError when a stencil point leaves
/// the polydisc.
FdEstimate fd_oracle(const PositiveFunction& f, std::span<const Complex> point, std::size_t i, std::size_t j,
                     long double h, bool take_log = true);

/// det H(w) for the split frames of <z_k^{i_k}> (i_k = 0 marks a free
/// variable), by floating sums over |a| <= max_order.
PositiveFunction power_ideal_det_metric(std::vector<long double> weights, std::vector<unsigned> exponents,
                                        unsigned max_order = 40);

/// det of the closed-form metric on V, prod_k C_k * prod_{free i} (1 - |w_i|^2)^{-t lambda_i}.
PositiveFunction zero_set_det_metric(std::vector<long double> weights, std::vector<unsigned> exponents);

/// K(w, w) of a submodule kernel in floating point.
PositiveFunction kernel_diagonal(const rkhs::SubmoduleKernel& kernel, unsigned max_order = 40);

PositiveFunction constant_metric(long double value);

} // namespace hilbmod::curvature
