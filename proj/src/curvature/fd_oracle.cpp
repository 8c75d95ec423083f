#include "hilbmod/curvature/fd_oracle.hpp"

#include <array>
#include <cmath>

#include "hilbmod/algebra/errors.hpp"

namespace hilbmod::curvature {

namespace {

constexpr std::array<long double, 5> kSecond = {-1.0L / 12, 16.0L / 12, -30.0L / 12, 16.0L / 12, -1.0L / 12};
constexpr std::array<long double, 5> kFirst = {1.0L / 12, -8.0L / 12, 0.0L, 8.0L / 12, -1.0L / 12};

// Real direction p: Re z_p for p < m, Im z_{p-m} otherwise.
void bump(std::vector<Complex>& z, std::size_t p, long double d)
{
    const std::size_t m = z.size();
    z[p % m] += p < m ? Complex(d, 0) : Complex(0, d);
}

// Complex determinant by Gaussian elimination with partial pivoting.
Complex complex_det(std::vector<std::vector<Complex>> a)
{
    const std::size_t n = a.size();
    Complex det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) {
                piv = r;
            }
        }
        if (a[piv][c] == Complex(0)) {
            return 0;
        }
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Complex f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) {
                a[r][k] -= f * a[c][k];
            }
        }
    }
    return det;
}

std::vector<Complex> complex_solve(std::vector<std::vector<Complex>> a, std::vector<Complex> b)
{
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) {
                piv = r;
            }
        }
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) {
                continue;
            }
            const Complex f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) {
                a[r][k] -= f * a[c][k];
            }
            b[r] -= f * b[c];
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        b[r] /= a[r][r];
    }
    return b;
}

Complex eval_poly(const Poly& p, std::span<const Complex> z)
{
    Complex s = 0;
    for (const auto& [a, c] : p.terms()) {
        Complex t = c.to_long_double();
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (unsigned k = 0; k < a[i]; ++k) {
                t *= z[i];
            }
        }
        s += t;
    }
    return s;
}

long double pochhammer_ld(long double a, unsigned n)
{
    long double p = 1;
    for (unsigned k = 0; k < n; ++k) {
        p *= (a + k) / (k + 1);
    }
    return p;
}

} // namespace

FdEstimate fd_oracle(const PositiveFunction& f, std::span<const Complex> point, std::size_t i, std::size_t j,
                     long double h, bool take_log)
{
    const std::size_t m = point.size();
    if (!(h > 0)) {
        throw InputError("finite-difference step must be positive");
    }
    if (i >= m || j >= m) {
        throw InputError("derivative index out of range");
    }
    for (const auto& z : point) {
        if (std::abs(z) + 3 * h >= 1) {
            throw DomainError("finite-difference stencil leaves the polydisc");
        }
    }
    auto g = [&](const std::vector<Complex>& z) {
        const long double v = f(z);
        if (take_log && !(v > 0)) {
            throw DomainError("function is not positive at a stencil point");
        }
        return take_log ? std::log(v) : v;
    };
    auto second = [&](std::size_t p, std::size_t q) {
        const std::vector<Complex> base(point.begin(), point.end());
        long double s = 0;
        if (p == q) {
            for (int a = -2; a <= 2; ++a) {
                auto z = base;
                bump(z, p, a * h);
                s += kSecond[a + 2] * g(z);
            }
        } else {
            for (int a = -2; a <= 2; ++a) {
                for (int b = -2; b <= 2; ++b) {
                    if (a == 0 || b == 0) {
                        continue;
                    }
                    auto z = base;
                    bump(z, p, a * h);
                    bump(z, q, b * h);
                    s += kFirst[a + 2] * kFirst[b + 2] * g(z);
                }
            }
        }
        return s / (h * h);
    };
    // d_i dbar_j = 1/4 [(x_i x_j + y_i y_j) + i (x_i y_j - y_i x_j)]
    const long double re = (second(i, j) + second(m + i, m + j)) / 4;
    const long double im = i == j ? 0.0L : (second(i, m + j) - second(m + i, j)) / 4;
    return {Complex(re, im), h};
}

PositiveFunction power_ideal_det_metric(std::vector<long double> weights, std::vector<unsigned> exponents,
                                        unsigned max_order)
{
    struct Term {
        MultiIndex a;
        long double c;
        std::vector<std::pair<std::size_t, long double>> shares; // (generator slot, s_k c_a)
    };
    const std::size_t m = weights.size();
    std::vector<std::size_t> gens;
    for (std::size_t k = 0; k < m; ++k) {
        if (exponents.at(k)) {
            gens.push_back(k);
        }
    }
    std::vector<Term> terms;
    for (const auto& a : monomials_up_to(m, max_order)) {
        long double total = 0;
        for (std::size_t k : gens) {
            if (a[k] >= exponents[k]) {
                total += weights[k] * a[k];
            }
        }
        if (total == 0) {
            continue;
        }
        Term t{a, 1, {}};
        for (std::size_t i = 0; i < m; ++i) {
            t.c *= pochhammer_ld(weights[i], a[i]);
        }
        for (std::size_t s = 0; s < gens.size(); ++s) {
            const std::size_t k = gens[s];
            if (a[k] >= exponents[k]) {
                t.shares.emplace_back(s, weights[k] * a[k] / total * t.c);
            }
        }
        terms.push_back(std::move(t));
    }
    return [terms = std::move(terms), gens, exponents, m](std::span<const Complex> w) {
        const std::size_t t = gens.size();
        std::vector<std::vector<Complex>> h(t, std::vector<Complex>(t, 0));
        std::vector<Complex> f(t);
        for (const auto& term : terms) {
            std::fill(f.begin(), f.end(), Complex(0));
            for (const auto& [s, coeff] : term.shares) {
                Complex v = coeff;
                for (std::size_t i = 0; i < m; ++i) {
                    const unsigned e = term.a[i] - (i == gens[s] ? exponents[i] : 0);
                    for (unsigned k = 0; k < e; ++k) {
                        v *= std::conj(w[i]);
                    }
                }
                f[s] = v;
            }
            for (std::size_t a = 0; a < t; ++a) {
                for (std::size_t b = 0; b < t; ++b) {
                    h[a][b] += f[a] * std::conj(f[b]) / term.c;
                }
            }
        }
        return complex_det(std::move(h)).real();
    };
}

PositiveFunction zero_set_det_metric(std::vector<long double> weights, std::vector<unsigned> exponents)
{
    long double constant = 1;
    std::size_t t = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (exponents.at(k)) {
            constant *= pochhammer_ld(weights[k], exponents[k]);
            ++t;
        }
    }
    return [weights, exponents, constant, t](std::span<const Complex> w) {
        long double v = constant;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (!exponents[i]) {
                v *= std::pow(1 - std::norm(w[i]), -static_cast<long double>(t) * weights[i]);
            }
        }
        return v;
    };
}

PositiveFunction kernel_diagonal(const rkhs::SubmoduleKernel& kernel, unsigned max_order)
{
    const auto& module = kernel.module();
    const std::size_t m = module.dimension();
    std::vector<long double> lambda;
    for (const auto& l : module.weights()) {
        lambda.push_back(l.to_long_double());
    }
    auto ambient = [lambda](std::span<const Complex> z, std::span<const Complex> w) {
        Complex v = 1;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            v *= std::pow(Complex(1) - z[i] * std::conj(w[i]), -lambda[i]);
        }
        return v;
    };

    if (const auto* df = std::get_if<rkhs::DiagonalFiltered>(&kernel.rep())) {
        if (!module.is_weighted()) {
            std::vector<std::pair<MultiIndex, long double>> terms;
            for (const auto& a : monomials_up_to(m, max_order)) {
                if (df->contains(a)) {
                    terms.emplace_back(a, module.coefficient(a).to_long_double());
                }
            }
            return [terms](std::span<const Complex> w) {
                long double s = 0;
                for (const auto& [a, c] : terms) {
                    long double t = c;
                    for (std::size_t i = 0; i < a.size(); ++i) {
                        t *= std::pow(std::norm(w[i]), static_cast<long double>(a[i]));
                    }
                    s += t;
                }
                return s;
            };
        }
        // Inclusion-exclusion over the generators' lcms with x_i = |w_i|^2.
        const auto& gens = df->generators;
        std::vector<std::pair<std::vector<unsigned>, int>> lcms;
        for (std::size_t mask = 1; mask < (std::size_t{1} << gens.size()); ++mask) {
            std::vector<unsigned> l(m, 0);
            int sign = -1;
            for (std::size_t k = 0; k < gens.size(); ++k) {
                if (mask & (std::size_t{1} << k)) {
                    for (std::size_t i = 0; i < m; ++i) {
                        l[i] = std::max(l[i], gens[k][i]);
                    }
                    sign = -sign;
                }
            }
            lcms.emplace_back(std::move(l), sign);
        }
        return [lcms, lambda](std::span<const Complex> w) {
            long double s = 0;
            for (const auto& [l, sign] : lcms) {
                long double p = 1;
                for (std::size_t i = 0; i < lambda.size(); ++i) {
                    const long double x = std::norm(w[i]);
                    long double f = std::pow(1 - x, -lambda[i]);
                    long double xp = 1;
                    for (unsigned n = 0; n < l[i]; ++n) {
                        f -= pochhammer_ld(lambda[i], n) * xp;
                        xp *= x;
                    }
                    p *= f;
                }
                s += sign * p;
            }
            return s;
        };
    }
    if (const auto* r = std::get_if<rkhs::RankOneCorrected>(&kernel.rep())) {
        if (!module.is_weighted()) {
            throw UnsupportedError("floating rank-one kernels need a weighted module");
        }
        std::vector<std::vector<Complex>> pts;
        for (const auto& p : r->points) {
            std::vector<Complex> z;
            for (const auto& c : p) {
                z.emplace_back(c.to_long_double(), 0);
            }
            pts.push_back(std::move(z));
        }
        return [pts, ambient](std::span<const Complex> w) {
            const std::size_t n = pts.size();
            std::vector<std::vector<Complex>> g(n, std::vector<Complex>(n));
            std::vector<Complex> k(n);
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    g[a][b] = ambient(pts[a], pts[b]);
                }
                k[a] = ambient(pts[a], w);
            }
            const auto x = complex_solve(g, k);
            Complex s = ambient(w, w);
            for (std::size_t a = 0; a < n; ++a) {
                s -= std::conj(k[a]) * x[a];
            }
            return s.real();
        };
    }
    const auto& gf = std::get<rkhs::GramForm>(kernel.rep());
    const Matrix inv = gf.gram.inverse();
    std::vector<std::vector<long double>> g(inv.rows(), std::vector<long double>(inv.cols()));
    for (std::size_t a = 0; a < inv.rows(); ++a) {
        for (std::size_t b = 0; b < inv.cols(); ++b) {
            g[a][b] = inv(a, b).to_long_double();
        }
    }
    return [basis = gf.basis, g](std::span<const Complex> w) {
        std::vector<Complex> bv;
        for (const auto& p : basis) {
            bv.push_back(eval_poly(p, w));
        }
        Complex s = 0;
        for (std::size_t a = 0; a < bv.size(); ++a) {
            for (std::size_t b = 0; b < bv.size(); ++b) {
                s += bv[a] * g[a][b] * std::conj(bv[b]);
            }
        }
        return s.real();
    };
}

PositiveFunction constant_metric(long double value)
{
    return [value](std::span<const Complex>) { return value; };
}

} // namespace hilbmod::curvature
