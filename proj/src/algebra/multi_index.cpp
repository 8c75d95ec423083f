#include "hilbmod/algebra/multi_index.hpp"

#include <algorithm>
#include <numeric>

#include "hilbmod/algebra/errors.hpp"

namespace hilbmod {

MultiIndex::MultiIndex(std::initializer_list<unsigned> exps) : exps_(exps)
{
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0U);
}

MultiIndex::MultiIndex(std::vector<unsigned> exps) : exps_(std::move(exps))
{
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0U);
}

MultiIndex MultiIndex::unit(std::size_t nvars, std::size_t i)
{
    MultiIndex m(nvars);
    m.set(i, 1);
    return m;
}

void MultiIndex::set(std::size_t i, unsigned e)
{
    degree_ = degree_ - exps_.at(i) + e;
    exps_[i] = e;
}

bool MultiIndex::divides(const MultiIndex& other) const
{
    if (other.size() != size()) {
        throw ShapeError("monomial variable count mismatch");
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) {
            return false;
        }
    }
    return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const
{
    if (o.size() != size()) {
        throw ShapeError("monomial variable count mismatch");
    }
    MultiIndex r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        r.exps_[i] += o.exps_[i];
    }
    r.degree_ = degree_ + o.degree_;
    return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const
{
    if (!o.divides(*this)) {
        throw InputError("monomial difference with negative exponent");
    }
    MultiIndex r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        r.exps_[i] -= o.exps_[i];
    }
    r.degree_ = degree_ - o.degree_;
    return r;
}

std::string MultiIndex::str() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += std::to_string(exps_[i]);
    }
    return s + ")";
}

std::vector<MultiIndex> monomials_of_degree(std::size_t nvars, unsigned d)
{
    std::vector<MultiIndex> out;
    if (nvars == 0) {
        if (d == 0) {
            out.emplace_back(0);
        }
        return out;
    }
    std::vector<unsigned> e(nvars, 0);
    // Enumerate compositions of d into nvars parts.
    auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
        if (pos + 1 == nvars) {
            e[pos] = left;
            out.emplace_back(e);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiIndex> monomials_up_to(std::size_t nvars, unsigned max_degree)
{
    std::vector<MultiIndex> out;
    for (unsigned d = 0; d <= max_degree; ++d) {
        auto layer = monomials_of_degree(nvars, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace hilbmod
