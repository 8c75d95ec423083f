#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hilbmod {

/// Exponent vector of a monomial. Ordered graded-lexicographically: total
/// degree first, then lexicographically on the exponents.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t nvars) : exps_(nvars, 0) {}
    MultiIndex(std::initializer_list<unsigned> exps);
    explicit MultiIndex(std::vector<unsigned> exps);

    static MultiIndex unit(std::size_t nvars, std::size_t i);

    std::size_t size() const { return exps_.size(); }
    unsigned degree() const { return degree_; }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<unsigned>& exponents() const { return exps_; }

    void set(std::size_t i, unsigned e);

    bool divides(const MultiIndex& other) const;
    bool is_zero() const { return degree_ == 0; }

    MultiIndex operator+(const MultiIndex& o) const;
    /// Componentwise difference; requires o.divides(*this).
    MultiIndex operator-(const MultiIndex& o) const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exps_ == b.exps_; }
    friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b)
    {
        if (a.degree_ != b.degree_) {
            return a.degree_ <=> b.degree_;
        }
        return a.exps_ <=> b.exps_;
    }

    std::string str() const;

private:
    std::vector<unsigned> exps_;
    unsigned degree_ = 0;
};

/// Every exponent vector in nvars variables of total degree <= max_degree,
/// in graded-lex order.
std::vector<MultiIndex> monomials_up_to(std::size_t nvars, unsigned max_degree);

/// Exponent vectors of total degree exactly d.
std::vector<MultiIndex> monomials_of_degree(std::size_t nvars, unsigned d);

} // namespace hilbmod
