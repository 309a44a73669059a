#pragma once

#include "steenspec/monomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace steenspec {

/// A polynomial over GF(2): a set of monomials kept in descending monomial
/// order. Addition is symmetric difference.
class Poly
{
public:
    Poly() = default;
    explicit Poly(Monomial m) { terms_.push_back(std::move(m)); }
    explicit Poly(Generator g) : Poly(Monomial(g)) {}

    static Poly one() { return Poly(Monomial{}); }
    /// Any order, any multiplicity; pairs cancel.
    static Poly from_terms(std::vector<Monomial> terms);

    const std::vector<Monomial>& terms() const& noexcept { return terms_; }
    std::vector<Monomial> terms() && noexcept { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept { return terms_.size() == 1 && terms_.front().is_unit(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Leading (largest) term; requires !is_zero().
    const Monomial& leading() const { return terms_.front(); }

    /// All terms share one bidegree (zero counts as homogeneous).
    bool is_homogeneous() const noexcept;
    /// Bidegree of a nonzero homogeneous polynomial.
    std::optional<BiDegree> bidegree() const noexcept;

    bool contains(const Monomial& m) const noexcept;

    Poly& operator+=(const Poly& o);
    Poly operator+(const Poly& o) const;
    /// Product in the free polynomial ring.
    Poly operator*(const Poly& o) const;
    Poly operator*(const Monomial& m) const;
    Poly pow(std::uint32_t k) const;
    /// p^(2^k), computed termwise.
    Poly frobenius(unsigned k) const;

    bool operator==(const Poly& o) const noexcept { return terms_ == o.terms_; }

private:
    std::vector<Monomial> terms_;
};

/// Canonical text, e.g. "h(2,0)*h(1,0)^2 + h(3,0)"; zero prints as "0".
std::string to_string(const Poly& p);

} // namespace steenspec
