#pragma once

#include "steenspec/generator.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace steenspec {

/// A commutative monomial: a finite map Generator -> positive exponent, kept
/// sorted by generator. Bidegree and total degree are cached.
class Monomial
{
public:
    using Factor = std::pair<Generator, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(Generator g, std::uint32_t exponent = 1);
    Monomial(std::initializer_list<Factor> factors);
    /// Factors in any order; repeated generators are merged, zero exponents dropped.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const& noexcept { return factors_; }
    std::vector<Factor> factors() && noexcept { return std::move(factors_); }
    bool is_unit() const noexcept { return factors_.empty(); }
    std::uint32_t exponent(Generator g) const noexcept;

    const BiDegree& bidegree() const noexcept { return degree_; }
    std::int64_t total_degree() const noexcept { return total_; }

    Monomial operator*(const Monomial& o) const;
    /// Every exponent multiplied by k.
    Monomial pow(std::uint32_t k) const;
    /// this^(2^k); the Frobenius twist used throughout characteristic 2.
    Monomial frobenius(unsigned k) const { return pow(std::uint32_t{1} << k); }

    bool divides(const Monomial& m) const noexcept;
    /// m / this; requires divides(m).
    Monomial quotient_of(const Monomial& m) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const noexcept;

    /// Keep only the factors satisfying pred.
    Monomial filter(const std::function<bool(Generator)>& pred) const;

    std::size_t hash() const noexcept;

    bool operator==(const Monomial& o) const noexcept { return factors_ == o.factors_; }

private:
    void recompute();

    std::vector<Factor> factors_;
    BiDegree degree_{};
    std::int64_t total_ = 0;
};

/// The monomial order shared by every ring: homological degree, then internal
/// degree, then graded reverse lexicographic on the generator enumeration.
/// Returns <0, 0, >0.
int compare(const Monomial& a, const Monomial& b) noexcept;

/// Strict "a > b" in the monomial order; sorting with this gives descending order.
struct MonomialGreater
{
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }
};

/// Canonical text: factors in descending generator order joined by '*',
/// exponents as '^k'; the unit prints as "1".
std::string to_string(const Monomial& m);

} // namespace steenspec

template <>
struct std::hash<steenspec::Monomial>
{
    std::size_t operator()(const steenspec::Monomial& m) const noexcept { return m.hash(); }
};
