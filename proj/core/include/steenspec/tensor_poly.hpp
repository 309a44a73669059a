#pragma once

#include "steenspec/poly.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace steenspec {

/// Predicate deciding whether a monomial vanishes in some quotient
/// (profile relations on the left, ring relations on the right).
using ZeroTest = std::function<bool(const Monomial&)>;

/// An element of a tensor product of two polynomial algebras over GF(2),
/// stored as a set of (left, right) monomial pairs in descending order
/// (left first, then right).
class TensorPoly
{
public:
    using Term = std::pair<Monomial, Monomial>;

    TensorPoly() = default;
    TensorPoly(Monomial left, Monomial right) { terms_.emplace_back(std::move(left), std::move(right)); }
    static TensorPoly one() { return TensorPoly(Monomial{}, Monomial{}); }
    static TensorPoly from_terms(std::vector<Term> terms);
    /// a (x) b expanded bilinearly.
    static TensorPoly tensor(const Poly& a, const Poly& b);

    const std::vector<Term>& terms() const& noexcept { return terms_; }
    std::vector<Term> terms() && noexcept { return std::move(terms_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    TensorPoly operator+(const TensorPoly& o) const;
    TensorPoly& operator+=(const TensorPoly& o) { return *this = *this + o; }

    /// Product with both factors multiplied; terms whose left or right part
    /// vanishes under the given tests are dropped.
    TensorPoly multiply(const TensorPoly& o, const ZeroTest& left_zero = {}, const ZeroTest& right_zero = {}) const;
    TensorPoly operator*(const TensorPoly& o) const { return multiply(o); }
    /// this^(2^k), termwise.
    TensorPoly frobenius(unsigned k) const;

    /// Drop terms that vanish in the quotients.
    TensorPoly reduce(const ZeroTest& left_zero, const ZeroTest& right_zero) const;

    /// Group by left monomial: left -> polynomial of right monomials.
    std::map<Monomial, Poly, MonomialGreater> right_components() const;
    /// Group by right monomial: right -> polynomial of left monomials.
    std::map<Monomial, Poly, MonomialGreater> left_components() const;

    /// Apply the counit (keep only left-unit terms) to the left factor.
    Poly counit_left() const;
    /// Apply the counit to the right factor.
    Poly counit_right() const;

    bool operator==(const TensorPoly& o) const noexcept { return terms_ == o.terms_; }

private:
    std::vector<Term> terms_;
};

int compare(const TensorPoly::Term& a, const TensorPoly::Term& b) noexcept;

/// "xi(1)^2 (x) h(1,0) + 1 (x) h(2,0)"; zero prints as "0".
std::string to_string(const TensorPoly& p);

} // namespace steenspec
