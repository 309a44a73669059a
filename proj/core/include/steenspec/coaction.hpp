#pragma once

#include "steenspec/ext_ring.hpp"
#include "steenspec/tensor_poly.hpp"

#include <memory>
#include <vector>

namespace steenspec {

namespace detail {
struct CoactionCache;
}

/// The coaction on the D-limit ring, from the explicit double-sum formula.
/// Left factors are polynomials in the xi's, right factors single h(i,u).
/// Throws Error("bad-generator") unless 0 <= s < t.
TensorPoly coaction_generator(int t, int s);

/// The coaction on an Ext ring, memoized per monomial. For an elementary
/// ring this is the D-limit formula with dead right-hand generators dropped.
/// Copies share the memo; lookups are safe from several threads.
class CoactionTable
{
public:
    explicit CoactionTable(ExtRing ring);

    const ExtRing& ring() const noexcept { return ring_; }

    /// ψ of a ring variable. Throws Error("unknown-generator").
    const TensorPoly& generator(Generator g) const;
    /// ψ(m), right factors reduced modulo the ring relations.
    const TensorPoly& monomial(const Monomial& m) const;

private:
    ExtRing ring_;
    std::shared_ptr<detail::CoactionCache> cache_;
};

/// Additive and multiplicative extension; right factors in ring normal form.
TensorPoly coaction_poly(const Poly& p, const CoactionTable& table);

/// (id ⊗ res)(ψ_D) on an elementary quotient's Ext ring.
CoactionTable coaction_restricted(const QuotientHopf& E, const CoactionTable& table);

/// Left factors of ψ(p) that do not lie in F2[xi_1^2, xi_2^4, ...].
std::vector<Monomial> left_factors_outside_double(const TensorPoly& value);

} // namespace steenspec
