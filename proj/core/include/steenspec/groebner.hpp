#pragma once

#include "steenspec/ring.hpp"

#include <map>
#include <memory>
#include <vector>

namespace steenspec {

namespace detail {
struct GroebnerCache;
}

/// A finitely generated homogeneous ideal of a RingPresentation. Generators
/// are stored in ring normal form with zeros removed. The Gröbner basis is
/// computed on first use and shared between copies.
class Ideal
{
public:
    Ideal(RingPtr ring, std::vector<Poly> generators);

    const RingPresentation& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const std::vector<Poly>& generators() const& noexcept { return generators_; }
    std::vector<Poly> generators() && { return generators_; }

    /// Reduced Gröbner basis of (generators) + (relations) in the free
    /// polynomial ring on the ring's variables, ascending by leading term.
    const std::vector<Poly>& full_basis() const;

private:
    RingPtr ring_;
    std::vector<Poly> generators_;
    std::shared_ptr<detail::GroebnerCache> cache_;
};

/// Reduced Gröbner basis of `input` in the free polynomial ring on whatever
/// generators occur, ascending by leading term. Stops early with {1} as
/// soon as a nonzero constant appears.
std::vector<Poly> buchberger(std::vector<Poly> input);

/// Full reduction of f by a Gröbner basis (remainder has no term divisible
/// by a leading term of the basis).
Poly reduce_by(const Poly& f, const std::vector<Poly>& basis);

/// The Gröbner basis of I with the ring relations removed: together with the
/// relation monomials it is a Gröbner basis of the lifted ideal. Equal
/// ideals give identical generator lists.
Ideal groebner_basis(const Ideal& I);

Poly normal_form(const Poly& f, const Ideal& I);
bool ideal_member(const Poly& f, const Ideal& I);
/// f lies in the radical: 1 is in I + (1 - y f) with y a fresh ungraded variable.
bool radical_member(const Poly& f, const Ideal& I);

bool is_unit_ideal(const Ideal& I);
/// Every generator of `small` lies in `big`. Throws on ring mismatch.
bool ideal_contains(const Ideal& big, const Ideal& small);
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

/// Basis of the degree-d part I_d (as polynomials m + NF(m) for the
/// non-standard monomials m of bidegree d).
std::vector<Poly> ideal_degree_basis(const Ideal& I, const BiDegree& d, const Truncation& tr);
/// The same, given the normal-form monomials of the bidegree.
std::vector<Poly> ideal_degree_basis(const Ideal& I, const std::vector<Monomial>& monomials);

/// Ideal generated by per-bidegree subspaces, processing bidegrees upward and
/// keeping only elements not already generated from lower degrees.
Ideal ideal_from_graded_pieces(const RingPtr& ring, const GradedMonomials& graded,
                               const std::map<BiDegree, std::vector<Poly>>& pieces);

/// The ideal generated by (a ∩ b)_d for every bidegree d within tr.
Ideal ideal_intersection_truncated(const Ideal& a, const Ideal& b, const Truncation& tr);

/// Throws Error("ring-mismatch") unless the presentations agree.
void require_same_ring(const RingPresentation& a, const RingPresentation& b);

} // namespace steenspec
