#pragma once

#include "steenspec/linalg.hpp"
#include "steenspec/poly.hpp"
#include "steenspec/tensor_poly.hpp"

#include <map>
#include <unordered_map>
#include <memory>
#include <string>
#include <vector>

namespace steenspec {

/// Desk-scale finiteness bounds. max_t bounds the variable set; the degree
/// bounds apply to enumeration and per-bidegree linear algebra.
struct Truncation
{
    int max_t = 4;
    std::int64_t max_internal = 64;
    std::int64_t max_homological = 64;

    bool contains(const BiDegree& d) const noexcept
    {
        return d.homological >= 0 && d.internal >= 0 && d.homological <= max_homological &&
               d.internal <= max_internal;
    }
    bool operator==(const Truncation&) const = default;
};

enum class MonomialOrderKind { HomologicalInternalGrevlex };

/// A polynomial ring over GF(2) on finitely many generators modulo monomial
/// relations. Variables are kept in generator order.
class RingPresentation
{
public:
    RingPresentation() = default;
    RingPresentation(std::vector<Generator> variables, std::vector<Monomial> relations);

    const std::vector<Generator>& variables() const noexcept { return variables_; }
    const std::vector<Monomial>& relations() const noexcept { return relations_; }
    MonomialOrderKind order() const noexcept { return MonomialOrderKind::HomologicalInternalGrevlex; }

    bool has_variable(Generator g) const noexcept;
    /// Index in the variable list, or -1.
    int index_of(Generator g) const noexcept;

    /// True when m is divisible by some relation monomial.
    bool is_zero_monomial(const Monomial& m) const noexcept;
    ZeroTest zero_test() const;

    /// Normal form modulo the monomial relations.
    Poly reduce(const Poly& p) const;
    /// Throws unless every generator of p is a variable of this ring.
    void validate(const Poly& p) const;
    void validate(const Monomial& m) const;

    bool operator==(const RingPresentation& o) const noexcept
    {
        return variables_ == o.variables_ && relations_ == o.relations_;
    }

private:
    std::vector<Generator> variables_;
    std::vector<Monomial> relations_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

/// Product reduced modulo the ring's monomial relations.
Poly poly_mul(const Poly& a, const Poly& b, const RingPresentation& ring);

/// Normal-form monomials of exactly bidegree d, in descending monomial order.
std::vector<Monomial> bidegree_basis(const RingPresentation& ring, const BiDegree& d, const Truncation& tr);

/// Every normal-form monomial within the truncation, grouped by bidegree.
std::map<BiDegree, std::vector<Monomial>> enumerate_monomials(const RingPresentation& ring, const Truncation& tr);

} // namespace steenspec

namespace steenspec {

/// Normal-form monomials of a ring within a truncation, indexed per bidegree
/// so that homogeneous polynomials can be moved to and from GF(2) vectors.
class GradedMonomials
{
public:
    GradedMonomials(const RingPresentation& ring, const Truncation& tr);

    const Truncation& truncation() const noexcept { return tr_; }
    /// Bidegrees with a nonempty basis, ascending by (internal, homological).
    const std::vector<BiDegree>& bidegrees() const noexcept { return order_; }
    /// Basis of bidegree d (empty when d is outside the truncation or empty).
    const std::vector<Monomial>& basis(const BiDegree& d) const;
    std::size_t dimension(const BiDegree& d) const { return basis(d).size(); }

    /// Index of m in basis(m.bidegree()), or -1.
    long index_of(const Monomial& m) const;

    /// Coordinates of a homogeneous polynomial of bidegree d.
    BitVector to_bits(const Poly& p, const BiDegree& d) const;
    Poly from_bits(const BitVector& v, const BiDegree& d) const;

private:
    Truncation tr_;
    std::map<BiDegree, std::vector<Monomial>> basis_;
    std::vector<BiDegree> order_;
    std::unordered_map<Monomial, std::size_t> index_;
};

} // namespace steenspec
