#pragma once

#include "steenspec/profile.hpp"
#include "steenspec/ring.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace steenspec {

enum class ExtFlavor { Elementary, DLimit };

/// A presentation of an Ext ring up to F-isomorphism: the polynomial ring on
/// h(t,s) for the surviving xi_t^(2^s) of an elementary quotient, or the
/// limit ring F2[h(t,s) : s < t] / (h(t,s) h(v,u) : t <= u) attached to D.
/// h(t,s) denotes the same class in every ring; only max_t bounds the
/// variable set.
class ExtRing
{
public:
    ExtFlavor flavor() const noexcept { return flavor_; }
    /// The elementary quotient; empty for the D-limit ring.
    const std::optional<QuotientHopf>& quotient() const noexcept { return quotient_; }
    const Truncation& truncation() const noexcept { return truncation_; }
    const RingPresentation& ring() const noexcept { return *presentation_; }
    const RingPtr& presentation() const noexcept { return presentation_; }

    bool operator==(const ExtRing& o) const
    {
        return flavor_ == o.flavor_ && truncation_ == o.truncation_ && *presentation_ == *o.presentation_;
    }

private:
    friend ExtRing ext_of_elementary(const QuotientHopf&, const Truncation&);
    friend ExtRing d_limit_ring(const Truncation&);

    ExtFlavor flavor_ = ExtFlavor::DLimit;
    std::optional<QuotientHopf> quotient_;
    Truncation truncation_;
    RingPtr presentation_;
};

/// Polynomial ring on the alive h(t,s), t <= max_t; no relations.
/// Throws Error("not-elementary").
ExtRing ext_of_elementary(const QuotientHopf& q, const Truncation& tr);

/// Variables h(t,s), s < t <= max_t; relations h(t,s) h(v,u) whenever t <= u.
ExtRing d_limit_ring(const Truncation& tr);

/// {"flavor":"elementary","profile":"...","max_t":N} or {"flavor":"d-limit","max_t":N}.
/// Degree bounds come from `bounds`; its max_t is replaced by the descriptor's.
ExtRing ring_from_descriptor(std::string_view json, const Truncation& bounds);
std::string ring_descriptor(const ExtRing& ring);

/// A ring map that sends each generator to itself or to zero.
class RingMap
{
public:
    RingMap(ExtRing source, ExtRing target);

    const ExtRing& source() const noexcept { return source_; }
    const ExtRing& target() const noexcept { return target_; }

    /// The image of a source generator, or nullopt when it is killed.
    std::optional<Generator> image(Generator g) const;
    Poly apply(const Poly& p) const;

private:
    ExtRing source_;
    ExtRing target_;
};

/// res_{D,E}: keeps h(t,s) alive in q, kills the rest. Throws
/// Error("ill-defined-map") if some relation has both factors alive.
RingMap restriction(const ExtRing& source, const QuotientHopf& q);

/// The generators of E_i lie among those of E_j, and the union over i of the
/// E_i generators is the generator set of E (within tr).
bool direct_limit_consistency(const QuotientHopf& E, std::int64_t i, std::int64_t j, const Truncation& tr);

} // namespace steenspec
