#pragma once

#include "steenspec/invariant_ideals.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace steenspec {

/// S^0/f_1 ⊗ ... ⊗ S^0/f_k recorded by its elements. With
/// requires_invariance (the A-level construction) each f_j must be
/// invariant modulo the earlier ones; the list is then taken in ascending
/// homological degree (stable for ties).
class KoszulObject
{
public:
    KoszulObject(ExtRing ring, std::vector<Poly> elements, bool requires_invariance);

    const ExtRing& ring() const noexcept { return ring_; }
    const std::vector<Poly>& elements() const noexcept { return elements_; }
    bool requires_invariance() const noexcept { return requires_invariance_; }

private:
    ExtRing ring_;
    std::vector<Poly> elements_;
    bool requires_invariance_;
};

/// V(I), or V^inv(I) in invariant mode, where I is replaced by its sharp
/// closure (the two have the same invariant locus).
class SupportSet
{
public:
    SupportSet(const Ideal& ideal, const CoactionTable& table, bool invariant_mode);

    const Ideal& ideal() const noexcept { return ideal_; }
    bool invariant_mode() const noexcept { return invariant_mode_; }

private:
    friend SupportSet support_union(const SupportSet&, const SupportSet&);
    friend SupportSet support_intersection(const SupportSet&, const SupportSet&);
    SupportSet(Ideal ideal, bool invariant_mode) : ideal_(std::move(ideal)), invariant_mode_(invariant_mode) {}

    Ideal ideal_;
    bool invariant_mode_;
};

/// Throws Error("not-invariant") naming the first f_j that fails its
/// invariance condition.
SupportSet support(const KoszulObject& X, const CoactionTable& table);

/// S ⊆ T: every generator of T's ideal lies in the radical of S's.
/// Throws Error("ring-mismatch") or Error("mode-mismatch").
bool vinv_subset(const SupportSet& S, const SupportSet& T);

/// Union through the product ideal, intersection through the sum.
SupportSet support_union(const SupportSet& S, const SupportSet& T);
SupportSet support_intersection(const SupportSet& S, const SupportSet& T);

struct InvariantPrimeRecord
{
    std::vector<Generator> variables;
    bool is_prime = false;
    bool is_invariant = false;
};

/// Every subset of the ring variables, ordered lexicographically by variable
/// index, flagged prime (meets every relation monomial) and invariant
/// (closed under taking coaction components). Throws
/// Error("too-many-variables") above 20 variables.
std::vector<InvariantPrimeRecord> enumerate_monomial_invariant_primes(const CoactionTable& table);

/// The ideal generated by a set of variables.
Ideal variable_ideal(const RingPtr& ring, const std::vector<Generator>& vars);

/// p ↦ p*, truncated to tr.
Ideal star_retract(const Ideal& p, const CoactionTable& table, const Truncation& tr);

/// thick⟨X⟩ ⊆ thick⟨Y⟩, decided on supports.
bool thick_subset(const KoszulObject& X, const KoszulObject& Y, const CoactionTable& table);

/// Preimage under the restriction to an elementary quotient: the dead
/// generators together with the generators of p. `p` lives in the
/// elementary ring, `target` is the D-limit ring.
Ideal spc_map_res(const Ideal& p, const ExtRing& source_elementary, const ExtRing& target);

/// Hasse diagram of the invariant primes among `records` under inclusion.
void write_dot(std::ostream& out, const std::vector<InvariantPrimeRecord>& records);
/// Columns: variables,is_prime,is_invariant.
void write_csv(std::ostream& out, const std::vector<InvariantPrimeRecord>& records);

std::string variables_to_string(const std::vector<Generator>& vars);

} // namespace steenspec
