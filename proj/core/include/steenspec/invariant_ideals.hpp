#pragma once

#include "steenspec/coaction.hpp"
#include "steenspec/groebner.hpp"

#include <optional>
#include <vector>

namespace steenspec {

/// A coaction component that escapes an ideal: the right factor paired with
/// `left` in ψ(generator) is not in the ideal.
struct InvarianceWitness
{
    Poly generator;
    Monomial left;
    Poly component;
};

struct InvariantIdealReport
{
    Ideal ideal;
    bool is_invariant = false;
    std::optional<InvarianceWitness> witness;
};

/// Smallest invariant ideal containing I: adjoin the right-factor components
/// of ψ(g) for every generator g until nothing new appears. Throws
/// Error("guard-exceeded") if the iteration runs past the number of ring
/// monomials below the generators' degrees.
Ideal sharp(const Ideal& I, const CoactionTable& table);

/// Largest invariant subideal, computed bidegree by bidegree within tr:
/// the ideal generated by every x in I_d whose coaction components all lie in I.
Ideal star(const Ideal& I, const CoactionTable& table, const Truncation& tr);

InvariantIdealReport is_invariant(const Ideal& I, const CoactionTable& table);

/// Every component of ψ(f) paired with a non-unit left factor lies in
/// sharp(prior). Returns the first component that does not, if any.
std::optional<InvarianceWitness> invariant_modulo(const Poly& f, const Ideal& prior, const CoactionTable& table);

struct GradedPiece
{
    BiDegree degree;
    std::vector<Poly> basis;
};

/// Per bidegree, a basis of {x : ψ(x) = 1 ⊗ x}. Bidegrees with no
/// invariants are omitted; order follows GradedMonomials::bidegrees().
std::vector<GradedPiece> invariants_subring(const CoactionTable& table, const Truncation& tr);

} // namespace steenspec
