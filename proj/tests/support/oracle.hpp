#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here works on plain exponent vectors and dense GF(2) rows and
// never calls the Gröbner, linear-algebra or coaction code under test.

#include <steenspec/poly.hpp>
#include <steenspec/tensor_poly.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Exps = std::vector<std::uint32_t>;

// Polynomial over GF(2) in a fixed list of variables.
struct Dense
{
    std::set<Exps> terms;
    bool operator==(const Dense&) const = default;
};

struct Vars
{
    std::vector<steenspec::Generator> gens;

    std::size_t size() const { return gens.size(); }
    Dense from(const steenspec::Poly& p) const;
    steenspec::Poly to(const Dense& d) const;
    Exps exps(const steenspec::Monomial& m) const;
};

Dense add(const Dense& a, const Dense& b);
Dense mul(const Dense& a, const Dense& b);

// xi_n^(2^k) in the variables xi(1..N); xi_0 = 1.
Dense xi_pow(const Vars& v, int n, unsigned k);

// zeta_n from Σ_{i=0}^{n} xi_{n-i}^(2^i) zeta_i = 0, by plain recursion.
Dense zeta(const Vars& v, int n);

// Δ(xi_n) as a set of (left, right) exponent pairs.
std::set<std::pair<Exps, Exps>> coproduct_xi(const Vars& v, int n);

// ψ(h(t,s)) straight from the double sum, as (left exps over xi's, (i, u)).
std::set<std::pair<Exps, std::pair<int, int>>> coaction_h(const Vars& xi, int t, int s);

// Monomial relations given by sets of variable indices (all exponents 1).
struct Ring
{
    Vars vars;
    std::vector<std::vector<std::size_t>> relations;
    bool zero(const Exps& e) const;
};

// Every nonzero-in-R monomial with internal degree exactly `internal` and
// homological degree exactly `homological`.
std::vector<Exps> monomials_of(const Ring& r, std::int64_t homological, std::int64_t internal);

// f ∈ (gens) decided by spanning the degree-d piece with all m*g.
bool span_member(const Ring& r, const std::vector<Dense>& gens, const Dense& f);

// Monomial basis of R_(h,i) and spanning rows of the ideal's piece in it.
struct Piece
{
    std::vector<Exps> basis;
    std::vector<std::vector<bool>> rows;
};
Piece ideal_piece(const Ring& r, const std::vector<Dense>& gens, std::int64_t h, std::int64_t i);

// Dimension of the degree-(h,i) piece of the ideal.
std::size_t ideal_piece_rank(const Ring& r, const std::vector<Dense>& gens, std::int64_t h, std::int64_t i);

// Dense GF(2) elimination: rank of a list of rows.
std::size_t rank(std::vector<std::vector<bool>> rows);

// Radical of a monomial ideal: f ∈ √I iff each term is divisible by the
// support of some generator.
bool monomial_radical_member(const std::vector<Exps>& gens, const Dense& f);

// Adams–Margolis on an explicit finite window; -1 stands for infinity.
bool admissible_window(const std::vector<std::int64_t>& n);

// Small deterministic RNG helpers.
struct Rng
{
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(gen); }
    bool coin() { return below(2) == 1; }
};

} // namespace oracle
