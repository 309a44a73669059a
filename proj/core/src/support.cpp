#include "steenspec/support.hpp"

#include "steenspec/error.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace steenspec {

KoszulObject::KoszulObject(ExtRing ring, std::vector<Poly> elements, bool requires_invariance)
    : ring_(std::move(ring)), requires_invariance_(requires_invariance)
{
    for (auto& f : elements) {
        ring_.ring().validate(f);
        f = ring_.ring().reduce(f);
        if (!f.is_homogeneous())
            throw Error("not-homogeneous", "Koszul element " + to_string(f) + " is not homogeneous");
    }
    if (requires_invariance_)
        std::stable_sort(elements.begin(), elements.end(), [](const Poly& a, const Poly& b) {
            const auto da = a.bidegree().value_or(BiDegree{0, 0});
            const auto db = b.bidegree().value_or(BiDegree{0, 0});
            return da.homological < db.homological;
        });
    elements_ = std::move(elements);
}

SupportSet::SupportSet(const Ideal& ideal, const CoactionTable& table, bool invariant_mode)
    : ideal_(invariant_mode ? sharp(ideal, table) : ideal), invariant_mode_(invariant_mode)
{
}

SupportSet support(const KoszulObject& X, const CoactionTable& table)
{
    require_same_ring(X.ring().ring(), table.ring().ring());
    const auto& ring = X.ring().presentation();
    if (X.requires_invariance()) {
        std::vector<Poly> prior;
        for (std::size_t j = 0; j < X.elements().size(); ++j) {
            const auto& f = X.elements()[j];
            if (auto w = invariant_modulo(f, Ideal(ring, prior), table))
                throw Error("not-invariant", "element " + std::to_string(j + 1) + " (" + to_string(f) +
                                                 ") is not invariant modulo the earlier ones: component " +
                                                 to_string(w->component) + " at " + to_string(w->left));
            prior.push_back(f);
        }
    }
    return SupportSet(Ideal(ring, X.elements()), table, X.requires_invariance());
}

namespace {

void require_compatible(const SupportSet& S, const SupportSet& T)
{
    require_same_ring(S.ideal().ring(), T.ideal().ring());
    if (S.invariant_mode() != T.invariant_mode())
        throw Error("mode-mismatch", "cannot compare a plain support with an invariant one");
}

} // namespace

bool vinv_subset(const SupportSet& S, const SupportSet& T)
{
    require_compatible(S, T);
    for (const auto& g : T.ideal().generators())
        if (!radical_member(g, S.ideal()))
            return false;
    return true;
}

SupportSet support_union(const SupportSet& S, const SupportSet& T)
{
    require_compatible(S, T);
    return SupportSet(ideal_product(S.ideal(), T.ideal()), S.invariant_mode());
}

SupportSet support_intersection(const SupportSet& S, const SupportSet& T)
{
    require_compatible(S, T);
    return SupportSet(ideal_sum(S.ideal(), T.ideal()), S.invariant_mode());
}

Ideal variable_ideal(const RingPtr& ring, const std::vector<Generator>& vars)
{
    std::vector<Poly> gens;
    for (auto v : vars)
        gens.emplace_back(v);
    return Ideal(ring, std::move(gens));
}

std::vector<InvariantPrimeRecord> enumerate_monomial_invariant_primes(const CoactionTable& table)
{
    const auto& ring = table.ring().ring();
    const auto& vars = ring.variables();
    const std::size_t n = vars.size();
    if (n > 20)
        throw Error("too-many-variables", "prime enumeration is limited to 20 variables, ring has " +
                                              std::to_string(n));

    // Components of ψ(h) are single variables (distinct h's have distinct
    // internal degrees), so invariance of a variable set is closure under
    // "v appears as a component of ψ(u)".
    std::vector<std::uint32_t> needs(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [l, r] : table.generator(vars[i]).terms())
            for (const auto& [g, e] : r.factors())
                needs[i] |= std::uint32_t{1} << ring.index_of(g);
    std::vector<std::uint32_t> relation_masks;
    for (const auto& rel : ring.relations()) {
        std::uint32_t m = 0;
        for (const auto& [g, e] : rel.factors())
            m |= std::uint32_t{1} << ring.index_of(g);
        relation_masks.push_back(m);
    }

    std::vector<InvariantPrimeRecord> out;
    out.reserve(std::size_t{1} << n);
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::uint32_t)> visit = [&](std::size_t next, std::uint32_t mask) {
        InvariantPrimeRecord rec;
        for (auto i : chosen)
            rec.variables.push_back(vars[i]);
        rec.is_prime = std::all_of(relation_masks.begin(), relation_masks.end(),
                                   [&](std::uint32_t r) { return (r & mask) != 0; });
        rec.is_invariant = true;
        for (auto i : chosen)
            rec.is_invariant = rec.is_invariant && (needs[i] & ~mask) == 0;
        out.push_back(std::move(rec));
        for (std::size_t i = next; i < n; ++i) {
            chosen.push_back(i);
            visit(i + 1, mask | (std::uint32_t{1} << i));
            chosen.pop_back();
        }
    };
    visit(0, 0);
    return out;
}

Ideal star_retract(const Ideal& p, const CoactionTable& table, const Truncation& tr)
{
    return star(p, table, tr);
}

bool thick_subset(const KoszulObject& X, const KoszulObject& Y, const CoactionTable& table)
{
    return vinv_subset(support(X, table), support(Y, table));
}

Ideal spc_map_res(const Ideal& p, const ExtRing& source_elementary, const ExtRing& target)
{
    if (source_elementary.flavor() != ExtFlavor::Elementary)
        throw Error("bad-ring", "the source of res* must be an elementary Ext ring");
    require_same_ring(p.ring(), source_elementary.ring());
    const RingMap res = restriction(target, *source_elementary.quotient());
    std::vector<Poly> gens;
    for (auto g : target.ring().variables())
        if (!res.image(g))
            gens.emplace_back(g);
    for (const auto& f : p.generators())
        gens.push_back(target.ring().reduce(f));
    return Ideal(target.presentation(), std::move(gens));
}

std::string variables_to_string(const std::vector<Generator>& vars)
{
    std::string s;
    for (auto v : vars) {
        if (!s.empty())
            s += ' ';
        s += v.to_string();
    }
    return s;
}

void write_csv(std::ostream& out, const std::vector<InvariantPrimeRecord>& records)
{
    out << "variables,is_prime,is_invariant\n";
    for (const auto& r : records)
        out << '"' << variables_to_string(r.variables) << "\"," << (r.is_prime ? "true" : "false") << ','
            << (r.is_invariant ? "true" : "false") << '\n';
}

void write_dot(std::ostream& out, const std::vector<InvariantPrimeRecord>& records)
{
    std::vector<const InvariantPrimeRecord*> nodes;
    for (const auto& r : records)
        if (r.is_prime && r.is_invariant)
            nodes.push_back(&r);
    auto subset = [](const InvariantPrimeRecord& a, const InvariantPrimeRecord& b) {
        return a.variables.size() < b.variables.size() &&
               std::includes(b.variables.begin(), b.variables.end(), a.variables.begin(), a.variables.end());
    };
    out << "digraph invariant_primes {\n";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        out << "  n" << i << " [label=\"(" << variables_to_string(nodes[i]->variables) << ")\"];\n";
    // Cover relations only: a < b with nothing strictly between.
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (!subset(*nodes[i], *nodes[j]))
                continue;
            bool cover = true;
            for (std::size_t k = 0; k < nodes.size() && cover; ++k)
                cover = !(subset(*nodes[i], *nodes[k]) && subset(*nodes[k], *nodes[j]));
            if (cover)
                out << "  n" << i << " -> n" << j << ";\n";
        }
    out << "}\n";
}

} // namespace steenspec
