#include "steenspec/invariant_ideals.hpp"

#include "steenspec/error.hpp"

#include <algorithm>
#include <map>

namespace steenspec {

namespace {

void require_table_ring(const Ideal& I, const CoactionTable& table)
{
    require_same_ring(I.ring(), table.ring().ring());
}

// Number of ring monomials with bidegree below d, componentwise.
std::size_t monomials_below(const RingPresentation& ring, const BiDegree& d, int max_t)
{
    Truncation tr{max_t, d.internal, d.homological};
    std::size_t n = 0;
    for (const auto& [deg, ms] : enumerate_monomials(ring, tr))
        n += ms.size();
    return n;
}

Ideal with_extra(const Ideal& I, const Poly& p)
{
    auto gens = I.generators();
    gens.push_back(p);
    return Ideal(I.ring_ptr(), std::move(gens));
}

// Keys a tensor term (left monomial, standard monomial) to a column index.
class ColumnIndex
{
public:
    std::size_t operator()(const Monomial& left, const Monomial& right)
    {
        auto [it, fresh] = index_.try_emplace({left, right}, index_.size());
        return it->second;
    }
    std::size_t size() const { return index_.size(); }

private:
    struct Less
    {
        bool operator()(const TensorPoly::Term& a, const TensorPoly::Term& b) const { return compare(a, b) < 0; }
    };
    std::map<TensorPoly::Term, std::size_t, Less> index_;
};

BitVector from_indices(const std::vector<std::size_t>& idx, std::size_t size)
{
    BitVector v(size);
    for (auto i : idx)
        v.flip(i);
    return v;
}

} // namespace

Ideal sharp(const Ideal& I, const CoactionTable& table)
{
    require_table_ring(I, table);
    if (is_unit_ideal(I) || I.generators().empty())
        return I;

    BiDegree top{0, 0};
    for (const auto& g : I.generators()) {
        const auto d = *g.bidegree();
        top = {std::max(top.homological, d.homological), std::max(top.internal, d.internal)};
    }
    const std::size_t guard = monomials_below(I.ring(), top, table.ring().truncation().max_t) + 1;

    Ideal current = I;
    std::vector<Poly> pending = I.generators();
    std::size_t rounds = 0;
    while (!pending.empty()) {
        if (++rounds > guard)
            throw Error("guard-exceeded", "sharp did not stabilise within " + std::to_string(guard) + " rounds");
        std::vector<Poly> added;
        for (const auto& g : pending)
            for (const auto& [left, component] : coaction_poly(g, table).right_components()) {
                if (ideal_member(component, current))
                    continue;
                current = with_extra(current, component);
                added.push_back(component);
            }
        pending = std::move(added);
    }
    return current;
}

Ideal star(const Ideal& I, const CoactionTable& table, const Truncation& tr)
{
    require_table_ring(I, table);
    GradedMonomials graded(I.ring(), tr);
    std::map<Monomial, Poly, MonomialGreater> nf_memo;
    auto nf = [&](const Poly& p) {
        Poly out;
        for (const auto& m : p.terms()) {
            auto it = nf_memo.find(m);
            if (it == nf_memo.end())
                it = nf_memo.emplace(m, normal_form(Poly(m), I)).first;
            out += it->second;
        }
        return out;
    };

    std::map<BiDegree, std::vector<Poly>> pieces;
    for (const auto& d : graded.bidegrees()) {
        const auto basis = ideal_degree_basis(I, graded.basis(d));
        if (basis.empty())
            continue;
        ColumnIndex columns;
        std::vector<std::vector<std::size_t>> rows;
        for (const auto& b : basis) {
            std::vector<std::size_t> row;
            for (const auto& [left, component] : coaction_poly(b, table).right_components()) {
                const Poly reduced = nf(component);
                for (const auto& u : reduced.terms())
                    row.push_back(columns(left, u));
            }
            rows.push_back(std::move(row));
        }
        std::vector<BitVector> vectors;
        for (const auto& r : rows)
            vectors.push_back(from_indices(r, columns.size()));
        auto& piece = pieces[d];
        for (const auto& c : relations_among(vectors)) {
            Poly x;
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (c.test(i))
                    x += basis[i];
            piece.push_back(std::move(x));
        }
    }
    return ideal_from_graded_pieces(I.ring_ptr(), graded, pieces);
}

InvariantIdealReport is_invariant(const Ideal& I, const CoactionTable& table)
{
    require_table_ring(I, table);
    InvariantIdealReport report{I, true, std::nullopt};
    for (const auto& g : I.generators())
        for (const auto& [left, component] : coaction_poly(g, table).right_components())
            if (!ideal_member(component, I)) {
                report.is_invariant = false;
                report.witness = InvarianceWitness{g, left, component};
                return report;
            }
    return report;
}

std::optional<InvarianceWitness> invariant_modulo(const Poly& f, const Ideal& prior, const CoactionTable& table)
{
    require_table_ring(prior, table);
    const Ideal closed = sharp(prior, table);
    for (const auto& [left, component] : coaction_poly(f, table).right_components())
        if (!left.is_unit() && !ideal_member(component, closed))
            return InvarianceWitness{f, left, component};
    return std::nullopt;
}

std::vector<GradedPiece> invariants_subring(const CoactionTable& table, const Truncation& tr)
{
    const auto& ring = table.ring().ring();
    GradedMonomials graded(ring, tr);
    std::vector<GradedPiece> out;
    for (const auto& d : graded.bidegrees()) {
        const auto& basis = graded.basis(d);
        ColumnIndex columns;
        std::vector<std::vector<std::size_t>> rows;
        for (const auto& m : basis) {
            std::vector<std::size_t> row;
            for (const auto& [l, r] : table.monomial(m).terms())
                if (!(l.is_unit() && r == m))
                    row.push_back(columns(l, r));
            rows.push_back(std::move(row));
        }
        std::vector<BitVector> vectors;
        for (const auto& r : rows)
            vectors.push_back(from_indices(r, columns.size()));
        GradedPiece piece{d, {}};
        for (const auto& c : relations_among(vectors)) {
            Poly x;
            for (std::size_t i = 0; i < basis.size(); ++i)
                if (c.test(i))
                    x += Poly(basis[i]);
            piece.basis.push_back(std::move(x));
        }
        if (!piece.basis.empty())
            out.push_back(std::move(piece));
    }
    return out;
}

} // namespace steenspec
