#include "steenspec/ring.hpp"

#include "steenspec/error.hpp"

#include <algorithm>

namespace steenspec {

RingPresentation::RingPresentation(std::vector<Generator> variables, std::vector<Monomial> relations)
    : variables_(std::move(variables)), relations_(std::move(relations))
{
    std::sort(variables_.begin(), variables_.end());
    variables_.erase(std::unique(variables_.begin(), variables_.end()), variables_.end());
    for (auto g : variables_)
        if (g.bidegree().internal <= 0)
            throw Error("bad-ring", "ring variable " + g.to_string() + " must have positive internal degree");
    for (const auto& r : relations_) {
        if (r.is_unit())
            throw Error("bad-ring", "the unit cannot be a relation");
        validate(r);
    }
    std::sort(relations_.begin(), relations_.end(), MonomialGreater{});
    relations_.erase(std::unique(relations_.begin(), relations_.end()), relations_.end());
}

bool RingPresentation::has_variable(Generator g) const noexcept
{
    return std::binary_search(variables_.begin(), variables_.end(), g);
}

int RingPresentation::index_of(Generator g) const noexcept
{
    auto it = std::lower_bound(variables_.begin(), variables_.end(), g);
    if (it == variables_.end() || !(*it == g))
        return -1;
    return static_cast<int>(it - variables_.begin());
}

bool RingPresentation::is_zero_monomial(const Monomial& m) const noexcept
{
    for (const auto& r : relations_)
        if (r.divides(m))
            return true;
    return false;
}

ZeroTest RingPresentation::zero_test() const
{
    if (relations_.empty())
        return {};
    return [this](const Monomial& m) { return is_zero_monomial(m); };
}

Poly RingPresentation::reduce(const Poly& p) const
{
    if (relations_.empty())
        return p;
    std::vector<Monomial> keep;
    keep.reserve(p.size());
    for (const auto& m : p.terms())
        if (!is_zero_monomial(m))
            keep.push_back(m);
    if (keep.size() == p.size())
        return p;
    return Poly::from_terms(std::move(keep));
}

void RingPresentation::validate(const Monomial& m) const
{
    for (const auto& [g, e] : m.factors())
        if (!has_variable(g))
            throw Error("unknown-generator", "generator " + g.to_string() + " is not a variable of the ring");
}

void RingPresentation::validate(const Poly& p) const
{
    for (const auto& m : p.terms())
        validate(m);
}

Poly poly_mul(const Poly& a, const Poly& b, const RingPresentation& ring)
{
    ring.validate(a);
    ring.validate(b);
    return ring.reduce(a * b);
}

namespace {

// Depth-first over the variables in order; a partial monomial already
// divisible by a relation is pruned since every extension stays zero.
void enumerate_into(const RingPresentation& ring, const Truncation& tr, std::size_t index, const Monomial& partial,
                    const std::function<void(const Monomial&)>& emit)
{
    const auto& vars = ring.variables();
    if (index == vars.size()) {
        emit(partial);
        return;
    }
    const Generator g = vars[index];
    const BiDegree step = g.bidegree();
    Monomial current = partial;
    enumerate_into(ring, tr, index + 1, current, emit);
    const Monomial single(g);
    while (true) {
        BiDegree next = current.bidegree() + step;
        if (!tr.contains(next))
            break;
        current = current * single;
        if (ring.is_zero_monomial(current))
            break;
        enumerate_into(ring, tr, index + 1, current, emit);
    }
}

} // namespace

std::map<BiDegree, std::vector<Monomial>> enumerate_monomials(const RingPresentation& ring, const Truncation& tr)
{
    std::map<BiDegree, std::vector<Monomial>> out;
    enumerate_into(ring, tr, 0, Monomial{}, [&](const Monomial& m) { out[m.bidegree()].push_back(m); });
    for (auto& [d, ms] : out)
        std::sort(ms.begin(), ms.end(), MonomialGreater{});
    return out;
}

std::vector<Monomial> bidegree_basis(const RingPresentation& ring, const BiDegree& d, const Truncation& tr)
{
    if (!tr.contains(d))
        throw Error("bounds-exceeded", "bidegree " + to_string(d) + " lies outside the truncation");
    Truncation exact = tr;
    exact.max_homological = d.homological;
    exact.max_internal = d.internal;
    std::vector<Monomial> out;
    enumerate_into(ring, exact, 0, Monomial{}, [&](const Monomial& m) {
        if (m.bidegree() == d)
            out.push_back(m);
    });
    std::sort(out.begin(), out.end(), MonomialGreater{});
    return out;
}

} // namespace steenspec

namespace steenspec {

GradedMonomials::GradedMonomials(const RingPresentation& ring, const Truncation& tr)
    : tr_(tr), basis_(enumerate_monomials(ring, tr))
{
    for (const auto& [d, ms] : basis_) {
        order_.push_back(d);
        for (std::size_t i = 0; i < ms.size(); ++i)
            index_.emplace(ms[i], i);
    }
    std::sort(order_.begin(), order_.end(), [](const BiDegree& a, const BiDegree& b) {
        return a.internal != b.internal ? a.internal < b.internal : a.homological < b.homological;
    });
}

const std::vector<Monomial>& GradedMonomials::basis(const BiDegree& d) const
{
    static const std::vector<Monomial> empty;
    auto it = basis_.find(d);
    return it == basis_.end() ? empty : it->second;
}

long GradedMonomials::index_of(const Monomial& m) const
{
    auto it = index_.find(m);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

BitVector GradedMonomials::to_bits(const Poly& p, const BiDegree& d) const
{
    BitVector v(dimension(d));
    for (const auto& m : p.terms()) {
        if (m.bidegree() != d)
            throw Error("not-homogeneous", "term " + to_string(m) + " is not of bidegree " + to_string(d));
        long i = index_of(m);
        if (i < 0)
            throw Error("bounds-exceeded", "monomial " + to_string(m) + " is not a normal-form basis monomial");
        v.flip(static_cast<std::size_t>(i));
    }
    return v;
}

Poly GradedMonomials::from_bits(const BitVector& v, const BiDegree& d) const
{
    const auto& b = basis(d);
    std::vector<Monomial> terms;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.test(i))
            terms.push_back(b.at(i));
    return Poly::from_terms(std::move(terms));
}

} // namespace steenspec
