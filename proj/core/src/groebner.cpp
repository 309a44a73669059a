#include "steenspec/groebner.hpp"

#include "steenspec/error.hpp"

#include <algorithm>
#include <mutex>

namespace steenspec {

namespace detail {

struct GroebnerCache
{
    std::once_flag once;
    std::vector<Poly> full;
};

} // namespace detail

void require_same_ring(const RingPresentation& a, const RingPresentation& b)
{
    if (&a != &b && !(a == b))
        throw Error("ring-mismatch", "operands live in different rings");
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<detail::GroebnerCache>())
{
    if (!ring_)
        throw Error("bad-ring", "ideal without a ring");
    for (auto& g : generators) {
        ring_->validate(g);
        Poly r = ring_->reduce(g);
        if (r.is_zero())
            continue;
        if (!r.is_homogeneous())
            throw Error("not-homogeneous", "ideal generator " + to_string(r) + " is not homogeneous");
        if (std::find(generators_.begin(), generators_.end(), r) == generators_.end())
            generators_.push_back(std::move(r));
    }
}

const std::vector<Poly>& Ideal::full_basis() const
{
    std::call_once(cache_->once, [this] {
        std::vector<Poly> input = generators_;
        for (const auto& r : ring_->relations())
            input.emplace_back(r);
        cache_->full = buchberger(std::move(input));
    });
    return cache_->full;
}

namespace {

const Poly* find_divisor(const Monomial& m, const std::vector<Poly>& pool, const std::vector<std::size_t>& active)
{
    for (auto i : active)
        if (pool[i].leading().divides(m))
            return &pool[i];
    return nullptr;
}

Poly full_reduce(Poly p, const std::vector<Poly>& pool, const std::vector<std::size_t>& active)
{
    std::vector<Monomial> remainder;
    while (!p.is_zero()) {
        const Monomial m = p.leading();
        if (const Poly* g = find_divisor(m, pool, active)) {
            p += *g * g->leading().quotient_of(m);
        } else {
            remainder.push_back(m);
            p += Poly(m);
        }
    }
    return Poly::from_terms(std::move(remainder));
}

struct CriticalPair
{
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

Poly s_polynomial(const Poly& f, const Poly& g, const Monomial& lcm)
{
    return f * f.leading().quotient_of(lcm) + g * g.leading().quotient_of(lcm);
}

// Gebauer–Möller installation of a new basis element h.
void update_pairs(std::vector<Poly>& pool, std::vector<std::size_t>& active, std::vector<CriticalPair>& pairs,
                  std::size_t h)
{
    const Monomial& lh = pool[h].leading();

    std::vector<CriticalPair> fresh;
    fresh.reserve(active.size());
    for (auto g : active)
        fresh.push_back({h, g, lh.lcm(pool[g].leading())});

    std::vector<CriticalPair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
        const auto& p = fresh[k];
        bool keep = lh.coprime(pool[p.j].leading());
        if (!keep) {
            keep = true;
            for (std::size_t q = k + 1; q < fresh.size() && keep; ++q)
                if (fresh[q].lcm.divides(p.lcm))
                    keep = false;
            for (std::size_t q = 0; q < kept.size() && keep; ++q)
                if (kept[q].lcm.divides(p.lcm))
                    keep = false;
        }
        if (keep)
            kept.push_back(p);
    }

    std::vector<CriticalPair> next;
    next.reserve(pairs.size() + kept.size());
    for (auto& p : pairs) {
        const Monomial& li = pool[p.i].leading();
        const Monomial& lj = pool[p.j].leading();
        if (!lh.divides(p.lcm) || li.lcm(lh) == p.lcm || lh.lcm(lj) == p.lcm)
            next.push_back(std::move(p));
    }
    for (auto& p : kept)
        if (!lh.coprime(pool[p.j].leading()))
            next.push_back(std::move(p));
    pairs = std::move(next);

    std::erase_if(active, [&](std::size_t g) { return lh.divides(pool[g].leading()); });
    active.push_back(h);
}

} // namespace

std::vector<Poly> buchberger(std::vector<Poly> input)
{
    std::erase_if(input, [](const Poly& p) { return p.is_zero(); });
    std::sort(input.begin(), input.end(),
              [](const Poly& a, const Poly& b) { return compare(a.leading(), b.leading()) < 0; });

    std::vector<Poly> pool;
    std::vector<std::size_t> active;
    std::vector<CriticalPair> pairs;

    auto install = [&](Poly h) -> bool {
        if (h.is_zero())
            return false;
        if (h.leading().is_unit())
            return true;
        pool.push_back(std::move(h));
        update_pairs(pool, active, pairs, pool.size() - 1);
        return false;
    };

    for (auto& f : input) {
        Poly r = full_reduce(std::move(f), pool, active);
        if (install(std::move(r)))
            return {Poly::one()};
    }

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [](const CriticalPair& a, const CriticalPair& b) {
            return compare(a.lcm, b.lcm) < 0;
        });
        CriticalPair p = std::move(*best);
        if (best != pairs.end() - 1)
            *best = std::move(pairs.back());
        pairs.pop_back();
        Poly s = s_polynomial(pool[p.i], pool[p.j], p.lcm);
        Poly r = full_reduce(std::move(s), pool, active);
        if (install(std::move(r)))
            return {Poly::one()};
    }

    // Interreduce the active set into the reduced basis.
    std::vector<Poly> basis;
    basis.reserve(active.size());
    for (auto i : active)
        basis.push_back(pool[i]);
    std::sort(basis.begin(), basis.end(),
              [](const Poly& a, const Poly& b) { return compare(a.leading(), b.leading()) < 0; });
    std::vector<Poly> reduced;
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::vector<std::size_t> others;
        for (std::size_t q = 0; q < basis.size(); ++q)
            if (q != k)
                others.push_back(q);
        Poly tail = basis[k] + Poly(basis[k].leading());
        Poly r = Poly(basis[k].leading()) + full_reduce(std::move(tail), basis, others);
        reduced.push_back(std::move(r));
    }
    return reduced;
}

Poly reduce_by(const Poly& f, const std::vector<Poly>& basis)
{
    std::vector<std::size_t> all(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        all[i] = i;
    return full_reduce(f, basis, all);
}

Ideal groebner_basis(const Ideal& I)
{
    std::vector<Poly> gens;
    for (const auto& g : I.full_basis())
        if (!I.ring().reduce(g).is_zero())
            gens.push_back(g);
    return Ideal(I.ring_ptr(), std::move(gens));
}

Poly normal_form(const Poly& f, const Ideal& I)
{
    I.ring().validate(f);
    return reduce_by(f, I.full_basis());
}

bool ideal_member(const Poly& f, const Ideal& I)
{
    if (f.is_zero())
        return true;
    return normal_form(f, I).is_zero();
}

bool radical_member(const Poly& f, const Ideal& I)
{
    I.ring().validate(f);
    Poly g = I.ring().reduce(f);
    if (g.is_zero())
        return true;
    if (ideal_member(g, I))
        return true;
    std::vector<Poly> input = I.full_basis();
    input.push_back(Poly::one() + g * Monomial(Generator::inverter()));
    auto basis = buchberger(std::move(input));
    return basis.size() == 1 && basis.front().is_one();
}

bool is_unit_ideal(const Ideal& I)
{
    const auto& b = I.full_basis();
    return b.size() == 1 && b.front().is_one();
}

bool ideal_contains(const Ideal& big, const Ideal& small)
{
    require_same_ring(big.ring(), small.ring());
    for (const auto& g : small.generators())
        if (!ideal_member(g, big))
            return false;
    return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b)
{
    require_same_ring(a.ring(), b.ring());
    return groebner_basis(a).generators() == groebner_basis(b).generators();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b)
{
    require_same_ring(a.ring(), b.ring());
    std::vector<Poly> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b)
{
    require_same_ring(a.ring(), b.ring());
    std::vector<Poly> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators())
            gens.push_back(a.ring().reduce(f * g));
    return Ideal(a.ring_ptr(), std::move(gens));
}

namespace {

std::vector<Poly> degree_piece(const Ideal& I, const std::vector<Monomial>& monomials)
{
    std::vector<Poly> out;
    const auto& basis = I.full_basis();
    for (const auto& m : monomials) {
        Poly nf = reduce_by(Poly(m), basis);
        if (!(nf.size() == 1 && nf.leading() == m))
            out.push_back(Poly(m) + nf);
    }
    return out;
}

} // namespace

std::vector<Poly> ideal_degree_basis(const Ideal& I, const BiDegree& d, const Truncation& tr)
{
    return degree_piece(I, bidegree_basis(I.ring(), d, tr));
}

std::vector<Poly> ideal_degree_basis(const Ideal& I, const std::vector<Monomial>& monomials)
{
    return degree_piece(I, monomials);
}

Ideal ideal_from_graded_pieces(const RingPtr& ring, const GradedMonomials& graded,
                               const std::map<BiDegree, std::vector<Poly>>& pieces)
{
    for (const auto& [d, ps] : pieces)
        if (!ps.empty() && graded.dimension(d) == 0)
            throw Error("bounds-exceeded", "graded piece at " + to_string(d) + " lies outside the truncation");

    std::map<BiDegree, std::vector<BitVector>> spans;
    std::vector<Poly> gens;
    for (const auto& d : graded.bidegrees()) {
        EchelonBasis echelon(graded.dimension(d));
        for (auto v : ring->variables()) {
            auto it = spans.find(d - v.bidegree());
            if (it == spans.end())
                continue;
            const BiDegree lower = d - v.bidegree();
            const Monomial mv(v);
            for (const auto& bits : it->second)
                echelon.insert(graded.to_bits(ring->reduce(graded.from_bits(bits, lower) * mv), d));
        }
        if (auto it = pieces.find(d); it != pieces.end()) {
            for (const auto& p : it->second)
                if (echelon.insert(graded.to_bits(p, d)))
                    gens.push_back(p);
        }
        if (echelon.rank() > 0)
            spans.emplace(d, echelon.rows());
    }
    return Ideal(ring, std::move(gens));
}

Ideal ideal_intersection_truncated(const Ideal& a, const Ideal& b, const Truncation& tr)
{
    require_same_ring(a.ring(), b.ring());
    GradedMonomials graded(a.ring(), tr);
    std::map<BiDegree, std::vector<Poly>> pieces;
    for (const auto& d : graded.bidegrees()) {
        auto pa = degree_piece(a, graded.basis(d));
        auto pb = degree_piece(b, graded.basis(d));
        if (pa.empty() || pb.empty())
            continue;
        std::vector<BitVector> vecs;
        for (const auto& p : pa)
            vecs.push_back(graded.to_bits(p, d));
        for (const auto& p : pb)
            vecs.push_back(graded.to_bits(p, d));
        for (const auto& rel : relations_among(vecs)) {
            BitVector sum(graded.dimension(d));
            for (std::size_t i = 0; i < pa.size(); ++i)
                if (rel.test(i))
                    sum ^= vecs[i];
            if (!sum.none())
                pieces[d].push_back(graded.from_bits(sum, d));
        }
    }
    return Ideal(a.ring_ptr(), ideal_from_graded_pieces(a.ring_ptr(), graded, pieces).generators());
}

} // namespace steenspec
