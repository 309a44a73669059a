#include "steenspec/coaction.hpp"

#include "steenspec/error.hpp"
#include "steenspec/steenrod.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

namespace steenspec {

TensorPoly coaction_generator(int t, int s)
{
    if (s < 0 || s >= t)
        throw Error("bad-generator", "coaction needs 0 <= s < t, got h(" + std::to_string(t) + "," +
                                         std::to_string(s) + ")");
    (void)Generator::h(t, s); // range check
    std::vector<TensorPoly::Term> terms;
    for (int j = 0; j <= (t - s - 1) / 2; ++j) {
        const Poly zeta = conjugate(j).frobenius(static_cast<unsigned>(s));
        for (int i = j + s + 1; i <= t - j; ++i) {
            const Poly left = zeta * xi_power(t - i - j, static_cast<unsigned>(i + j + s));
            const Monomial right(Generator::h(i, j + s));
            for (const auto& m : left.terms())
                terms.emplace_back(m, right);
        }
    }
    return TensorPoly::from_terms(std::move(terms));
}

namespace detail {
struct CoactionCache
{
    std::map<Generator, TensorPoly> generators; // written once, in the constructor
    std::mutex mutex;
    std::unordered_map<Monomial, TensorPoly> values;
};
} // namespace detail

namespace {

TensorPoly restrict_right(const TensorPoly& v, const RingPresentation& ring)
{
    std::vector<TensorPoly::Term> kept;
    for (const auto& [l, r] : v.terms()) {
        bool alive = true;
        for (const auto& [g, e] : r.factors())
            alive = alive && ring.has_variable(g);
        if (alive && !ring.is_zero_monomial(r))
            kept.emplace_back(l, r);
    }
    return TensorPoly::from_terms(std::move(kept));
}

} // namespace

CoactionTable::CoactionTable(ExtRing ring)
    : ring_(std::move(ring)), cache_(std::make_shared<detail::CoactionCache>())
{
    // Variables are few, so fill them eagerly; products are memoized lazily.
    for (auto g : ring_.ring().variables())
        cache_->generators.emplace(g, restrict_right(coaction_generator(g.t(), g.s()), ring_.ring()));
}

const TensorPoly& CoactionTable::generator(Generator g) const
{
    if (!ring_.ring().has_variable(g))
        throw Error("unknown-generator", "generator " + g.to_string() + " is not in the ring");
    return cache_->generators.at(g);
}

const TensorPoly& CoactionTable::monomial(const Monomial& m) const
{
    {
        std::lock_guard lock(cache_->mutex);
        if (auto it = cache_->values.find(m); it != cache_->values.end())
            return it->second;
    }
    ring_.ring().validate(m);
    const auto& ring = ring_.ring();
    const ZeroTest right_zero = ring.zero_test();

    TensorPoly value;
    if (m.is_unit()) {
        value = TensorPoly::one();
    } else if (m.factors().size() == 1 && m.factors()[0].second == 1) {
        value = generator(m.factors()[0].first);
    } else if (ring.is_zero_monomial(m)) {
        value = TensorPoly();
    } else {
        // Split off the last factor and recurse; ψ(g^e) is built from the
        // Frobenius twists ψ(g)^(2^k) for the set bits of e.
        const auto& [g, e] = m.factors().back();
        auto rest_factors = m.factors();
        rest_factors.pop_back();
        const Monomial rest = Monomial::from_factors(rest_factors);
        TensorPoly power = TensorPoly::one();
        const TensorPoly& base = generator(g);
        for (unsigned k = 0; (e >> k) != 0; ++k)
            if ((e >> k) & 1U)
                power = power.multiply(base.frobenius(k).reduce({}, right_zero), {}, right_zero);
        value = monomial(rest).multiply(power, {}, right_zero);
    }
    std::lock_guard lock(cache_->mutex);
    return cache_->values.try_emplace(m, std::move(value)).first->second;
}

TensorPoly coaction_poly(const Poly& p, const CoactionTable& table)
{
    table.ring().ring().validate(p);
    std::vector<TensorPoly::Term> terms;
    for (const auto& m : p.terms()) {
        const auto& v = table.monomial(m);
        terms.insert(terms.end(), v.terms().begin(), v.terms().end());
    }
    return TensorPoly::from_terms(std::move(terms));
}

CoactionTable coaction_restricted(const QuotientHopf& E, const CoactionTable& table)
{
    return CoactionTable(ext_of_elementary(E, table.ring().truncation()));
}

std::vector<Monomial> left_factors_outside_double(const TensorPoly& value)
{
    std::vector<Monomial> out;
    for (const auto& [l, r] : value.terms())
        if (!in_double_subalgebra(l))
            out.push_back(l);
    std::sort(out.begin(), out.end(), MonomialGreater{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace steenspec
