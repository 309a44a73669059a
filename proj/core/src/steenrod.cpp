#include "steenspec/steenrod.hpp"

#include "steenspec/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace steenspec {

Poly xi_power(int n, unsigned k)
{
    if (n == 0)
        return Poly::one();
    return Poly(Monomial(Generator::xi(n), std::uint32_t{1} << k));
}

namespace {

TensorPoly coproduct_of_xi(int n)
{
    std::vector<TensorPoly::Term> terms;
    for (int i = 0; i <= n; ++i) {
        Monomial left = (n - i == 0) ? Monomial{} : Monomial(Generator::xi(n - i), std::uint32_t{1} << i);
        Monomial right = (i == 0) ? Monomial{} : Monomial(Generator::xi(i));
        terms.emplace_back(std::move(left), std::move(right));
    }
    return TensorPoly::from_terms(std::move(terms));
}

} // namespace

TensorPoly coproduct(const Poly& p, const QuotientHopf* quotient)
{
    ZeroTest zero;
    if (quotient)
        zero = [quotient](const Monomial& m) { return quotient->is_zero_monomial(m); };

    TensorPoly total;
    for (const auto& m : p.terms()) {
        TensorPoly acc = TensorPoly::one();
        for (const auto& [g, e] : m.factors()) {
            if (!g.is_xi())
                throw Error("not-xi", "coproduct is defined on polynomials in the xi's; got " + g.to_string());
            const TensorPoly base = coproduct_of_xi(g.xi_index());
            // Δ(xi)^e as a product of Frobenius twists, one per set bit of e.
            for (unsigned bit = 0; bit < 32; ++bit)
                if (e & (std::uint32_t{1} << bit))
                    acc = acc.multiply(base.frobenius(bit), zero, zero);
        }
        total += quotient ? acc.reduce(zero, zero) : acc;
    }
    return total;
}

Poly counit(const Poly& p)
{
    for (const auto& m : p.terms())
        if (m.is_unit())
            return Poly::one();
    return {};
}

const Poly& conjugate(int n)
{
    if (n < 0)
        throw Error("bad-generator", "conjugate needs n >= 0");
    static std::mutex mutex;
    static std::map<int, Poly> memo{{0, Poly::one()}};
    std::lock_guard lock(mutex);
    for (int k = 1; k <= n; ++k) {
        if (memo.count(k))
            continue;
        // zeta_k = Σ_{i<k} xi_{k-i}^(2^i) zeta_i over GF(2).
        Poly z;
        for (int i = 0; i < k; ++i)
            z += memo.at(i) * xi_power(k - i, static_cast<unsigned>(i)).leading();
        memo.emplace(k, std::move(z));
    }
    return memo.at(n);
}

Poly antipode(const Poly& p)
{
    Poly total;
    for (const auto& m : p.terms()) {
        Poly acc = Poly::one();
        for (const auto& [g, e] : m.factors()) {
            if (!g.is_xi())
                throw Error("not-xi", "antipode is defined on polynomials in the xi's; got " + g.to_string());
            acc = acc * conjugate(g.xi_index()).pow(e);
        }
        total += acc;
    }
    return total;
}

bool in_double_subalgebra(const Monomial& m)
{
    for (const auto& [g, e] : m.factors()) {
        if (!g.is_xi())
            continue;
        const std::uint64_t step = std::uint64_t{1} << std::min(g.xi_index(), 63);
        if (e % step != 0)
            return false;
    }
    return true;
}

} // namespace steenspec
