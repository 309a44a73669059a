#include "steenspec/poly.hpp"

#include <algorithm>

namespace steenspec {

Poly Poly::from_terms(std::vector<Monomial> terms)
{
    std::sort(terms.begin(), terms.end(), MonomialGreater{});
    Poly p;
    p.terms_.reserve(terms.size());
    std::size_t i = 0;
    while (i < terms.size()) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            p.terms_.push_back(std::move(terms[i]));
        i = j;
    }
    return p;
}

bool Poly::is_homogeneous() const noexcept
{
    for (const auto& m : terms_)
        if (m.bidegree() != terms_.front().bidegree())
            return false;
    return true;
}

std::optional<BiDegree> Poly::bidegree() const noexcept
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return terms_.front().bidegree();
}

bool Poly::contains(const Monomial& m) const noexcept
{
    return std::binary_search(terms_.begin(), terms_.end(), m, MonomialGreater{});
}

Poly& Poly::operator+=(const Poly& o)
{
    *this = *this + o;
    return *this;
}

Poly Poly::operator+(const Poly& o) const
{
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        int c = compare(*a, *b);
        if (c > 0)
            r.terms_.push_back(*a++);
        else if (c < 0)
            r.terms_.push_back(*b++);
        else {
            ++a;
            ++b;
        }
    }
    r.terms_.insert(r.terms_.end(), a, terms_.end());
    r.terms_.insert(r.terms_.end(), b, o.terms_.end());
    return r;
}

Poly Poly::operator*(const Poly& o) const
{
    if (o.terms_.size() == 1)
        return *this * o.terms_.front();
    if (terms_.size() == 1)
        return o * terms_.front();
    std::vector<Monomial> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            prods.push_back(a * b);
    return from_terms(std::move(prods));
}

Poly Poly::operator*(const Monomial& m) const
{
    // Multiplication by a monomial preserves the order, so no re-sort.
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back(t * m);
    return r;
}

Poly Poly::pow(std::uint32_t k) const
{
    Poly result = one();
    Poly base = *this;
    while (k) {
        if (k & 1U)
            result = result * base;
        k >>= 1U;
        if (k)
            base = base.frobenius(1);
    }
    return result;
}

Poly Poly::frobenius(unsigned k) const
{
    if (k == 0)
        return *this;
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back(t.frobenius(k));
    return r;
}

std::string to_string(const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& m : p.terms()) {
        if (!out.empty())
            out += " + ";
        out += to_string(m);
    }
    return out;
}

} // namespace steenspec
