#include "steenspec/monomial.hpp"

#include "steenspec/error.hpp"

#include <algorithm>

namespace steenspec {

Monomial::Monomial(Generator g, std::uint32_t exponent)
{
    if (exponent > 0)
        factors_.emplace_back(g, exponent);
    recompute();
}

Monomial::Monomial(std::initializer_list<Factor> factors)
    : Monomial(from_factors(std::vector<Factor>(factors)))
{
}

Monomial Monomial::from_factors(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [g, e] : factors) {
        if (e == 0)
            continue;
        if (!m.factors_.empty() && m.factors_.back().first == g)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(g, e);
    }
    m.recompute();
    return m;
}

void Monomial::recompute()
{
    degree_ = {};
    total_ = 0;
    for (const auto& [g, e] : factors_) {
        degree_ = degree_ + g.bidegree() * static_cast<std::int64_t>(e);
        total_ += e;
    }
}

std::uint32_t Monomial::exponent(Generator g) const noexcept
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), g,
                               [](const Factor& f, Generator x) { return f.first < x; });
    return (it != factors_.end() && it->first == g) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first)
            r.factors_.push_back(*a++);
        else if (b->first < a->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    r.degree_ = degree_ + o.degree_;
    r.total_ = total_ + o.total_;
    return r;
}

Monomial Monomial::pow(std::uint32_t k) const
{
    if (k == 0)
        return {};
    Monomial r = *this;
    for (auto& f : r.factors_)
        f.second *= k;
    r.degree_ = degree_ * static_cast<std::int64_t>(k);
    r.total_ = total_ * static_cast<std::int64_t>(k);
    return r;
}

bool Monomial::divides(const Monomial& m) const noexcept
{
    if (factors_.size() > m.factors_.size())
        return false;
    auto b = m.factors_.begin();
    for (const auto& [g, e] : factors_) {
        while (b != m.factors_.end() && b->first < g)
            ++b;
        if (b == m.factors_.end() || !(b->first == g) || b->second < e)
            return false;
        ++b;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& m) const
{
    if (!divides(m))
        throw Error("internal", "monomial quotient: " + to_string(*this) + " does not divide " + to_string(m));
    Monomial r;
    auto a = factors_.begin();
    for (const auto& [g, e] : m.factors_) {
        if (a != factors_.end() && a->first == g) {
            if (e > a->second)
                r.factors_.emplace_back(g, e - a->second);
            ++a;
        } else {
            r.factors_.emplace_back(g, e);
        }
    }
    r.degree_ = m.degree_ - degree_;
    r.total_ = m.total_ - total_;
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const
{
    Monomial r;
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first)
            r.factors_.push_back(*a++);
        else if (b->first < a->first)
            r.factors_.push_back(*b++);
        else {
            r.factors_.emplace_back(a->first, std::max(a->second, b->second));
            ++a;
            ++b;
        }
    }
    r.factors_.insert(r.factors_.end(), a, factors_.end());
    r.factors_.insert(r.factors_.end(), b, o.factors_.end());
    r.recompute();
    return r;
}

bool Monomial::coprime(const Monomial& o) const noexcept
{
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() && b != o.factors_.end()) {
        if (a->first < b->first)
            ++a;
        else if (b->first < a->first)
            ++b;
        else
            return false;
    }
    return true;
}

Monomial Monomial::filter(const std::function<bool(Generator)>& pred) const
{
    Monomial r;
    for (const auto& f : factors_)
        if (pred(f.first))
            r.factors_.push_back(f);
    r.recompute();
    return r;
}

std::size_t Monomial::hash() const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [g, e] : factors_) {
        h ^= (static_cast<std::size_t>(g.code()) << 20) ^ e;
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return h;
}

int compare(const Monomial& a, const Monomial& b) noexcept
{
    const auto& da = a.bidegree();
    const auto& db = b.bidegree();
    if (da.homological != db.homological)
        return da.homological < db.homological ? -1 : 1;
    if (da.internal != db.internal)
        return da.internal < db.internal ? -1 : 1;
    if (a.total_degree() != b.total_degree())
        return a.total_degree() < b.total_degree() ? -1 : 1;
    // Reverse lexicographic: at the smallest generator where the exponents
    // differ, the monomial with the smaller exponent is the larger one.
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto ia = fa.begin();
    auto ib = fb.begin();
    while (ia != fa.end() || ib != fb.end()) {
        if (ib == fb.end() || (ia != fa.end() && ia->first < ib->first))
            return -1; // a has positive exponent at a smaller generator
        if (ia == fa.end() || ib->first < ia->first)
            return 1;
        if (ia->second != ib->second)
            return ia->second < ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    return 0;
}

std::string to_string(const Monomial& m)
{
    if (m.is_unit())
        return "1";
    std::string out;
    const auto& f = m.factors();
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        if (!out.empty())
            out += '*';
        out += it->first.to_string();
        if (it->second > 1)
            out += "^" + std::to_string(it->second);
    }
    return out;
}

} // namespace steenspec
