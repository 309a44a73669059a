#include "steenspec/tensor_poly.hpp"

#include <algorithm>

namespace steenspec {

int compare(const TensorPoly::Term& a, const TensorPoly::Term& b) noexcept
{
    int c = compare(a.first, b.first);
    return c != 0 ? c : compare(a.second, b.second);
}

namespace {

struct TermGreater
{
    bool operator()(const TensorPoly::Term& a, const TensorPoly::Term& b) const noexcept
    {
        return compare(a, b) > 0;
    }
};

} // namespace

TensorPoly TensorPoly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), TermGreater{});
    TensorPoly p;
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

TensorPoly TensorPoly::tensor(const Poly& a, const Poly& b)
{
    std::vector<Term> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& l : a.terms())
        for (const auto& r : b.terms())
            terms.emplace_back(l, r);
    return from_terms(std::move(terms));
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const
{
    TensorPoly r;
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

TensorPoly TensorPoly::multiply(const TensorPoly& o, const ZeroTest& left_zero, const ZeroTest& right_zero) const
{
    std::vector<Term> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& [la, ra] : terms_) {
        for (const auto& [lb, rb] : o.terms_) {
            Monomial r = ra * rb;
            if (right_zero && right_zero(r))
                continue;
            Monomial l = la * lb;
            if (left_zero && left_zero(l))
                continue;
            prods.emplace_back(std::move(l), std::move(r));
        }
    }
    return from_terms(std::move(prods));
}

TensorPoly TensorPoly::frobenius(unsigned k) const
{
    TensorPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [l, rt] : terms_)
        r.terms_.emplace_back(l.frobenius(k), rt.frobenius(k));
    return r;
}

TensorPoly TensorPoly::reduce(const ZeroTest& left_zero, const ZeroTest& right_zero) const
{
    TensorPoly r;
    for (const auto& t : terms_) {
        if (left_zero && left_zero(t.first))
            continue;
        if (right_zero && right_zero(t.second))
            continue;
        r.terms_.push_back(t);
    }
    return r;
}

std::map<Monomial, Poly, MonomialGreater> TensorPoly::right_components() const
{
    std::map<Monomial, std::vector<Monomial>, MonomialGreater> grouped;
    for (const auto& [l, r] : terms_)
        grouped[l].push_back(r);
    std::map<Monomial, Poly, MonomialGreater> out;
    for (auto& [l, rs] : grouped)
        out.emplace(l, Poly::from_terms(std::move(rs)));
    return out;
}

std::map<Monomial, Poly, MonomialGreater> TensorPoly::left_components() const
{
    std::map<Monomial, std::vector<Monomial>, MonomialGreater> grouped;
    for (const auto& [l, r] : terms_)
        grouped[r].push_back(l);
    std::map<Monomial, Poly, MonomialGreater> out;
    for (auto& [r, ls] : grouped)
        out.emplace(r, Poly::from_terms(std::move(ls)));
    return out;
}

Poly TensorPoly::counit_left() const
{
    std::vector<Monomial> keep;
    for (const auto& [l, r] : terms_)
        if (l.is_unit())
            keep.push_back(r);
    return Poly::from_terms(std::move(keep));
}

Poly TensorPoly::counit_right() const
{
    std::vector<Monomial> keep;
    for (const auto& [l, r] : terms_)
        if (r.is_unit())
            keep.push_back(l);
    return Poly::from_terms(std::move(keep));
}

std::string to_string(const TensorPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [l, r] : p.terms()) {
        if (!out.empty())
            out += " + ";
        out += to_string(l) + " (x) " + to_string(r);
    }
    return out;
}

} // namespace steenspec
