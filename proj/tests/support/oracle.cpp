#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace oracle {

using steenspec::Generator;
using steenspec::Monomial;
using steenspec::Poly;

Exps Vars::exps(const Monomial& m) const
{
    Exps e(gens.size(), 0);
    for (const auto& [g, k] : m.factors()) {
        auto it = std::find(gens.begin(), gens.end(), g);
        if (it == gens.end())
            throw std::logic_error("oracle: generator outside the variable list");
        e[static_cast<std::size_t>(it - gens.begin())] = k;
    }
    return e;
}

Dense Vars::from(const Poly& p) const
{
    Dense d;
    for (const auto& m : p.terms())
        d.terms.insert(exps(m));
    return d;
}

Poly Vars::to(const Dense& d) const
{
    std::vector<Monomial> ms;
    for (const auto& e : d.terms) {
        std::vector<Monomial::Factor> f;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                f.emplace_back(gens[i], e[i]);
        ms.push_back(Monomial::from_factors(f));
    }
    return Poly::from_terms(ms);
}

static void toggle(std::set<Exps>& s, const Exps& e)
{
    auto [it, fresh] = s.insert(e);
    if (!fresh)
        s.erase(it);
}

Dense add(const Dense& a, const Dense& b)
{
    Dense r = a;
    for (const auto& e : b.terms)
        toggle(r.terms, e);
    return r;
}

Dense mul(const Dense& a, const Dense& b)
{
    Dense r;
    for (const auto& x : a.terms)
        for (const auto& y : b.terms) {
            Exps z(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                z[i] = x[i] + y[i];
            toggle(r.terms, z);
        }
    return r;
}

static Dense one(std::size_t n)
{
    Dense d;
    d.terms.insert(Exps(n, 0));
    return d;
}

Dense xi_pow(const Vars& v, int n, unsigned k)
{
    if (n == 0)
        return one(v.size());
    Exps e(v.size(), 0);
    e[static_cast<std::size_t>(n - 1)] = 1u << k;
    Dense d;
    d.terms.insert(e);
    return d;
}

Dense zeta(const Vars& v, int n)
{
    if (n == 0)
        return one(v.size());
    Dense s;
    for (int i = 0; i < n; ++i)
        s = add(s, mul(xi_pow(v, n - i, static_cast<unsigned>(i)), zeta(v, i)));
    return s;
}

std::set<std::pair<Exps, Exps>> coproduct_xi(const Vars& v, int n)
{
    std::set<std::pair<Exps, Exps>> out;
    for (int i = 0; i <= n; ++i)
        out.emplace(*xi_pow(v, n - i, static_cast<unsigned>(i)).terms.begin(), *xi_pow(v, i, 0).terms.begin());
    return out;
}

std::set<std::pair<Exps, std::pair<int, int>>> coaction_h(const Vars& xi, int t, int s)
{
    std::set<std::pair<Exps, std::pair<int, int>>> out;
    for (int j = 0; 2 * j <= t - s - 1; ++j)
        for (int i = j + s + 1; i <= t - j; ++i) {
            Dense z = zeta(xi, j);
            Dense zs = one(xi.size());
            for (int r = 0; r < (1 << s); ++r)
                zs = mul(zs, z);
            const Dense left = mul(zs, xi_pow(xi, t - i - j, static_cast<unsigned>(i + j + s)));
            for (const auto& e : left.terms) {
                std::pair<Exps, std::pair<int, int>> key{e, {i, j + s}};
                auto [it, fresh] = out.insert(key);
                if (!fresh)
                    out.erase(it);
            }
        }
    return out;
}

bool Ring::zero(const Exps& e) const
{
    for (const auto& rel : relations)
        if (std::all_of(rel.begin(), rel.end(), [&](std::size_t i) { return e[i] > 0; }))
            return true;
    return false;
}

std::vector<Exps> monomials_of(const Ring& r, std::int64_t homological, std::int64_t internal)
{
    std::vector<Exps> out;
    Exps e(r.vars.size(), 0);
    std::function<void(std::size_t, std::int64_t, std::int64_t)> go = [&](std::size_t i, std::int64_t h, std::int64_t d) {
        if (i == e.size()) {
            if (h == 0 && d == 0 && !r.zero(e))
                out.push_back(e);
            return;
        }
        const auto bd = r.vars.gens[i].bidegree();
        for (std::uint32_t k = 0;; ++k) {
            const std::int64_t hh = h - k * bd.homological, dd = d - k * bd.internal;
            if (hh < 0 || dd < 0)
                break;
            e[i] = k;
            go(i + 1, hh, dd);
            if (bd.homological == 0 && bd.internal == 0)
                break;
        }
        e[i] = 0;
    };
    go(0, homological, internal);
    return out;
}

std::size_t rank(std::vector<std::vector<bool>> rows)
{
    std::size_t rk = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
        std::size_t p = rk;
        while (p < rows.size() && !rows[p][c])
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rk]);
        for (std::size_t q = 0; q < rows.size(); ++q)
            if (q != rk && rows[q][c])
                for (std::size_t k = 0; k < cols; ++k)
                    rows[q][k] = rows[q][k] != rows[rk][k];
        ++rk;
    }
    return rk;
}

namespace {

std::pair<std::int64_t, std::int64_t> degree_of(const Ring& r, const Exps& e)
{
    std::int64_t h = 0, d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        h += e[i] * r.vars.gens[i].bidegree().homological;
        d += e[i] * r.vars.gens[i].bidegree().internal;
    }
    return {h, d};
}

} // namespace

Piece ideal_piece(const Ring& r, const std::vector<Dense>& gens, std::int64_t h, std::int64_t d)
{
    Piece p;
    p.basis = monomials_of(r, h, d);
    std::map<Exps, std::size_t> col;
    for (std::size_t i = 0; i < p.basis.size(); ++i)
        col[p.basis[i]] = i;
    for (const auto& g : gens) {
        if (g.terms.empty())
            continue;
        const auto [gh, gd] = degree_of(r, *g.terms.begin());
        if (gh > h || gd > d)
            continue;
        for (const auto& m : monomials_of(Ring{r.vars, {}}, h - gh, d - gd)) {
            std::vector<bool> row(p.basis.size(), false);
            Dense md;
            md.terms.insert(m);
            for (const auto& e : mul(md, g).terms)
                if (!r.zero(e))
                    row[col.at(e)] = !row[col.at(e)];
            p.rows.push_back(std::move(row));
        }
    }
    return p;
}

bool span_member(const Ring& r, const std::vector<Dense>& gens, const Dense& f)
{
    Dense g;
    for (const auto& e : f.terms)
        if (!r.zero(e))
            g.terms.insert(e);
    if (g.terms.empty())
        return true;
    const auto [h, d] = degree_of(r, *g.terms.begin());
    Piece p = ideal_piece(r, gens, h, d);
    std::vector<bool> target(p.basis.size(), false);
    for (std::size_t i = 0; i < p.basis.size(); ++i)
        target[i] = g.terms.count(p.basis[i]) > 0;
    const auto before = rank(p.rows);
    p.rows.push_back(target);
    return rank(p.rows) == before;
}

std::size_t ideal_piece_rank(const Ring& r, const std::vector<Dense>& gens, std::int64_t h, std::int64_t i)
{
    return rank(ideal_piece(r, gens, h, i).rows);
}

bool monomial_radical_member(const std::vector<Exps>& gens, const Dense& f)
{
    for (const auto& e : f.terms) {
        bool hit = false;
        for (const auto& g : gens) {
            bool divides = true;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (g[i] > 0 && e[i] == 0)
                    divides = false;
            hit = hit || divides;
        }
        if (!hit)
            return false;
    }
    return true;
}

bool admissible_window(const std::vector<std::int64_t>& n)
{
    // n[0] is n_1. Infinity compares above every finite value.
    auto le = [](std::int64_t a, std::int64_t b, std::int64_t shift) {
        if (b < 0)
            return true;
        if (a < 0)
            return false;
        return a <= b + shift;
    };
    const std::size_t N = n.size();
    for (std::size_t i = 1; i <= N; ++i)
        for (std::size_t j = 1; i + j <= N; ++j) {
            const auto ni = n[i - 1], nj = n[j - 1], nij = n[i + j - 1];
            if (!le(ni, nij, static_cast<std::int64_t>(j)) && !le(nj, nij, 0))
                return false;
        }
    return true;
}

} // namespace oracle
