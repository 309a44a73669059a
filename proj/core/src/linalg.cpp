#include "steenspec/linalg.hpp"

#include "steenspec/error.hpp"

#include <bit>

namespace steenspec {

std::optional<std::size_t> BitVector::first_set() const noexcept
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return std::nullopt;
}

bool BitVector::none() const noexcept
{
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

std::size_t BitVector::count() const noexcept
{
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

BitVector& BitVector::operator^=(const BitVector& o)
{
    if (o.size_ != size_)
        throw Error("dimension-mismatch", "GF(2) vectors of different dimension");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= o.words_[i];
    return *this;
}

BitVector EchelonBasis::reduce(BitVector v) const
{
    if (v.size() != dim_)
        throw Error("dimension-mismatch", "vector dimension does not match the basis");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.test(pivots_[i]))
            v ^= rows_[i];
    return v;
}

bool EchelonBasis::in_span(const BitVector& v) const { return reduce(v).none(); }

bool EchelonBasis::insert(BitVector v)
{
    v = reduce(std::move(v));
    auto pivot = v.first_set();
    if (!pivot)
        return false;
    // Keep rows fully reduced at their pivots so reduce() is a single pass.
    for (auto& row : rows_)
        if (row.test(*pivot))
            row ^= v;
    rows_.push_back(std::move(v));
    pivots_.push_back(*pivot);
    return true;
}

std::vector<BitVector> nullspace(const std::vector<BitVector>& rows, std::size_t columns)
{
    std::vector<BitVector> reduced;
    std::vector<std::size_t> pivots;
    for (const auto& r : rows) {
        if (r.size() != columns)
            throw Error("dimension-mismatch", "row length does not match the number of unknowns");
        BitVector v = r;
        for (std::size_t i = 0; i < reduced.size(); ++i)
            if (v.test(pivots[i]))
                v ^= reduced[i];
        auto p = v.first_set();
        if (!p)
            continue;
        for (auto& row : reduced)
            if (row.test(*p))
                row ^= v;
        reduced.push_back(std::move(v));
        pivots.push_back(*p);
    }
    std::vector<bool> is_pivot(columns, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free])
            continue;
        BitVector x(columns);
        x.set(free);
        for (std::size_t i = 0; i < reduced.size(); ++i)
            if (reduced[i].test(free))
                x.set(pivots[i]);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<BitVector> relations_among(const std::vector<BitVector>& vectors)
{
    const std::size_t k = vectors.size();
    if (k == 0)
        return {};
    const std::size_t n = vectors.front().size();
    std::vector<BitVector> rows(n, BitVector(k));
    for (std::size_t j = 0; j < k; ++j) {
        if (vectors[j].size() != n)
            throw Error("dimension-mismatch", "vectors of different dimension");
        for (std::size_t i = 0; i < n; ++i)
            if (vectors[j].test(i))
                rows[i].set(j);
    }
    return nullspace(rows, k);
}

bool span_contains(const std::vector<BitVector>& vectors, const BitVector& target)
{
    EchelonBasis basis(target.size());
    for (const auto& v : vectors)
        basis.insert(v);
    return basis.in_span(target);
}

} // namespace steenspec
