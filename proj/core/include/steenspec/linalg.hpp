#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace steenspec {

/// Dense vector over GF(2).
class BitVector
{
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    /// Index of the lowest set bit, if any.
    std::optional<std::size_t> first_set() const noexcept;
    bool none() const noexcept;
    std::size_t count() const noexcept;

    BitVector& operator^=(const BitVector& o);
    bool operator==(const BitVector& o) const noexcept = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Incremental row echelon form over GF(2). Pivots are chosen lowest index
/// first, so results depend only on the insertion order.
class EchelonBasis
{
public:
    explicit EchelonBasis(std::size_t dimension) : dim_(dimension) {}

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Reduce v against the basis; the zero vector means v is in the span.
    BitVector reduce(BitVector v) const;
    bool in_span(const BitVector& v) const;
    /// Adds v if independent; returns whether it was added.
    bool insert(BitVector v);
    const std::vector<BitVector>& rows() const noexcept { return rows_; }

private:
    std::size_t dim_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Basis of { x : A x = 0 } where `rows` are the rows of A over `columns`
/// unknowns. No rows means the whole space. Basis vectors come from the
/// reduced row echelon form with the lowest-index pivot rule.
std::vector<BitVector> nullspace(const std::vector<BitVector>& rows, std::size_t columns);

/// Basis of the relations among `vectors`: all x with sum x_i vectors[i] = 0.
std::vector<BitVector> relations_among(const std::vector<BitVector>& vectors);

/// True when target lies in the span of vectors.
bool span_contains(const std::vector<BitVector>& vectors, const BitVector& target);

} // namespace steenspec
