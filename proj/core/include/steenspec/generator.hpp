#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace steenspec {

/// (homological, internal) bidegree. Adds componentwise under multiplication.
struct BiDegree
{
    std::int64_t homological = 0;
    std::int64_t internal = 0;

    constexpr BiDegree operator+(const BiDegree& o) const noexcept
    {
        return {homological + o.homological, internal + o.internal};
    }
    constexpr BiDegree operator-(const BiDegree& o) const noexcept
    {
        return {homological - o.homological, internal - o.internal};
    }
    constexpr BiDegree operator*(std::int64_t k) const noexcept
    {
        return {homological * k, internal * k};
    }
    /// Componentwise partial order.
    constexpr bool le(const BiDegree& o) const noexcept
    {
        return homological <= o.homological && internal <= o.internal;
    }

    constexpr auto operator<=>(const BiDegree&) const = default;
};

std::string to_string(const BiDegree& d);

enum class GeneratorKind : std::uint8_t { Xi = 1, H = 2, Inverter = 3 };

/// A polynomial generator: xi(n) of the dual Steenrod algebra, h(t,s) of an
/// Ext ring, or the ungraded auxiliary variable used for radical membership.
///
/// Generators are packed into one integer; the integer order is the fixed
/// variable enumeration used by every monomial order (all xi before all h,
/// h(t,s) ordered by t then s).
class Generator
{
public:
    static Generator xi(int n);
    static Generator h(int t, int s);
    static Generator inverter() noexcept { return Generator(pack(GeneratorKind::Inverter, 0, 0)); }

    GeneratorKind kind() const noexcept { return static_cast<GeneratorKind>(code_ >> 24); }
    bool is_xi() const noexcept { return kind() == GeneratorKind::Xi; }
    bool is_h() const noexcept { return kind() == GeneratorKind::H; }

    /// n for xi(n).
    int xi_index() const noexcept { return static_cast<int>(code_ & 0xFFF); }
    /// t and s for h(t,s).
    int t() const noexcept { return static_cast<int>((code_ >> 12) & 0xFFF); }
    int s() const noexcept { return static_cast<int>(code_ & 0xFFF); }

    /// |xi(n)| = (0, 2^n - 1); |h(t,s)| = (1, 2^s (2^t - 1)); the inverter is (0, 0).
    BiDegree bidegree() const noexcept;

    std::uint32_t code() const noexcept { return code_; }

    std::string to_string() const;

    constexpr auto operator<=>(const Generator&) const = default;

private:
    explicit constexpr Generator(std::uint32_t code) noexcept : code_(code) {}

    static constexpr std::uint32_t pack(GeneratorKind k, std::uint32_t a, std::uint32_t b) noexcept
    {
        return (static_cast<std::uint32_t>(k) << 24) | (a << 12) | b;
    }

    std::uint32_t code_;
};

} // namespace steenspec

template <>
struct std::hash<steenspec::Generator>
{
    std::size_t operator()(const steenspec::Generator& g) const noexcept { return g.code(); }
};
