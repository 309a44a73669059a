#pragma once

#include "steenspec/monomial.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace steenspec {

/// An entry of a profile function: a nonnegative integer or infinity.
class ProfileValue
{
public:
    constexpr ProfileValue() = default;
    static constexpr ProfileValue finite(std::int64_t v) { return ProfileValue(false, v); }
    static constexpr ProfileValue infinity() { return ProfileValue(true, 0); }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    constexpr std::int64_t value() const noexcept { return value_; }

    /// Shift by an integer; infinity absorbs.
    constexpr ProfileValue plus(std::int64_t j) const noexcept
    {
        return infinite_ ? *this : finite(value_ + j);
    }

    constexpr bool operator==(const ProfileValue&) const = default;
    constexpr std::strong_ordering operator<=>(const ProfileValue& o) const noexcept
    {
        if (infinite_ || o.infinite_)
            return infinite_ == o.infinite_ ? std::strong_ordering::equal
                   : infinite_             ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
        return value_ <=> o.value_;
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    constexpr ProfileValue(bool inf, std::int64_t v) : infinite_(inf), value_(v) {}

    bool infinite_ = false;
    std::int64_t value_ = 0;
};

/// Rule for n_i beyond the explicit prefix.
struct ProfileTail
{
    enum class Kind { AllInfinity, Constant, SlopeOne };

    Kind kind = Kind::AllInfinity;
    ProfileValue constant{};  ///< Constant
    std::int64_t offset = 0;  ///< SlopeOne: n_i = max(0, i + offset)

    static ProfileTail all_infinity() { return {}; }
    static ProfileTail constant_value(ProfileValue c) { return {Kind::Constant, c, 0}; }
    static ProfileTail slope_one(std::int64_t offset) { return {Kind::SlopeOne, {}, offset}; }

    bool operator==(const ProfileTail&) const = default;
};

/// A sequence (n_1, n_2, ...) in Z>=0 ∪ {∞}: a finite prefix followed by a tail rule.
class ProfileFunction
{
public:
    ProfileFunction() = default;
    ProfileFunction(std::vector<ProfileValue> prefix, ProfileTail tail);

    const std::vector<ProfileValue>& prefix() const noexcept { return prefix_; }
    const ProfileTail& tail() const noexcept { return tail_; }

    /// n_i for i >= 1.
    ProfileValue at(std::int64_t i) const;

    /// Number of leading zeros; nullopt when every entry is zero.
    std::optional<std::int64_t> leading_zeros() const;

    /// "prefix=[n1,n2,...];tail=inf|const:c|slope1:offset"
    std::string to_string() const;
    static ProfileFunction parse(std::string_view text);

    /// Same sequence (not just the same representation).
    bool same_sequence(const ProfileFunction& o) const;

    bool operator==(const ProfileFunction&) const = default;

private:
    std::vector<ProfileValue> prefix_;
    ProfileTail tail_;
};

/// The two-disjunct condition for all 1 <= i, j <= check_bound, plus an exact
/// decision beyond it: for every supported tail, a pair with i or j past the
/// prefix satisfies the condition, so pairs within the prefix settle the rest.
bool profile_admissible(const ProfileFunction& p, std::int64_t check_bound);

/// Quotient Hopf algebra A/(xi_i^(2^n_i)) of the dual Steenrod algebra.
class QuotientHopf
{
public:
    /// Throws Error("not-admissible") when the profile fails the condition.
    explicit QuotientHopf(ProfileFunction profile, std::int64_t check_bound = 16);

    const ProfileFunction& profile() const noexcept { return profile_; }

    /// xi_t^(2^s) survives: s < n_t.
    bool alive(int t, int s) const;
    /// Some exponent of xi_i reaches 2^(n_i).
    bool is_zero_monomial(const Monomial& m) const;

    /// Every n_i finite and eventually zero.
    bool is_finite_dimensional() const;

    bool operator==(const QuotientHopf& o) const { return profile_.same_sequence(o.profile_); }

private:
    ProfileFunction profile_;
};

/// n_i = 0 for i <= m, m + 1 beyond.
QuotientHopf make_E(std::int64_t m);
/// n_i = i.
QuotientHopf make_D();
/// The first i columns of an elementary E: E's profile up to index m + i, zero beyond.
QuotientHopf make_E_i(const QuotientHopf& E, std::int64_t i);
/// The whole of A (all entries infinite).
QuotientHopf make_A();

/// Admissible and pointwise below E(m) with m the number of leading zeros.
bool is_elementary(const QuotientHopf& q, std::int64_t check_bound);

/// Monomial basis of q in one internal degree: xi_k exponents below 2^(n_k).
std::vector<Monomial> quotient_basis(const QuotientHopf& q, std::int64_t internal_degree);

} // namespace steenspec
