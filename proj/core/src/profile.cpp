#include "steenspec/profile.hpp"

#include "steenspec/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

namespace steenspec {

ProfileFunction::ProfileFunction(std::vector<ProfileValue> prefix, ProfileTail tail)
    : prefix_(std::move(prefix)), tail_(tail)
{
    for (const auto& v : prefix_)
        if (!v.is_infinite() && v.value() < 0)
            throw Error("bad-profile", "profile entries must be nonnegative");
    if (tail_.kind == ProfileTail::Kind::Constant && !tail_.constant.is_infinite() && tail_.constant.value() < 0)
        throw Error("bad-profile", "constant tail must be nonnegative");
}

ProfileValue ProfileFunction::at(std::int64_t i) const
{
    if (i < 1)
        throw Error("bad-profile", "profile index must be positive");
    if (static_cast<std::size_t>(i) <= prefix_.size())
        return prefix_[static_cast<std::size_t>(i - 1)];
    switch (tail_.kind) {
    case ProfileTail::Kind::AllInfinity:
        return ProfileValue::infinity();
    case ProfileTail::Kind::Constant:
        return tail_.constant;
    case ProfileTail::Kind::SlopeOne:
        return ProfileValue::finite(std::max<std::int64_t>(0, i + tail_.offset));
    }
    return ProfileValue::infinity();
}

std::optional<std::int64_t> ProfileFunction::leading_zeros() const
{
    const auto P = static_cast<std::int64_t>(prefix_.size());
    for (std::int64_t i = 0; i < P; ++i)
        if (prefix_[static_cast<std::size_t>(i)] != ProfileValue::finite(0))
            return i;
    switch (tail_.kind) {
    case ProfileTail::Kind::AllInfinity:
        return P;
    case ProfileTail::Kind::Constant:
        if (tail_.constant == ProfileValue::finite(0))
            return std::nullopt;
        return P;
    case ProfileTail::Kind::SlopeOne:
        return std::max(P, -tail_.offset);
    }
    return P;
}

std::string ProfileFunction::to_string() const
{
    std::string out = "prefix=[";
    for (std::size_t i = 0; i < prefix_.size(); ++i) {
        if (i)
            out += ',';
        out += prefix_[i].to_string();
    }
    out += "];tail=";
    switch (tail_.kind) {
    case ProfileTail::Kind::AllInfinity:
        out += "inf";
        break;
    case ProfileTail::Kind::Constant:
        out += "const:" + tail_.constant.to_string();
        break;
    case ProfileTail::Kind::SlopeOne:
        out += "slope1:" + std::to_string(tail_.offset);
        break;
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

[[noreturn]] void bad_profile(std::string_view text, const std::string& why)
{
    throw Error("bad-profile", "cannot parse profile \"" + std::string(text) + "\": " + why);
}

std::int64_t parse_int(std::string_view text, std::string_view whole)
{
    text = trim(text);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        bad_profile(whole, "expected an integer, got \"" + std::string(text) + "\"");
    return v;
}

ProfileValue parse_value(std::string_view text, std::string_view whole)
{
    text = trim(text);
    if (text == "inf")
        return ProfileValue::infinity();
    std::int64_t v = parse_int(text, whole);
    if (v < 0)
        bad_profile(whole, "entries must be nonnegative");
    return ProfileValue::finite(v);
}

} // namespace

ProfileFunction ProfileFunction::parse(std::string_view text)
{
    const std::string_view whole = text;
    // Whitespace never matters inside a profile.
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact += c;
    text = compact;
    auto semi = text.find(';');
    if (semi == std::string_view::npos)
        bad_profile(whole, "missing ';'");
    std::string_view first = trim(text.substr(0, semi));
    std::string_view second = trim(text.substr(semi + 1));

    if (first.substr(0, 7) != "prefix=")
        bad_profile(whole, "expected \"prefix=[...]\"");
    first = trim(first.substr(7));
    if (first.size() < 2 || first.front() != '[' || first.back() != ']')
        bad_profile(whole, "prefix must be bracketed");
    std::string_view body = trim(first.substr(1, first.size() - 2));
    std::vector<ProfileValue> prefix;
    while (!body.empty()) {
        auto comma = body.find(',');
        prefix.push_back(parse_value(body.substr(0, comma), whole));
        if (comma == std::string_view::npos)
            break;
        body = body.substr(comma + 1);
        if (trim(body).empty())
            bad_profile(whole, "trailing comma in prefix");
    }

    if (second.substr(0, 5) != "tail=")
        bad_profile(whole, "expected \"tail=...\"");
    second = trim(second.substr(5));
    ProfileTail tail;
    if (second == "inf") {
        tail = ProfileTail::all_infinity();
    } else if (second.substr(0, 6) == "const:") {
        tail = ProfileTail::constant_value(parse_value(second.substr(6), whole));
    } else if (second.substr(0, 7) == "slope1:") {
        tail = ProfileTail::slope_one(parse_int(second.substr(7), whole));
    } else {
        bad_profile(whole, "unknown tail rule");
    }
    return ProfileFunction(std::move(prefix), tail);
}

bool ProfileFunction::same_sequence(const ProfileFunction& o) const
{
    const auto L = static_cast<std::int64_t>(std::max(prefix_.size(), o.prefix_.size()));
    std::int64_t span = 2;
    if (tail_.kind == ProfileTail::Kind::SlopeOne)
        span += std::abs(tail_.offset);
    if (o.tail_.kind == ProfileTail::Kind::SlopeOne)
        span += std::abs(o.tail_.offset);
    // Past L + span both tails are in their regular regime: constants stay
    // constant and a positive slope never meets a constant again.
    for (std::int64_t i = 1; i <= L + span; ++i)
        if (at(i) != o.at(i))
            return false;
    return true;
}

bool profile_admissible(const ProfileFunction& p, std::int64_t check_bound)
{
    const std::int64_t bound =
        std::max<std::int64_t>({check_bound, static_cast<std::int64_t>(p.prefix().size()), 1});
    for (std::int64_t i = 1; i <= bound; ++i) {
        const ProfileValue ni = p.at(i);
        for (std::int64_t j = 1; j <= bound; ++j) {
            const ProfileValue nij = p.at(i + j);
            if (!(ni <= nij.plus(j) || p.at(j) <= nij))
                return false;
        }
    }
    return true;
}

QuotientHopf::QuotientHopf(ProfileFunction profile, std::int64_t check_bound) : profile_(std::move(profile))
{
    if (!profile_admissible(profile_, check_bound))
        throw Error("not-admissible", "profile " + profile_.to_string() + " is not admissible");
}

bool QuotientHopf::alive(int t, int s) const
{
    return ProfileValue::finite(s) < profile_.at(t);
}

bool QuotientHopf::is_zero_monomial(const Monomial& m) const
{
    for (const auto& [g, e] : m.factors()) {
        if (!g.is_xi())
            continue;
        const ProfileValue n = profile_.at(g.xi_index());
        if (!n.is_infinite() && n.value() < 32 && e >= (std::uint64_t{1} << n.value()))
            return true;
    }
    return false;
}

bool QuotientHopf::is_finite_dimensional() const
{
    for (const auto& v : profile_.prefix())
        if (v.is_infinite())
            return false;
    const auto& tail = profile_.tail();
    return tail.kind == ProfileTail::Kind::Constant && tail.constant == ProfileValue::finite(0);
}

QuotientHopf make_E(std::int64_t m)
{
    if (m < 0)
        throw Error("bad-profile", "E(m) needs m >= 0");
    return QuotientHopf(ProfileFunction(std::vector<ProfileValue>(static_cast<std::size_t>(m), ProfileValue::finite(0)),
                                        ProfileTail::constant_value(ProfileValue::finite(m + 1))));
}

QuotientHopf make_D() { return QuotientHopf(ProfileFunction({}, ProfileTail::slope_one(0))); }

QuotientHopf make_A() { return QuotientHopf(ProfileFunction({}, ProfileTail::all_infinity())); }

QuotientHopf make_E_i(const QuotientHopf& E, std::int64_t i)
{
    if (i < 0)
        throw Error("bad-profile", "E_i needs i >= 0");
    const auto& prof = E.profile();
    if (!is_elementary(E, std::max<std::int64_t>(16, static_cast<std::int64_t>(prof.prefix().size()))))
        throw Error("not-elementary", "profile " + prof.to_string() + " is not elementary");
    auto m = prof.leading_zeros();
    if (!m)
        return E;
    std::vector<ProfileValue> prefix;
    for (std::int64_t k = 1; k <= *m + i; ++k)
        prefix.push_back(prof.at(k));
    return QuotientHopf(ProfileFunction(std::move(prefix), ProfileTail::constant_value(ProfileValue::finite(0))));
}

bool is_elementary(const QuotientHopf& q, std::int64_t check_bound)
{
    const auto& p = q.profile();
    if (!profile_admissible(p, check_bound))
        return false;
    auto m = p.leading_zeros();
    if (!m)
        return true;
    const ProfileValue cap = ProfileValue::finite(*m + 1);
    const std::int64_t bound = std::max<std::int64_t>(check_bound, static_cast<std::int64_t>(p.prefix().size()));
    for (std::int64_t i = 1; i <= bound; ++i)
        if (p.at(i) > cap)
            return false;
    switch (p.tail().kind) {
    case ProfileTail::Kind::AllInfinity:
    case ProfileTail::Kind::SlopeOne:
        return false;
    case ProfileTail::Kind::Constant:
        return p.tail().constant <= cap;
    }
    return false;
}

std::vector<Monomial> quotient_basis(const QuotientHopf& q, std::int64_t internal_degree)
{
    std::vector<Monomial> out;
    if (internal_degree < 0)
        return out;
    int top = 1;
    while (top < 62 && (std::int64_t{1} << (top + 1)) - 1 <= internal_degree)
        ++top;
    std::function<void(int, std::int64_t, std::vector<Monomial::Factor>&)> walk =
        [&](int k, std::int64_t remaining, std::vector<Monomial::Factor>& factors) {
            if (remaining == 0) {
                out.push_back(Monomial::from_factors(factors));
                return;
            }
            if (k == 0)
                return;
            const std::int64_t w = (std::int64_t{1} << k) - 1;
            const ProfileValue n = q.profile().at(k);
            std::int64_t max_e = remaining / w;
            if (!n.is_infinite() && n.value() < 62)
                max_e = std::min(max_e, (std::int64_t{1} << n.value()) - 1);
            for (std::int64_t e = 0; e <= max_e; ++e) {
                if (e > 0)
                    factors.emplace_back(Generator::xi(k), static_cast<std::uint32_t>(e));
                walk(k - 1, remaining - e * w, factors);
                if (e > 0)
                    factors.pop_back();
            }
        };
    std::vector<Monomial::Factor> factors;
    if (internal_degree == 0)
        out.push_back(Monomial{});
    else
        walk(top, internal_degree, factors);
    std::sort(out.begin(), out.end(), MonomialGreater{});
    return out;
}

} // namespace steenspec
