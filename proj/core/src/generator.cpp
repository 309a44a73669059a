#include "steenspec/generator.hpp"

#include "steenspec/error.hpp"

namespace steenspec {

std::string to_string(const BiDegree& d)
{
    return "(" + std::to_string(d.homological) + "," + std::to_string(d.internal) + ")";
}

Generator Generator::xi(int n)
{
    if (n < 1 || n > 62)
        throw Error("bad-generator", "xi(" + std::to_string(n) + ") is out of range; need 1 <= n <= 62");
    return Generator(pack(GeneratorKind::Xi, 0, static_cast<std::uint32_t>(n)));
}

Generator Generator::h(int t, int s)
{
    if (t < 1 || s < 0 || t > 30 || s > 30 || s + t > 62)
        throw Error("bad-generator",
                    "h(" + std::to_string(t) + "," + std::to_string(s) + ") is out of range");
    return Generator(pack(GeneratorKind::H, static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(s)));
}

BiDegree Generator::bidegree() const noexcept
{
    switch (kind()) {
    case GeneratorKind::Xi:
        return {0, (std::int64_t{1} << xi_index()) - 1};
    case GeneratorKind::H:
        return {1, (std::int64_t{1} << s()) * ((std::int64_t{1} << t()) - 1)};
    case GeneratorKind::Inverter:
        break;
    }
    return {0, 0};
}

std::string Generator::to_string() const
{
    switch (kind()) {
    case GeneratorKind::Xi:
        return "xi(" + std::to_string(xi_index()) + ")";
    case GeneratorKind::H:
        return "h(" + std::to_string(t()) + "," + std::to_string(s()) + ")";
    case GeneratorKind::Inverter:
        break;
    }
    return "y";
}

} // namespace steenspec
