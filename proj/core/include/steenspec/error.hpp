#pragma once

#include <stdexcept>
#include <string>

namespace steenspec {

/// Domain error raised by every algebraic operation. `kind` is a short
/// machine-readable tag ("ring-mismatch", "not-elementary", ...) that the
/// command-line front end forwards in its error JSON.
class Error : public std::runtime_error
{
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind))
    {
    }

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

} // namespace steenspec
