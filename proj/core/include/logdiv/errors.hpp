#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace logdiv {

/// Malformed input: unparseable polynomial text, bad problem file, unknown name.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition fails on otherwise well-formed input.
/// `kind()` is a stable machine-readable tag, e.g. "non-isolated",
/// "singularities-at-infinity", "not-logarithmic", "route-disagreement".
class MathError : public std::runtime_error {
public:
    MathError(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

} // namespace logdiv
