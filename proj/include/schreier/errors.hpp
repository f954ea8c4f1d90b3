#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schreier {

/// Malformed text input. `offset` is the 0-based byte offset of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The set has no composition satisfying the 𝒮₂ decomposition conditions.
class NotInS2 : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A finite index set where an infinite one is required.
class DegenerateIndex : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace schreier
