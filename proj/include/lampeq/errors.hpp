#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lampeq {

/// Malformed text input; `position` is the byte offset of the offending character.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at byte " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A request exceeds a configured size limit (exponent width, automaton degree, ...).
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lampeq
