#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace origami {

/// Invalid arguments to a mathematical operation (bad signature, zero denominator, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The pair of permutations does not act transitively on the squares.
class disconnected_error : public domain_error {
public:
    disconnected_error() : domain_error("disconnected") {}
};

/// An orbit or enumeration ran past its configured budget.
class budget_error : public domain_error {
public:
    using domain_error::domain_error;
};

/// Malformed text input. position is a 0-based offset into the parsed string.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An internal invariant failed (non-symplectic cocycle, rank mismatch, ...).
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace origami
