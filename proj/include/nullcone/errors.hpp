#pragma once

#include <stdexcept>
#include <string>

namespace nullcone {

// Base class for all errors raised by the library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mixing values from different field contexts (Q vs GF(p), or distinct primes).
struct field_mismatch : error {
    explicit field_mismatch(const std::string& msg) : error(msg) {}
};

// Matrix/tuple shapes do not line up.
struct shape_mismatch : error {
    explicit shape_mismatch(const std::string& msg) : error(msg) {}
};

// A rational function was evaluated at a pole.
struct pole_at_zero : error {
    explicit pole_at_zero(const std::string& msg) : error(msg) {}
};

// A curve matrix is singular as a matrix over the rational function field.
struct singular_curve_matrix : error {
    explicit singular_curve_matrix(const std::string& msg) : error(msg) {}
};

// A 2x2 semisimplification exists only over a proper field extension.
struct needs_field_extension : error {
    explicit needs_field_extension(const std::string& msg) : error(msg) {}
};

// A component does not lie in the algebra generated by the selected pair.
struct not_in_algebra : error {
    explicit not_in_algebra(const std::string& msg) : error(msg) {}
};

// Text input rejected by a parser; position is a 0-based byte offset.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// Violation of an internal consistency condition; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace nullcone
