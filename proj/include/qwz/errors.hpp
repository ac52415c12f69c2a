#pragma once

#include <stdexcept>
#include <string>

namespace qwz {

// Base class for all domain errors raised by the toolkit.  Precondition
// violations (bad lengths, even moduli, malformed rationals) use
// std::invalid_argument directly.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A rational residue a/b mod M where gcd(b, M) != 1.
struct non_invertible_denominator : error {
    using error::error;
};

// Division by an exact zero (rational, polynomial or rational-function).
struct division_by_zero : error {
    using error::error;
};

// Arithmetic between residues with different moduli.
struct modulus_mismatch : error {
    using error::error;
};

// limit as q -> 1 requested for a rational function with a pole at q = 1.
struct pole_at_one : error {
    using error::error;
};

// A term or relation evaluates to a genuine pole (zero_order < 0) where a
// finite value is required.  The message carries the offending coordinates.
struct pole_error : error {
    using error::error;
};

// An infinite product whose argument does not tend to zero at the given q.
struct divergent_product : error {
    using error::error;
};

// A pole-bearing addend inside a pair relation, telescoping sum or grid
// check; the message carries the pair id and grid coordinates.
struct pole_in_relation : pole_error {
    using pole_error::pole_error;
};

// A pole-bearing summand inside an exact partial sum; carries the index of
// the offending term.
struct pole_in_term : pole_error {
    pole_in_term(const std::string& msg, long n)
        : pole_error(msg), term_index(n) {}
    long term_index;
};

} // namespace qwz
