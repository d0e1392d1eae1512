#pragma once

#include <stdexcept>
#include <string>

namespace qsym {

/// Base class for all domain errors raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A square array of indices failed the Latin-square property.
class not_latin_square : public error {
public:
    enum class line_kind { row, column };

    not_latin_square(line_kind kind, int index, int duplicate)
        : error(std::string("not a Latin square: ") +
                (kind == line_kind::row ? "row " : "column ") + std::to_string(index) +
                " repeats value " + std::to_string(duplicate)),
          kind(kind), index(index), duplicate(duplicate) {}

    line_kind kind;
    int index;
    int duplicate;
};

/// Associativity failed; carries the first witness triple.
class not_associative : public error {
public:
    not_associative(int x, int y, int z)
        : error("not associative: (" + std::to_string(x) + "," + std::to_string(y) + "," +
                std::to_string(z) + ") violates (x+y)+z = x+(y+z)"),
          x(x), y(y), z(z) {}

    int x, y, z;
};

/// No two-sided neutral element exists.
class no_neutral : public error {
public:
    no_neutral() : error("no two-sided neutral element") {}
};

/// The table is not isotopic to any group.
class not_group_isotope : public error {
public:
    not_group_isotope() : error("not a group isotope: principal loop is non-associative") {}
};

/// A constructed decomposition failed its own re-verification.
/// This indicates a bug, never a property of the input.
class verification_failed : public error {
public:
    explicit verification_failed(const std::string& what) : error("internal verification failed: " + what) {}
};

/// A coefficient permutation does not fix the group's neutral element.
class not_unitary : public error {
public:
    explicit not_unitary(const std::string& which)
        : error("permutation " + which + " does not fix the neutral element") {}
};

/// The triple (alpha, beta, gamma) is not an autotopism; carries a witness pair.
class not_autotopism : public error {
public:
    not_autotopism(int x, int y)
        : error("not an autotopism: alpha(x)+beta(y) != gamma(x+y) at (" + std::to_string(x) +
                "," + std::to_string(y) + ")"),
          x(x), y(y) {}

    int x, y;
};

class not_prime : public error {
public:
    explicit not_prime(int n) : error(std::to_string(n) + " is not prime"), n(n) {}
    int n;
};

class non_unit_coefficient : public error {
public:
    non_unit_coefficient(int value, int modulus)
        : error("coefficient " + std::to_string(value) + " is not a unit modulo " +
                std::to_string(modulus)),
          value(value), modulus(modulus) {}

    int value, modulus;
};

/// A computed result contradicts a closed-form expectation.
/// Like verification_failed, this must be surfaced, never swallowed.
class internal_mismatch : public error {
public:
    explicit internal_mismatch(const std::string& what) : error("internal mismatch: " + what) {}
};

/// Malformed textual input (table files, labels, counts).
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error("parse error: " + what) {}
};

} // namespace qsym
