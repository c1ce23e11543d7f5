#pragma once

#include <stdexcept>
#include <string>

namespace epk {

// Input text could not be decoded (bad edge list line, bad graph6 byte, ...).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition on arguments was violated (unknown vertex, bad parameter, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// An exact search ran against its configured limit (size cap or node budget).
// Distinct from a negative answer: the search was cut off, not exhausted.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A property the algorithm guarantees failed to hold; always a bug signal.
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace epk
