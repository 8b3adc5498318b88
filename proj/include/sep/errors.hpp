#ifndef SEP_ERRORS_HPP
#define SEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sep {

// Thrown when a configured work limit would be exceeded. Exceeding a cap is
// an error, never silent truncation.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by verification harnesses (sweep, contraction runner) when a checked
// invariant fails; this signals an implementation bug, not bad input.
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sep

#endif
