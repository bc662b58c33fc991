#ifndef HORNMODAL_ERRORS_HPP
#define HORNMODAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hornmodal {

// Input text could not be parsed. `offset` is the byte position of the
// offending character (or end-of-input).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// The configured search bounds were too small to decide a classification
// question. Never resolved silently.
class BoundsExhaustedError : public std::runtime_error {
public:
    explicit BoundsExhaustedError(const std::string& msg)
        : std::runtime_error(msg) {}
};

// None of the reflexive/transitive/symmetric cases matched the clause under
// inspection. Signals an implementation or bounds bug, not a user error.
class WellDefinednessError : public std::logic_error {
public:
    explicit WellDefinednessError(const std::string& msg)
        : std::logic_error(msg) {}
};

// Saturation met a clause whose conclusion cannot be repaired by edge
// insertion (FALSE conclusion, or conclusion variables outside / disconnected
// from the prerequisite graph).
class ApplicableFalseClauseError : public std::runtime_error {
public:
    explicit ApplicableFalseClauseError(const std::string& msg)
        : std::runtime_error(msg) {}
};

// The requested frame condition is outside what the tableau engine handles.
class UnsupportedLogicError : public std::runtime_error {
public:
    explicit UnsupportedLogicError(const std::string& msg)
        : std::runtime_error(msg) {}
};

// A solver hit its configured node/step budget.
class ResourceExhaustedError : public std::runtime_error {
public:
    explicit ResourceExhaustedError(const std::string& msg)
        : std::runtime_error(msg) {}
};

} // namespace hornmodal

#endif // HORNMODAL_ERRORS_HPP
