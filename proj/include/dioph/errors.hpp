#pragma once

#include <stdexcept>
#include <string>

namespace dioph {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: bad expression text, bad polynomial file, dimension
// mismatch, argument out of its documented domain.
struct DomainError : Error {
    using Error::Error;
};

struct ParseError : DomainError {
    using DomainError::DomainError;
};

// d == 0 in rat_normalize, or an expression divides by an exact zero.
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// A requested enclosure radius is unreachable within the working-precision cap.
struct PrecisionExhausted : Error {
    PrecisionExhausted() : Error("precision exhausted") {}
    explicit PrecisionExhausted(const std::string& what) : Error(what) {}
};

// A divisor or even-root radicand enclosure still straddles 0 at the cap.
struct IndeterminateSign : Error {
    IndeterminateSign() : Error("indeterminate sign") {}
    explicit IndeterminateSign(const std::string& what) : Error(what) {}
};

// A strict comparison between two scan values stayed undecided at p_max.
// Usually signals a rational dependence the hypotheses exclude.
struct UndecidedComparison : Error {
    unsigned long q = 0, k = 0;
    UndecidedComparison(unsigned long q_, unsigned long k_, const std::string& what)
        : Error(what), q(q_), k(k_) {}
};

// A scanned target produced an exactly zero distance.
struct RationalTargetError : Error {
    RationalTargetError() : Error("rational target") {}
    explicit RationalTargetError(const std::string& what) : Error(what) {}
};

// No variety point was found in the seeding window and no user bound was given.
struct EmptyVarietyWindow : Error {
    EmptyVarietyWindow() : Error("empty variety window") {}
    explicit EmptyVarietyWindow(const std::string& what) : Error(what) {}
};

} // namespace dioph
