#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace altpoly {

// Base class for every domain error raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An exact polynomial division left a nonzero remainder.
struct NotDivisible : Error {
    NotDivisible() : Error("polynomial division is not exact") {}
};

// A hypergeometric series hits a vanishing denominator Pochhammer factor, or
// a family parameter point fails its admissibility screen.  `detail` names
// the offending index and formula.
struct DegenerateParameters : Error {
    explicit DegenerateParameters(const std::string& detail)
        : Error("degenerate parameters: " + detail), detail(detail) {}
    std::string detail;
};

// <u, P_n^2> vanished while building a monic orthogonal sequence: the
// functional is not regular up to the requested depth.
struct NotRegularUpTo : Error {
    explicit NotRegularUpTo(std::size_t n)
        : Error("functional is not regular up to degree " + std::to_string(n) +
                ": <u, P_" + std::to_string(n) + "^2> = 0"),
          degree(n) {}
    std::size_t degree;
};

// R_n(tau^2) = 0: the kernel ratio in a Christoffel step is undefined.
struct KernelVanishes : Error {
    explicit KernelVanishes(std::size_t n)
        : Error("kernel polynomial R_" + std::to_string(n) +
                " vanishes at the shift point"),
          index(n) {}
    std::size_t index;
};

// A supplied monic family satisfies no three-term recurrence exactly.
struct NotAnOPSCandidate : Error {
    explicit NotAnOPSCandidate(std::size_t n)
        : Error("family member " + std::to_string(n) +
                " does not satisfy a three-term recurrence exactly"),
          index(n) {}
    std::size_t index;
};

// A fitted three-term recurrence came out with gamma_n = 0.
struct DegenerateRecurrence : Error {
    explicit DegenerateRecurrence(std::size_t n)
        : Error("three-term recurrence has gamma_" + std::to_string(n) + " = 0"),
          index(n) {}
    std::size_t index;
};

// The linear condition fixing the mass of a Geronimus functional is
// degenerate: no admissible seed moment, or every seed works.
struct CannotFitMass : Error {
    CannotFitMass() : Error("mass-fitting condition for the Geronimus functional is degenerate") {}
};

// A stored-prefix moment functional was queried beyond its prefix.
struct MomentDepthExceeded : Error {
    MomentDepthExceeded(std::size_t asked, std::size_t have)
        : Error("moment index " + std::to_string(asked) +
                " requested from a stored prefix of length " + std::to_string(have)),
          asked(asked), have(have) {}
    std::size_t asked;
    std::size_t have;
};

// Malformed rational string or document; carries the location of the fault.
struct ParseError : Error {
    explicit ParseError(const std::string& where_and_why)
        : Error("parse error: " + where_and_why) {}
};

}  // namespace altpoly
