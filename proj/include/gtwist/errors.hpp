#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace gtwist {

// Input file could not be parsed. `line` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                      : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A caller violated a documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A 4-vertex subsystem matched no realizable K4 pattern.  Distinct from a
// "not generalized twisted" verdict: the input is outside the contract of
// the crossing predicate.
class NotRealizableError : public std::runtime_error {
public:
    NotRealizableError(const std::string& msg, std::array<int, 4> subset)
        : std::runtime_error(msg), subset_(subset) {}
    const std::array<int, 4>& subset() const { return subset_; }

private:
    std::array<int, 4> subset_;
};

}  // namespace gtwist
