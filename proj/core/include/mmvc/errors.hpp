#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mmvc {

// Base class for all library errors.  The CLI maps each subclass to a fixed
// process exit code, so front ends can branch on failure kind without parsing
// messages.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: unreadable graph/CNF files, bad arguments, violated call
// preconditions.  CLI exit code 2.
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

// File parse failure; carries the 1-based line number when known.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, long line)
        : InputError(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    long line() const { return line_; }

private:
    long line_ = 0;
};

// A graph handed to a class-restricted routine contains the forbidden
// pattern.  Carries the located embedding when one was computed.  CLI exit
// code 3.
class NotInClassError : public Error {
public:
    NotInClassError(const std::string& what, std::vector<int> embedding)
        : Error(what), embedding_(std::move(embedding)) {}

    const std::vector<int>& embedding() const { return embedding_; }

private:
    std::vector<int> embedding_;
};

// Exact search asked to run past its configured instance-size cap.  CLI exit
// code 4.
class CapExceededError : public Error {
public:
    explicit CapExceededError(const std::string& what) : Error(what) {}
};

// A guaranteed bound or structural consequence failed at runtime.  This never
// fires on correct inputs; it exists so that a broken invariant aborts loudly
// instead of propagating silently.  CLI exit code 5.
class BoundViolationError : public Error {
public:
    explicit BoundViolationError(const std::string& what) : Error(what) {}
};

// Randomized generation could not satisfy its class constraint within budget.
class GenerationError : public InputError {
public:
    explicit GenerationError(const std::string& what) : InputError(what) {}
};

} // namespace mmvc
