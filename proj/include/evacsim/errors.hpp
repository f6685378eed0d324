#pragma once

#include <stdexcept>
#include <string>

namespace evacsim {

/// Base class for all evacsim errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// World construction errors.
class InvalidDimensions : public Error {
public:
    using Error::Error;
};
class SlotOutOfRange : public Error {
public:
    using Error::Error;
};
class ExitOverflow : public Error {
public:
    using Error::Error;
};
class OverlappingExits : public Error {
public:
    using Error::Error;
};
class NoOpenExit : public Error {
public:
    using Error::Error;
};

// Engine errors.
class Overcrowded : public Error {
public:
    using Error::Error;
};

// Fire-code errors.
class DegenerateVantage : public Error {
public:
    using Error::Error;
};

// Analytical-model errors.
class NegativeCoefficient : public Error {
public:
    using Error::Error;
};
class NonPositiveArea : public Error {
public:
    using Error::Error;
};
class NegativeDensity : public Error {
public:
    using Error::Error;
};

/// Scenario file is syntactically malformed. Carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Scenario file is well-formed but violates an invariant. Carries the field name.
class ValidationError : public Error {
public:
    ValidationError(const std::string& field, const std::string& msg)
        : Error(field + ": " + msg), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace evacsim
