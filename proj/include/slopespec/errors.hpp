#pragma once

#include <stdexcept>
#include <string>

namespace slopespec {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A block slope sequence that is not strictly decreasing.
class SlopeOrderViolation : public Error {
public:
    using Error::Error;
};

// A bundle description with no blocks.
class EmptyType : public Error {
public:
    using Error::Error;
};

// An argument outside its documented domain.
class OutOfRange : public Error {
public:
    using Error::Error;
};

// A caller-supplied maximal-subbundle slope that exceeds its proven bound.
class InvalidESValue : public Error {
public:
    using Error::Error;
};

// An operation whose hypothesis requires a single-block type.
class NotStronglySemistable : public Error {
public:
    using Error::Error;
};

// The degree threshold is undefined for ranks inside the first block.
class UndefinedThreshold : public Error {
public:
    using Error::Error;
};

// An enumeration request beyond the configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// A bundle-file syntax error with its position.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace slopespec
