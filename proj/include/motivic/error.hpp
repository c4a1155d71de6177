#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motivic {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands live in different rings (variable lists or Laurent flag differ).
class RingMismatch : public Error {
public:
    using Error::Error;
};

// Series operands carry different truncation orders, or an order was
// extended past what is known.
class OrderMismatch : public Error {
public:
    using Error::Error;
};

// An operation that needs constant term 1 received something else.
class NotUnital : public Error {
public:
    using Error::Error;
};

// A ring map that does not commute with the power structure was requested.
class IncompatibleSubstitution : public Error {
public:
    using Error::Error;
};

// Exhaustive oracles refuse inputs that would not finish in reasonable time.
class ScaleBoundExceeded : public Error {
public:
    using Error::Error;
};

// Malformed or inconsistent data (local Hilbert series files, JSON values).
class DataError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace motivic
