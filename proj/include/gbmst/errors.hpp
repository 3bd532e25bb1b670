#pragma once

#include <stdexcept>
#include <string>

namespace gbmst {

// Base class for all recoverable errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyBall : Error {
    EmptyBall() : Error("granular ball has no members") {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InvalidSplit : Error {
    using Error::Error;
};

struct CannotSplit : Error {
    CannotSplit() : Error("cannot split a ball with fewer than 2 members") {}
};

struct DegenerateBall : Error {
    DegenerateBall() : Error("all members are identical; ball cannot be split") {}
};

struct NoCoreBalls : Error {
    NoCoreBalls() : Error("no core balls to build a spanning tree over") {}
};

struct TooManyClusters : Error {
    using Error::Error;
};

struct InvalidK : Error {
    InvalidK() : Error("cluster count k must be at least 1") {}
};

struct LabelLengthMismatch : Error {
    LabelLengthMismatch() : Error("label vectors differ in length") {}
};

struct TooFewPoints : Error {
    TooFewPoints() : Error("pair-counting metrics need at least 2 points") {}
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t row, std::size_t col)
        : Error(what + " (row " + std::to_string(row) + ", column " + std::to_string(col) + ")"),
          row(row),
          col(col) {}
    std::size_t row;
    std::size_t col;
};

struct RaggedRows : Error {
    explicit RaggedRows(std::size_t row)
        : Error("row " + std::to_string(row) + " has a different number of cells"), row(row) {}
    std::size_t row;
};

struct EmptyFile : Error {
    explicit EmptyFile(const std::string& path) : Error("no data rows in " + path) {}
};

struct InvalidSpec : Error {
    using Error::Error;
};

// Faults that indicate a bug in the library rather than bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Non-fatal conditions (core-set fallback, iteration caps) are reported through
// this hook. Default writes one line to stderr.
using WarningHandler = void (*)(const std::string&);
WarningHandler set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

}  // namespace gbmst
