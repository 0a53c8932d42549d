#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcolor {

// Base class for all qcolor errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested register size exceeds the simulator cap.
struct CapacityError : Error {
    using Error::Error;
};

// Qubit or target index out of range, or duplicate targets.
struct IndexError : Error {
    using Error::Error;
};

// Dimension mismatch between a state, circuit or estimate.
struct ShapeError : Error {
    using Error::Error;
};

// Value outside its documented domain.
struct ArgumentError : Error {
    using Error::Error;
};

// Unsupported file format variant (e.g. PPM maxval != 255).
struct FormatError : Error {
    using Error::Error;
};

// Gate plan references roles invalid for its entanglement kind.
struct PlanError : Error {
    using Error::Error;
};

// Malformed input text or bytes. Carries the location of the failure:
// byte offset for binary inputs, line/column for line-oriented scripts.
class ParseError : public Error {
  public:
    static ParseError at_byte(std::size_t offset, const std::string& what) {
        ParseError e("parse error at byte " + std::to_string(offset) + ": " + what);
        e.offset_ = offset;
        e.has_offset_ = true;
        return e;
    }

    static ParseError at_line(std::size_t line, std::size_t column, const std::string& what) {
        ParseError e("parse error at line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": " + what);
        e.line_ = line;
        e.column_ = column;
        return e;
    }

    bool has_offset() const { return has_offset_; }
    std::size_t offset() const { return offset_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    explicit ParseError(const std::string& what) : Error(what) {}

    std::size_t offset_ = 0;
    bool has_offset_ = false;
    std::size_t line_ = 0;
    std::size_t column_ = 0;
};

} // namespace qcolor
