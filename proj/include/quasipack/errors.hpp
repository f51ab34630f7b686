#pragma once

#include <stdexcept>
#include <string>

namespace quasipack {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A semantically invalid input: bad configuration field, malformed cluster,
/// inconsistent dimensions. The message names the offending field or value.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Syntax error while reading a configuration or data file.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    explicit ParseError(const std::string& msg) : Error(msg) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_ = 0;
    int column_ = 0;
};

/// The superspace vectors assembled from a cluster fail the orthogonality or
/// equal-norm requirements. Such a cluster cannot define a physical subspace.
class EmbeddingInvalid : public Error {
public:
    using Error::Error;
};

}  // namespace quasipack
