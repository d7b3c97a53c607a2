// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hardness {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Missing or ambiguous column in tabular input.
class SchemaError : public Error {
public:
    using Error::Error;
};

// A cell could not be turned into a finite real. Row is the 1-based data row
// (header excluded); column is the header name.
class IngestionError : public Error {
public:
    IngestionError(std::size_t row, std::string column, const std::string& what)
        : Error(what), row_(row), column_(std::move(column))
    {
    }

    std::size_t row() const noexcept { return row_; }
    const std::string& column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::string column_;
};

// Data is well-formed but unusable for the requested computation.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Caller passed an out-of-domain argument.
class ParameterError : public Error {
public:
    using Error::Error;
};

} // namespace hardness
