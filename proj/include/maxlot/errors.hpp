#pragma once

#include <stdexcept>
#include <string>

namespace maxlot {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct NotSkewSymmetricError : Error {
    using Error::Error;
};

struct EmptyProfileError : Error {
    using Error::Error;
};

struct InvalidFactorError : Error {
    using Error::Error;
};

struct NonOrdinalProfileError : Error {
    using Error::Error;
};

struct UnknownMechanismError : Error {
    using Error::Error;
};

struct UnknownPropertyError : Error {
    using Error::Error;
};

struct UnknownCampaignError : Error {
    using Error::Error;
};

/// Parse failure with a 1-based source position.
struct ParseError : Error {
    ParseError(std::string message, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                std::move(message)),
          line(line),
          column(column) {}

    int line;
    int column;
};

struct UnknownAlternativeError : ParseError {
    using ParseError::ParseError;
};

struct DuplicateAlternativeError : ParseError {
    using ParseError::ParseError;
};

}  // namespace maxlot
