#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homdist
{
    /// Base class for everything the library throws.
    class HomdistError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Bad input data: malformed graphs, inconsistent configs, schema violations.
    class DataError : public HomdistError
    {
    public:
        using HomdistError::HomdistError;
    };

    /// A graph6 (or other text) record could not be decoded.
    class ParseError : public DataError
    {
    public:
        ParseError(const std::string & message, std::size_t offset) :
            DataError(message + " (at byte " + std::to_string(offset) + ")"),
            _offset(offset)
        {
        }

        [[nodiscard]] auto offset() const -> std::size_t { return _offset; }

    private:
        std::size_t _offset;
    };

    /// A well-formed request the library does not support (size guards, pattern kinds).
    class UnsupportedError : public HomdistError
    {
    public:
        using HomdistError::HomdistError;
    };

    /// A search ran out of its node-expansion budget before reaching an answer.
    class BudgetExceeded : public HomdistError
    {
    public:
        using HomdistError::HomdistError;
    };
}
