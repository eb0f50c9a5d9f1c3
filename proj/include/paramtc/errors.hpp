#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace paramtc {

/* Common base for everything this library throws on purpose. */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EqualIndices : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class SpaceMismatch : public Error {
public:
    using Error::Error;
};

class IntegerOverflow : public Error {
public:
    using Error::Error;
};

class UnsupportedDimension : public Error {
public:
    using Error::Error;
};

class NotAZeroDivisor : public Error {
public:
    using Error::Error;
};

class KindMismatch : public Error {
public:
    using Error::Error;
};

class TheoremCheckFailed : public Error {
public:
    using Error::Error;
};

class ObstacleCountTooSmall : public Error {
public:
    using Error::Error;
};

/* Search ran out of its candidate budget before finishing a length level.
 * partial_best is the longest nonzero product confirmed before the cutoff. */
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, int partial_best, std::int64_t candidates_used)
        : Error(what), partial_best(partial_best), candidates_used(candidates_used)
    {
    }

    int partial_best;
    std::int64_t candidates_used;
};

/* Parse failure; offset is a 0-based byte position into the input. */
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& expected)
        : Error("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
          offset(offset),
          expected(expected)
    {
    }

    std::size_t offset;
    std::string expected;
};

}  // namespace paramtc
