#pragma once

#include <stdexcept>

namespace primeorder {

// An operation would exceed a configured ceiling (sieve bound, order depth).
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed b-file content; the message carries file name and line number.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Remote fetch failed and no cached copy was available.
class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The server does not know the requested sequence.
class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace primeorder
