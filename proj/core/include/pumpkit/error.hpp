#pragma once

#include <stdexcept>
#include <string>

namespace pumpkit {

/// Base class of every exception thrown by pumpkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed external input (JSON documents, words with foreign symbols).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace pumpkit
