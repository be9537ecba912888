#pragma once

#include <stdexcept>
#include <string>

namespace qecc {

/// Caller passed invalid parameters (bad lengths, out-of-range values,
/// unsupported combinations). Maps to CLI exit code 1.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed external data (unparseable words, bad set files).
/// Maps to CLI exit code 2.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Broken internal invariant. Maps to CLI exit code 3.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace qecc
