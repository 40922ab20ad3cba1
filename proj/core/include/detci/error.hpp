// Copyright 2026 The detci Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace detci {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid value passed by the caller (index out of range, duplicate entry,
/// mismatched shapes, violated precondition).
class InputError : public Error {
public:
    using Error::Error;
};

/// Malformed input file (FCIDUMP, determinant list).
class FormatError : public Error {
public:
    using Error::Error;
};

/// Invalid run configuration (bit_length out of range, bad solver options).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A requested allocation exceeds the configured memory budget.  The message
/// names required vs available bytes.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Feature accepted by the interface but not supported by this build
/// (row-communicator distribution, r != 1).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

} // namespace detci
