#pragma once

#include <stdexcept>
#include <string>

namespace mder {

// Base of every failure raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// oracle
class cap_exceeded : public error {
public:
    using error::error;
};

class not_a_bijection : public error {
public:
    using error::error;
};

// recurrence
class unsupported_k : public error {
public:
    using error::error;
};

class inexact_division : public error {
public:
    using error::error;
};

class leading_coefficient_zero : public error {
public:
    using error::error;
};

class window_too_short : public error {
public:
    using error::error;
};

class invalid_operator : public error {
public:
    using error::error;
};

// guesser
class insufficient_terms : public error {
public:
    using error::error;
};

// serialization and shape syntax
class parse_error : public error {
public:
    using error::error;
};

class schema_error : public error {
public:
    using error::error;
};

} // namespace mder
