#pragma once

#include <stdexcept>
#include <string>

namespace nlt {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A field contains NaN/Inf values where finite data is required.
class invalid_field_error : public error {
public:
    explicit invalid_field_error(const std::string& msg) : error(msg) {}
};

/// A spectrum violates Hermitian symmetry beyond tolerance.
class asymmetric_spectrum_error : public error {
public:
    explicit asymmetric_spectrum_error(const std::string& msg) : error(msg) {}
};

/// An argument is outside its documented range.
class parameter_error : public error {
public:
    explicit parameter_error(const std::string& msg) : error(msg) {}
};

/// Grid too large for an O(N^2) reference path.
class oracle_size_error : public error {
public:
    explicit oracle_size_error(const std::string& msg) : error(msg) {}
};

/// Solution left the finite range during time integration.
class blow_up_error : public error {
public:
    blow_up_error(const std::string& msg, double t) : error(msg), time(t) {}
    double time;
};

/// Malformed scenario configuration.
class config_error : public error {
public:
    explicit config_error(const std::string& msg) : error(msg) {}
};

} // namespace nlt
