#pragma once

#include <stdexcept>
#include <string>

namespace loopsym {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Two values from different (m, n) variable universes were combined.
struct ambient_mismatch : error {
    explicit ambient_mismatch(const std::string& what) : error(what) {}
};

/// Evaluation point does not assign every variable of the polynomial.
struct unbound_variable : error {
    explicit unbound_variable(const std::string& what) : error(what) {}
};

/// Division by the zero rational function (or zero rational).
struct divide_by_zero : error {
    explicit divide_by_zero(const std::string& what) : error(what) {}
};

/// Matrix window has the wrong shape for the requested operation.
struct shape_error : error {
    explicit shape_error(const std::string& what) : error(what) {}
};

/// Parameter out of its documented range.
struct domain_error : error {
    explicit domain_error(const std::string& what) : error(what) {}
};

/// A theorem hypothesis does not hold for the requested parameters.
struct hypothesis_error : error {
    explicit hypothesis_error(const std::string& what) : error(what) {}
};

} // namespace loopsym
