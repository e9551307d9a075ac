#pragma once

#include <stdexcept>
#include <string>

namespace circim {

/// Base class for every error thrown by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-contract input: bad JSON, violated precondition,
/// degenerate polynomial where a nondegenerate one is required.
class input_error : public error {
public:
    using error::error;
};

/// Exact division by zero.
class division_by_zero : public input_error {
public:
    division_by_zero() : input_error("division by zero") {}
};

/// Evaluation of a Laurent polynomial with negative exponents at z = 0.
class pole_error : public input_error {
public:
    pole_error() : input_error("pole at z = 0: negative exponents present") {}
};

/// Constant (or zero) polynomial where a nonconstant one is required.
class degenerate_input_error : public input_error {
public:
    using input_error::input_error;
};

/// Operation invoked outside its stated preconditions.
class usage_error : public input_error {
public:
    using input_error::input_error;
};

/// An internal consistency assertion failed. Indicates a bug or an
/// input outside the domain the invariants were proved for.
class internal_error : public error {
public:
    using error::error;
};

/// w -> x+iy, wbar -> x-iy substitution produced a nonreal coefficient.
class realization_error : public internal_error {
public:
    using internal_error::internal_error;
};

/// The scaling constant search in the gap-point construction failed.
class construction_error : public error {
public:
    using error::error;
};

}  // namespace circim
