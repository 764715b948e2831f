#pragma once

#include <stdexcept>

namespace mixsel {

/// Requested operation is not defined for the given distribution kind
/// (e.g. the density of an empirical sample).
class UnsupportedOperationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The requested model order cannot be fitted from the data
/// (fewer distinct points than components).
class InfeasibleOrderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation produced non-finite values or an inversion failed.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mixsel
