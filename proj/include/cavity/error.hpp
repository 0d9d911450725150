#pragma once

#include <stdexcept>
#include <string>

namespace cavity {

/// Argument outside an operation's domain (bad order, bad geometry, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure failed to produce a result (bracketing, convergence).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Upper bound on the angular momentum order. Defaults to 100 and may be
/// overridden through the CAVITYSPEC_LMAX environment variable.
int l_max();

inline constexpr int kDefaultLMax = 100;

/// Throws DomainError unless 0 <= l <= l_max().
void check_order(int l);

}  // namespace cavity
