#pragma once

#include <stdexcept>
#include <string>

namespace realgz {

/// Caller passed arguments that violate an operation's contract
/// (mismatched truncation orders, bad node orderings, invalid CLI input).
class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematically undefined request: non-invertible constant term,
/// symbolic power of a non-unit series, or a topology with e_C and e_R of
/// different parity.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace realgz
