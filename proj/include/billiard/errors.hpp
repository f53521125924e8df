#pragma once

#include <stdexcept>
#include <string>

namespace billiard {

// Argument outside the domain of a combinatorial or algebraic operation.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Binary series operation on operands truncated at different orders.
class order_mismatch : public std::invalid_argument {
public:
    order_mismatch(long lhs, long rhs)
        : std::invalid_argument("series order mismatch: " + std::to_string(lhs) + " vs " +
                                std::to_string(rhs)),
          lhs_order(lhs), rhs_order(rhs) {}

    long lhs_order;
    long rhs_order;
};

// A substitution would read coefficients above the known truncation order.
// safe_order is the largest order at which the result is fully determined.
class truncation_deficit : public std::runtime_error {
public:
    truncation_deficit(long requested, long safe)
        : std::runtime_error("truncation deficit: requested order " + std::to_string(requested) +
                             ", coefficients only known up to " + std::to_string(safe)),
          requested_order(requested), safe_order(safe) {}

    long requested_order;
    long safe_order;
};

class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace billiard
