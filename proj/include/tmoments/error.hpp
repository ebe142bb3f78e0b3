#pragma once

#include <stdexcept>
#include <string>

namespace tmoments {

/// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a requested moment does not exist for the given degrees of
/// freedom (the k-th moment of a t variate needs nu > k).
class NonexistentMoment : public DomainError {
public:
    NonexistentMoment(int order, double nu);

    int order() const noexcept { return order_; }
    double nu() const noexcept { return nu_; }

private:
    int order_;
    double nu_;
};

/// Raised by the verification oracles when they cannot reach the requested
/// accuracy. Oracles never return a silently degraded value.
class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws NonexistentMoment unless nu > order.
void require_moment(int order, double nu);

}  // namespace tmoments
