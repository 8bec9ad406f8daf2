#pragma once

#include <stdexcept>
#include <string>

namespace tfc {

/// Raised when an input breaks a documented precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a request exceeds a configured size cap. Carries the cap name
/// and a hint pointing at a cheaper route.
class ResourceLimit : public std::runtime_error {
public:
    ResourceLimit(std::string cap, long long limit, const std::string& what_arg,
                  std::string suggestion)
        : std::runtime_error(what_arg),
          cap_(std::move(cap)),
          limit_(limit),
          suggestion_(std::move(suggestion)) {}

    const std::string& cap() const noexcept { return cap_; }
    long long limit() const noexcept { return limit_; }
    const std::string& suggestion() const noexcept { return suggestion_; }

private:
    std::string cap_;
    long long limit_;
    std::string suggestion_;
};

/// Iterative method stopped at its iteration cap.
class NumericalFailure : public std::runtime_error {
public:
    NumericalFailure(const std::string& what_arg, double last_estimate)
        : std::runtime_error(what_arg), last_estimate_(last_estimate) {}

    double last_estimate() const noexcept { return last_estimate_; }

private:
    double last_estimate_;
};

/// Argument lies outside a theorem's hypothesis.
class OutOfDomain : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace tfc
