#pragma once

#include <stdexcept>
#include <string>

namespace qrdw {

// Bad argument values: composite p, even n, non-coprime symbol inputs, ...
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A domain type's construction invariant failed.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Vector length does not match the prime-set rank.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested work exceeds a configured brute-force limit.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested work exceeds a configured resource budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal identity failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Euler decomposition was asked for on a graph with an odd vertex.
class NotEvenError : public std::runtime_error {
  public:
    explicit NotEvenError(int odd_vertex)
        : std::runtime_error("graph is not even: vertex " + std::to_string(odd_vertex) +
                             " has odd degree"),
          odd_vertex_(odd_vertex) {}

    int odd_vertex() const { return odd_vertex_; }

  private:
    int odd_vertex_;
};

} // namespace qrdw
