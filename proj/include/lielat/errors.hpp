#pragma once

#include <stdexcept>
#include <string>

namespace lielat {

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrix : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotPIntegral : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotALattice : std::domain_error {
  explicit NotALattice(const std::string& msg) : std::domain_error(msg) {}
};

struct NotALieAlgebra : std::domain_error {
  NotALieAlgebra(const std::string& msg, int i, int j, int k)
      : std::domain_error(msg), i(i), j(j), k(k) {}
  int i, j, k;  // failing basis triple
};

struct NotAnAutomorphism : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotASublattice : std::domain_error {
  using std::domain_error::domain_error;
};

struct InvalidIso : std::domain_error {
  using std::domain_error::domain_error;
};

struct BasisMismatch : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotPowerful : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnsupportedClass : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotASubgroup : std::domain_error {
  using std::domain_error::domain_error;
};

// Thrown when an enumeration or search exceeds the configured budget.
// `partial` carries how much work was completed before giving up.
struct BudgetError : std::runtime_error {
  BudgetError(const std::string& msg, long long partial)
      : std::runtime_error(msg), partial(partial) {}
  long long partial;
};

}  // namespace lielat
