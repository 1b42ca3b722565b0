#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace paley {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a value that should be a rational integer is not one.
/// Seeing this at runtime means a formula or its bookkeeping is wrong.
class NotRational : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exact division that must be integral leaves a remainder.
class NonIntegral : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

/// Non-negative residue of a modulo n (n > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t n) noexcept {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/// Exact quotient num/den; throws NonIntegral if den does not divide num.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& what) {
  if (den == 0) throw NonIntegral(what + ": zero denominator");
  BigInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) {
    std::ostringstream os;
    os << what << ": " << num << " is not divisible by " << den;
    throw NonIntegral(os.str());
  }
  return quot;
}

inline bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// (p, r) with n = p^r, or (0, 0) when n is not a prime power.
inline std::pair<std::int64_t, int> prime_power_decomposition(std::int64_t n) noexcept {
  if (n < 2) return {0, 0};
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {n, 1};
  int r = 0;
  while (n % p == 0) {
    n /= p;
    ++r;
  }
  if (n != 1) return {0, 0};
  return {p, r};
}

inline bool is_prime_power(std::int64_t n) noexcept { return prime_power_decomposition(n).second > 0; }

/// Outcome of one named identity or structural check.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered collection of checks; a suite passes iff every entry passes.
struct CheckReport {
  std::vector<CheckResult> items;

  void add(std::string name, bool passed, std::string detail = {}) {
    items.push_back({std::move(name), passed, std::move(detail)});
  }
  void append(const CheckReport& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }

  [[nodiscard]] bool ok() const noexcept {
    for (const auto& it : items)
      if (!it.passed) return false;
    return true;
  }
  [[nodiscard]] std::vector<CheckResult> failures() const {
    std::vector<CheckResult> out;
    for (const auto& it : items)
      if (!it.passed) out.push_back(it);
    return out;
  }
};

}  // namespace paley
