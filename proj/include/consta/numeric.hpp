#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace consta {

/// Error categories, mapped one-to-one onto CLI exit codes.
enum class ErrorKind {
  Precondition,   // bad arguments, gcd(n,q) != 1, non-prime p, ...
  FieldMismatch,
  Budget,         // enumeration would exceed the configured budget
  Containment,    // construction preconditions (nesting, dimensions)
  Io,
  Parse,
  Internal,       // an internal consistency assertion failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::Precondition, what);
}

/// Non-negative remainder.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(std::int64_t n);

/// Distinct prime divisors, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);

/// Multiplicative order of `a` modulo `m`; requires gcd(a, m) = 1.
std::int64_t multiplicative_order_mod(std::int64_t a, std::int64_t m);

/// Inverse of `a` modulo `m`; requires gcd(a, m) = 1. Returns 0 when m = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

/// If q = p^m with p prime, returns {p, m}; otherwise {0, 0}.
std::pair<int, int> prime_power(std::int64_t q);

}  // namespace consta
