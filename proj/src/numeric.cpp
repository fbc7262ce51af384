#include "consta/numeric.hpp"

#include <numeric>

namespace consta {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t multiplicative_order_mod(std::int64_t a, std::int64_t m) {
  require(m >= 1, "modulus must be positive");
  if (m == 1) return 1;
  require(std::gcd(mod(a, m), m) == 1, "order requested for a non-unit");
  std::int64_t x = mod(a, m), e = 1;
  while (x != 1) {
    x = (x * mod(a, m)) % m;
    ++e;
  }
  return e;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  require(old_r == 1, "inverse_mod: not invertible");
  return mod(old_s, m);
}

std::pair<int, int> prime_power(std::int64_t q) {
  if (q < 2) return {0, 0};
  auto ps = prime_factors(q);
  if (ps.size() != 1) return {0, 0};
  int m = 0;
  while (q > 1) {
    q /= ps[0];
    ++m;
  }
  return {static_cast<int>(ps[0]), m};
}

}  // namespace consta
