#pragma once

// Table-driven arithmetic in GF(p^m), q = p^m <= 2^16.
//
// Elements are stored as their coefficient vector over GF(p) packed in base
// p, constant coefficient least significant: the value sum c_i p^i.  That
// integer is also the "representation order" used whenever the library
// needs a canonical smallest element.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "consta/numeric.hpp"

namespace consta {

struct Elem {
  std::uint16_t v = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  using value_type = Elem;

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }

  /// Monic irreducible modulus over GF(p), low degree first, length m+1.
  const std::vector<int>& modulus() const { return modulus_; }
  /// Canonical primitive element.
  Elem xi() const { return xi_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  bool is_zero(Elem a) const { return a.v == 0; }
  bool equal(Elem a, Elem b) const { return a.v == b.v; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return Elem{static_cast<std::uint16_t>(a.v ^ b.v)};
    if (!add_table_.empty()) return Elem{add_table_[a.v * q_ + b.v]};
    return add_slow(a, b);
  }
  Elem neg(Elem a) const {
    if (p_ == 2) return a;
    return Elem{neg_[a.v]};
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return Elem{0};
    return Elem{exp_[log_[a.v] + log_[b.v]]};
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;

  /// xi^e for any integer e.
  Elem exp(std::int64_t e) const {
    return Elem{exp_[static_cast<std::size_t>(mod(e, q_ - 1))]};
  }
  /// Discrete logarithm to base xi, in [0, q-2].
  int log(Elem a) const;
  /// Multiplicative order.
  int order(Elem a) const;

  /// x -> x^s for q = s^2 (the conjugation used by Hermitian products).
  Elem conjugate(Elem a) const;
  bool is_square_order() const { return m_ % 2 == 0; }

  /// GF(p) coefficient of x^i in the representation of `a`.
  int digit(Elem a, int i) const;
  Elem from_digits(const std::vector<int>& digits) const;
  Elem from_int(std::int64_t v) const;  // embeds the prime-field integer v mod p

  /// Human form: integers for prime fields, "w^k" powers of xi otherwise.
  std::string to_string(Elem a) const;
  /// Accepts integers (prime fields), "w", "w^k", "x^k" (power of xi).
  Elem parse(const std::string& text) const;

  std::vector<Elem> elements() const;
  std::vector<Elem> nonzero_elements() const;

  Field(int p, int m);  // use make_field

 private:
  Elem add_slow(Elem a, Elem b) const;
  Elem mul_slow(Elem a, Elem b) const;

  int p_, m_, q_;
  std::vector<int> modulus_;
  Elem xi_;
  std::vector<std::uint16_t> exp_;  // length 2(q-1)
  std::vector<std::int32_t> log_;   // length q, log_[0] = -1
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> neg_;
  std::vector<int> pow_p_;
};

/// Returns the canonical GF(p^m); repeated calls return the same object.
FieldPtr make_field(int p, int m);
/// Convenience: q must be a prime power.
FieldPtr make_field_q(int q);

/// Lexicographically smallest monic irreducible degree-`deg` polynomial over
/// GF(p), compared coefficient-wise starting at the constant term.
std::vector<int> smallest_irreducible_prime(int p, int deg);

}  // namespace consta
