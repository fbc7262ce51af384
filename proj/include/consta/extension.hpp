#pragma once

// GF(q^z) as GF(q)[y]/(f(y)) with plain polynomial arithmetic; z may be far
// too large for log tables.  Used to host the roots of x^n - a.

#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "consta/field.hpp"

namespace consta {

using BigInt = boost::multiprecision::cpp_int;

class ExtField {
 public:
  using value_type = std::vector<Elem>;  // exactly z coefficients, low first

  ExtField(FieldPtr base, int z);  // use make_extension_field

  const Field& base() const { return *base_; }
  const FieldPtr& base_ptr() const { return base_; }
  int degree() const { return z_; }
  /// Monic irreducible modulus over the base field, length z+1.
  const std::vector<Elem>& modulus() const { return modulus_; }
  /// q^z
  const BigInt& order() const { return order_; }

  value_type zero() const { return value_type(z_, Elem{0}); }
  value_type one() const {
    auto v = zero();
    v[0] = Elem{1};
    return v;
  }
  value_type embed(Elem c) const {
    auto v = zero();
    v[0] = c;
    return v;
  }
  /// Returns the base-field element if `x` lies in GF(q).
  bool in_base(const value_type& x) const;

  bool is_zero(const value_type& x) const;
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  value_type add(const value_type& a, const value_type& b) const;
  value_type sub(const value_type& a, const value_type& b) const;
  value_type neg(const value_type& a) const;
  value_type mul(const value_type& a, const value_type& b) const;
  value_type inv(const value_type& a) const;
  value_type pow(value_type a, const BigInt& e) const;
  value_type pow(const value_type& a, std::int64_t e) const;

  /// Element with base-q digit expansion of `index` (canonical scan order).
  value_type from_index(std::int64_t index) const;

 private:
  FieldPtr base_;
  int z_;
  std::vector<Elem> modulus_;
  BigInt order_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

/// Canonical GF(q^z) over `base`; cached.
ExtFieldPtr make_extension_field(const FieldPtr& base, int z);

/// Lexicographically smallest monic irreducible of degree z over `base`
/// (coefficients compared from the constant term upward).
std::vector<Elem> smallest_irreducible(const Field& base, int z);

struct RootOfUnity {
  ExtFieldPtr ext;
  ExtField::value_type alpha;
  std::int64_t order = 1;  // alpha is a primitive order-th root of unity
};

/// Smallest extension GF(q^z) containing the order-th roots of unity
/// (z = ord_order(q)) together with a canonical primitive order-th root.
RootOfUnity make_extension(const FieldPtr& base, std::int64_t order);

/// Fixes alpha for x^n - a: a primitive (tn)-th root of unity with
/// alpha^n = a, t = ord(a).  Deterministic.
RootOfUnity fix_root(const FieldPtr& base, int n, Elem a);

/// True iff x has multiplicative order exactly `order` (checks x^order = 1
/// and x^(order/r) != 1 for every prime r | order).
bool has_exact_order(const ExtField& ext, const ExtField::value_type& x, std::int64_t order);

}  // namespace consta
