#pragma once

// Dense univariate polynomials over a coefficient ring.  The ring type
// supplies value_type, zero(), one(), add, sub, neg, mul, inv, is_zero and
// equal; both Field (GF(q)) and ExtField (GF(q^z)) qualify.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "consta/field.hpp"

namespace consta {

template <class Ring>
struct Poly {
  using value_type = typename Ring::value_type;

  const Ring* ring = nullptr;
  std::vector<value_type> coeffs;  // low degree first; empty = zero polynomial

  Poly() = default;
  Poly(const Ring& r, std::vector<value_type> c) : ring(&r), coeffs(std::move(c)) { normalize(); }

  static Poly zero(const Ring& r) { return Poly(r, {}); }
  static Poly constant(const Ring& r, value_type c) { return Poly(r, {std::move(c)}); }
  static Poly monomial(const Ring& r, int deg, value_type c) {
    std::vector<value_type> v(deg + 1, r.zero());
    v[deg] = std::move(c);
    return Poly(r, std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs.empty(); }
  const value_type& lead() const { return coeffs.back(); }
  value_type coeff(int i) const {
    return i < static_cast<int>(coeffs.size()) ? coeffs[i] : ring->zero();
  }

  void normalize() {
    while (!coeffs.empty() && ring->is_zero(coeffs.back())) coeffs.pop_back();
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      if (!a.ring->equal(a.coeffs[i], b.coeffs[i])) return false;
    return true;
  }
};

namespace detail {
template <class Ring>
void check_same(const Poly<Ring>& a, const Poly<Ring>& b) {
  if (a.ring != b.ring && a.ring && b.ring)
    fail(ErrorKind::FieldMismatch, "polynomials over different rings");
}
}  // namespace detail

template <class Ring>
Poly<Ring> poly_add(const Poly<Ring>& a, const Poly<Ring>& b) {
  detail::check_same(a, b);
  const Ring& r = a.ring ? *a.ring : *b.ring;
  std::vector<typename Ring::value_type> c(std::max(a.coeffs.size(), b.coeffs.size()), r.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.add(a.coeff(i), b.coeff(i));
  return Poly<Ring>(r, std::move(c));
}

template <class Ring>
Poly<Ring> poly_sub(const Poly<Ring>& a, const Poly<Ring>& b) {
  detail::check_same(a, b);
  const Ring& r = a.ring ? *a.ring : *b.ring;
  std::vector<typename Ring::value_type> c(std::max(a.coeffs.size(), b.coeffs.size()), r.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.sub(a.coeff(i), b.coeff(i));
  return Poly<Ring>(r, std::move(c));
}

template <class Ring>
Poly<Ring> poly_mul(const Poly<Ring>& a, const Poly<Ring>& b) {
  detail::check_same(a, b);
  const Ring& r = a.ring ? *a.ring : *b.ring;
  if (a.is_zero() || b.is_zero()) return Poly<Ring>::zero(r);
  std::vector<typename Ring::value_type> c(a.coeffs.size() + b.coeffs.size() - 1, r.zero());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (r.is_zero(a.coeffs[i])) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      c[i + j] = r.add(c[i + j], r.mul(a.coeffs[i], b.coeffs[j]));
  }
  return Poly<Ring>(r, std::move(c));
}

template <class Ring>
Poly<Ring> poly_scale(const Poly<Ring>& a, const typename Ring::value_type& s) {
  std::vector<typename Ring::value_type> c = a.coeffs;
  for (auto& x : c) x = a.ring->mul(x, s);
  return Poly<Ring>(*a.ring, std::move(c));
}

/// Quotient and remainder; the divisor must be nonzero.
template <class Ring>
std::pair<Poly<Ring>, Poly<Ring>> poly_divmod(const Poly<Ring>& a, const Poly<Ring>& b) {
  detail::check_same(a, b);
  if (b.is_zero()) fail(ErrorKind::Precondition, "polynomial division by zero");
  const Ring& r = *b.ring;
  if (a.degree() < b.degree()) return {Poly<Ring>::zero(r), a};
  auto rem = a.coeffs;
  const int db = b.degree();
  std::vector<typename Ring::value_type> quot(a.degree() - db + 1, r.zero());
  const auto inv_lead = r.inv(b.lead());
  for (int i = a.degree() - db; i >= 0; --i) {
    const auto f = r.mul(rem[i + db], inv_lead);
    quot[i] = f;
    if (r.is_zero(f)) continue;
    for (int j = 0; j <= db; ++j) rem[i + j] = r.sub(rem[i + j], r.mul(f, b.coeffs[j]));
  }
  rem.resize(db);
  return {Poly<Ring>(r, std::move(quot)), Poly<Ring>(r, std::move(rem))};
}

template <class Ring>
Poly<Ring> poly_monic(const Poly<Ring>& a) {
  if (a.is_zero()) return a;
  return poly_scale(a, a.ring->inv(a.lead()));
}

/// Monic greatest common divisor (zero when both inputs are zero).
template <class Ring>
Poly<Ring> poly_gcd(Poly<Ring> a, Poly<Ring> b) {
  detail::check_same(a, b);
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

template <class Ring>
bool poly_divides(const Poly<Ring>& d, const Poly<Ring>& a) {
  return poly_divmod(a, d).second.is_zero();
}

/// Horner evaluation at a point of the coefficient ring.
template <class Ring>
typename Ring::value_type poly_eval(const Poly<Ring>& f, const typename Ring::value_type& x) {
  auto acc = f.ring->zero();
  for (int i = f.degree(); i >= 0; --i) acc = f.ring->add(f.ring->mul(acc, x), f.coeffs[i]);
  return acc;
}

/// Evaluates f at a point of an extension ring that embeds f's coefficients.
template <class Ring, class Ext>
typename Ext::value_type poly_eval_lifted(const Poly<Ring>& f, const Ext& ext,
                                          const typename Ext::value_type& x) {
  if (&ext.base() != f.ring)
    fail(ErrorKind::FieldMismatch, "evaluation point lies in an unrelated extension");
  auto acc = ext.zero();
  for (int i = f.degree(); i >= 0; --i) acc = ext.add(ext.mul(acc, x), ext.embed(f.coeffs[i]));
  return acc;
}

/// x^n - c.
template <class Ring>
Poly<Ring> binomial(const Ring& r, int n, const typename Ring::value_type& c) {
  std::vector<typename Ring::value_type> v(n + 1, r.zero());
  v[n] = r.one();
  v[0] = r.sub(v[0], c);
  return Poly<Ring>(r, std::move(v));
}

/// "x^4 + 2x^3 + x + 1" style, highest degree first.
inline std::string to_string(const Poly<Field>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const Elem c = f.coeffs[i];
    if (c.v == 0) continue;
    if (!first) os << " + ";
    first = false;
    const std::string cs = f.ring->to_string(c);
    const bool unit = c.v == 1;
    if (i == 0) {
      os << cs;
      continue;
    }
    if (!unit) os << cs << (f.ring->m() == 1 ? "" : "*");
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace consta
