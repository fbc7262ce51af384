#include "consta/extension.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "consta/poly.hpp"

namespace consta {

namespace {

using FPoly = Poly<Field>;

FPoly mulmod(const FPoly& a, const FPoly& b, const FPoly& f) {
  return poly_divmod(poly_mul(a, b), f).second;
}

FPoly powmod_q(const FPoly& a, const FPoly& f, int q) {
  FPoly result = FPoly::constant(*f.ring, Elem{1});
  FPoly base = a;
  int e = q;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, f);
    base = mulmod(base, base, f);
    e >>= 1;
  }
  return result;
}

// Rabin's irreducibility test.
bool irreducible_over(const FPoly& f) {
  const Field& k = *f.ring;
  const int z = f.degree();
  if (z <= 0) return false;
  if (z == 1) return true;
  if (k.is_zero(f.coeffs[0])) return false;
  const FPoly y = FPoly::monomial(k, 1, Elem{1});
  std::vector<FPoly> frob(z + 1);  // frob[i] = y^(q^i) mod f
  frob[0] = y;
  for (int i = 1; i <= z; ++i) frob[i] = powmod_q(frob[i - 1], f, k.q());
  if (!(frob[z] == poly_divmod(y, f).second)) return false;
  for (auto r : prime_factors(z)) {
    const FPoly g = poly_gcd(poly_sub(frob[z / r], y), f);
    if (g.degree() != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Elem> smallest_irreducible(const Field& base, int z) {
  require(z >= 1, "extension degree must be positive");
  const int q = base.q();
  if (z == 1) return {Elem{0}, Elem{1}};
  // c0 = 0 is divisible by y, so the scan starts at c0 = 1
  std::vector<int> digits(z, 0);  // digits[0] = c0 is most significant
  digits[0] = 1;
  while (true) {
    std::vector<Elem> c(z + 1);
    for (int i = 0; i < z; ++i) c[i] = Elem{static_cast<std::uint16_t>(digits[i])};
    c[z] = Elem{1};
    FPoly f(base, c);
    if (irreducible_over(f)) return c;
    int pos = z - 1;
    while (pos >= 0 && ++digits[pos] == q) digits[pos--] = 0;
    if (pos < 0) break;
  }
  fail(ErrorKind::Internal, "no irreducible polynomial of degree " + std::to_string(z));
}

ExtField::ExtField(FieldPtr base, int z) : base_(std::move(base)), z_(z) {
  require(z_ >= 1, "extension degree must be positive");
  modulus_ = smallest_irreducible(*base_, z_);
  order_ = 1;
  for (int i = 0; i < z_; ++i) order_ *= base_->q();
}

bool ExtField::in_base(const value_type& x) const {
  for (int i = 1; i < z_; ++i)
    if (x[i].v != 0) return false;
  return true;
}

bool ExtField::is_zero(const value_type& x) const {
  for (auto c : x)
    if (c.v != 0) return false;
  return true;
}

ExtField::value_type ExtField::add(const value_type& a, const value_type& b) const {
  value_type r(z_);
  for (int i = 0; i < z_; ++i) r[i] = base_->add(a[i], b[i]);
  return r;
}

ExtField::value_type ExtField::sub(const value_type& a, const value_type& b) const {
  value_type r(z_);
  for (int i = 0; i < z_; ++i) r[i] = base_->sub(a[i], b[i]);
  return r;
}

ExtField::value_type ExtField::neg(const value_type& a) const {
  value_type r(z_);
  for (int i = 0; i < z_; ++i) r[i] = base_->neg(a[i]);
  return r;
}

ExtField::value_type ExtField::mul(const value_type& a, const value_type& b) const {
  const Field& k = *base_;
  std::vector<Elem> prod(2 * z_ - 1, Elem{0});
  for (int i = 0; i < z_; ++i) {
    if (a[i].v == 0) continue;
    for (int j = 0; j < z_; ++j)
      if (b[j].v != 0) prod[i + j] = k.add(prod[i + j], k.mul(a[i], b[j]));
  }
  for (int i = 2 * z_ - 2; i >= z_; --i) {
    const Elem c = prod[i];
    if (c.v == 0) continue;
    for (int j = 0; j < z_; ++j)
      if (modulus_[j].v != 0) prod[i - z_ + j] = k.sub(prod[i - z_ + j], k.mul(c, modulus_[j]));
  }
  prod.resize(z_);
  return prod;
}

ExtField::value_type ExtField::inv(const value_type& a) const {
  if (is_zero(a)) fail(ErrorKind::Precondition, "inverse of zero");
  // extended Euclid in GF(q)[y]
  const Field& k = *base_;
  FPoly r0(k, modulus_), r1(k, a);
  FPoly s0 = FPoly::zero(k), s1 = FPoly::constant(k, Elem{1});
  while (!r1.is_zero()) {
    auto [quot, rem] = poly_divmod(r0, r1);
    FPoly s2 = poly_sub(s0, poly_mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) fail(ErrorKind::Internal, "extension modulus is reducible");
  FPoly inv = poly_scale(s0, k.inv(r0.coeffs[0]));
  value_type out = zero();
  for (int i = 0; i <= inv.degree(); ++i) out[i] = inv.coeffs[i];
  return out;
}

ExtField::value_type ExtField::pow(value_type a, const BigInt& e) const {
  if (e < 0) return pow(inv(a), BigInt(-e));
  value_type result = one();
  if (e == 0) return result;
  const auto bits = static_cast<int>(boost::multiprecision::msb(e));
  for (int i = bits; i >= 0; --i) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(e, i)) result = mul(result, a);
  }
  return result;
}

ExtField::value_type ExtField::pow(const value_type& a, std::int64_t e) const {
  return pow(a, BigInt(e));
}

ExtField::value_type ExtField::from_index(std::int64_t index) const {
  value_type v = zero();
  for (int i = 0; i < z_ && index > 0; ++i) {
    v[i] = Elem{static_cast<std::uint16_t>(index % base_->q())};
    index /= base_->q();
  }
  return v;
}

ExtFieldPtr make_extension_field(const FieldPtr& base, int z) {
  static std::mutex mu;
  static std::map<std::pair<const Field*, int>, ExtFieldPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({base.get(), z});
    if (it != cache.end()) return it->second;
  }
  auto ext = std::make_shared<const ExtField>(base, z);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::make_pair(base.get(), z), ext).first->second;
}

bool has_exact_order(const ExtField& ext, const ExtField::value_type& x, std::int64_t order) {
  if (!ext.equal(ext.pow(x, order), ext.one())) return false;
  for (auto r : prime_factors(order))
    if (ext.equal(ext.pow(x, order / r), ext.one())) return false;
  return true;
}

RootOfUnity make_extension(const FieldPtr& base, std::int64_t order) {
  require(order >= 1, "root order must be positive");
  require(std::gcd(order, static_cast<std::int64_t>(base->q())) == 1,
          "gcd(order, q) must be 1 for roots of unity");
  static std::mutex mu;
  static std::map<std::pair<const Field*, std::int64_t>, RootOfUnity> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({base.get(), order});
    if (it != cache.end()) return it->second;
  }
  const int z = static_cast<int>(multiplicative_order_mod(base->q(), order));
  auto ext = make_extension_field(base, z);
  const BigInt cofactor = (ext->order() - 1) / order;
  RootOfUnity out;
  out.ext = ext;
  out.order = order;
  bool found = false;
  for (std::int64_t idx = 1; !found; ++idx) {
    auto y = ext->pow(ext->from_index(idx), cofactor);
    if (ext->is_zero(y)) continue;
    if (has_exact_order(*ext, y, order)) {
      out.alpha = std::move(y);
      found = true;
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(base.get(), order), out);
  return out;
}

RootOfUnity fix_root(const FieldPtr& base, int n, Elem a) {
  require(n >= 1, "length must be positive");
  require(a.v != 0, "shift constant must be nonzero");
  require(std::gcd(n, base->q()) == 1, "gcd(n, q) must be 1");
  const std::int64_t t = base->order(a);
  const std::int64_t tn = t * n;
  RootOfUnity r0 = make_extension(base, tn);
  const ExtField& ext = *r0.ext;
  const auto beta = ext.pow(r0.alpha, static_cast<std::int64_t>(n));  // order t
  const auto target = ext.embed(a);
  std::int64_t i0 = -1;
  auto acc = ext.one();
  for (std::int64_t i = 0; i < t; ++i) {
    if (ext.equal(acc, target)) {
      i0 = i;
      break;
    }
    acc = ext.mul(acc, beta);
  }
  if (i0 < 0) fail(ErrorKind::Internal, "shift constant not reached by alpha0^n");
  std::int64_t i = i0;
  while (std::gcd(i, tn) != 1) i += t;
  RootOfUnity out;
  out.ext = r0.ext;
  out.order = tn;
  out.alpha = ext.pow(r0.alpha, i);
  return out;
}

}  // namespace consta
