#include "consta/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace consta {

namespace {

// Dense GF(p)[x] helpers used only while building a field.
using ZpPoly = std::vector<int>;

void trim(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZpPoly zp_mod(ZpPoly a, const ZpPoly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int inv_lead = static_cast<int>(inverse_mod(b.back(), p));
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int factor = (a.back() * inv_lead) % p;
    for (int i = 0; i <= db; ++i)
      a[shift + i] = static_cast<int>(mod(a[shift + i] - factor * b[i], p));
    trim(a);
  }
  return a;
}

bool zp_irreducible(const ZpPoly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 1) return deg == 1;
  if (f[0] == 0) return false;
  // trial division by every monic polynomial of degree 1..deg/2
  for (int d = 1; d <= deg / 2; ++d) {
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      ZpPoly g(d + 1, 0);
      g[d] = 1;
      std::int64_t v = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(v % p);
        v /= p;
      }
      if (zp_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<int> smallest_irreducible_prime(int p, int deg) {
  require(deg >= 1, "degree must be positive");
  std::int64_t count = 1;
  for (int i = 0; i < deg; ++i) count *= p;
  for (std::int64_t idx = 0; idx < count; ++idx) {
    // c0 is the most significant position of the scan
    ZpPoly f(deg + 1, 0);
    f[deg] = 1;
    std::int64_t v = idx;
    for (int i = deg - 1; i >= 0; --i) {
      f[i] = static_cast<int>(v % p);
      v /= p;
    }
    if (zp_irreducible(f, p)) return f;
  }
  fail(ErrorKind::Internal, "no irreducible polynomial found");
}

Field::Field(int p, int m) : p_(p), m_(m) {
  require(is_prime(p), "field characteristic must be prime, got " + std::to_string(p));
  require(m >= 1, "extension degree must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    require(q <= 65536, "field order exceeds 2^16");
  }
  q_ = static_cast<int>(q);
  pow_p_.resize(m_ + 1);
  pow_p_[0] = 1;
  for (int i = 1; i <= m_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

  modulus_ = smallest_irreducible_prime(p_, m_);

  neg_.resize(q_);
  for (int v = 0; v < q_; ++v) {
    std::vector<int> d(m_);
    for (int i = 0; i < m_; ++i) d[i] = static_cast<int>(mod(-digit(Elem{static_cast<std::uint16_t>(v)}, i), p_));
    neg_[v] = from_digits(d).v;
  }
  if (p_ != 2 && q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b)
        add_table_[a * q_ + b] =
            add_slow(Elem{static_cast<std::uint16_t>(a)}, Elem{static_cast<std::uint16_t>(b)}).v;
  }

  // canonical primitive element: smallest value of order q-1
  xi_ = Elem{1};
  bool found = false;
  for (int v = 1; v < q_ && !found; ++v) {
    Elem g{static_cast<std::uint16_t>(v)};
    Elem x = g;
    int ord = 1;
    while (x.v != 1) {
      x = mul_slow(x, g);
      ++ord;
    }
    if (ord == q_ - 1) {
      xi_ = g;
      found = true;
    }
  }
  if (!found) fail(ErrorKind::Internal, "no primitive element");

  exp_.resize(2 * static_cast<std::size_t>(q_ - 1) + 1);
  log_.assign(q_, -1);
  Elem x{1};
  for (int e = 0; e < q_ - 1; ++e) {
    exp_[e] = x.v;
    exp_[e + q_ - 1] = x.v;
    log_[x.v] = e;
    x = mul_slow(x, xi_);
  }
  exp_.back() = exp_[0];
}

int Field::digit(Elem a, int i) const { return (a.v / pow_p_[i]) % p_; }

Elem Field::from_digits(const std::vector<int>& digits) const {
  int v = 0;
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i)
    v = v * p_ + static_cast<int>(mod(digits[i], p_));
  return Elem{static_cast<std::uint16_t>(v)};
}

Elem Field::from_int(std::int64_t v) const {
  return Elem{static_cast<std::uint16_t>(mod(v, p_))};
}

Elem Field::add_slow(Elem a, Elem b) const {
  int v = 0;
  for (int i = m_ - 1; i >= 0; --i) v = v * p_ + (digit(a, i) + digit(b, i)) % p_;
  return Elem{static_cast<std::uint16_t>(v)};
}

Elem Field::mul_slow(Elem a, Elem b) const {
  ZpPoly fa(m_), fb(m_);
  for (int i = 0; i < m_; ++i) {
    fa[i] = digit(a, i);
    fb[i] = digit(b, i);
  }
  ZpPoly prod(2 * m_, 0);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
  ZpPoly r = zp_mod(prod, modulus_, p_);
  r.resize(m_, 0);
  return from_digits(r);
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) fail(ErrorKind::Precondition, "inverse of zero");
  return Elem{exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a.v == 0) {
    if (e == 0) return one();
    require(e > 0, "negative power of zero");
    return zero();
  }
  return exp(static_cast<std::int64_t>(log_[a.v]) * mod(e, q_ - 1));
}

int Field::log(Elem a) const {
  require(a.v != 0, "discrete log of zero");
  return log_[a.v];
}

int Field::order(Elem a) const {
  require(a.v != 0, "order of zero");
  const int l = log_[a.v];
  return (q_ - 1) / std::gcd(l, q_ - 1);
}

Elem Field::conjugate(Elem a) const {
  require(is_square_order(), "conjugation needs a square field order");
  return pow(a, pow_p_[m_ / 2]);
}

std::string Field::to_string(Elem a) const {
  if (m_ == 1) return std::to_string(a.v);
  if (a.v == 0) return "0";
  const int l = log_[a.v];
  if (l == 0) return "1";
  if (l == 1) return "w";
  return "w^" + std::to_string(l);
}

Elem Field::parse(const std::string& raw) const {
  std::string t;
  for (char c : raw)
    if (c != ' ') t += c;
  require(!t.empty(), "empty field element");
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    try {
      std::size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      fail(ErrorKind::Precondition, "cannot parse field element '" + raw + "'");
    }
  };
  if (t[0] == 'w' || t[0] == 'x' || t[0] == 'W') {
    if (t.size() == 1) return xi_;
    require(t[1] == '^' && t.size() > 2, "cannot parse field element '" + raw + "'");
    return exp(parse_int(t.substr(2)));
  }
  const std::int64_t v = parse_int(t);
  if (m_ == 1) return from_int(v);
  require(v >= 0 && v < q_, "element value out of range: '" + raw + "'");
  return Elem{static_cast<std::uint16_t>(v)};
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (int v = 0; v < q_; ++v) out[v] = Elem{static_cast<std::uint16_t>(v)};
  return out;
}

std::vector<Elem> Field::nonzero_elements() const {
  std::vector<Elem> out;
  for (int v = 1; v < q_; ++v) out.push_back(Elem{static_cast<std::uint16_t>(v)});
  return out;
}

FieldPtr make_field(int p, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, m});
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const Field>(p, m);
  cache.emplace(std::make_pair(p, m), f);
  return f;
}

FieldPtr make_field_q(int q) {
  auto [p, m] = prime_power(q);
  require(p != 0, "q = " + std::to_string(q) + " is not a prime power");
  return make_field(p, m);
}

}  // namespace consta
