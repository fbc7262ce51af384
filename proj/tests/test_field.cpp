#include "doctest.h"

#include <set>

#include "consta/extension.hpp"
#include "consta/field.hpp"
#include "consta/poly.hpp"

using namespace consta;

namespace {

// Naive GF(p)[x] arithmetic on coefficient vectors, independent of the tables.
using V = std::vector<int>;

V naive_mulmod(const V& a, const V& b, const V& modulus, int p) {
  const int m = static_cast<int>(modulus.size()) - 1;
  V prod(2 * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * m - 1; d >= m; --d) {
    const int c = prod[d];
    if (!c) continue;
    for (int i = 0; i <= m; ++i) prod[d - m + i] = ((prod[d - m + i] - c * modulus[i]) % p + p) % p;
  }
  prod.resize(m);
  return prod;
}

V digits(int v, int p, int m) {
  V d(m);
  for (int i = 0; i < m; ++i, v /= p) d[i] = v % p;
  return d;
}

int naive_order(int v, const V& modulus, int p) {
  const int m = static_cast<int>(modulus.size()) - 1;
  const V x = digits(v, p, m);
  V acc = x;
  V one(m, 0);
  one[0] = 1;
  for (int k = 1;; ++k) {
    if (acc == one) return k;
    acc = naive_mulmod(acc, x, modulus, p);
  }
}

// trial division by every monic polynomial of degree 1..deg/2
bool naive_irreducible(const V& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= deg / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      V g = digits(idx, p, d);
      g.push_back(1);
      V r = f;
      for (int top = deg; top >= d; --top) {
        const int c = r[top];
        if (!c) continue;
        for (int i = 0; i <= d; ++i) r[top - d + i] = ((r[top - d + i] - c * g[i]) % p + p) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero &= r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

const std::vector<int> kOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81};

}  // namespace

TEST_CASE("field tables agree with naive polynomial arithmetic") {
  for (int q : kOrders) {
    CAPTURE(q);
    const auto f = make_field_q(q);
    const int p = f->p(), m = f->m();
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        const V na = digits(a, p, m), nb = digits(b, p, m);
        V sum(m);
        for (int i = 0; i < m; ++i) sum[i] = (na[i] + nb[i]) % p;
        CHECK(f->add(Elem{static_cast<std::uint16_t>(a)}, Elem{static_cast<std::uint16_t>(b)}) ==
              f->from_digits(sum));
        CHECK(f->mul(Elem{static_cast<std::uint16_t>(a)}, Elem{static_cast<std::uint16_t>(b)}) ==
              f->from_digits(naive_mulmod(na, nb, f->modulus(), p)));
      }
  }
}

TEST_CASE("modulus is the first irreducible in constant-term-first order") {
  for (int q : kOrders) {
    CAPTURE(q);
    const auto f = make_field_q(q);
    const int p = f->p(), m = f->m();
    int count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    V first;
    // index in base p with c0 as the most significant digit
    for (int idx = 0; idx < count && first.empty(); ++idx) {
      V c(m);
      int v = idx;
      for (int i = m - 1; i >= 0; --i, v /= p) c[i] = v % p;
      c.push_back(1);
      if (naive_irreducible(c, p)) first = c;
    }
    CHECK(f->modulus() == first);
  }
}

TEST_CASE("xi is the smallest element of order q-1") {
  for (int q : kOrders) {
    CAPTURE(q);
    const auto f = make_field_q(q);
    int expect = 0;
    for (int v = 1; v < q && !expect; ++v)
      if (naive_order(v, f->modulus(), f->p()) == q - 1) expect = v;
    CHECK(f->xi().v == expect);
    for (int v = 1; v < q; ++v)
      CHECK(f->order(Elem{static_cast<std::uint16_t>(v)}) == naive_order(v, f->modulus(), f->p()));
  }
}

TEST_CASE("known small fields") {
  CHECK(make_field_q(4)->modulus() == V{1, 1, 1});
  CHECK(make_field_q(4)->xi().v == 2);
  CHECK(make_field_q(8)->modulus() == V{1, 0, 1, 1});
  CHECK(make_field_q(9)->modulus() == V{1, 0, 1});
  CHECK(make_field_q(9)->xi().v == 4);
  CHECK(make_field_q(5)->xi().v == 2);
  CHECK(make_field_q(7)->xi().v == 3);
  CHECK(make_field_q(4) == make_field(2, 2));
}

TEST_CASE("field laws") {
  for (int q : {4, 9, 25, 27}) {
    const auto f = make_field_q(q);
    const auto els = f->elements();
    for (auto a : els) {
      CHECK(f->add(a, f->neg(a)) == f->zero());
      if (a.v) CHECK(f->mul(a, f->inv(a)) == f->one());
      if (a.v) CHECK(f->exp(f->log(a)) == a);
      for (auto b : els)
        for (auto c : {Elem{1}, f->xi(), f->exp(q - 2)})
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
    }
    CHECK(f->pow(f->xi(), q - 1) == f->one());
  }
}

TEST_CASE("conjugation is the order-s Frobenius") {
  const auto f = make_field_q(16);
  for (auto a : f->elements()) {
    CHECK(f->conjugate(a) == f->pow(a, 4));
    CHECK(f->conjugate(f->conjugate(a)) == a);
  }
  CHECK_THROWS(make_field_q(8)->conjugate(Elem{2}));
}

TEST_CASE("parse and print") {
  const auto f4 = make_field_q(4);
  CHECK(f4->parse("w") == f4->xi());
  CHECK(f4->parse("w^2") == f4->exp(2));
  CHECK(f4->parse("x^1") == f4->xi());
  CHECK(f4->parse(f4->to_string(f4->exp(2))) == f4->exp(2));
  const auto f7 = make_field_q(7);
  CHECK(f7->parse("6") == Elem{6});
  CHECK(f7->parse("x^2") == f7->exp(2));
  for (auto a : f7->elements()) CHECK(f7->parse(f7->to_string(a)) == a);
  CHECK(f7->parse("-1") == Elem{6});  // prime-field integers are taken mod p
  CHECK_THROWS_AS(f7->parse("3x"), Error);
  CHECK_THROWS_AS(f4->parse("4"), Error);
  CHECK_THROWS_AS(make_field_q(6), Error);
}

TEST_CASE("extension fields host the roots of x^n - a") {
  for (auto [q, n] : {std::pair{3, 10}, {4, 39}, {5, 14}, {7, 8}, {2, 15}}) {
    CAPTURE(q);
    CAPTURE(n);
    const auto f = make_field_q(q);
    for (auto a : f->nonzero_elements()) {
      const auto root = fix_root(f, n, a);
      const int t = f->order(a);
      CHECK(root.order == static_cast<std::int64_t>(t) * n);
      CHECK(has_exact_order(*root.ext, root.alpha, root.order));
      CHECK(root.ext->pow(root.alpha, static_cast<std::int64_t>(n)) == root.ext->embed(a));
    }
  }
}

TEST_CASE("extension modulus is irreducible and smallest") {
  const auto f3 = make_field_q(3);
  const auto ext = make_extension_field(f3, 4);
  std::vector<int> mod;
  for (auto e : ext->modulus()) mod.push_back(e.v);
  CHECK(naive_irreducible(mod, 3));
  CHECK(ext->modulus() == std::vector<Elem>(smallest_irreducible(*f3, 4)));
  const auto f4 = make_field_q(4);
  const auto e3 = make_extension_field(f4, 3);
  CHECK(e3->order() == 64);
  // Fermat in GF(64)
  for (int i = 1; i < 64; i += 7) {
    const auto x = e3->from_index(i);
    CHECK(e3->pow(x, 63) == e3->one());
    CHECK(e3->mul(x, e3->inv(x)) == e3->one());
  }
}
