#include "doctest.h"

#include <random>

#include "consta/matrix.hpp"
#include "consta/poly.hpp"

using namespace consta;

namespace {

Poly<Field> random_poly(const Field& f, int deg, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, f.q() - 1);
  std::vector<Elem> c(deg + 1);
  for (auto& e : c) e = Elem{static_cast<std::uint16_t>(d(rng))};
  if (c.back().v == 0) c.back() = Elem{1};
  return Poly<Field>(f, c);
}

Mat random_mat(const FieldPtr& f, int r, int c, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, f->q() - 1);
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Elem{static_cast<std::uint16_t>(d(rng))};
  return m;
}

}  // namespace

TEST_CASE("division identity a = b*quot + rem") {
  std::mt19937 rng(7);
  for (int q : {2, 3, 4, 5, 9}) {
    const auto f = make_field_q(q);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_poly(*f, 1 + trial % 9, rng);
      const auto b = random_poly(*f, 1 + trial % 4, rng);
      const auto [quot, rem] = poly_divmod(a, b);
      CHECK(poly_add(poly_mul(b, quot), rem) == a);
      CHECK(rem.degree() < b.degree());
    }
  }
}

TEST_CASE("gcd divides both and multiplication by hand") {
  const auto f3 = make_field_q(3);
  // (x + 1)(x + 2) = x^2 + 3x + 2 = x^2 + 2 over GF(3)
  const Poly<Field> a(*f3, {Elem{1}, Elem{1}}), b(*f3, {Elem{2}, Elem{1}});
  CHECK(poly_mul(a, b) == Poly<Field>(*f3, {Elem{2}, Elem{0}, Elem{1}}));
  std::mt19937 rng(3);
  for (int t = 0; t < 30; ++t) {
    const auto g = random_poly(*f3, 2, rng);
    const auto x = poly_mul(g, random_poly(*f3, 3, rng)), y = poly_mul(g, random_poly(*f3, 2, rng));
    const auto d = poly_gcd(x, y);
    CHECK(poly_divides(d, x));
    CHECK(poly_divides(d, y));
    CHECK(poly_divides(poly_monic(g), d));
  }
  CHECK(to_string(Poly<Field>(*f3, {Elem{1}, Elem{2}, Elem{0}, Elem{1}})) == "x^3 + 2x + 1");
  CHECK(binomial(*f3, 10, Elem{2}) == poly_sub(Poly<Field>::monomial(*f3, 10, Elem{1}), Poly<Field>::constant(*f3, Elem{2})));
}

TEST_CASE("rank-nullity and null spaces") {
  std::mt19937 rng(11);
  for (int q : {2, 3, 4, 7}) {
    const auto f = make_field_q(q);
    for (int t = 0; t < 40; ++t) {
      const int r = 1 + t % 6, c = 2 + t % 9;
      const Mat m = random_mat(f, r, c, rng);
      const Mat ns = nullspace(m);
      CHECK(rank(m) + ns.rows() == c);
      for (int i = 0; i < ns.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j) {
          Elem dot{0};
          for (int x = 0; x < c; ++x) dot = f->add(dot, f->mul(m(j, x), ns(i, x)));
          CHECK(dot == Elem{0});
        }
      const Mat ln = left_nullspace(m);
      CHECK(rank(m) + ln.rows() == r);
      for (int i = 0; i < ln.rows(); ++i) {
        const auto v = row_times(ln.row_vector(i), m);
        CHECK(std::all_of(v.begin(), v.end(), [](Elem e) { return e.v == 0; }));
      }
    }
  }
}

TEST_CASE("rref is idempotent and keeps the row space") {
  std::mt19937 rng(5);
  const auto f = make_field_q(5);
  for (int t = 0; t < 30; ++t) {
    const Mat m = random_mat(f, 4, 7, rng);
    const Rref r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(same_rowspace(m, r.reduced));
    for (std::size_t i = 1; i < r.pivots.size(); ++i) CHECK(r.pivots[i - 1] < r.pivots[i]);
    std::vector<int> order = {6, 5, 4, 3, 2, 1, 0};
    const Rref w = rref_with_order(m, order);
    CHECK(same_rowspace(m, w.reduced));
    CHECK(w.rank == r.rank);
  }
}

TEST_CASE("solve_left and containment") {
  std::mt19937 rng(9);
  const auto f = make_field_q(4);
  for (int t = 0; t < 30; ++t) {
    const Mat a = random_mat(f, 3, 6, rng);
    const Mat x = random_mat(f, 1, 3, rng);
    const auto v = row_times(x.row_vector(0), a);
    const auto sol = solve_left(a, v);
    REQUIRE(sol);
    CHECK(row_times(*sol, a) == v);
    Mat b(f, 0, 6);
    b.append_row(v);
    CHECK(subspace_contains(a, b));
  }
  Mat a = identity(f, 3);
  a = select_columns(a, {0, 1});
  CHECK(solve_left(a, {Elem{1}, Elem{3}}).has_value());  // 3x2 of rank 2
  const Mat e = from_rows(f, 3, {{Elem{1}, Elem{0}, Elem{0}}});
  CHECK(!solve_left(e, {Elem{0}, Elem{1}, Elem{0}}));
  CHECK(rank(vstack(e, e)) == 1);
  CHECK(delete_columns(identity(f, 4), {1, 2}).cols() == 2);
}
