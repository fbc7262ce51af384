#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "consta/constacode.hpp"

using namespace consta;

namespace {

std::multiset<std::string> factor_strings(const FamilyPtr& fam) {
  std::multiset<std::string> out;
  for (std::size_t i = 0; i < fam->cosets().size(); ++i) out.insert(to_string(fam->minimal_poly(static_cast<int>(i))));
  return out;
}

// Factorization by trial division with every monic polynomial of increasing
// degree: the first divisor found at each step is irreducible.
std::multiset<std::string> naive_factor(const Field& f, int n, Elem a) {
  Poly<Field> rest = binomial(f, n, a);
  std::multiset<std::string> out;
  for (int d = 1; rest.degree() > 0 && d <= rest.degree(); ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= f.q();
    for (int idx = 0; idx < count && rest.degree() >= d; ++idx) {
      std::vector<Elem> c(d + 1);
      int v = idx;
      for (int i = 0; i < d; ++i, v /= f.q()) c[i] = Elem{static_cast<std::uint16_t>(v % f.q())};
      c[d] = Elem{1};
      const Poly<Field> g(f, c);
      while (rest.degree() >= d && poly_divides(g, rest)) {
        out.insert(to_string(g));
        rest = poly_divmod(rest, g).first;
      }
    }
  }
  return out;
}

std::vector<std::pair<int, int>> small_lengths() {
  std::vector<std::pair<int, int>> out;
  for (int q : {2, 3, 4, 5, 7})
    for (int n = 1; n <= 20; ++n)
      if (std::gcd(n, q) == 1) out.push_back({q, n});
  return out;
}

}  // namespace

TEST_CASE("printed factorizations over GF(3) at n = 10") {
  const auto f3 = make_field_q(3);
  const auto cyc = make_family(f3, 10, Elem{1});
  CHECK(factor_strings(cyc) == std::multiset<std::string>{"x + 1", "x + 2", "x^4 + x^3 + x^2 + x + 1",
                                                           "x^4 + 2x^3 + x^2 + 2x + 1"});
  const auto neg = make_family(f3, 10, Elem{2});
  CHECK(factor_strings(neg) ==
        std::multiset<std::string>{"x^2 + 1", "x^4 + x^3 + 2x + 1", "x^4 + 2x^3 + x + 1"});
  CHECK(count_codes(f3, 10, Elem{1}) == 16);
  CHECK(count_codes(f3, 10, Elem{2}) == 8);
  const auto f5 = make_field_q(5);
  CHECK(count_codes(f5, 12, Elem{2}) == 8);
  CHECK(count_codes(f5, 12, Elem{4}) == 64);
}

TEST_CASE("omega and cosets, worked cases") {
  const auto f3 = make_field_q(3);
  const auto om = omega(f3, 10, Elem{2});
  CHECK(om.t == 2);
  CHECK(om.modulus == 20);
  CHECK(om.residues == std::vector<int>{1, 3, 5, 7, 9, 11, 13, 15, 17, 19});
  const auto cs = partition_omega(om);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0].members == std::vector<int>{1, 3, 7, 9});
  CHECK(cs[1].members == std::vector<int>{5, 15});
  CHECK(cs[2].members == std::vector<int>{11, 13, 17, 19});
  const auto c1 = partition_omega(omega(f3, 10, Elem{1}));
  REQUIRE(c1.size() == 4);
  CHECK(c1[0].members == std::vector<int>{0});
  CHECK(c1[1].members == std::vector<int>{1, 3, 7, 9});
  CHECK(c1[2].members == std::vector<int>{2, 4, 6, 8});
  CHECK(c1[3].members == std::vector<int>{5});
  const auto f5 = make_field_q(5);
  CHECK(omega(f5, 3, Elem{4}).residues == std::vector<int>{1, 3, 5});
  const auto one = partition_omega(omega(f5, 1, Elem{2}));
  CHECK(one.size() == 1);
  CHECK(one[0].members == std::vector<int>{1});
  CHECK(cyclotomic_coset(5, 1, 3).members == std::vector<int>{1, 2});
  CHECK_THROWS_AS(omega(f3, 6, Elem{1}), Error);
}

TEST_CASE("cosets partition omega and factors multiply to x^n - a") {
  for (int q : {3, 4, 5, 7, 8, 9})
    for (int n = 1; n <= 60; ++n) {
      if (std::gcd(n, q) != 1) continue;
      const auto f = make_field_q(q);
      for (auto a : f->nonzero_elements()) {
        const auto fam = make_family(f, n, a);
        const auto& om = fam->omega_set();
        CHECK(static_cast<int>(om.residues.size()) == n);
        int total = 0;
        std::set<int> seen;
        Poly<Field> prod = Poly<Field>::constant(*f, Elem{1});
        for (std::size_t i = 0; i < fam->cosets().size(); ++i) {
          const auto& z = fam->cosets()[i];
          total += z.size();
          for (int s : z.members) {
            CHECK(s % om.t == 1 % om.t);
            CHECK(std::binary_search(z.members.begin(), z.members.end(), static_cast<int>(q * static_cast<std::int64_t>(s) % om.modulus)));
            seen.insert(s);
          }
          prod = poly_mul(prod, fam->minimal_poly(static_cast<int>(i)));
        }
        CHECK(total == n);
        CHECK(static_cast<int>(seen.size()) == n);
        CHECK(prod == binomial(*f, n, a));
      }
    }
}

TEST_CASE("coset factors agree with trial-division factorization") {
  for (auto [q, n] : {std::pair{2, 7}, {2, 15}, {3, 8}, {3, 10}, {3, 13}, {4, 5}, {4, 9}, {5, 6}, {5, 12}, {7, 4}, {7, 9}}) {
    const auto f = make_field_q(q);
    for (auto a : f->nonzero_elements()) {
      CAPTURE(q);
      CAPTURE(n);
      CHECK(factor_strings(make_family(f, n, a)) == naive_factor(*f, n, a));
    }
  }
}

TEST_CASE("generator polynomials and codes") {
  const auto f3 = make_field_q(3);
  const auto fam = make_family(f3, 10, Elem{2});
  const auto spec = make_spec(fam, {5, 15});
  CHECK(to_string(generator_poly(spec)) == "x^2 + 1");
  const auto c = build_code(spec);
  CHECK(c.n() == 10);
  CHECK(c.k() == 8);
  CHECK(to_string(generator_poly(make_spec(fam, {}))) == "1");
  CHECK(generator_poly(make_spec(fam, fam->omega_set().residues)) == binomial(*f3, 10, Elem{2}));
  CHECK(build_code(make_spec(fam, fam->omega_set().residues)).k() == 0);
  CHECK_THROWS_AS(make_spec(fam, {5}), Error);   // not coset closed
  CHECK_THROWS_AS(make_spec(fam, {2}), Error);   // not in Omega

  const auto f4 = make_field_q(4);
  const auto fam4 = make_family(f4, 39, f4->xi());
  const auto c1 = build_code(spec_from_cosets(fam4, {10, 19}));
  CHECK(c1.n() == 39);
  CHECK(c1.k() == 27);
  CHECK(build_code(spec_from_cosets(fam4, {10, 13, 19})).k() == 24);
}

TEST_CASE("every small code is constacyclic, dual is a^-1 constacyclic") {
  for (auto [q, n] : small_lengths()) {
    if (q > 5) continue;
    const auto f = make_field_q(q);
    for (auto a : f->nonzero_elements()) {
      const auto fam = make_family(f, n, a);
      const int cs = static_cast<int>(fam->cosets().size());
      if (cs > 6) continue;
      for (int mask = 0; mask < (1 << cs); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < cs; ++i)
          if (mask >> i & 1) idx.push_back(i);
        const auto spec = spec_from_coset_indices(fam, idx);
        const auto c = build_code(spec);
        CHECK(c.k() == n - static_cast<int>(spec.defining_set.size()));
        CHECK(generator_poly(spec).degree() == static_cast<int>(spec.defining_set.size()));
        CHECK(is_constacyclic(c, a));
        CHECK(is_constacyclic(euclidean_dual(c), f->inv(a)));
      }
    }
  }
}

TEST_CASE("shift and duals") {
  const auto f3 = make_field_q(3);
  CHECK(constacyclic_shift(*f3, {Elem{1}, Elem{0}, Elem{0}}, Elem{1}) == std::vector<Elem>{Elem{0}, Elem{1}, Elem{0}});
  CHECK(constacyclic_shift(*f3, {Elem{0}, Elem{0}, Elem{1}}, Elem{2}) == std::vector<Elem>{Elem{2}, Elem{0}, Elem{0}});
  std::vector<Elem> v = {Elem{1}, Elem{2}, Elem{0}, Elem{1}};
  auto w = v;
  for (int i = 0; i < 4; ++i) w = constacyclic_shift(*f3, w, Elem{2});
  for (auto& e : v) e = f3->mul(e, Elem{2});
  CHECK(w == v);

  CHECK(euclidean_dual(full_space(f3, 5)).k() == 0);
  const auto c = build_code(make_spec(make_family(f3, 10, Elem{2}), {5, 15}));
  CHECK(same_code(euclidean_dual(euclidean_dual(c)), c));
  CHECK(is_constacyclic(full_space(f3, 4), Elem{2}));
  // span of (1,1,0): shift is (0,1,1), outside the span
  CHECK(!is_constacyclic(LinearCode(from_rows(f3, 3, {{Elem{1}, Elem{1}, Elem{0}}})), Elem{1}));
  const auto f4 = make_field_q(4);
  CHECK(hermitian_dual(full_space(f4, 3)).k() == 0);
  CHECK_THROWS_AS(hermitian_dual(full_space(f3, 3)), Error);
}

TEST_CASE("spec text round trip") {
  const auto f4 = make_field_q(4);
  const auto fam = make_family(f4, 39, f4->xi());
  const auto spec = spec_from_cosets(fam, parse_coset_labels("Z10,Z19"));
  const auto text = to_text(spec);
  CHECK(text.rfind("4:39:1:", 0) == 0);
  CHECK(parse_spec(text) == spec);
  CHECK(parse_coset_labels("10, 19") == std::vector<int>{10, 19});
  CHECK_THROWS_AS(parse_spec("4:39"), Error);
  CHECK_THROWS_AS(parse_spec("6:5:0:"), Error);
}
