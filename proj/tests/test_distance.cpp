#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "consta/constacode.hpp"
#include "consta/constructions.hpp"
#include "consta/distance.hpp"
#include "consta/equivalence.hpp"
#include "consta/search.hpp"

using namespace consta;

namespace {

// Weight distribution by plain message enumeration: every message vector in
// lexicographic order times the generator matrix.
std::vector<std::uint64_t> naive_enumerator(const LinearCode& c) {
  const Field& f = c.field();
  const int n = c.n(), k = c.k(), q = f.q();
  std::vector<std::uint64_t> a(n + 1, 0);
  std::vector<int> msg(k, 0);
  for (;;) {
    int wt = 0;
    for (int j = 0; j < n; ++j) {
      Elem s{0};
      for (int r = 0; r < k; ++r) s = f.add(s, f.mul(Elem{static_cast<std::uint16_t>(msg[r])}, c.generator()(r, j)));
      wt += s.v != 0;
    }
    ++a[wt];
    int i = 0;
    while (i < k && ++msg[i] == q) msg[i++] = 0;
    if (i == k) break;
  }
  return a;
}

int naive_distance(const LinearCode& c) {
  const auto a = naive_enumerator(c);
  for (std::size_t w = 1; w < a.size(); ++w)
    if (a[w]) return static_cast<int>(w);
  return c.n() + 1;
}

LinearCode random_code(const FieldPtr& f, int n, int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, f->q() - 1);
  Mat g(f, k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Elem{static_cast<std::uint16_t>(d(rng))};
  return LinearCode(g);
}

std::uint64_t ipow(int q, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= q;
  return r;
}

}  // namespace

TEST_CASE("small distances") {
  const auto f3 = make_field_q(3);
  const auto c = build_code(make_spec(make_family(f3, 10, Elem{2}), {5, 15}));
  CHECK(brute_distance(c).value == 2);
  CHECK(bz_distance(c).value == 2);
  CHECK(naive_distance(c) == 2);
  for (int n : {1, 4, 7}) {
    CHECK(brute_distance(full_space(f3, n)).value == 1);
    CHECK(bz_distance(full_space(f3, n)).value == 1);
    CHECK(bz_distance(repetition_code(f3, n)).value == n);
    CHECK(brute_distance(parity_code(f3, n + 1)).value == 2);
  }
  const auto z = brute_distance(zero_code(f3, 5));
  CHECK(z.status == DistanceStatus::Exact);
  CHECK(z.value == 6);
  CHECK(minimum_distance(zero_code(f3, 5)).value == 6);
}

TEST_CASE("exact results carry a witness of that weight") {
  std::mt19937 rng(23);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto f = make_field_q(q);
    for (int t = 0; t < 12; ++t) {
      const int n = 3 + t % 9, k = 1 + t % std::min(n, 5);
      const auto c = random_code(f, n, k, rng);
      const int expect = naive_distance(c);
      for (const auto& r : {brute_distance(c), bz_distance(c)}) {
        CAPTURE(q);
        CHECK(r.status == DistanceStatus::Exact);
        CHECK(r.value == expect);
        CHECK(r.lower == expect);
        CHECK(r.upper == expect);
        if (c.k()) {
          CHECK(hamming_weight(r.witness) == expect);
          CHECK(solve_left(c.generator(), r.witness).has_value());
        }
      }
    }
  }
}

TEST_CASE("weight enumerators against plain enumeration and MacWilliams") {
  const auto f3 = make_field_q(3);
  CHECK(direct_weight_enumerator(full_space(f3, 2)) == WeightEnumerator{1, 4, 4});
  CHECK(macwilliams({1, 4, 4}, 2, 2, 3) == WeightEnumerator{1, 0, 0});
  std::mt19937 rng(31);
  for (int q : {2, 3, 4, 5}) {
    const auto f = make_field_q(q);
    for (int t = 0; t < 50; ++t) {
      const int n = 2 + t % 8, k = 1 + t % n;
      const auto c = random_code(f, n, k, rng);
      if (ipow(q, c.k()) > 20000 || ipow(q, n - c.k()) > 20000) continue;
      const auto w = weight_enumerator(c);
      CHECK(w == naive_enumerator(c));
      CHECK(w[0] == 1);
      CHECK(std::accumulate(w.begin(), w.end(), std::uint64_t{0}) == ipow(q, c.k()));
      const auto dual = naive_enumerator(euclidean_dual(c));
      CHECK(macwilliams(w, n, c.k(), q) == dual);
      CHECK(macwilliams(dual, n, n - c.k(), q) == w);
    }
  }
}

TEST_CASE("Krawtchouk values") {
  // K_j(i) = sum_h (-1)^h (q-1)^(j-h) C(i,h) C(n-i,j-h)
  for (int q : {2, 3, 4})
    for (int n = 1; n <= 6; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          long long s = 0;
          for (int h = 0; h <= j; ++h) {
            auto binom = [](int a, int b) -> long long {
              if (b < 0 || b > a) return 0;
              long long r = 1;
              for (int x = 1; x <= b; ++x) r = r * (a - b + x) / x;
              return r;
            };
            long long p = 1;
            for (int x = 0; x < j - h; ++x) p *= q - 1;
            s += (h % 2 ? -1 : 1) * p * binom(i, h) * binom(n - i, j - h);
          }
          CHECK(krawtchouk(j, i, n, q) == BigInt(s));
        }
}

TEST_CASE("brute force and information sets agree on constacyclic codes") {
  int checked = 0;
  for (int q : {3, 4, 5}) {
    const auto f = make_field_q(q);
    for (int n = 2; n <= 12; ++n) {
      if (std::gcd(n, q) != 1) continue;
      for (auto a : f->nonzero_elements())
        for (const auto& s : enumerate_family(make_family(f, n, a), 3, 1, n)) {
          if (ipow(q, s.dimension()) > (1u << 14)) continue;
          const auto c = build_code(s);
          CHECK(brute_distance(c).value == bz_distance(c).value);
          ++checked;
        }
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("target semantics") {
  const auto f4 = make_field_q(4);
  std::mt19937 rng(41);
  for (int t = 0; t < 30; ++t) {
    const auto c = random_code(f4, 12, 5, rng);
    const int d = brute_distance(c).value;
    for (int target = 1; target <= d + 2; ++target) {
      DistanceOptions opt;
      opt.target = target;
      const auto r = bz_distance(c, opt);
      CHECK(r.lower <= d);
      CHECK(r.upper >= d);
      if (target <= d) CHECK(r.lower >= target);
      else CHECK(r.upper < target);
      if (r.status == DistanceStatus::Exact) CHECK(r.value == d);
      if (r.status == DistanceStatus::Lower) CHECK(r.value == r.lower);
      if (r.status == DistanceStatus::Upper) CHECK(r.value == r.upper);
    }
  }
}

TEST_CASE("progress log and resume") {
  const auto f4 = make_field_q(4);
  const auto fam = make_family(f4, 39, f4->xi());
  const auto c = build_code(spec_from_cosets(fam, {10, 13, 19}));
  const auto path = (std::filesystem::temp_directory_path() / "consta_progress_test.jsonl").string();
  std::filesystem::remove(path);
  DistanceOptions opt;
  opt.progress_log = path;
  opt.target = 6;
  const auto first = bz_distance(c, opt);
  CHECK(first.lower >= 6);
  std::ifstream in(path);
  std::string line, last;
  int lines = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.contains("unit"));
    CHECK(j.contains("upper"));
    CHECK(j.contains("lower"));
    CHECK(j.contains("timestamp"));
    ++lines;
  }
  CHECK(lines > 0);
  opt.target.reset();
  opt.resume = true;
  const auto rest = bz_distance(c, opt);
  CHECK(rest.status == DistanceStatus::Exact);
  CHECK(rest.value == 9);
  CHECK(rest.codewords < bz_distance(c).codewords);

  // a log of another code is refused
  DistanceOptions other;
  other.progress_log = path;
  other.resume = true;
  CHECK_THROWS_AS(bz_distance(full_space(f4, 5), other), Error);
  std::filesystem::remove(path);
}

TEST_CASE("budget") {
  const auto f4 = make_field_q(4);
  DistanceOptions opt;
  opt.budget = 1000;
  CHECK_THROWS_AS(brute_distance(full_space(f4, 6), opt), Error);
  try {
    brute_distance(full_space(f4, 6), opt);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Budget);
  }
  CHECK(minimum_distance(full_space(f4, 6), opt).value == 1);
  // the full space goes through its zero dual, a balanced code cannot
  CHECK(weight_enumerator(full_space(f4, 12), 1000) == macwilliams(direct_weight_enumerator(zero_code(f4, 12)), 12, 0, 4));
  std::mt19937 rng(2);
  CHECK_THROWS_AS(weight_enumerator(random_code(f4, 12, 6, rng), 1000), Error);
  CHECK(code_size(4, 40) == UINT64_MAX);
  CHECK(code_size(4, 3) == 64);
}

TEST_CASE("shortening never lowers the distance") {
  const auto f3 = make_field_q(3);
  for (int n : {8, 10, 11, 13}) {
    for (auto a : f3->nonzero_elements())
      for (const auto& s : enumerate_family(make_family(f3, n, a), 2, 2, n)) {
        const auto c = build_code(s);
        const int d = brute_distance(c).value;
        for (int p = 0; p < n; p += 3) {
          const auto sh = shorten(c, {p});
          if (sh.k() == 0) continue;
          CHECK(brute_distance(sh).value >= d);
        }
      }
  }
}

TEST_CASE("weight enumerator is invariant under the witness map") {
  const auto f5 = make_field_q(5);
  const auto w = build_witness(f5, 14, Elem{1}, Elem{4});
  for (const auto& s : enumerate_family(make_family(f5, 14, Elem{1}), 2, 1, 14)) {
    const auto c = build_code(s);
    if (std::min(c.k(), 14 - c.k()) > 6) continue;
    CHECK(weight_enumerator(c) == weight_enumerator(apply_isometry(w, c)));
  }
}
