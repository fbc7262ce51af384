// Acceptance checks.  One line per criterion; exit status is nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "consta/constacode.hpp"
#include "consta/constructions.hpp"
#include "consta/distance.hpp"
#include "consta/equivalence.hpp"
#include "consta/search.hpp"

using namespace consta;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("criterion %2d: %s  (%.2fs)  %s\n", id, o.pass ? "PASS" : "FAIL", s, o.detail.c_str());
  std::fflush(stdout);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::multiset<std::string> factor_strings(const FamilyPtr& fam) {
  std::multiset<std::string> out;
  for (std::size_t i = 0; i < fam->cosets().size(); ++i) out.insert(to_string(fam->minimal_poly(static_cast<int>(i))));
  return out;
}

LinearCode random_code(const FieldPtr& f, int n, int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, f->q() - 1);
  Mat g(f, k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Elem{static_cast<std::uint16_t>(d(rng))};
  return LinearCode(g);
}

LinearCode random_subcode(const LinearCode& c, int k, std::mt19937& rng) {
  const auto& f = c.field_ptr();
  std::uniform_int_distribution<int> d(0, f->q() - 1);
  Mat g(f, 0, c.n());
  for (int i = 0; i < k; ++i) {
    std::vector<Elem> m(c.k());
    for (auto& e : m) e = Elem{static_cast<std::uint16_t>(d(rng))};
    g.append_row(row_times(m, c.generator()));
  }
  return LinearCode(g);
}

LinearCode with_exact(LinearCode c) {
  c.set_distance(brute_distance(c).record());
  return c;
}

std::uint64_t ipow(int q, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= q;
  return r;
}

// Reference equivalence graphs, one per field.  An edge joins constants (as
// field values) when gcd(n, g) = 1, or when gcd(n, g) lies in `allowed`.
struct RefEdge {
  std::vector<int> from, to;
  int g;
  std::vector<int> allowed = {1};
};

struct RefGraph {
  int q;
  std::vector<std::vector<int>> merged;  // constants of equal order, always joined
  std::vector<RefEdge> edges;
};

std::vector<RefGraph> reference_graphs() {
  return {
      {3, {}, {{{1}, {2}, 2}}},
      {4, {{2, 3}}, {{{1}, {2, 3}, 3}}},
      {5, {{2, 3}}, {{{1}, {2, 3}, 2}, {{2, 3}, {4}, 2}, {{4}, {1}, 4, {1, 2}}}},
      {7,
       {{2, 4}, {3, 5}},
       {{{1}, {2, 4}, 3}, {{1}, {6}, 2}, {{1}, {3, 5}, 6}, {{2, 4}, {3, 5}, 2}, {{6}, {3, 5}, 3}}},
  };
}

std::vector<std::vector<int>> reference_classes(const RefGraph& ref, int n) {
  std::vector<int> parent(ref.q);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto join = [&](int x, int y) { parent[find(x)] = find(y); };
  for (const auto& m : ref.merged)
    for (int v : m) join(v, m.front());
  for (const auto& e : ref.edges)
    if (std::count(e.allowed.begin(), e.allowed.end(), std::gcd(n, e.g)))
      for (int x : e.from)
        for (int y : e.to) join(x, y);
  std::map<int, std::vector<int>> groups;
  for (int v = 1; v < ref.q; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, g] : groups) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

Outcome criterion1() {
  const auto f3 = make_field_q(3);
  const auto c1 = count_codes(f3, 10, Elem{1}), c2 = count_codes(f3, 10, Elem{2});
  const std::multiset<std::string> want1 = {"x + 1", "x + 2", "x^4 + x^3 + x^2 + x + 1", "x^4 + 2x^3 + x^2 + 2x + 1"};
  const std::multiset<std::string> want2 = {"x^2 + 1", "x^4 + x^3 + 2x + 1", "x^4 + 2x^3 + x + 1"};
  const bool f1 = factor_strings(make_family(f3, 10, Elem{1})) == want1;
  const bool f2 = factor_strings(make_family(f3, 10, Elem{2})) == want2;
  std::ostringstream d;
  d << "count(3,10,1)=" << c1.str() << " count(3,10,2)=" << c2.str() << " factors x^10-1 " << (f1 ? "match" : "differ")
    << ", x^10-2 " << (f2 ? "match" : "differ");
  return {c1 == 16 && c2 == 8 && f1 && f2, d.str()};
}

Outcome criterion2() {
  const auto f5 = make_field_q(5);
  const auto c2 = count_codes(f5, 12, Elem{2}), c4 = count_codes(f5, 12, Elem{4});
  return {c2 == 8 && c4 == 64, "count(5,12,2)=" + c2.str() + " count(5,12,4)=" + c4.str()};
}

Outcome criterion3() {
  int pairs = 0, codes = 0, bad = 0, by_enum = 0, by_cert = 0;
  std::string first_bad;
  for (int q : {3, 4, 5, 7}) {
    const auto f = make_field_q(q);
    for (int n = 1; n <= 36; ++n) {
      if (std::gcd(n, q) != 1) continue;
      for (auto a : f->nonzero_elements())
        for (auto b : f->nonzero_elements()) {
          if (a == b || !check_main_theorem(*f, n, a, b)) continue;
          const auto w = build_witness(f, n, a, b);
          const auto r = verify_witness(w, 2, std::uint64_t{1} << 20);
          ++pairs;
          codes += r.codes;
          bad += r.failures;
          by_enum += r.by_enumerator;
          by_cert += r.by_certificate;
          if (r.failures && first_bad.empty()) first_bad = r.failed.front();
        }
    }
  }
  std::ostringstream d;
  d << pairs << " pairs, " << codes << " codes (" << by_enum << " by enumerator, " << by_cert
    << " by diagonal certificate), " << bad << " failures";
  if (!first_bad.empty()) d << ", first " << first_bad;
  return {bad == 0 && pairs > 0, d.str()};
}

Outcome criterion4() {
  int tested = 0, missing = 0;
  std::string first;
  for (int q : {2, 3, 4, 5, 7}) {
    const auto f = make_field_q(q);
    for (int n = 1; n <= 40; ++n) {
      if (std::gcd(n, q) != 1) continue;
      for (auto a : f->nonzero_elements()) {
        if (!check_bierbrauer(*f, n, a)) continue;
        ++tested;
        if (!check_main_theorem(*f, n, Elem{1}, a)) {
          if (!missing++) first = std::to_string(q) + "/" + std::to_string(n) + "/" + f->to_string(a);
        }
      }
    }
  }
  std::ostringstream d;
  d << tested << " gcd(n,ord a)=1 instances, " << missing << " not covered by the exponent criterion";
  if (missing) d << ", first " << first;
  return {missing == 0 && tested > 0, d.str()};
}

Outcome criterion5() {
  int lengths = 0, mismatches = 0;
  std::string first;
  for (const auto& ref : reference_graphs()) {
    const auto f = make_field_q(ref.q);
    std::vector<int> ns;
    for (int n = 1; n <= 40; ++n)
      if (std::gcd(n, ref.q) == 1) ns.push_back(n);
    if (ref.q == 5) ns.push_back(63);
    for (int n : ns) {
      const auto g = classify(f, n);
      std::vector<std::vector<int>> got;
      for (const auto& cls : g.classes) {
        std::vector<int> v;
        for (auto e : cls) v.push_back(e.v);
        std::sort(v.begin(), v.end());
        got.push_back(v);
      }
      std::sort(got.begin(), got.end());
      ++lengths;
      if (got != reference_classes(ref, n) && !mismatches++) first = "q=" + std::to_string(ref.q) + " n=" + std::to_string(n);
    }
  }
  std::ostringstream d;
  d << lengths << " (q, n) graphs compared against the reference edges, " << mismatches << " mismatches";
  if (mismatches) d << ", first " << first;
  return {mismatches == 0, d.str()};
}

Outcome criterion6() {
  const auto f4 = make_field_q(4);
  const auto fam = make_family(f4, 39, f4->xi());
  auto c1 = build_code(spec_from_cosets(fam, {10, 19}));
  auto c2 = build_code(spec_from_cosets(fam, {10, 13, 19}));
  auto c3 = full_space(f4, 3);
  c3.set_distance({1, DistanceStatus::Exact});

  const auto d1 = bz_distance(c1), d2 = bz_distance(c2);
  c1.set_distance(d1.record());
  c2.set_distance(d2.record());
  const auto tb = std::chrono::steady_clock::now();
  const int bound = x_bound(d1.value, d2.value, 1);
  const auto canonical = construction_x(c1, c2, c3);
  const double bound_s = since(tb);
  const bool bound_ok = bound >= 8 && canonical.n() == 42 && canonical.k() == 27 &&
                        canonical.distance().value >= 8 && bound_s < 1.0;

  const auto p = tuned_x_pairing(c1, c2, c3);
  const auto e = construction_x(c1, c2, c3, p.leaders);
  const auto de = bz_distance(e);
  const auto s1 = shorten(e, {0});
  const auto s2 = shorten(e, {0, 1});
  const auto ds1 = bz_distance(s1), ds2 = bz_distance(s2);

  auto exact = [](const DistanceResult& r, int v) { return r.status == DistanceStatus::Exact && r.value == v; };
  std::ostringstream d;
  d << "d(C1)=" << d1.value << " d(C2)=" << d2.value << "; bound " << bound << " in " << bound_s << "s; E=[" << e.n()
    << ',' << e.k() << ',' << de.value << "] (certificate " << p.certified << "); shortened [" << s1.n() << ','
    << s1.k() << ',' << ds1.value << "] [" << s2.n() << ',' << s2.k() << ',' << ds2.value << ']';
  const bool ok = exact(d1, 7) && exact(d2, 9) && bound_ok && e.n() == 42 && e.k() == 27 && exact(de, 9) &&
                  p.certified == 9 && s1.n() == 41 && s1.k() == 26 && exact(ds1, 9) && s2.n() == 40 &&
                  s2.k() == 25 && exact(ds2, 9);
  return {ok, d.str()};
}

Outcome criterion7() {
  std::mt19937 rng(20240601);
  int x_done = 0, xx_done = 0, viol = 0;
  for (int q : {3, 4, 5}) {
    const auto f = make_field_q(q);
    const int nmax = q == 3 ? 8 : q == 4 ? 7 : 6;
    for (int done = 0; done < 200;) {
      std::uniform_int_distribution<int> dn(3, nmax);
      const int n = dn(rng);
      const int k1 = std::uniform_int_distribution<int>(2, std::min(n, 4))(rng);
      const int k2 = std::uniform_int_distribution<int>(0, k1 - 1)(rng);
      const auto c1 = with_exact(random_code(f, n, k1, rng));
      const auto c2 = with_exact(random_subcode(c1, std::min(k2, c1.k()), rng));
      const int r = c1.k() - c2.k();
      if (r <= 0) continue;
      const auto c3 = with_exact(random_code(f, r + std::uniform_int_distribution<int>(0, 2)(rng), r, rng));
      if (c3.k() != r) continue;
      const auto e = construction_x(c1, c2, c3);
      const int pred = x_bound(c1.distance().value, c2.distance().value, c3.distance().value);
      const int got = brute_distance(e).value;
      if (got < pred || got < e.distance().value) ++viol;
      ++done;
      ++x_done;
    }
    for (int done = 0; done < 100;) {
      const int n = std::uniform_int_distribution<int>(4, nmax)(rng);
      const int k = std::uniform_int_distribution<int>(2, std::min(n, 4))(rng);
      const auto c = with_exact(random_code(f, n, k, rng));
      if (c.k() < 2) continue;
      const auto s1 = with_exact(random_subcode(c, std::uniform_int_distribution<int>(0, c.k() - 1)(rng), rng));
      const auto s2 = with_exact(random_subcode(c, std::uniform_int_distribution<int>(0, c.k() - 1)(rng), rng));
      const int r1 = c.k() - s2.k(), r2 = c.k() - s1.k();
      const auto d1 = with_exact(random_code(f, r1 + std::uniform_int_distribution<int>(0, 1)(rng), r1, rng));
      const auto d2 = with_exact(random_code(f, r2 + std::uniform_int_distribution<int>(0, 1)(rng), r2, rng));
      if (d1.k() != r1 || d2.k() != r2) continue;
      const auto e = construction_xx(c, s1, s2, d1, d2);
      const auto inter = intersection(s1, s2);
      const int delta0 = inter.k() ? brute_distance(inter).value : kInfiniteDistance;
      const int pred = xx_bound(c.distance().value, s1.distance().value, s2.distance().value, delta0,
                                d1.k() ? d1.distance().value : kInfiniteDistance,
                                d2.k() ? d2.distance().value : kInfiniteDistance);
      const int got = brute_distance(e).value;
      if (got < std::min(pred, e.n() + 1) || got < e.distance().value) ++viol;
      ++done;
      ++xx_done;
    }
  }
  std::ostringstream d;
  d << x_done << " X triples, " << xx_done << " XX instances over q=3,4,5, " << viol << " bound violations";
  return {viol == 0, d.str()};
}

Outcome criterion8() {
  const auto a = quantum_params(109, 73, 16);
  const auto b = quantum_params(114, 57, 26);
  const bool table_ok = a.n == 109 && a.k == 37 && a.d == 16 && b.n == 114 && b.k == 0 && b.d == 26;

  SearchJob job;
  job.q = 4;
  job.n_min = 3;
  job.n_max = 15;
  job.max_cosets = 3;
  job.construction_x = false;
  job.quantum = true;
  const auto s = run_search(job, BKLCTable{});
  // prefer a nontrivial quantum code: largest n with 0 < 2k - n < n
  const QuantumCandidate* pick = nullptr;
  for (const auto& qc : s.quantum)
    if (qc.params.k > 0 && qc.params.k < qc.params.n && qc.params.d > 1 &&
        (!pick || qc.params.n > pick->params.n || (qc.params.n == pick->params.n && qc.params.d > pick->params.d)))
      pick = &qc;
  std::ostringstream d;
  d << "[[109,73,16]] -> [[" << a.n << ',' << a.k << ',' << a.d << "]], (114,57,26) -> [[" << b.n << ',' << b.k << ','
    << b.d << "]]" << (b.self_dual ? " self-dual" : "") << "; " << s.quantum.size() << " GF(4) candidates";
  if (!pick) return {false, d.str() + ", none nontrivial"};
  auto c = build_code(parse_spec(pick->spec));
  const bool contained = rank(vstack(c.generator(), hermitian_dual(c).generator())) == c.k();
  const int dist = brute_distance(c).value;
  c.set_distance({dist, DistanceStatus::Exact});
  const auto qp = quantum_params(c);
  d << "; " << pick->spec << " [" << c.n() << ',' << c.k() << ',' << dist << "]_4 -> [[" << qp.n << ',' << qp.k << ','
    << qp.d << "]]" << (contained ? " rank-verified" : " NOT dual-containing");
  const bool ok = table_ok && b.self_dual && contained && qp.n == c.n() && qp.k == 2 * c.k() - c.n() && qp.d == dist &&
                  pick->params.n == qp.n && pick->params.k == qp.k && pick->params.d == dist;
  return {ok, d.str()};
}

Outcome criterion9() {
  int codes = 0, disagree = 0;
  std::string first;
  for (int q : {2, 3, 4, 5}) {
    const auto f = make_field_q(q);
    for (int n = 1; n <= 14; ++n) {
      if (std::gcd(n, q) != 1) continue;
      for (auto a : f->nonzero_elements()) {
        const auto fam = make_family(f, n, a);
        const int cosets = static_cast<int>(fam->cosets().size());
        for (const auto& s : enumerate_family(fam, cosets, 0, n)) {
          if (ipow(q, s.dimension()) > (std::uint64_t{1} << 16)) continue;
          const auto c = build_code(s);
          const auto x = brute_distance(c), y = bz_distance(c);
          ++codes;
          if (x.value != y.value || x.status != DistanceStatus::Exact || y.status != DistanceStatus::Exact)
            if (!disagree++) first = to_text(s);
        }
      }
    }
  }
  std::ostringstream d;
  d << codes << " constacyclic codes with q<=5, n<=14, q^k<=2^16; " << disagree << " disagreements";
  if (disagree) d << ", first " << first;
  return {disagree == 0 && codes > 0, d.str()};
}

}  // namespace

int main() {
  report(1, criterion1);
  report(2, criterion2);
  report(3, criterion3);
  report(4, criterion4);
  report(5, criterion5);
  report(6, criterion6);
  report(7, criterion7);
  report(8, criterion8);
  report(9, criterion9);
  std::printf(
      "criterion 10: NOT REPRODUCED  records [109,73,16]_4, [111,57,25]_4, [87,42,24]_5, [101,75,13]_5, "
      "[183,153,>=11]_4 and the remaining table entries need searches far beyond desk scale; only their "
      "parameter arithmetic is checked (criterion 8), and criteria 3-9 stand in for them\n");
  std::printf("%d of 9 checked criteria failed\n", failures);
  return failures ? 1 : 0;
}
