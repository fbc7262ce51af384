#pragma once

// Monomial equivalence between families of a- and b-constacyclic codes of
// the same length.  Each criterion is a purely arithmetic test on
// (q, n, a, b); the exponent-divisibility criterion additionally yields an
// explicit diagonal isometry x_j -> xi^(i j) x_j.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "consta/code.hpp"

namespace consta {

enum class Criterion {
  EqualOrder,        // ord(a) = ord(b); predicate only, no witness here
  Bierbrauer,        // b = 1 and gcd(n, ord(a)) = 1
  MainTheorem,       // exponent divisibility, with witness
  DividesOrderGcd1,  // ord(a) | ord(b) and gcd(n, q) = gcd(n, q-1) = 1
  GcdPower,          // a = xi^(m r), b = 1, m = gcd(n, q-1)
};

std::string to_string(Criterion c);

/// Solution of i1 = i2 s (mod q-1) with m = gcd(n, q-1) dividing i2 (s - 1).
struct MainMatch {
  int i1 = 0, i2 = 0, s = 0, m = 1;
};

/// a = xi^i1 is the source, b = xi^i2 the target; smallest qualifying s.
std::optional<MainMatch> check_main_theorem(const Field& f, int n, Elem a, Elem b);
bool check_equal_order(const Field& f, Elem a, Elem b);
bool check_bierbrauer(const Field& f, int n, Elem a);
/// First of DividesOrderGcd1 / GcdPower that fires (in either direction).
std::optional<Criterion> check_corollaries(const Field& f, int n, Elem a, Elem b);

struct EquivWitness {
  int q = 0, n = 0;
  Elem a, b;
  int i1 = 0, i2 = 0, s = 0, m = 1;
  std::int64_t gamma = 0;  // exact quotient i2 (s - 1) / m, may be negative
  int theta = 1, beta = 1, beta_prime = 0;
  int i = 0;               // scalar xi^i; coordinate j is scaled by xi^(i j)
  Elem scalar;

  /// (0, i, 2i, ..., (n-1) i) mod (q-1)
  std::vector<int> diagonal_exponents() const;
  nlohmann::json to_json() const;
};

/// Throws Precondition when the exponent-divisibility criterion fails and
/// Internal when the derived i does not satisfy i1 - i n = i2 (mod q-1).
EquivWitness build_witness(const FieldPtr& f, int n, Elem a, Elem b);

/// Scales coordinate j of every codeword by xi^(i j).
LinearCode apply_isometry(const EquivWitness& w, const LinearCode& c);

struct SoundnessReport {
  int codes = 0;
  int failures = 0;
  int by_enumerator = 0;   // weight enumerators compared directly
  int by_certificate = 0;  // too large to enumerate: diagonal map re-derived and checked
  std::vector<std::string> failed;  // spec texts

  nlohmann::json to_json() const;
};

/// Maps every a-constacyclic code with at most max_cosets cosets through
/// the witness and checks that the image is b-constacyclic and has the same
/// weight enumerator (or, past the budget, is a verified diagonal image).
SoundnessReport verify_witness(const EquivWitness& w, int max_cosets = 2,
                               std::uint64_t budget = std::uint64_t{1} << 16);

/// Nonzero d with rowspace(A diag(d)) = rowspace(B), or nullopt if none
/// exists.  Recovered from the two reduced echelon forms alone and then
/// verified, so it does not trust how B was produced.
std::optional<std::vector<Elem>> diagonal_equivalence(const Mat& a, const Mat& b);

struct EquivEdge {
  Elem a, b;
  Criterion criterion;
  bool predicate_only = false;
  std::string condition;  // instantiated arithmetic condition
};

struct EquivGraph {
  int q = 0, n = 0;
  std::vector<Elem> nodes;                 // nonzero constants by value
  std::vector<EquivEdge> edges;            // one per (unordered pair, criterion)
  std::vector<std::vector<Elem>> classes;  // sorted, by smallest member
  std::vector<std::vector<Elem>> order_groups;  // constants of equal order

  /// Index into `classes` of the class containing a.
  int class_of(Elem a) const;
};

EquivGraph classify(const FieldPtr& f, int n);
std::string emit_dot(const EquivGraph& g, const Field& f);
nlohmann::json to_json(const EquivGraph& g, const Field& f);

}  // namespace consta
