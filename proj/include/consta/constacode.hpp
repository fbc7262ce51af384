#pragma once

// Constacyclic codes of length n over GF(q) with gcd(n, q) = 1.
//
// With t = ord(a) and alpha a primitive (tn)-th root of unity satisfying
// alpha^n = a, the roots of x^n - a are alpha^s for s in
// Omega_a = {kt + 1 mod tn}.  Omega_a splits into q-cyclotomic cosets, one
// per irreducible factor, and a code is named by its defining set: the
// union of cosets whose roots annihilate the generator polynomial.

#include <memory>
#include <string>
#include <vector>

#include "consta/code.hpp"
#include "consta/extension.hpp"
#include "consta/poly.hpp"

namespace consta {

struct OmegaSet {
  int q = 0;
  int n = 0;
  Elem a;
  int t = 1;        // ord(a)
  int modulus = 1;  // tn
  std::vector<int> residues;  // sorted
};

OmegaSet omega(const FieldPtr& field, int n, Elem a);

struct CycloCoset {
  int modulus = 1;
  std::vector<int> members;  // sorted
  int leader() const { return members.front(); }
  int size() const { return static_cast<int>(members.size()); }
};

/// q-cyclotomic coset of s modulo `modulus`.
CycloCoset cyclotomic_coset(int q, int s, int modulus);

/// Cosets covering Omega exactly, ordered by smallest member.
std::vector<CycloCoset> partition_omega(const OmegaSet& om);

/// 2^(number of cosets).
BigInt count_codes(const FieldPtr& field, int n, Elem a);

/// Shared context for all a-constacyclic codes of one length.
class ConstaFamily {
 public:
  ConstaFamily(FieldPtr field, int n, Elem a);  // use make_family

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  int n() const { return omega_.n; }
  Elem a() const { return omega_.a; }
  int t() const { return omega_.t; }
  const OmegaSet& omega_set() const { return omega_; }
  const std::vector<CycloCoset>& cosets() const { return cosets_; }
  const RootOfUnity& root() const { return root_; }

  /// Index into cosets() of the coset containing residue s (-1 if s is not in Omega).
  int coset_index(int s) const;
  /// Minimal polynomial over GF(q) of the roots indexed by coset i.
  const Poly<Field>& minimal_poly(int i) const { return minimal_polys_[i]; }

 private:
  FieldPtr field_;
  OmegaSet omega_;
  std::vector<CycloCoset> cosets_;
  std::vector<int> coset_of_;  // residue -> coset index
  RootOfUnity root_;
  std::vector<Poly<Field>> minimal_polys_;
};

using FamilyPtr = std::shared_ptr<const ConstaFamily>;

/// Cached per (q, n, a).
FamilyPtr make_family(const FieldPtr& field, int n, Elem a);

/// Product of (x - alpha^l) over the coset, computed in the extension and
/// projected to GF(q); throws Internal if a coefficient leaves GF(q).
Poly<Field> coset_minimal_poly(const ConstaFamily& fam, const CycloCoset& coset);

struct CodeSpec {
  FamilyPtr family;
  std::vector<int> defining_set;  // sorted residues, a union of cosets

  int n() const { return family->n(); }
  int dimension() const { return n() - static_cast<int>(defining_set.size()); }
  /// Indices (into family->cosets()) of the cosets making up the defining set.
  std::vector<int> coset_indices() const;

  friend bool operator==(const CodeSpec& x, const CodeSpec& y) {
    return x.family == y.family && x.defining_set == y.defining_set;
  }
};

/// Validates that D is a subset of Omega and a union of complete cosets.
CodeSpec make_spec(const FamilyPtr& fam, std::vector<int> defining_set);
/// Union of the cosets containing each listed residue ("Z10,Z19" style labels).
CodeSpec spec_from_cosets(const FamilyPtr& fam, const std::vector<int>& representatives);
CodeSpec spec_from_coset_indices(const FamilyPtr& fam, const std::vector<int>& indices);

/// "q:n:a:D" with a written as the exponent of xi, D comma separated.
std::string to_text(const CodeSpec& spec);
CodeSpec parse_spec(const std::string& text);
/// Parses "Z10,Z19" or "10,19" into residues.
std::vector<int> parse_coset_labels(const std::string& text);

Poly<Field> generator_poly(const CodeSpec& spec);
LinearCode build_code(const CodeSpec& spec);
/// Shifted generator-polynomial rows x^j g(x), 0 <= j < n - deg g.
Mat cyclic_generator_matrix(const FieldPtr& f, const Poly<Field>& g, int n);

}  // namespace consta
