#include "consta/constacode.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace consta {

OmegaSet omega(const FieldPtr& field, int n, Elem a) {
  require(n >= 1, "length must be positive");
  require(a.v != 0, "shift constant must be nonzero");
  require(std::gcd(n, field->q()) == 1, "gcd(n, q) must be 1");
  OmegaSet om;
  om.q = field->q();
  om.n = n;
  om.a = a;
  om.t = field->order(a);
  om.modulus = om.t * n;
  for (int k = 0; k < n; ++k) om.residues.push_back((k * om.t + 1) % om.modulus);
  std::sort(om.residues.begin(), om.residues.end());
  return om;
}

CycloCoset cyclotomic_coset(int q, int s, int modulus) {
  CycloCoset c;
  c.modulus = modulus;
  s = static_cast<int>(mod(s, modulus));
  int x = s;
  do {
    c.members.push_back(x);
    x = static_cast<int>((static_cast<std::int64_t>(x) * q) % modulus);
  } while (x != s);
  std::sort(c.members.begin(), c.members.end());
  return c;
}

std::vector<CycloCoset> partition_omega(const OmegaSet& om) {
  std::vector<bool> seen(om.modulus, false);
  std::vector<CycloCoset> out;
  for (int s : om.residues) {
    if (seen[s]) continue;
    CycloCoset c = cyclotomic_coset(om.q, s, om.modulus);
    for (int x : c.members) seen[x] = true;
    out.push_back(std::move(c));
  }
  return out;  // residues are sorted, so this is ordered by leader
}

BigInt count_codes(const FieldPtr& field, int n, Elem a) {
  BigInt one = 1;
  return one << partition_omega(omega(field, n, a)).size();
}

Poly<Field> coset_minimal_poly(const ConstaFamily& fam, const CycloCoset& coset) {
  const RootOfUnity& root = fam.root();
  const ExtField& ext = *root.ext;
  using EPoly = Poly<ExtField>;
  EPoly acc = EPoly::constant(ext, ext.one());
  for (int l : coset.members) {
    const auto r = ext.pow(root.alpha, static_cast<std::int64_t>(l));
    acc = poly_mul(acc, EPoly(ext, {ext.neg(r), ext.one()}));
  }
  std::vector<Elem> c;
  for (const auto& x : acc.coeffs) {
    if (!ext.in_base(x))
      fail(ErrorKind::Internal, "minimal polynomial coefficient outside GF(q)");
    c.push_back(x[0]);
  }
  return Poly<Field>(fam.field(), std::move(c));
}

ConstaFamily::ConstaFamily(FieldPtr field, int n, Elem a)
    : field_(std::move(field)), omega_(omega(field_, n, a)) {
  cosets_ = partition_omega(omega_);
  coset_of_.assign(omega_.modulus, -1);
  for (std::size_t i = 0; i < cosets_.size(); ++i)
    for (int s : cosets_[i].members) coset_of_[s] = static_cast<int>(i);
  root_ = fix_root(field_, n, a);
  for (const auto& c : cosets_) minimal_polys_.push_back(coset_minimal_poly(*this, c));
}

int ConstaFamily::coset_index(int s) const {
  if (s < 0 || s >= omega_.modulus) return -1;
  return coset_of_[s];
}

FamilyPtr make_family(const FieldPtr& field, int n, Elem a) {
  static std::mutex mu;
  static std::map<std::tuple<const Field*, int, int>, FamilyPtr> cache;
  const auto key = std::make_tuple(field.get(), n, static_cast<int>(a.v));
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto fam = std::make_shared<const ConstaFamily>(field, n, a);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, fam).first->second;
}

std::vector<int> CodeSpec::coset_indices() const {
  std::vector<int> idx;
  for (int s : defining_set) {
    const int c = family->coset_index(s);
    if (idx.empty() || idx.back() != c) idx.push_back(c);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

CodeSpec make_spec(const FamilyPtr& fam, std::vector<int> defining_set) {
  std::sort(defining_set.begin(), defining_set.end());
  defining_set.erase(std::unique(defining_set.begin(), defining_set.end()), defining_set.end());
  std::vector<int> hits(fam->cosets().size(), 0);
  for (int s : defining_set) {
    const int c = fam->coset_index(s);
    if (c < 0) fail(ErrorKind::Precondition, "residue " + std::to_string(s) + " is not in Omega");
    ++hits[c];
  }
  for (std::size_t i = 0; i < hits.size(); ++i)
    if (hits[i] != 0 && hits[i] != fam->cosets()[i].size())
      fail(ErrorKind::Precondition,
           "defining set is not a union of cyclotomic cosets (Z" +
               std::to_string(fam->cosets()[i].leader()) + " is split)");
  return CodeSpec{fam, std::move(defining_set)};
}

CodeSpec spec_from_cosets(const FamilyPtr& fam, const std::vector<int>& representatives) {
  std::vector<int> idx;
  for (int s : representatives) {
    const int c = fam->coset_index(s);
    if (c < 0) fail(ErrorKind::Precondition, "residue " + std::to_string(s) + " is not in Omega");
    idx.push_back(c);
  }
  return spec_from_coset_indices(fam, idx);
}

CodeSpec spec_from_coset_indices(const FamilyPtr& fam, const std::vector<int>& indices) {
  std::vector<int> d;
  for (int i : indices) {
    if (i < 0 || i >= static_cast<int>(fam->cosets().size()))
      fail(ErrorKind::Precondition, "coset index out of range");
    const auto& m = fam->cosets()[i].members;
    d.insert(d.end(), m.begin(), m.end());
  }
  return make_spec(fam, std::move(d));
}

std::string to_text(const CodeSpec& spec) {
  std::ostringstream os;
  const auto& fam = *spec.family;
  os << fam.field().q() << ':' << fam.n() << ':' << fam.field().log(fam.a()) << ':';
  for (std::size_t i = 0; i < spec.defining_set.size(); ++i)
    os << (i ? "," : "") << spec.defining_set[i];
  return os.str();
}

namespace {

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "bad " + what + " '" + s + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<int> parse_coset_labels(const std::string& text) {
  std::vector<int> out;
  for (auto part : split(text, ',')) {
    part = trim(part);
    if (part.empty()) continue;
    if (part[0] == 'Z' || part[0] == 'z') part = part.substr(1);
    out.push_back(parse_int(part, "coset label"));
  }
  return out;
}

CodeSpec parse_spec(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) fail(ErrorKind::Parse, "spec must look like q:n:a:D, got '" + text + "'");
  const int q = parse_int(trim(parts[0]), "field order");
  const int n = parse_int(trim(parts[1]), "length");
  const int e = parse_int(trim(parts[2]), "shift exponent");
  if (prime_power(q).first == 0) fail(ErrorKind::Parse, "q is not a prime power in '" + text + "'");
  const FieldPtr f = make_field_q(q);
  auto fam = make_family(f, n, f->exp(e));
  std::vector<int> d;
  for (auto part : split(parts[3], ',')) {
    part = trim(part);
    if (!part.empty()) d.push_back(parse_int(part, "residue"));
  }
  return make_spec(fam, std::move(d));
}

Poly<Field> generator_poly(const CodeSpec& spec) {
  const auto& fam = *spec.family;
  Poly<Field> g = Poly<Field>::constant(fam.field(), Elem{1});
  for (int i : spec.coset_indices()) g = poly_mul(g, fam.minimal_poly(i));
  if (g.degree() != static_cast<int>(spec.defining_set.size()))
    fail(ErrorKind::Internal, "generator polynomial degree differs from |D|");
  return g;
}

Mat cyclic_generator_matrix(const FieldPtr& f, const Poly<Field>& g, int n) {
  const int k = n - g.degree();
  require(k >= 0, "generator polynomial degree exceeds length");
  Mat m(f, k, n);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i <= g.degree(); ++i) m(j, i + j) = g.coeffs[i];
  return m;
}

LinearCode build_code(const CodeSpec& spec) {
  const auto g = generator_poly(spec);
  const int n = spec.n();
  Mat m = cyclic_generator_matrix(spec.family->field_ptr(), g, n);
  const auto& fam = *spec.family;
  nlohmann::json lineage = {{"kind", "constacyclic"},
                            {"spec", to_text(spec)},
                            {"q", fam.field().q()},
                            {"n", n},
                            {"a", fam.field().log(fam.a())},
                            {"defining_set", spec.defining_set}};
  return LinearCode(std::move(m), std::move(lineage));
}

}  // namespace consta
