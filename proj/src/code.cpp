#include "consta/code.hpp"

namespace consta {

std::string to_string(DistanceStatus s) {
  switch (s) {
    case DistanceStatus::Exact: return "exact";
    case DistanceStatus::Lower: return "lower";
    case DistanceStatus::Upper: return "upper";
    case DistanceStatus::Unknown: return "unknown";
  }
  return "unknown";
}

DistanceStatus parse_distance_status(const std::string& s) {
  if (s == "exact") return DistanceStatus::Exact;
  if (s == "lower") return DistanceStatus::Lower;
  if (s == "upper") return DistanceStatus::Upper;
  if (s == "unknown") return DistanceStatus::Unknown;
  fail(ErrorKind::Parse, "unknown distance status '" + s + "'");
}

LinearCode::LinearCode(Mat generator, nlohmann::json lineage)
    : generator_(std::move(generator)), lineage_(std::move(lineage)) {
  if (!generator_.field_ptr()) fail(ErrorKind::Precondition, "generator matrix without a field");
  const Rref r = rref(generator_);
  if (r.rank < generator_.rows()) generator_ = r.reduced;
  if (k() == 0) distance_ = {n() + 1, DistanceStatus::Exact};
}

LinearCode full_space(const FieldPtr& f, int n) {
  LinearCode c(identity(f, n), {{"kind", "aux"}, {"name", "full"}, {"q", f->q()}, {"n", n}});
  if (n > 0) c.set_distance({1, DistanceStatus::Exact});
  return c;
}

LinearCode zero_code(const FieldPtr& f, int n) {
  return LinearCode(Mat(f, 0, n), {{"kind", "aux"}, {"name", "zero"}, {"q", f->q()}, {"n", n}});
}

LinearCode repetition_code(const FieldPtr& f, int n) {
  require(n >= 1, "repetition code needs n >= 1");
  Mat g(f, 1, n);
  for (int j = 0; j < n; ++j) g(0, j) = Elem{1};
  LinearCode c(g, {{"kind", "aux"}, {"name", "repetition"}, {"q", f->q()}, {"n", n}});
  c.set_distance({n, DistanceStatus::Exact});
  return c;
}

LinearCode parity_code(const FieldPtr& f, int n) {
  require(n >= 2, "parity code needs n >= 2");
  Mat g(f, n - 1, n);
  const Elem minus_one = f->neg(Elem{1});
  for (int i = 0; i < n - 1; ++i) {
    g(i, i) = Elem{1};
    g(i, n - 1) = minus_one;
  }
  LinearCode c(g, {{"kind", "aux"}, {"name", "parity"}, {"q", f->q()}, {"n", n}});
  c.set_distance({2, DistanceStatus::Exact});
  return c;
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n() || a.k() != b.k()) return false;
  return same_rowspace(a.generator(), b.generator());
}

bool contains(const LinearCode& big, const LinearCode& small) {
  if (big.n() != small.n()) fail(ErrorKind::Precondition, "codes of different lengths");
  if (small.k() == 0) return true;
  if (big.k() < small.k()) return false;
  return subspace_contains(big.generator(), small.generator());
}

LinearCode intersection(const LinearCode& a, const LinearCode& b) {
  if (a.n() != b.n()) fail(ErrorKind::Precondition, "codes of different lengths");
  // A cap B = (A^perp + B^perp)^perp
  const Mat ha = euclidean_dual(a).generator(), hb = euclidean_dual(b).generator();
  const Mat sum = vstack(ha, hb);
  Mat g = rank(sum) == 0 ? identity(a.field_ptr(), a.n()) : nullspace(sum);
  return LinearCode(std::move(g), {{"kind", "intersection"}, {"of", {a.lineage(), b.lineage()}}});
}

std::vector<Elem> constacyclic_shift(const Field& f, const std::vector<Elem>& v, Elem a) {
  const std::size_t n = v.size();
  std::vector<Elem> out(n);
  if (n == 0) return out;
  out[0] = f.mul(a, v[n - 1]);
  for (std::size_t j = 1; j < n; ++j) out[j] = v[j - 1];
  return out;
}

bool is_constacyclic(const LinearCode& c, Elem a) {
  if (c.k() == 0) return true;
  const Rref basis = rref(c.generator());
  for (int i = 0; i < c.k(); ++i)
    if (!in_rowspace(basis, constacyclic_shift(c.field(), c.generator().row_vector(i), a)))
      return false;
  return true;
}

LinearCode euclidean_dual(const LinearCode& c) {
  Mat h = c.k() == 0 ? identity(c.field_ptr(), c.n()) : nullspace(c.generator());
  return LinearCode(std::move(h), {{"kind", "dual"}, {"inner", "euclidean"}, {"of", c.lineage()}});
}

LinearCode hermitian_dual(const LinearCode& c) {
  const Field& f = c.field();
  if (!f.is_square_order()) fail(ErrorKind::Precondition, "Hermitian dual needs a square field order");
  Mat h = euclidean_dual(c).generator();
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j) h(i, j) = f.conjugate(h(i, j));
  return LinearCode(std::move(h), {{"kind", "dual"}, {"inner", "hermitian"}, {"of", c.lineage()}});
}

int hamming_weight(const std::vector<Elem>& v) {
  int w = 0;
  for (auto e : v) w += e.v != 0;
  return w;
}

}  // namespace consta
