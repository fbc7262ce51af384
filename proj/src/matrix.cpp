#include "consta/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace consta {

namespace {

void check_same_field(const Mat& a, const Mat& b) {
  if (a.field_ptr() != b.field_ptr())
    fail(ErrorKind::FieldMismatch, "matrices over different fields");
}

}  // namespace

void Mat::append_row(const std::vector<Elem>& v) {
  if (static_cast<int>(v.size()) != cols_) fail(ErrorKind::Precondition, "row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Mat identity(const FieldPtr& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Elem{1};
  return m;
}

Mat from_rows(const FieldPtr& f, int cols, const std::vector<std::vector<Elem>>& rows) {
  Mat m(f, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Rref rref_with_order(const Mat& m, const std::vector<int>& column_order) {
  const Field& k = m.field();
  Mat a = m;
  const int rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c : column_order) {
    if (r == rows) break;
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (a(i, c).v != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < cols; ++j) std::swap(a(sel, j), a(r, j));
    const Elem inv = k.inv(a(r, c));
    for (int j = 0; j < cols; ++j) a(r, j) = k.mul(a(r, j), inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c).v == 0) continue;
      const Elem f = a(i, c);
      Elem* dst = a.row(i);
      const Elem* src = a.row(r);
      for (int j = 0; j < cols; ++j)
        if (src[j].v != 0) dst[j] = k.sub(dst[j], k.mul(f, src[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  Rref out;
  out.rank = r;
  out.pivots = std::move(pivots);
  out.reduced = Mat(m.field_ptr(), r, cols);
  for (int i = 0; i < r; ++i)
    std::copy(a.row(i), a.row(i) + cols, out.reduced.row(i));
  return out;
}

Rref rref(const Mat& m) {
  std::vector<int> order(m.cols());
  std::iota(order.begin(), order.end(), 0);
  auto out = rref_with_order(m, order);
  // sort rows by pivot so the result is the canonical rref
  std::vector<int> idx(out.rank);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) { return out.pivots[x] < out.pivots[y]; });
  Mat sorted(m.field_ptr(), out.rank, m.cols());
  std::vector<int> piv(out.rank);
  for (int i = 0; i < out.rank; ++i) {
    std::copy(out.reduced.row(idx[i]), out.reduced.row(idx[i]) + m.cols(), sorted.row(i));
    piv[i] = out.pivots[idx[i]];
  }
  out.reduced = std::move(sorted);
  out.pivots = std::move(piv);
  return out;
}

int rank(const Mat& m) { return rref(m).rank; }

Mat vstack(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols()) fail(ErrorKind::Precondition, "vstack: column count mismatch");
  Mat out = a;
  for (int i = 0; i < b.rows(); ++i) out.append_row(b.row_vector(i));
  return out;
}

Mat select_columns(const Mat& m, const std::vector<int>& cols) {
  Mat out(m.field_ptr(), m.rows(), static_cast<int>(cols.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, static_cast<int>(j)) = m(i, cols[j]);
  return out;
}

Mat delete_columns(const Mat& m, const std::vector<int>& cols) {
  std::vector<bool> drop(m.cols(), false);
  for (int c : cols) {
    if (c < 0 || c >= m.cols()) fail(ErrorKind::Precondition, "column index out of range");
    drop[c] = true;
  }
  std::vector<int> keep;
  for (int c = 0; c < m.cols(); ++c)
    if (!drop[c]) keep.push_back(c);
  return select_columns(m, keep);
}

Mat mul(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.cols() != b.rows()) fail(ErrorKind::Precondition, "mul: shape mismatch");
  const Field& k = a.field();
  Mat out(a.field_ptr(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int l = 0; l < a.cols(); ++l) {
      const Elem x = a(i, l);
      if (x.v == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) = k.add(out(i, j), k.mul(x, b(l, j)));
    }
  return out;
}

Mat nullspace(const Mat& m) {
  const Field& k = m.field();
  const Rref r = rref(m);
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivots) is_pivot[c] = true;
  Mat out(m.field_ptr(), 0, n);
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(n, Elem{0});
    v[free] = Elem{1};
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = k.neg(r.reduced(i, free));
    out.append_row(v);
  }
  return out;
}

Mat left_nullspace(const Mat& m) {
  Mat t(m.field_ptr(), m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return nullspace(t);
}

bool reduce_against(const Rref& basis, std::vector<Elem>& v) {
  const Field& k = basis.reduced.field();
  const int cols = basis.reduced.cols();
  for (int i = 0; i < basis.rank; ++i) {
    const Elem f = v[basis.pivots[i]];
    if (f.v == 0) continue;
    const Elem* src = basis.reduced.row(i);
    for (int j = 0; j < cols; ++j)
      if (src[j].v != 0) v[j] = k.sub(v[j], k.mul(f, src[j]));
  }
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e.v == 0; });
}

bool in_rowspace(const Rref& basis, std::vector<Elem> v) { return reduce_against(basis, v); }

bool subspace_contains(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols()) fail(ErrorKind::Precondition, "subspace_contains: column count mismatch");
  return rank(a) == rank(vstack(a, b));
}

bool same_rowspace(const Mat& a, const Mat& b) {
  check_same_field(a, b);
  if (a.cols() != b.cols()) return false;
  const Rref ra = rref(a), rb = rref(b);
  return ra.rank == rb.rank && ra.reduced == rb.reduced;
}

std::optional<std::vector<Elem>> solve_left(const Mat& a, const std::vector<Elem>& v) {
  const Field& k = a.field();
  const int rows = a.rows(), cols = a.cols();
  if (static_cast<int>(v.size()) != cols) fail(ErrorKind::Precondition, "solve_left: length mismatch");
  // [a | I]; pivots are taken among the first `cols` columns only, so the
  // right block records the row operations
  Mat aug(a.field_ptr(), rows, cols + rows);
  for (int i = 0; i < rows; ++i) {
    std::copy(a.row(i), a.row(i) + cols, aug.row(i));
    aug(i, cols + i) = Elem{1};
  }
  std::vector<int> order(cols);
  std::iota(order.begin(), order.end(), 0);
  const Rref r = rref_with_order(aug, order);
  std::vector<Elem> rest = v;
  std::vector<Elem> x(rows, Elem{0});
  for (int i = 0; i < r.rank; ++i) {
    const Elem c = rest[r.pivots[i]];
    if (c.v == 0) continue;
    for (int j = 0; j < cols; ++j) rest[j] = k.sub(rest[j], k.mul(c, r.reduced(i, j)));
    for (int j = 0; j < rows; ++j) x[j] = k.add(x[j], k.mul(c, r.reduced(i, cols + j)));
  }
  for (auto e : rest)
    if (e.v != 0) return std::nullopt;
  return x;
}

std::vector<Elem> row_times(const std::vector<Elem>& v, const Mat& m) {
  const Field& k = m.field();
  std::vector<Elem> out(m.cols(), Elem{0});
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i].v == 0) continue;
    for (int j = 0; j < m.cols(); ++j) out[j] = k.add(out[j], k.mul(v[i], m(i, j)));
  }
  return out;
}

}  // namespace consta
