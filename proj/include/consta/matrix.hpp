#pragma once

#include <optional>
#include <vector>

#include "consta/field.hpp"

namespace consta {

/// Dense row-major matrix over GF(q).
class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, Elem{0}) {}

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Elem operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  Elem* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const Elem* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  std::vector<Elem> row_vector(int r) const { return {row(r), row(r) + cols_}; }

  void append_row(const std::vector<Elem>& v);

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldPtr field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

Mat identity(const FieldPtr& f, int n);
Mat from_rows(const FieldPtr& f, int cols, const std::vector<std::vector<Elem>>& rows);

struct Rref {
  Mat reduced;              // zero rows removed: rank x cols
  int rank = 0;
  std::vector<int> pivots;  // pivot column of each row
};

/// Reduced row echelon form; pivot columns are taken in ascending order.
Rref rref(const Mat& m);
/// As rref(), but pivot columns are chosen following `column_order`.
Rref rref_with_order(const Mat& m, const std::vector<int>& column_order);

int rank(const Mat& m);
Mat vstack(const Mat& a, const Mat& b);
Mat select_columns(const Mat& m, const std::vector<int>& cols);
Mat delete_columns(const Mat& m, const std::vector<int>& cols);
Mat mul(const Mat& a, const Mat& b);

/// Basis (as rows) of the right null space {x : m x^T = 0}.
Mat nullspace(const Mat& m);
/// Basis (as rows) of the left null space {y : y m = 0}.
Mat left_nullspace(const Mat& m);

/// Reduces v against an rref basis in place; returns true iff v ends at 0.
bool reduce_against(const Rref& basis, std::vector<Elem>& v);
bool in_rowspace(const Rref& basis, std::vector<Elem> v);

/// row space of b is contained in row space of a
bool subspace_contains(const Mat& a, const Mat& b);
bool same_rowspace(const Mat& a, const Mat& b);

/// Some x with x a = v, or nullopt when v is not in the row space of a.
std::optional<std::vector<Elem>> solve_left(const Mat& a, const std::vector<Elem>& v);

/// Row vector times matrix.
std::vector<Elem> row_times(const std::vector<Elem>& v, const Mat& m);

}  // namespace consta
