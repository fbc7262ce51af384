#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "consta/matrix.hpp"

namespace consta {

enum class DistanceStatus { Exact, Lower, Upper, Unknown };

std::string to_string(DistanceStatus s);
DistanceStatus parse_distance_status(const std::string& s);

/// What is known about a code's minimum distance.  For the zero code the
/// convention is value = n + 1 ("no nonzero codeword").
struct DistanceRecord {
  int value = 0;
  DistanceStatus status = DistanceStatus::Unknown;

  bool known() const { return status == DistanceStatus::Exact || status == DistanceStatus::Lower; }
  /// Proven lower bound (0 if nothing is proven).
  int lower() const { return known() ? value : 0; }
};

/// A linear [n,k]_q code given by a generator matrix of full row rank.
class LinearCode {
 public:
  LinearCode() = default;
  /// Dependent rows are removed (the row space is kept).
  explicit LinearCode(Mat generator, nlohmann::json lineage = nullptr);

  int n() const { return generator_.cols(); }
  int k() const { return generator_.rows(); }
  const Field& field() const { return generator_.field(); }
  const FieldPtr& field_ptr() const { return generator_.field_ptr(); }
  const Mat& generator() const { return generator_; }
  bool is_zero_code() const { return k() == 0; }

  const DistanceRecord& distance() const { return distance_; }
  void set_distance(DistanceRecord d) { distance_ = d; }

  /// Construction history; enough to rebuild the code (see lineage.hpp).
  const nlohmann::json& lineage() const { return lineage_; }
  void set_lineage(nlohmann::json l) { lineage_ = std::move(l); }

 private:
  Mat generator_;
  DistanceRecord distance_;
  nlohmann::json lineage_;
};

LinearCode full_space(const FieldPtr& f, int n);
LinearCode zero_code(const FieldPtr& f, int n);
LinearCode repetition_code(const FieldPtr& f, int n);
/// [n, n-1, 2] single parity check code.
LinearCode parity_code(const FieldPtr& f, int n);

/// Same row space (as subspaces of GF(q)^n).
bool same_code(const LinearCode& a, const LinearCode& b);
bool contains(const LinearCode& big, const LinearCode& small);

LinearCode intersection(const LinearCode& a, const LinearCode& b);

/// (c_0..c_{n-1}) -> (a c_{n-1}, c_0, ..., c_{n-2})
std::vector<Elem> constacyclic_shift(const Field& f, const std::vector<Elem>& v, Elem a);
bool is_constacyclic(const LinearCode& c, Elem a);

LinearCode euclidean_dual(const LinearCode& c);
/// Dual under <x,y> = sum x_i y_i^s, q = s^2.
LinearCode hermitian_dual(const LinearCode& c);

int hamming_weight(const std::vector<Elem>& v);

}  // namespace consta
