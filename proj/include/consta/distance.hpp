#pragma once

// Minimum distance and weight distribution.
//
// brute_distance walks the whole code in a p-ary Gray order over the
// GF(p)-basis {xi^e g_j}, so every step is a single vector addition.
// bz_distance is the Brouwer-Zimmermann information-set method: several
// systematic generator matrices, each enumerated by message weight, with
// the lower bound sum_j max(0, w_j + 1 - (k - r_j)) where r_j is the number
// of pivot columns of matrix j not used by earlier matrices.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "consta/code.hpp"
#include "consta/extension.hpp"

namespace consta {

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

struct DistanceOptions {
  int threads = 0;                      // 0 = hardware concurrency
  std::uint64_t budget = kDefaultBudget;  // brute force: max number of codewords
  std::optional<int> target;            // bz: stop once d >= target or d < target is decided
  std::string progress_log;             // bz: JSONL checkpoint file (appended), empty = none
  bool resume = false;                  // bz: continue from the last line of progress_log
};

struct DistanceResult {
  int value = 0;
  DistanceStatus status = DistanceStatus::Unknown;
  int lower = 0;
  int upper = 0;
  std::uint64_t codewords = 0;  // vectors visited
  int info_sets = 0;
  std::vector<Elem> witness;    // a codeword of weight `upper` (empty for the zero code)

  DistanceRecord record() const { return {value, status}; }
  nlohmann::json to_json() const;
};

/// Exact distance by full enumeration; throws Budget if q^k > budget.
DistanceResult brute_distance(const LinearCode& c, const DistanceOptions& opt = {});

/// Exact distance (or a decided bound when opt.target is set).
DistanceResult bz_distance(const LinearCode& c, const DistanceOptions& opt = {});

/// Brute force when q^k fits the budget, otherwise Brouwer-Zimmermann.
DistanceResult minimum_distance(const LinearCode& c, const DistanceOptions& opt = {});

using WeightEnumerator = std::vector<std::uint64_t>;  // A_0..A_n

/// Enumerates the code or its dual, whichever is smaller; throws Budget.
WeightEnumerator weight_enumerator(const LinearCode& c, std::uint64_t budget = kDefaultBudget);
/// Enumerates the code itself; throws Budget.
WeightEnumerator direct_weight_enumerator(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

/// Weight enumerator of the dual of an [n,k]_q code with enumerator w.
WeightEnumerator macwilliams(const WeightEnumerator& w, int n, int k, int q);

/// Krawtchouk polynomial K_j(i) for length n over GF(q).
BigInt krawtchouk(int j, int i, int n, int q);

/// q^k if it fits in 64 bits, else UINT64_MAX.
std::uint64_t code_size(int q, int k);

}  // namespace consta
