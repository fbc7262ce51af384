#pragma once

// Record hunting over constacyclic families: enumerate defining sets over
// one representative shift constant per equivalence class, compare each
// code (and Construction X / XX / shortening descendants) against a table of
// best-known distances, and append every code that meets or beats the table
// to a JSONL store.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "consta/constacode.hpp"
#include "consta/constructions.hpp"
#include "consta/distance.hpp"

namespace consta {

struct SearchJob {
  int q = 0;
  int n_min = 0, n_max = 0;
  std::vector<int> constants;  // exponents of xi; empty = representative_constants
  int max_cosets = 3;
  int k_min = 1;
  int k_max = -1;  // -1: n - 1
  bool early_exit = true;
  bool construction_x = true;
  bool construction_xx = false;
  int max_quotient = 3;  // largest dim C1/C2 (and XX deficit) tried
  std::vector<std::string> aux = {"full"};  // auxiliary codes: full, parity, repetition
  int max_aux_length = 3;
  int shorten_depth = 0;  // shorten every record at 1..depth leading positions
  bool quantum = false;   // report Hermitian dual-containing specs (square q)
  bool dry_run = false;   // enumerate only
  int threads = 0;
  std::uint64_t budget = kDefaultBudget;

  static SearchJob from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

SearchJob load_job(const std::string& path);

/// Best-known distances keyed by (q, n, k).  Duplicate rows keep the largest d.
struct BKLCTable {
  std::map<std::tuple<int, int, int>, int> entries;

  std::optional<int> lookup(int q, int n, int k) const;
  void insert(int q, int n, int k, int d);
};

/// CSV with header "q,n,k,d"; malformed rows raise Parse errors naming the line.
BKLCTable parse_bklc(std::istream& in, const std::string& name = "<table>");
BKLCTable load_bklc(const std::string& path);

/// One constant per class of classify(q, n): the one with the smallest log.
std::vector<Elem> representative_constants(const FieldPtr& f, int n);

/// Unions of at most max_cosets cosets with dimension in [k_min, k_max],
/// ordered by number of cosets and then lexicographically by coset index.
std::vector<CodeSpec> enumerate_family(const FamilyPtr& fam, int max_cosets, int k_min, int k_max);
/// Every length of the job, every constant it selects.
std::vector<CodeSpec> enumerate_specs(const SearchJob& job);

struct SearchRecord {
  nlohmann::json lineage;
  int q = 0, n = 0, k = 0, d = 0;
  DistanceStatus status = DistanceStatus::Unknown;
  std::optional<int> table_d;
  std::vector<std::string> flags;  // record | meets | no_table_entry
  std::string found_at;            // UTC, ISO 8601
  double wall_seconds = 0;
  std::uint64_t codewords = 0;

  bool has_flag(const std::string& f) const;
  nlohmann::json to_json() const;
  static SearchRecord from_json(const nlohmann::json& j);
};

/// Append-only JSONL store.  The first line of a new store is a header
/// object; records are the lines carrying a "lineage" field.
void persist(const SearchRecord& r, const std::string& store);
std::vector<SearchRecord> load_store(const std::string& store);

struct ReplayResult {
  bool ok = false;
  std::string message;
};

/// Rebuilds the code from its lineage and checks n, k and (if
/// verify_distance) the stored distance claim.
ReplayResult replay(const SearchRecord& r, bool verify_distance, const DistanceOptions& opt = {});

struct QuantumCandidate {
  std::string spec;
  std::vector<int> defining_set;
  std::vector<int> conjugate_image;  // -s D mod tn, disjoint from D
  QuantumParams params;

  nlohmann::json to_json() const;
};

/// -s D mod tn for q = s^2.
std::vector<int> conjugate_image(const CodeSpec& spec);

struct SearchSummary {
  std::uint64_t visited = 0;             // specs evaluated
  std::uint64_t skipped_equivalent = 0;  // specs of non-representative constants
  std::uint64_t pruned = 0;              // ruled out by an upper bound
  std::uint64_t x_candidates = 0, xx_candidates = 0;
  std::vector<SearchRecord> found;       // everything persisted, in order
  std::vector<QuantumCandidate> quantum;
  std::vector<std::string> visited_specs;

  std::size_t count_flag(const std::string& flag) const;
  nlohmann::json to_json() const;
};

struct SearchOptions {
  std::string store;       // empty: keep results in memory only
  bool resume = false;     // skip the units listed in <store>.ckpt
  std::ostream* log = nullptr;
};

SearchSummary run_search(const SearchJob& job, const BKLCTable& table, const SearchOptions& opt = {});

}  // namespace consta
