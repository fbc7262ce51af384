#include "consta/search.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "consta/equivalence.hpp"
#include "consta/lineage.hpp"

namespace consta {

// ---------------------------------------------------------------- job

SearchJob SearchJob::from_json(const nlohmann::json& j) {
  try {
    SearchJob job;
    job.q = j.at("q").get<int>();
    if (j.contains("n")) {
      const auto& n = j["n"];
      if (n.is_array()) {
        if (n.size() != 2) fail(ErrorKind::Parse, "job: n must be a number or [min, max]");
        job.n_min = n[0].get<int>();
        job.n_max = n[1].get<int>();
      } else {
        job.n_min = job.n_max = n.get<int>();
      }
    } else {
      job.n_min = j.at("n_min").get<int>();
      job.n_max = j.at("n_max").get<int>();
    }
    if (j.contains("constants") && j["constants"].is_array())
      job.constants = j["constants"].get<std::vector<int>>();
    job.max_cosets = j.value("max_cosets", job.max_cosets);
    job.k_min = j.value("k_min", job.k_min);
    job.k_max = j.value("k_max", job.k_max);
    job.early_exit = j.value("early_exit", job.early_exit);
    job.construction_x = j.value("construction_x", job.construction_x);
    job.construction_xx = j.value("construction_xx", job.construction_xx);
    job.max_quotient = j.value("max_quotient", job.max_quotient);
    if (j.contains("aux")) job.aux = j["aux"].get<std::vector<std::string>>();
    job.max_aux_length = j.value("max_aux_length", job.max_aux_length);
    job.shorten_depth = j.value("shorten_depth", job.shorten_depth);
    job.quantum = j.value("quantum", job.quantum);
    job.dry_run = j.value("dry_run", job.dry_run);
    job.threads = j.value("threads", job.threads);
    job.budget = j.value("budget", job.budget);

    const auto [p, m] = prime_power(job.q);
    if (p == 0) fail(ErrorKind::Precondition, "job: q is not a prime power");
    if (job.n_min < 1 || job.n_max < job.n_min) fail(ErrorKind::Precondition, "job: empty length range");
    if (job.max_cosets < 0) fail(ErrorKind::Precondition, "job: max_cosets must be >= 0");
    if (job.budget == 0) fail(ErrorKind::Precondition, "job: budget must be positive");
    for (const auto& a : job.aux)
      if (a != "full" && a != "parity" && a != "repetition")
        fail(ErrorKind::Precondition, "job: unknown aux code '" + a + "'");
    return job;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("job: ") + e.what());
  }
}

nlohmann::json SearchJob::to_json() const {
  nlohmann::json j = {{"q", q},
                      {"n", {n_min, n_max}},
                      {"max_cosets", max_cosets},
                      {"k_min", k_min},
                      {"k_max", k_max},
                      {"early_exit", early_exit},
                      {"construction_x", construction_x},
                      {"construction_xx", construction_xx},
                      {"max_quotient", max_quotient},
                      {"aux", aux},
                      {"max_aux_length", max_aux_length},
                      {"shorten_depth", shorten_depth},
                      {"quantum", quantum},
                      {"dry_run", dry_run},
                      {"threads", threads},
                      {"budget", budget}};
  j["constants"] = constants.empty() ? nlohmann::json("representatives") : nlohmann::json(constants);
  return j;
}

SearchJob load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open job file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
  return SearchJob::from_json(j);
}

// ---------------------------------------------------------------- table

std::optional<int> BKLCTable::lookup(int q, int n, int k) const {
  const auto it = entries.find({q, n, k});
  if (it == entries.end()) return std::nullopt;
  return it->second;
}

void BKLCTable::insert(int q, int n, int k, int d) {
  auto [it, fresh] = entries.try_emplace({q, n, k}, d);
  if (!fresh) it->second = std::max(it->second, d);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

BKLCTable parse_bklc(std::istream& in, const std::string& name) {
  BKLCTable t;
  std::string line;
  int lineno = 0;
  bool header = false;
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::Parse, name + ":" + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split(line, ',');
    if (!header) {
      if (cells != std::vector<std::string>{"q", "n", "k", "d"}) bad("expected header q,n,k,d");
      header = true;
      continue;
    }
    if (cells.size() != 4) bad("expected 4 columns, got " + std::to_string(cells.size()));
    int v[4];
    for (int i = 0; i < 4; ++i) {
      const auto& c = cells[i];
      const auto r = std::from_chars(c.data(), c.data() + c.size(), v[i]);
      if (c.empty() || r.ec != std::errc() || r.ptr != c.data() + c.size()) bad("not an integer: '" + c + "'");
    }
    const int q = v[0], n = v[1], k = v[2], d = v[3];
    if (prime_power(q).first == 0) bad("q is not a prime power");
    if (n < 1 || k < 0 || k > n) bad("need n >= 1 and 0 <= k <= n");
    if (d < 1) bad("d must be >= 1");
    t.insert(q, n, k, d);
  }
  return t;
}

BKLCTable load_bklc(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open table " + path);
  return parse_bklc(in, path);
}

// ---------------------------------------------------------------- enumeration

std::vector<Elem> representative_constants(const FieldPtr& f, int n) {
  const EquivGraph g = classify(f, n);
  std::vector<Elem> out;
  for (const auto& cls : g.classes)
    out.push_back(*std::min_element(cls.begin(), cls.end(),
                                    [&](Elem x, Elem y) { return f->log(x) < f->log(y); }));
  std::sort(out.begin(), out.end(), [&](Elem x, Elem y) { return f->log(x) < f->log(y); });
  return out;
}

std::vector<CodeSpec> enumerate_family(const FamilyPtr& fam, int max_cosets, int k_min, int k_max) {
  const int c = static_cast<int>(fam->cosets().size());
  const int n = fam->n();
  if (k_max < 0) k_max = n - 1;
  std::vector<CodeSpec> out;
  std::vector<int> idx;
  // subsets of size s in lexicographic order
  for (int s = 0; s <= std::min(max_cosets, c); ++s) {
    idx.resize(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      int size = 0;
      for (int i : idx) size += fam->cosets()[i].size();
      const int k = n - size;
      if (k >= k_min && k <= k_max) out.push_back(spec_from_coset_indices(fam, idx));
      int pos = s - 1;
      while (pos >= 0 && idx[pos] == c - s + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return out;
}

namespace {

std::vector<Elem> job_constants(const SearchJob& job, const FieldPtr& f, int n) {
  if (job.constants.empty()) return representative_constants(f, n);
  std::vector<Elem> out;
  for (int e : job.constants) {
    const Elem a = f->exp(e);
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  return out;
}

}  // namespace

std::vector<CodeSpec> enumerate_specs(const SearchJob& job) {
  const FieldPtr f = make_field_q(job.q);
  std::vector<CodeSpec> out;
  for (int n = job.n_min; n <= job.n_max; ++n) {
    if (std::gcd(n, job.q) != 1) continue;
    for (Elem a : job_constants(job, f, n)) {
      auto part = enumerate_family(make_family(f, n, a), job.max_cosets, job.k_min, job.k_max);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

// ---------------------------------------------------------------- records

bool SearchRecord::has_flag(const std::string& f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

namespace {

const nlohmann::json* innermost(const nlohmann::json& lineage) {
  const nlohmann::json* j = &lineage;
  while (j->is_object() && j->contains("kind")) {
    const auto kind = (*j)["kind"].get<std::string>();
    if (kind == "constacyclic") return j;
    if (kind == "X") j = &(*j)["c1"];
    else if (kind == "XX") j = &(*j)["c"];
    else if (j->contains("of") && (*j)["of"].is_object()) j = &(*j)["of"];
    else break;
  }
  return nullptr;
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

nlohmann::json SearchRecord::to_json() const {
  nlohmann::json j = {{"lineage", lineage}, {"n", n}, {"k", k}, {"d", d},
                      {"d_status", to_string(status)}, {"q", q}};
  const auto* base = innermost(lineage);
  j["a"] = base ? (*base)["a"] : nlohmann::json();
  j["defining_set"] = base ? (*base)["defining_set"] : nlohmann::json();
  j["constructions"] = construction_chain(lineage);
  j["timestamps"] = {{"found", found_at}};
  j["cost"] = {{"wall_s", wall_seconds}, {"codewords", codewords}};
  j["flags"] = flags;
  j["table_d"] = table_d ? nlohmann::json(*table_d) : nlohmann::json();
  return j;
}

SearchRecord SearchRecord::from_json(const nlohmann::json& j) {
  try {
    SearchRecord r;
    r.lineage = j.at("lineage");
    r.q = j.at("q").get<int>();
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    r.d = j.at("d").get<int>();
    r.status = parse_distance_status(j.at("d_status").get<std::string>());
    if (j.contains("table_d") && !j["table_d"].is_null()) r.table_d = j["table_d"].get<int>();
    if (j.contains("flags")) r.flags = j["flags"].get<std::vector<std::string>>();
    if (j.contains("timestamps")) r.found_at = j["timestamps"].value("found", "");
    if (j.contains("cost")) {
      r.wall_seconds = j["cost"].value("wall_s", 0.0);
      r.codewords = j["cost"].value("codewords", std::uint64_t{0});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("store record: ") + e.what());
  }
}

namespace {

void append_line(const std::string& path, const nlohmann::json& j, bool with_header) {
  const bool fresh = with_header && !std::ifstream(path).good();
  std::ofstream out(path, std::ios::app);
  if (!out) fail(ErrorKind::Io, "cannot open store " + path + " for appending");
  if (fresh)
    out << nlohmann::json{{"store", "consta-search"},
                          {"version", 1},
                          {"table_policy", "duplicate (q,n,k) rows keep the largest d"}}
               .dump()
        << '\n';
  out << j.dump() << '\n';
  out.flush();
  if (!out) fail(ErrorKind::Io, "write to " + path + " failed; rerun with resume to continue");
}

}  // namespace

void persist(const SearchRecord& r, const std::string& store) { append_line(store, r.to_json(), true); }

std::vector<SearchRecord> load_store(const std::string& store) {
  std::ifstream in(store);
  if (!in) fail(ErrorKind::Io, "cannot open store " + store);
  std::vector<SearchRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::Parse, store + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (j.contains("lineage")) out.push_back(SearchRecord::from_json(j));
  }
  return out;
}

ReplayResult replay(const SearchRecord& r, bool verify_distance, const DistanceOptions& opt) {
  ReplayResult out;
  const LinearCode c = rebuild(r.lineage);
  if (c.n() != r.n || c.k() != r.k || c.field().q() != r.q) {
    out.message = "parameters differ: rebuilt [" + std::to_string(c.n()) + "," + std::to_string(c.k()) +
                  "]_" + std::to_string(c.field().q());
    return out;
  }
  if (!verify_distance) {
    out.ok = true;
    out.message = "parameters replay";
    return out;
  }
  DistanceOptions o = opt;
  if (r.status == DistanceStatus::Exact) {
    o.target.reset();
    const auto res = minimum_distance(c, o);
    out.ok = res.status == DistanceStatus::Exact && res.value == r.d;
  } else if (r.status == DistanceStatus::Lower) {
    o.target = r.d;
    const auto res = bz_distance(c, o);
    out.ok = res.status != DistanceStatus::Upper && res.lower >= r.d;
  } else {
    out.ok = true;
  }
  out.message = out.ok ? "distance replays" : "distance claim does not replay";
  return out;
}

std::vector<int> conjugate_image(const CodeSpec& spec) {
  const auto& fam = *spec.family;
  const Field& f = fam.field();
  if (!f.is_square_order()) fail(ErrorKind::Precondition, "conjugate image needs a square field order");
  int s = 1;
  for (int i = 0; i < f.m() / 2; ++i) s *= f.p();
  const int mod_ = fam.omega_set().modulus;
  std::vector<int> out;
  for (int x : spec.defining_set) out.push_back(static_cast<int>(mod(-static_cast<std::int64_t>(s) * x, mod_)));
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json QuantumCandidate::to_json() const {
  return {{"spec", spec}, {"defining_set", defining_set}, {"conjugate_image", conjugate_image},
          {"quantum", params.to_json()}};
}

std::size_t SearchSummary::count_flag(const std::string& flag) const {
  return static_cast<std::size_t>(
      std::count_if(found.begin(), found.end(), [&](const SearchRecord& r) { return r.has_flag(flag); }));
}

nlohmann::json SearchSummary::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : found) recs.push_back(r.to_json());
  nlohmann::json qs = nlohmann::json::array();
  for (const auto& c : quantum) qs.push_back(c.to_json());
  return {{"visited", visited},
          {"skipped_equivalent", skipped_equivalent},
          {"pruned", pruned},
          {"x_candidates", x_candidates},
          {"xx_candidates", xx_candidates},
          {"records", count_flag("record")},
          {"meets", count_flag("meets")},
          {"no_table_entry", count_flag("no_table_entry")},
          {"found", recs},
          {"quantum", qs}};
}

// ---------------------------------------------------------------- run

namespace {

using Clock = std::chrono::steady_clock;

DistanceResult result_from_json(const nlohmann::json& j) {
  DistanceResult r;
  r.value = j.at("value").get<int>();
  r.status = parse_distance_status(j.at("status").get<std::string>());
  r.lower = j.at("lower").get<int>();
  r.upper = j.at("upper").get<int>();
  r.codewords = j.value("codewords", std::uint64_t{0});
  r.info_sets = j.value("info_sets", 0);
  for (int v : j.value("witness", std::vector<int>{})) r.witness.push_back(Elem{static_cast<std::uint16_t>(v)});
  return r;
}

// Settles d against the table value t: first whether d > t, then whether d = t.
DistanceResult decide(const LinearCode& c, std::optional<int> t, bool early, DistanceOptions o) {
  if (!t || !early) {
    o.target.reset();
    return minimum_distance(c, o);
  }
  o.target = *t + 1;
  const auto first = bz_distance(c, o);
  if (first.status != DistanceStatus::Upper || first.upper < *t) return first;
  o.target = *t;
  auto second = bz_distance(c, o);
  second.codewords += first.codewords;
  if (second.status == DistanceStatus::Lower) {
    second.status = DistanceStatus::Exact;
    second.value = second.lower = second.upper = *t;
    second.witness = first.witness;
  }
  return second;
}

std::vector<std::string> flags_for(int lower, bool exact, int value, std::optional<int> t) {
  if (!t) {
    if (exact) return {"no_table_entry"};
    return {};
  }
  if (lower >= *t + 1) return {"record"};
  if (exact && value == *t) return {"meets"};
  return {};
}

struct SpecInfo {
  CodeSpec spec;
  std::string text;
  LinearCode code;
  Poly<Field> g;
  std::optional<int> table;
  DistanceResult res;
};

struct AuxCode {
  std::string label;
  LinearCode code;
};

std::vector<AuxCode> aux_codes(const SearchJob& job, const FieldPtr& f, int dim) {
  std::vector<AuxCode> out;
  for (const auto& name : job.aux) {
    if (name == "full" && dim <= job.max_aux_length) out.push_back({"full" + std::to_string(dim), full_space(f, dim)});
    if (name == "parity" && dim + 1 <= job.max_aux_length)
      out.push_back({"parity" + std::to_string(dim + 1), parity_code(f, dim + 1)});
    if (name == "repetition" && dim == 1)
      for (int len = 2; len <= job.max_aux_length; ++len)
        out.push_back({"repetition" + std::to_string(len), repetition_code(f, len)});
  }
  return out;
}

class Runner {
 public:
  Runner(const SearchJob& job, const BKLCTable& table, const SearchOptions& opt)
      : job_(job), table_(table), opt_(opt) {
    dopt_.threads = job.threads;
    dopt_.budget = job.budget;
    if (!opt.store.empty()) ckpt_path_ = opt.store + ".ckpt";
    if (opt.resume && !opt.store.empty()) load_checkpoint();
  }

  SearchSummary run() {
    const FieldPtr f = make_field_q(job_.q);
    for (int n = job_.n_min; n <= job_.n_max; ++n) {
      if (std::gcd(n, job_.q) != 1) continue;
      const auto consts = job_constants(job_, f, n);
      if (job_.constants.empty()) count_skipped(f, n, consts);
      std::vector<SpecInfo> infos;
      for (Elem a : consts)
        for (auto& spec : enumerate_family(make_family(f, n, a), job_.max_cosets, job_.k_min, job_.k_max))
          infos.push_back(evaluate(std::move(spec)));
      if (job_.dry_run) continue;
      if (job_.construction_x) run_x(infos);
      if (job_.construction_xx) run_xx(infos);
    }
    return std::move(summary_);
  }

 private:
  void say(const std::string& s) {
    if (opt_.log) *opt_.log << s << '\n';
  }

  void count_skipped(const FieldPtr& f, int n, const std::vector<Elem>& reps) {
    for (Elem a : f->nonzero_elements()) {
      if (std::find(reps.begin(), reps.end(), a) != reps.end()) continue;
      summary_.skipped_equivalent +=
          enumerate_family(make_family(f, n, a), job_.max_cosets, job_.k_min, job_.k_max).size();
    }
  }

  void load_checkpoint() {
    std::ifstream in(ckpt_path_);
    std::string line;
    while (std::getline(in, line)) {
      if (trim(line).empty()) continue;
      const auto j = nlohmann::json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("unit")) continue;
      const auto unit = j["unit"].get<std::string>();
      done_.insert(unit);
      if (j.contains("result")) cached_[unit] = result_from_json(j["result"]);
    }
    if (std::ifstream(opt_.store).good())
      for (auto& r : load_store(opt_.store)) summary_.found.push_back(std::move(r));
  }

  void checkpoint(const std::string& unit, const DistanceResult* res = nullptr) {
    if (ckpt_path_.empty()) return;
    nlohmann::json j = {{"unit", unit}};
    if (res) j["result"] = res->to_json();
    append_line(ckpt_path_, j, false);
  }

  void emit(const LinearCode& c, DistanceResult res, std::optional<int> t, double wall) {
    const bool exact = res.status == DistanceStatus::Exact;
    const int lower = (exact || res.status == DistanceStatus::Lower) ? res.value : 0;
    auto flags = flags_for(lower, exact, res.value, t);
    if (flags.empty()) return;
    SearchRecord r;
    r.lineage = c.lineage();
    r.q = c.field().q();
    r.n = c.n();
    r.k = c.k();
    r.d = res.value;
    r.status = res.status;
    r.table_d = t;
    r.flags = std::move(flags);
    r.found_at = utc_now();
    r.wall_seconds = wall;
    r.codewords = res.codewords;
    if (!opt_.store.empty()) persist(r, opt_.store);
    say("found [" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.d) + "]_" +
        std::to_string(r.q) + " " + to_string(r.status) + " " + r.flags.front());
    summary_.found.push_back(r);
    if (r.has_flag("record")) shorten_chain(c, res.value);
  }

  SpecInfo evaluate(CodeSpec spec) {
    SpecInfo info{spec, to_text(spec), build_code(spec), generator_poly(spec), std::nullopt, {}};
    info.table = table_.lookup(job_.q, info.code.n(), info.code.k());
    ++summary_.visited;
    summary_.visited_specs.push_back(info.text);
    if (job_.dry_run) return info;
    const std::string unit = "spec:" + info.text;
    if (auto it = cached_.find(unit); it != cached_.end()) {
      info.res = it->second;
    } else {
      const auto t0 = Clock::now();
      info.res = decide(info.code, info.table, job_.early_exit, dopt_);
      const double wall = std::chrono::duration<double>(Clock::now() - t0).count();
      if (info.res.status == DistanceStatus::Upper) ++summary_.pruned;
      emit(info.code, info.res, info.table, wall);
      checkpoint(unit, &info.res);
    }
    info.code.set_distance(info.res.record());
    if (job_.quantum && info.code.field().is_square_order()) quantum_check(info);
    return info;
  }

  void ensure_exact(SpecInfo& info) {
    if (info.res.status == DistanceStatus::Exact) return;
    DistanceOptions o = dopt_;
    o.target.reset();
    info.res = minimum_distance(info.code, o);
    info.code.set_distance(info.res.record());
  }

  void quantum_check(SpecInfo& info) {
    if (info.code.field().q() != 4 || !hermitian_dual_containing(info.code)) return;
    ensure_exact(info);
    QuantumCandidate qc;
    qc.spec = info.text;
    qc.defining_set = info.spec.defining_set;
    qc.conjugate_image = conjugate_image(info.spec);
    qc.params = quantum_params(info.code);
    summary_.quantum.push_back(std::move(qc));
  }

  // D(c1) strictly inside D(c2), i.e. C2 strictly inside C1
  static bool nested(const SpecInfo& big, const SpecInfo& small) {
    if (big.spec.family != small.spec.family || big.code.k() <= small.code.k()) return false;
    const bool inside = poly_divides(big.g, small.g);
#ifndef NDEBUG
    if (inside != contains(big.code, small.code)) fail(ErrorKind::Internal, "divisibility and rank disagree");
#endif
    return inside;
  }

  void run_x(std::vector<SpecInfo>& infos) {
    const FieldPtr f = make_field_q(job_.q);
    for (std::size_t i = 0; i < infos.size(); ++i) {
      for (std::size_t j = 0; j < infos.size(); ++j) {
        if (!nested(infos[i], infos[j])) continue;
        const int r = infos[i].code.k() - infos[j].code.k();
        if (r > job_.max_quotient) continue;
        for (const auto& aux : aux_codes(job_, f, r)) x_candidate(infos[i], infos[j], aux);
      }
    }
  }

  void x_candidate(SpecInfo& c1, SpecInfo& c2, const AuxCode& aux) {
    const std::string unit = "x:" + c1.text + "|" + c2.text + "|" + aux.label;
    if (done_.count(unit)) return;
    ++summary_.x_candidates;
    const int n3 = aux.code.n();
    const auto t = table_.lookup(job_.q, c1.code.n() + n3, c1.code.k());
    // C2 padded with zeros, and any C1 word with n3 more coordinates, lie in E
    const int ub = std::min(c2.res.upper, c1.res.upper + n3);
    if (t && ub < *t) {
      ++summary_.pruned;
      checkpoint(unit);
      return;
    }
    const auto t0 = Clock::now();
    ensure_exact(c1);
    ensure_exact(c2);
    LinearCode e;
    DistanceResult res;
    const std::uint64_t dirs = (code_size(job_.q, c1.code.k() - c2.code.k()) - 1) / (job_.q - 1);
    if (dirs <= 4096) {
      // with exact d2 and exact coset weights the certificate is d(E) itself
      const auto pairing = tuned_x_pairing(c1.code, c2.code, aux.code);
      e = construction_x(c1.code, c2.code, aux.code, pairing.leaders);
      res.value = res.lower = res.upper = pairing.certified;
      res.status = DistanceStatus::Exact;
    } else {
      e = construction_x(c1.code, c2.code, aux.code);
      res = decide(e, t, job_.early_exit, dopt_);
    }
    e.set_distance(res.record());
    emit(e, res, t, std::chrono::duration<double>(Clock::now() - t0).count());
    checkpoint(unit);
  }

  void run_xx(std::vector<SpecInfo>& infos) {
    const FieldPtr f = make_field_q(job_.q);
    for (std::size_t c = 0; c < infos.size(); ++c) {
      std::vector<std::size_t> subs;
      for (std::size_t j = 0; j < infos.size(); ++j)
        if (nested(infos[c], infos[j]) && infos[c].code.k() - infos[j].code.k() <= job_.max_quotient)
          subs.push_back(j);
      for (std::size_t a = 0; a < subs.size(); ++a)
        for (std::size_t b = a + 1; b < subs.size(); ++b) xx_candidate(f, infos[c], infos[subs[a]], infos[subs[b]]);
    }
  }

  void xx_candidate(const FieldPtr& f, SpecInfo& c, SpecInfo& s1, SpecInfo& s2) {
    const std::string unit = "xx:" + c.text + "|" + s1.text + "|" + s2.text;
    if (done_.count(unit)) return;
    const int k1 = c.code.k() - s2.code.k(), k2 = c.code.k() - s1.code.k();
    if (k1 + k2 > job_.max_aux_length * 2) return;
    ++summary_.xx_candidates;
    const int len = c.code.n() + k1 + k2;
    const auto t = table_.lookup(job_.q, len, c.code.k());
    const auto t0 = Clock::now();
    ensure_exact(c);
    ensure_exact(s1);
    ensure_exact(s2);
    LinearCode e = construction_xx(c.code, s1.code, s2.code, full_space(f, k1), full_space(f, k2));
    // null when the two subcodes meet only in zero
    const auto& dj = e.lineage()["delta0"];
    const int delta0 = dj.is_number() ? dj.get<int>() : kInfiniteDistance;
    // intersection words padded with zeros lie in E
    if (t && delta0 < *t) {
      ++summary_.pruned;
      checkpoint(unit);
      return;
    }
    DistanceResult res;
    const int predicted = e.distance().lower();
    if (t && predicted >= *t + 1) {
      res.value = res.lower = predicted;
      res.upper = std::min(delta0, e.n() + 1);
      res.status = predicted >= delta0 ? DistanceStatus::Exact : DistanceStatus::Lower;
    } else {
      res = decide(e, t, job_.early_exit, dopt_);
    }
    e.set_distance(res.record());
    emit(e, res, t, std::chrono::duration<double>(Clock::now() - t0).count());
    checkpoint(unit);
  }

  void shorten_chain(const LinearCode& c, int d) {
    for (int i = 1; i <= job_.shorten_depth && i < c.k(); ++i) {
      std::vector<int> pos(i);
      std::iota(pos.begin(), pos.end(), 0);
      LinearCode s = shorten(c, pos);
      const auto t = table_.lookup(job_.q, s.n(), s.k());
      if (!t || d < *t + 1) continue;
      DistanceResult res;
      res.value = res.lower = d;
      res.upper = s.n() + 1;
      res.status = DistanceStatus::Lower;
      s.set_distance(res.record());
      // emit() would recurse into another chain; records stay one level deep
      SearchRecord r;
      r.lineage = s.lineage();
      r.q = s.field().q();
      r.n = s.n();
      r.k = s.k();
      r.d = d;
      r.status = DistanceStatus::Lower;
      r.table_d = t;
      r.flags = {"record"};
      r.found_at = utc_now();
      if (!opt_.store.empty()) persist(r, opt_.store);
      say("found [" + std::to_string(r.n) + "," + std::to_string(r.k) + ",>=" + std::to_string(d) + "]_" +
          std::to_string(r.q) + " by shortening");
      summary_.found.push_back(std::move(r));
    }
  }

  const SearchJob& job_;
  const BKLCTable& table_;
  SearchOptions opt_;
  DistanceOptions dopt_;
  std::string ckpt_path_;
  std::set<std::string> done_;
  std::map<std::string, DistanceResult> cached_;
  SearchSummary summary_;
};

}  // namespace

SearchSummary run_search(const SearchJob& job, const BKLCTable& table, const SearchOptions& opt) {
  return Runner(job, table, opt).run();
}

}  // namespace consta
