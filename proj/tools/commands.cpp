#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "consta/constacode.hpp"
#include "consta/constructions.hpp"
#include "consta/distance.hpp"
#include "consta/equivalence.hpp"
#include "consta/lineage.hpp"
#include "consta/search.hpp"

namespace consta::cli {

namespace {

struct Common {
  int q = 0;
  int n = 0;
  std::string a = "1";
  std::string b;
  std::string defining;  // -D coset labels
  std::string spec;      // q:n:a:D
  std::string code;      // any code reference
  std::string format = "human";
  int threads = 0;
  std::uint64_t budget = kDefaultBudget;
  std::string engine = "auto";
  int target = 0;
};

FieldPtr field_of(const Common& c) {
  if (prime_power(c.q).first == 0) fail(ErrorKind::Precondition, "-q must be a prime power");
  return make_field_q(c.q);
}

FamilyPtr family_of(const Common& c) {
  const FieldPtr f = field_of(c);
  if (c.n < 1) fail(ErrorKind::Precondition, "-n must be positive");
  return make_family(f, c.n, f->parse(c.a));
}

std::vector<std::string> split_colon(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) out.push_back(item);
  if (!s.empty() && s.back() == ':') out.emplace_back();  // empty defining set
  return out;
}

// @file | full:k | parity:n | repetition:n | zero:n | q:n:a:D | coset labels under -q -n -a
LinearCode resolve(const std::string& ref, const Common& c) {
  if (ref.empty()) fail(ErrorKind::Precondition, "missing code reference");
  if (ref[0] == '@') return load_code_file(ref.substr(1));
  const auto parts = split_colon(ref);
  if (parts.size() == 2) {
    const FieldPtr f = field_of(c);
    int len = 0;
    try {
      len = std::stoi(parts[1]);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad length in '" + ref + "'");
    }
    if (parts[0] == "full") return full_space(f, len);
    if (parts[0] == "parity") return parity_code(f, len);
    if (parts[0] == "repetition") return repetition_code(f, len);
    if (parts[0] == "zero") return zero_code(f, len);
    fail(ErrorKind::Parse, "unknown aux code '" + parts[0] + "'");
  }
  if (parts.size() == 4) return build_code(parse_spec(ref));
  return build_code(spec_from_cosets(family_of(c), parse_coset_labels(ref)));
}

LinearCode main_code(const Common& c) {
  if (!c.code.empty()) return resolve(c.code, c);
  if (!c.spec.empty()) return build_code(parse_spec(c.spec));
  return build_code(spec_from_cosets(family_of(c), parse_coset_labels(c.defining)));
}

DistanceOptions distance_options(const Common& c) {
  if (c.budget == 0) fail(ErrorKind::Precondition, "--budget must be positive");
  DistanceOptions o;
  o.threads = c.threads;
  o.budget = c.budget;
  if (c.target > 0) o.target = c.target;
  return o;
}

DistanceResult compute_distance(const LinearCode& code, const Common& c, const DistanceOptions& o) {
  if (c.engine == "brute") return brute_distance(code, o);
  if (c.engine == "bz") return bz_distance(code, o);
  if (c.engine == "auto") return minimum_distance(code, o);
  fail(ErrorKind::Precondition, "--engine must be brute, bz or auto");
}

std::string label(const CycloCoset& c) { return "Z" + std::to_string(c.leader()); }

std::string params(int n, int k, const std::string& d, int q) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + d + "]_" + std::to_string(q);
}

std::string dtext(const DistanceRecord& r) {
  switch (r.status) {
    case DistanceStatus::Exact: return std::to_string(r.value);
    case DistanceStatus::Lower: return ">=" + std::to_string(r.value);
    case DistanceStatus::Upper: return "<=" + std::to_string(r.value);
    case DistanceStatus::Unknown: return "?";
  }
  return "?";
}

nlohmann::json code_record(const LinearCode& c) {
  SearchRecord r;
  r.lineage = c.lineage();
  r.q = c.field().q();
  r.n = c.n();
  r.k = c.k();
  r.d = c.distance().value;
  r.status = c.distance().status;
  return r.to_json();
}

// ---------------------------------------------------------------- commands

int cmd_cosets(const Common& c, std::ostream& out) {
  const auto fam = family_of(c);
  const Field& f = fam->field();
  const auto& om = fam->omega_set();
  if (c.format == "json") {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& z : fam->cosets()) cs.push_back({{"label", label(z)}, {"members", z.members}});
    out << nlohmann::json{{"q", f.q()},      {"n", om.n},
                          {"a", f.log(om.a)}, {"t", om.t},
                          {"modulus", om.modulus}, {"omega", om.residues},
                          {"cosets", cs},    {"count", count_codes(fam->field_ptr(), om.n, om.a).str()}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "Omega for a = " << f.to_string(om.a) << " (t = " << om.t << ", modulo " << om.modulus << "): "
      << om.residues.size() << " residues, " << fam->cosets().size() << " cosets\n";
  for (const auto& z : fam->cosets()) {
    out << "  " << label(z) << " = {";
    for (std::size_t i = 0; i < z.members.size(); ++i) out << (i ? "," : "") << z.members[i];
    out << "}  size " << z.size() << '\n';
  }
  out << "codes: " << count_codes(fam->field_ptr(), om.n, om.a).str() << '\n';
  return kOk;
}

int cmd_factor(const Common& c, std::ostream& out) {
  const auto fam = family_of(c);
  const Field& f = fam->field();
  Poly<Field> prod = Poly<Field>::constant(f, f.one());
  nlohmann::json factors = nlohmann::json::array();
  for (std::size_t i = 0; i < fam->cosets().size(); ++i) {
    const auto& g = fam->minimal_poly(static_cast<int>(i));
    prod = poly_mul(prod, g);
    std::vector<int> coeffs;
    for (auto e : g.coeffs) coeffs.push_back(e.v);
    factors.push_back({{"coset", label(fam->cosets()[i])},
                       {"degree", g.degree()},
                       {"poly", to_string(g)},
                       {"coeffs", coeffs}});
  }
  const auto binom = binomial(f, fam->n(), fam->a());
  const bool ok = prod == binom;
  if (!ok) fail(ErrorKind::Internal, "product of the factors differs from x^n - a");
  if (c.format == "json") {
    out << nlohmann::json{{"q", f.q()}, {"n", fam->n()}, {"a", f.log(fam->a())},
                          {"binomial", to_string(binom)}, {"factors", factors}, {"product_ok", ok}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << to_string(binom) << " =";
  for (const auto& fj : factors) out << " (" << fj["poly"].get<std::string>() << ")";
  out << '\n';
  for (const auto& fj : factors)
    out << "  " << fj["coset"].get<std::string>() << ": degree " << fj["degree"].get<int>() << "  "
        << fj["poly"].get<std::string>() << '\n';
  out << "product check: ok\n";
  return kOk;
}

int cmd_equiv(const Common& c, bool witness, bool verify, std::ostream& out) {
  const FieldPtr fp = field_of(c);
  const Field& f = *fp;
  if (c.b.empty()) fail(ErrorKind::Precondition, "equiv needs -b");
  const Elem a = f.parse(c.a), b = f.parse(c.b);
  const int n = c.n;
  const auto g = classify(fp, n);  // also validates gcd(n, q) = 1

  std::vector<std::string> fired;
  if (a == b || check_equal_order(f, a, b)) fired.push_back(to_string(Criterion::EqualOrder));
  if ((a.v == 1 && check_bierbrauer(f, n, b)) || (b.v == 1 && check_bierbrauer(f, n, a)))
    fired.push_back(to_string(Criterion::Bierbrauer));
  std::optional<EquivWitness> w;
  if (check_main_theorem(f, n, a, b)) {
    fired.push_back(to_string(Criterion::MainTheorem));
    w = build_witness(fp, n, a, b);
  } else if (check_main_theorem(f, n, b, a)) {
    fired.push_back(to_string(Criterion::MainTheorem) + " (b to a)");
    w = build_witness(fp, n, b, a);
  }
  if (auto cor = check_corollaries(f, n, a, b)) fired.push_back(to_string(*cor));
  const bool same_class = g.class_of(a) == g.class_of(b);
  const auto ca = count_codes(fp, n, a), cb = count_codes(fp, n, b);

  std::string verdict;
  int code = kOk;
  if (!fired.empty()) verdict = "equivalent";
  else if (same_class) verdict = "equivalent (through the class graph)";
  else if (ca != cb) {
    verdict = "inequivalent (code counts differ)";
    code = kInequivalent;
  } else {
    verdict = "undecided (no criterion applies)";
    code = kNoCriterion;
  }
  std::optional<SoundnessReport> rep;
  if (verify && w) rep = verify_witness(*w, 2, c.budget);

  if (c.format == "json") {
    nlohmann::json j = {{"q", f.q()},           {"n", n},
                        {"a", f.to_string(a)},  {"b", f.to_string(b)},
                        {"criteria", fired},    {"same_class", same_class},
                        {"counts", {ca.str(), cb.str()}}, {"verdict", verdict}};
    if (witness) j["witness"] = w ? w->to_json() : nlohmann::json();
    if (rep) j["verify"] = rep->to_json();
    out << j.dump(2) << '\n';
  } else {
    out << "a = " << f.to_string(a) << ", b = " << f.to_string(b) << ", n = " << n << '\n';
    out << "criteria:";
    if (fired.empty()) out << " none";
    for (const auto& s : fired) out << ' ' << s;
    out << "\ncode counts: " << ca.str() << " vs " << cb.str() << '\n';
    out << "verdict: " << verdict << '\n';
    if (witness) {
      if (w)
        out << "witness: " << f.to_string(w->a) << " -> " << f.to_string(w->b) << "  i1=" << w->i1
            << " i2=" << w->i2 << " s=" << w->s << " m=" << w->m << " gamma=" << w->gamma << " theta=" << w->theta
            << " beta=" << w->beta << " beta'=" << w->beta_prime << " i=" << w->i << " scalar=" << f.to_string(w->scalar)
            << '\n';
      else
        out << "witness: none (the exponent-divisibility criterion does not hold)\n";
    }
    if (rep)
      out << "verify: " << rep->codes << " codes, " << rep->failures << " failures (" << rep->by_enumerator
          << " by weight enumerator, " << rep->by_certificate << " by diagonal certificate)\n";
  }
  if (rep && rep->failures) return kInternal;
  return code;
}

int cmd_graph(const Common& c, std::ostream& out) {
  const FieldPtr f = field_of(c);
  const auto g = classify(f, c.n);
  if (c.format == "json") {
    out << to_json(g, *f).dump(2) << '\n';
  } else if (c.format == "human") {
    out << g.classes.size() << " class(es) for n = " << c.n << " over GF(" << c.q << ")\n";
    for (const auto& cls : g.classes) {
      out << "  {";
      for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? ", " : "") << f->to_string(cls[i]);
      out << "}\n";
    }
  } else {
    out << emit_dot(g, *f);
  }
  return kOk;
}

int cmd_mindist(const Common& c, const std::string& progress, bool resume, std::ostream& out) {
  LinearCode code = main_code(c);
  auto o = distance_options(c);
  o.progress_log = progress;
  o.resume = resume;
  const auto res = compute_distance(code, c, o);
  code.set_distance(res.record());
  if (c.format == "json") {
    auto j = code_record(code);
    j["distance"] = res.to_json();
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << params(code.n(), code.k(), dtext(code.distance()), code.field().q()) << '\n';
  out << "d = " << res.value << " (" << to_string(res.status) << "; lower " << res.lower << ", upper " << res.upper
      << ", " << res.codewords << " codewords, " << res.info_sets << " information sets)\n";
  return kOk;
}

void fill_distance(LinearCode& code, const Common& c) {
  if (code.distance().known()) return;
  DistanceOptions o = distance_options(c);
  o.target.reset();
  code.set_distance(compute_distance(code, c, o).record());
}

int report_construction(LinearCode& e, const Common& c, bool verify, std::ostream& out,
                        const nlohmann::json& extra = nullptr) {
  const DistanceRecord predicted = e.distance();
  std::optional<DistanceResult> res;
  if (verify) {
    DistanceOptions o = distance_options(c);
    res = compute_distance(e, c, o);
    if (res->status == DistanceStatus::Exact && predicted.known() && res->value < predicted.value)
      fail(ErrorKind::Internal, "verified distance is below the predicted bound");
    e.set_distance(res->record());
  }
  if (c.format == "json") {
    auto j = code_record(e);
    j["predicted"] = {{"d", predicted.value}, {"d_status", to_string(predicted.status)}};
    if (res) j["distance"] = res->to_json();
    if (!extra.is_null()) j["pairing"] = extra;
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "predicted " << params(e.n(), e.k(), dtext(predicted), e.field().q()) << '\n';
  if (res) out << "verified  " << params(e.n(), e.k(), dtext(e.distance()), e.field().q()) << '\n';
  return kOk;
}

int cmd_constructx(const Common& c, const std::string& r1, const std::string& r2, const std::string& r3, bool tuned,
                   bool verify, std::ostream& out) {
  LinearCode c1 = resolve(r1, c), c2 = resolve(r2, c), c3 = resolve(r3, c);
  fill_distance(c1, c);
  fill_distance(c2, c);
  fill_distance(c3, c);
  if (!tuned) {
    LinearCode e = construction_x(c1, c2, c3);
    return report_construction(e, c, verify, out);
  }
  const auto pairing = tuned_x_pairing(c1, c2, c3);
  LinearCode e = construction_x(c1, c2, c3, pairing.leaders);
  // exact coset weights make the certificate the distance itself
  if (c1.distance().status == DistanceStatus::Exact && c2.distance().status == DistanceStatus::Exact)
    e.set_distance({pairing.certified, DistanceStatus::Exact});
  return report_construction(e, c, verify, out,
                             {{"certified", pairing.certified}, {"direction_weights", pairing.direction_weights}});
}

int cmd_constructxx(const Common& c, const std::vector<std::string>& refs, bool verify, std::ostream& out) {
  std::vector<LinearCode> codes;
  for (const auto& r : refs) {
    codes.push_back(resolve(r, c));
    fill_distance(codes.back(), c);
  }
  LinearCode e = construction_xx(codes[0], codes[1], codes[2], codes[3], codes[4]);
  return report_construction(e, c, verify, out);
}

int cmd_quantum(const Common& c, const std::string& param_text, std::ostream& out) {
  QuantumParams qp;
  if (!param_text.empty()) {
    int n = 0, k = 0, d = 0;
    char s1 = 0, s2 = 0;
    std::istringstream is(param_text);
    if (!(is >> n >> s1 >> k >> s2 >> d) || s1 != ',' || s2 != ',')
      fail(ErrorKind::Parse, "--params must look like n,k,d");
    qp = quantum_params(n, k, d);
  } else {
    LinearCode code = main_code(c);
    if (!hermitian_dual_containing(code))
      fail(ErrorKind::Containment, "the code does not contain its Hermitian dual");
    fill_distance(code, c);
    qp = quantum_params(code);
  }
  if (c.format == "json") {
    out << qp.to_json().dump(2) << '\n';
    return kOk;
  }
  out << "[[" << qp.n << "," << qp.k << "," << (qp.status == DistanceStatus::Exact ? "" : ">=") << qp.d << "]]_2";
  if (qp.self_dual) out << "  (Hermitian self-dual source)";
  out << '\n';
  return kOk;
}

int cmd_search(const Common& c, const std::string& job_path, const std::string& table_path,
               const std::string& store, bool resume, bool no_early_exit, std::ostream& out, std::ostream& err) {
  SearchJob job = load_job(job_path);
  if (c.threads) job.threads = c.threads;
  if (no_early_exit) job.early_exit = false;
  const BKLCTable table = table_path.empty() ? BKLCTable{} : load_bklc(table_path);
  SearchOptions opt;
  opt.store = store;
  opt.resume = resume;
  opt.log = &err;
  const auto summary = run_search(job, table, opt);
  if (c.format == "json") {
    out << summary.to_json().dump(2) << '\n';
    return kOk;
  }
  out << "visited " << summary.visited << ", skipped as equivalent " << summary.skipped_equivalent << ", pruned "
      << summary.pruned << ", X candidates " << summary.x_candidates << ", XX candidates " << summary.xx_candidates
      << '\n';
  for (const auto& r : summary.found) {
    out << "  " << params(r.n, r.k, dtext({r.d, r.status}), r.q);
    for (const auto& fl : r.flags) out << ' ' << fl;
    if (r.table_d) out << " (table " << *r.table_d << ")";
    out << "  via";
    for (const auto& k : construction_chain(r.lineage)) out << ' ' << k;
    out << '\n';
  }
  for (const auto& qc : summary.quantum)
    out << "  quantum " << qc.spec << " -> [[" << qc.params.n << "," << qc.params.k << "," << qc.params.d << "]]\n";
  return kOk;
}

int cmd_replay(const Common& c, const std::string& store, bool verify, std::ostream& out) {
  const auto records = load_store(store);
  int bad = 0;
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : records) {
    const auto res = replay(r, verify, distance_options(c));
    bad += !res.ok;
    results.push_back({{"n", r.n}, {"k", r.k}, {"d", r.d}, {"ok", res.ok}, {"message", res.message}});
    if (c.format != "json")
      out << params(r.n, r.k, dtext({r.d, r.status}), r.q) << ": " << res.message << '\n';
  }
  if (c.format == "json")
    out << nlohmann::json{{"records", results}, {"failures", bad}}.dump(2) << '\n';
  else
    out << "replayed " << records.size() << " records, " << bad << " failures\n";
  return bad ? kInternal : kOk;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Precondition: return kPrecondition;
    case ErrorKind::FieldMismatch: return kFieldMismatch;
    case ErrorKind::Budget: return kBudget;
    case ErrorKind::Containment: return kContainment;
    case ErrorKind::Io: return kIo;
    case ErrorKind::Parse: return kParse;
    case ErrorKind::Internal: return kInternal;
  }
  return kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"constacyclic code workbench", "consta"};
  app.require_subcommand(1);
  Common c;

  auto field_opts = [&](CLI::App* s, bool with_a) {
    s->add_option("-q", c.q, "field order")->required();
    s->add_option("-n", c.n, "code length")->required();
    if (with_a) s->add_option("-a", c.a, "shift constant: integer, w^k or x^k");
  };
  auto fmt = [&](CLI::App* s, bool dot) {
    auto* o = s->add_option("--format", c.format, "human, json" + std::string(dot ? " or dot" : ""));
    o->check(dot ? CLI::IsMember({"human", "json", "dot"}) : CLI::IsMember({"human", "json"}));
  };
  auto code_opts = [&](CLI::App* s) {
    s->add_option("-q", c.q, "field order");
    s->add_option("-n", c.n, "code length");
    s->add_option("-a", c.a, "shift constant");
    s->add_option("-D", c.defining, "defining set as coset labels, e.g. Z10,Z19");
    s->add_option("--spec", c.spec, "q:n:a:D with a the exponent of xi");
    s->add_option("--code", c.code, "@file, full:k, parity:n, repetition:n, zero:n or a spec");
  };
  auto dist_opts = [&](CLI::App* s) {
    s->add_option("--threads", c.threads, "worker threads (0 = all cores)");
    s->add_option("--budget", c.budget, "brute-force codeword cap");
    s->add_option("--engine", c.engine, "brute, bz or auto")->check(CLI::IsMember({"brute", "bz", "auto"}));
  };

  auto* cosets = app.add_subcommand("cosets", "cyclotomic cosets of Omega_a");
  field_opts(cosets, true);
  fmt(cosets, false);
  auto* factor = app.add_subcommand("factor", "irreducible factors of x^n - a");
  field_opts(factor, true);
  fmt(factor, false);

  bool witness = false, verify = false;
  auto* equiv = app.add_subcommand("equiv", "equivalence criteria for a- and b-constacyclic families");
  field_opts(equiv, true);
  equiv->add_option("-b", c.b, "second shift constant")->required();
  equiv->add_flag("--witness", witness, "print the explicit isometry");
  equiv->add_flag("--verify", verify, "check the isometry on every code with at most two cosets");
  equiv->add_option("--budget", c.budget, "weight-enumeration cap for --verify");
  fmt(equiv, false);

  auto* graph = app.add_subcommand("graph", "equivalence classes of shift constants");
  field_opts(graph, false);
  c.format = "dot";
  fmt(graph, true);

  std::string progress;
  bool resume = false;
  auto* mindist = app.add_subcommand("mindist", "minimum distance");
  code_opts(mindist);
  dist_opts(mindist);
  mindist->add_option("--target", c.target, "stop once d >= target or d < target is decided");
  mindist->add_option("--progress-log", progress, "JSONL checkpoint file for the information-set engine");
  mindist->add_flag("--resume", resume, "continue from the progress log");
  fmt(mindist, false);

  std::string job_path, table_path, store;
  bool no_early_exit = false;
  auto* search = app.add_subcommand("search", "record search over constacyclic families");
  search->add_option("--job", job_path, "job file (JSON)")->required();
  search->add_option("--table", table_path, "best-known table, CSV q,n,k,d");
  search->add_option("--store", store, "append-only JSONL result store");
  search->add_flag("--resume", resume, "skip units listed in <store>.ckpt");
  search->add_flag("--no-early-exit", no_early_exit, "compute exact distances throughout");
  search->add_option("--threads", c.threads, "worker threads");
  fmt(search, false);

  std::string r1, r2, r3;
  bool tuned = false, check = false;
  auto* cx = app.add_subcommand("constructx", "Construction X of (C1, C2, C3)");
  code_opts(cx);
  dist_opts(cx);
  cx->add_option("--c1", r1, "outer code")->required();
  cx->add_option("--c2", r2, "subcode")->required();
  cx->add_option("--c3", r3, "auxiliary code")->required();
  cx->add_flag("--tuned", tuned, "choose coset leaders by coset weight");
  cx->add_flag("--verify", check, "compute the distance of the result");
  fmt(cx, false);

  std::vector<std::string> xx_refs(5);
  auto* cxx = app.add_subcommand("constructxx", "Construction XX of (C, C1, C2) with D1, D2");
  code_opts(cxx);
  dist_opts(cxx);
  cxx->add_option("--c", xx_refs[0], "outer code")->required();
  cxx->add_option("--c1sub", xx_refs[1], "first subcode")->required();
  cxx->add_option("--c2sub", xx_refs[2], "second subcode")->required();
  cxx->add_option("--d1", xx_refs[3], "auxiliary code for the C2sub cosets")->required();
  cxx->add_option("--d2", xx_refs[4], "auxiliary code for the C1sub cosets")->required();
  cxx->add_flag("--verify", check, "compute the distance of the result");
  fmt(cxx, false);

  std::string param_text;
  auto* quantum = app.add_subcommand("quantum", "stabilizer parameters from a Hermitian dual-containing GF(4) code");
  code_opts(quantum);
  dist_opts(quantum);
  quantum->add_option("--params", param_text, "n,k,d parameter arithmetic only");
  fmt(quantum, false);

  auto* rep = app.add_subcommand("replay", "rebuild every record of a store");
  rep->add_option("--store", store, "JSONL store")->required();
  rep->add_flag("--verify", check, "recompute the distance claims");
  dist_opts(rep);
  fmt(rep, false);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kParse;
  }

  if (c.format == "dot" && !graph->parsed()) c.format = "human";
  try {
    if (cosets->parsed()) return cmd_cosets(c, out);
    if (factor->parsed()) return cmd_factor(c, out);
    if (equiv->parsed()) return cmd_equiv(c, witness, verify, out);
    if (graph->parsed()) return cmd_graph(c, out);
    if (mindist->parsed()) return cmd_mindist(c, progress, resume, out);
    if (search->parsed()) return cmd_search(c, job_path, table_path, store, resume, no_early_exit, out, err);
    if (cx->parsed()) return cmd_constructx(c, r1, r2, r3, tuned, check, out);
    if (cxx->parsed()) return cmd_constructxx(c, xx_refs, check, out);
    if (quantum->parsed()) return cmd_quantum(c, param_text, out);
    if (rep->parsed()) return cmd_replay(c, store, check, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kParse;
}

}  // namespace consta::cli
