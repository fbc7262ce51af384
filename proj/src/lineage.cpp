#include "consta/lineage.hpp"

#include <fstream>

#include "consta/constacode.hpp"
#include "consta/constructions.hpp"
#include "consta/equivalence.hpp"

namespace consta {

nlohmann::json matrix_to_json(const Mat& m) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<int> r;
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j).v);
    out.push_back(r);
  }
  return out;
}

Mat matrix_from_json(const FieldPtr& f, int cols, const nlohmann::json& rows) {
  if (!rows.is_array()) fail(ErrorKind::Parse, "matrix rows must be an array");
  Mat m(f, 0, cols);
  for (const auto& r : rows) {
    if (!r.is_array() || static_cast<int>(r.size()) != cols)
      fail(ErrorKind::Parse, "matrix row of wrong length");
    std::vector<Elem> v;
    for (const auto& x : r) {
      const int e = x.get<int>();
      if (e < 0 || e >= f->q()) fail(ErrorKind::Parse, "matrix entry outside the field");
      v.push_back(Elem{static_cast<std::uint16_t>(e)});
    }
    m.append_row(v);
  }
  return m;
}

LinearCode code_from_matrix(const Mat& m) {
  return LinearCode(m, {{"kind", "matrix"}, {"q", m.field().q()}, {"n", m.cols()},
                        {"rows", matrix_to_json(m)}});
}

namespace {

FieldPtr field_of(const nlohmann::json& j) {
  const int q = j.at("q").get<int>();
  if (prime_power(q).first == 0) fail(ErrorKind::Parse, "q is not a prime power");
  return make_field_q(q);
}

std::vector<std::vector<Elem>> leaders_from_json(const nlohmann::json& rows, int n) {
  std::vector<std::vector<Elem>> out;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) fail(ErrorKind::Parse, "leader of wrong length");
    std::vector<Elem> v;
    for (const auto& x : r) v.push_back(Elem{x.get<std::uint16_t>()});
    out.push_back(std::move(v));
  }
  return out;
}

LinearCode rebuild_aux(const nlohmann::json& j) {
  const auto f = field_of(j);
  const int n = j.at("n").get<int>();
  const auto name = j.at("name").get<std::string>();
  if (name == "full") return full_space(f, n);
  if (name == "zero") return zero_code(f, n);
  if (name == "repetition") return repetition_code(f, n);
  if (name == "parity") return parity_code(f, n);
  fail(ErrorKind::Parse, "unknown aux code '" + name + "'");
}

LinearCode rebuild_inner(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) fail(ErrorKind::Parse, "lineage without a kind");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "constacyclic") return build_code(parse_spec(j.at("spec").get<std::string>()));
  if (kind == "aux") return rebuild_aux(j);
  if (kind == "matrix") {
    const auto f = field_of(j);
    return LinearCode(matrix_from_json(f, j.at("n").get<int>(), j.at("rows")), j);
  }
  if (kind == "X") {
    const auto c1 = rebuild(j.at("c1")), c2 = rebuild(j.at("c2")), c3 = rebuild(j.at("c3"));
    if (j.value("pairing", "canonical") == "explicit")
      return construction_x(c1, c2, c3, leaders_from_json(j.at("leaders"), c1.n()));
    return construction_x(c1, c2, c3);
  }
  if (kind == "XX")
    return construction_xx(rebuild(j.at("c")), rebuild(j.at("c1sub")), rebuild(j.at("c2sub")),
                           rebuild(j.at("d1")), rebuild(j.at("d2")));
  if (kind == "shorten")
    return shorten(rebuild(j.at("of")), j.at("positions").get<std::vector<int>>());
  if (kind == "puncture")
    return puncture(rebuild(j.at("of")), j.at("positions").get<std::vector<int>>());
  if (kind == "subcode") return subcode(rebuild(j.at("of")), j.at("k").get<int>());
  if (kind == "extend") return extend(rebuild(j.at("of")));
  if (kind == "dual") {
    const auto inner = j.value("inner", "euclidean");
    const auto c = rebuild(j.at("of"));
    return inner == "hermitian" ? hermitian_dual(c) : euclidean_dual(c);
  }
  if (kind == "intersection") {
    const auto& of = j.at("of");
    if (!of.is_array() || of.size() != 2) fail(ErrorKind::Parse, "intersection needs two codes");
    return intersection(rebuild(of[0]), rebuild(of[1]));
  }
  if (kind == "isometry") {
    const auto c = rebuild(j.at("of"));
    const auto& wj = j.at("witness");
    const auto w = build_witness(c.field_ptr(), wj.at("n").get<int>(),
                                 Elem{wj.at("a").get<std::uint16_t>()},
                                 Elem{wj.at("b").get<std::uint16_t>()});
    if (w.i != wj.at("i").get<int>()) fail(ErrorKind::Internal, "witness exponent does not replay");
    return apply_isometry(w, c);
  }
  fail(ErrorKind::Parse, "unknown lineage kind '" + kind + "'");
}

}  // namespace

LinearCode rebuild(const nlohmann::json& lineage) {
  try {
    LinearCode c = rebuild_inner(lineage);
    if (lineage.contains("predicted") && lineage["predicted"].value("d", nlohmann::json()).is_number())
      c.set_distance({lineage["predicted"]["d"].get<int>(), DistanceStatus::Lower});
    c.set_lineage(lineage);
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed lineage: ") + e.what());
  }
}

std::vector<std::string> construction_chain(const nlohmann::json& lineage) {
  std::vector<std::string> out;
  const nlohmann::json* j = &lineage;
  while (j->is_object() && j->contains("kind")) {
    const auto kind = (*j)["kind"].get<std::string>();
    out.push_back(kind);
    if (kind == "X") j = &(*j)["c1"];
    else if (kind == "XX") j = &(*j)["c"];
    else if (j->contains("of") && (*j)["of"].is_object()) j = &(*j)["of"];
    else break;
  }
  return out;
}

LinearCode load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open code file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
  if (j.contains("kind")) return rebuild(j);
  // a printed or stored record
  if (j.contains("lineage") && j["lineage"].is_object()) return rebuild(j["lineage"]);
  if (!j.contains("q") || !j.contains("rows")) fail(ErrorKind::Parse, path + ": need q and rows");
  const auto f = field_of(j);
  const auto& rows = j["rows"];
  const int n = rows.empty() ? j.value("n", 0) : static_cast<int>(rows[0].size());
  return code_from_matrix(matrix_from_json(f, n, rows));
}

}  // namespace consta
