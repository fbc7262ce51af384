#include "consta/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace consta {

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::EqualOrder: return "EqualOrder";
    case Criterion::Bierbrauer: return "Bierbrauer";
    case Criterion::MainTheorem: return "MainTheorem";
    case Criterion::DividesOrderGcd1: return "DividesOrderGcd1";
    case Criterion::GcdPower: return "GcdPower";
  }
  return "?";
}

namespace {

void check_length(const Field& f, int n) {
  require(n >= 1, "length must be positive");
  require(std::gcd(n, f.q()) == 1, "gcd(n, q) must be 1");
}

}  // namespace

std::optional<MainMatch> check_main_theorem(const Field& f, int n, Elem a, Elem b) {
  check_length(f, n);
  require(a.v != 0 && b.v != 0, "shift constants must be nonzero");
  const int qm1 = f.q() - 1;
  const int i1 = f.log(a), i2 = f.log(b);
  const int m = std::gcd(n, qm1);
  for (int s = 0; s < qm1; ++s) {
    if (mod(i1 - static_cast<std::int64_t>(i2) * s, qm1) != 0) continue;
    const auto r = mod(static_cast<std::int64_t>(i2) * (s - 1), qm1);
    if (std::gcd(r, static_cast<std::int64_t>(qm1)) % m == 0) return MainMatch{i1, i2, s, m};
  }
  return std::nullopt;
}

bool check_equal_order(const Field& f, Elem a, Elem b) {
  require(a.v != 0 && b.v != 0, "shift constants must be nonzero");
  return f.order(a) == f.order(b);
}

bool check_bierbrauer(const Field& f, int n, Elem a) {
  check_length(f, n);
  require(a.v != 0, "shift constant must be nonzero");
  return std::gcd(n, f.order(a)) == 1;
}

std::optional<Criterion> check_corollaries(const Field& f, int n, Elem a, Elem b) {
  check_length(f, n);
  require(a.v != 0 && b.v != 0, "shift constants must be nonzero");
  const int qm1 = f.q() - 1;
  const int oa = f.order(a), ob = f.order(b);
  if ((ob % oa == 0 || oa % ob == 0) && std::gcd(n, qm1) == 1) return Criterion::DividesOrderGcd1;
  const int m = std::gcd(n, qm1);
  if (b.v == 1 && f.log(a) % m == 0) return Criterion::GcdPower;
  if (a.v == 1 && f.log(b) % m == 0) return Criterion::GcdPower;
  return std::nullopt;
}

std::vector<int> EquivWitness::diagonal_exponents() const {
  std::vector<int> e(n);
  for (int j = 0; j < n; ++j) e[j] = static_cast<int>(mod(static_cast<std::int64_t>(i) * j, q - 1));
  return e;
}

nlohmann::json EquivWitness::to_json() const {
  return {{"q", q},         {"n", n},         {"a", a.v},
          {"b", b.v},       {"i1", i1},       {"i2", i2},
          {"s", s},         {"m", m},         {"gamma", gamma},
          {"theta", theta}, {"beta", beta},   {"beta_prime", beta_prime},
          {"i", i},         {"scalar", scalar.v}};
}

EquivWitness build_witness(const FieldPtr& fp, int n, Elem a, Elem b) {
  const Field& f = *fp;
  const auto match = check_main_theorem(f, n, a, b);
  if (!match)
    fail(ErrorKind::Precondition, "exponent-divisibility criterion does not hold for this pair");
  const int qm1 = f.q() - 1;
  EquivWitness w;
  w.q = f.q();
  w.n = n;
  w.a = a;
  w.b = b;
  w.i1 = match->i1;
  w.i2 = match->i2;
  w.s = match->s;
  w.m = match->m;
  const std::int64_t num = static_cast<std::int64_t>(w.i2) * (w.s - 1);
  if (num % w.m != 0) fail(ErrorKind::Internal, "m does not divide i2 (s - 1)");
  w.gamma = num / w.m;
  w.theta = qm1 / w.m;
  w.beta = n / w.m;
  if (std::gcd(w.beta, w.theta) != 1) fail(ErrorKind::Internal, "gcd(beta, theta) != 1");
  w.beta_prime = static_cast<int>(inverse_mod(w.beta, w.theta));
  w.i = static_cast<int>(mod(w.gamma * w.beta_prime + w.theta, qm1));
  if (mod(w.i1 - static_cast<std::int64_t>(w.i) * n - w.i2, qm1) != 0)
    fail(ErrorKind::Internal, "witness fails i1 - i n = i2 (mod q-1)");
  w.scalar = f.exp(w.i);
  return w;
}

LinearCode apply_isometry(const EquivWitness& w, const LinearCode& c) {
  const Field& f = c.field();
  if (c.n() != w.n) fail(ErrorKind::Precondition, "witness length does not match the code");
  if (f.q() != w.q) fail(ErrorKind::FieldMismatch, "witness field does not match the code");
  const auto e = w.diagonal_exponents();
  Mat g = c.generator();
  for (int r = 0; r < g.rows(); ++r)
    for (int j = 0; j < g.cols(); ++j) g(r, j) = f.mul(g(r, j), f.exp(e[j]));
  LinearCode out(std::move(g), {{"kind", "isometry"}, {"witness", w.to_json()}, {"of", c.lineage()}});
  out.set_distance(c.distance());
  return out;
}

std::optional<std::vector<Elem>> diagonal_equivalence(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols() || a.field_ptr() != b.field_ptr()) return std::nullopt;
  const Field& f = a.field();
  const int n = a.cols();
  const Rref ra = rref(a), rb = rref(b);
  if (ra.rank != rb.rank || ra.pivots != rb.pivots) return std::nullopt;
  // rb(i,j) = ra(i,j) d_j / d_{p_i}: the ratio d_j / d_{p_i} is fixed by every
  // nonzero entry, so d is determined up to one scalar per connected block.
  std::vector<std::vector<std::pair<int, Elem>>> adj(n);  // (neighbor, d_nb / d_self)
  for (int i = 0; i < ra.rank; ++i) {
    const int p = ra.pivots[i];
    for (int j = 0; j < n; ++j) {
      const Elem x = ra.reduced(i, j), y = rb.reduced(i, j);
      if ((x.v == 0) != (y.v == 0)) return std::nullopt;
      if (x.v == 0 || j == p) continue;
      const Elem ratio = f.div(y, x);
      adj[p].push_back({j, ratio});
      adj[j].push_back({p, f.inv(ratio)});
    }
  }
  std::vector<Elem> d(n, Elem{0});
  for (int root = 0; root < n; ++root) {
    if (d[root].v != 0) continue;
    d[root] = Elem{1};
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (auto [v, ratio] : adj[u]) {
        const Elem want = f.mul(d[u], ratio);
        if (d[v].v == 0) {
          d[v] = want;
          queue.push_back(v);
        } else if (d[v] != want) {
          return std::nullopt;
        }
      }
    }
  }
  Mat scaled = a;
  for (int r = 0; r < scaled.rows(); ++r)
    for (int j = 0; j < n; ++j) scaled(r, j) = f.mul(scaled(r, j), d[j]);
  if (!same_rowspace(scaled, b)) return std::nullopt;
  return d;
}

int EquivGraph::class_of(Elem a) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (std::find(classes[i].begin(), classes[i].end(), a) != classes[i].end())
      return static_cast<int>(i);
  return -1;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

std::string gcd_text(int x, int y) {
  return "gcd(" + std::to_string(x) + "," + std::to_string(y) + ")=" + std::to_string(std::gcd(x, y));
}

}  // namespace

EquivGraph classify(const FieldPtr& fp, int n) {
  const Field& f = *fp;
  check_length(f, n);
  const int qm1 = f.q() - 1;
  EquivGraph g;
  g.q = f.q();
  g.n = n;
  g.nodes = f.nonzero_elements();
  std::sort(g.nodes.begin(), g.nodes.end());
  const int count = static_cast<int>(g.nodes.size());
  auto name = [&](Elem x) { return f.to_string(x); };

  for (int x = 0; x < count; ++x)
    for (int y = x + 1; y < count; ++y) {
      const Elem a = g.nodes[x], b = g.nodes[y];
      const int oa = f.order(a), ob = f.order(b);
      if (oa == ob)
        g.edges.push_back({a, b, Criterion::EqualOrder, true,
                           "ord(" + name(a) + ")=ord(" + name(b) + ")=" + std::to_string(oa)});
      if (a.v == 1 && check_bierbrauer(f, n, b))
        g.edges.push_back({a, b, Criterion::Bierbrauer, false,
                           "gcd(n,ord(" + name(b) + "))=" + gcd_text(n, ob)});
      for (auto [src, dst] : {std::pair{a, b}, std::pair{b, a}}) {
        if (auto mm = check_main_theorem(f, n, src, dst)) {
          const auto r = mod(static_cast<std::int64_t>(mm->i2) * (mm->s - 1), qm1);
          std::ostringstream os;
          os << name(src) << "->" << name(dst) << ": s=" << mm->s << ", m=" << gcd_text(n, qm1)
             << " | gcd(i2(s-1),q-1)=" << std::gcd(r, static_cast<std::int64_t>(qm1));
          g.edges.push_back({src, dst, Criterion::MainTheorem, false, os.str()});
          break;
        }
      }
      if (auto c = check_corollaries(f, n, a, b)) {
        std::string cond;
        if (*c == Criterion::DividesOrderGcd1)
          cond = "ord " + std::to_string(std::min(oa, ob)) + " | " + std::to_string(std::max(oa, ob)) +
                 ", gcd(n,q)=gcd(n,q-1)=1";
        else
          cond = "m=" + gcd_text(n, qm1) + " | log(" + name(a.v == 1 ? b : a) + ")";
        g.edges.push_back({a, b, *c, false, cond});
      }
    }

  Dsu dsu(count);
  auto index = [&](Elem x) {
    return static_cast<int>(std::lower_bound(g.nodes.begin(), g.nodes.end(), x) - g.nodes.begin());
  };
  for (const auto& e : g.edges) dsu.unite(index(e.a), index(e.b));
  std::map<int, std::vector<Elem>> cls;
  for (int x = 0; x < count; ++x) cls[dsu.find(x)].push_back(g.nodes[x]);
  for (auto& [root, members] : cls) g.classes.push_back(members);

  std::map<int, std::vector<Elem>> by_order;
  for (auto x : g.nodes) by_order[f.order(x)].push_back(x);
  for (auto& [o, members] : by_order) g.order_groups.push_back(members);
  std::sort(g.order_groups.begin(), g.order_groups.end());
  return g;
}

namespace {

std::string join(const std::vector<Elem>& xs, const Field& f) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + f.to_string(xs[i]);
  return s;
}

}  // namespace

std::string emit_dot(const EquivGraph& g, const Field& f) {
  // nodes: groups of constants with equal order; clusters: equivalence classes
  auto group_of = [&](Elem x) {
    for (std::size_t i = 0; i < g.order_groups.size(); ++i)
      if (std::find(g.order_groups[i].begin(), g.order_groups[i].end(), x) != g.order_groups[i].end())
        return static_cast<int>(i);
    return -1;
  };
  std::ostringstream os;
  os << "graph equivalence_q" << g.q << "_n" << g.n << " {\n";
  os << "  label=\"a-constacyclic codes of length " << g.n << " over GF(" << g.q << ")\";\n";
  std::vector<bool> placed(g.order_groups.size(), false);
  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    os << "  subgraph cluster_" << c << " {\n    label=\"class {" << join(g.classes[c], f) << "}\";\n";
    for (auto x : g.classes[c]) {
      const int gi = group_of(x);
      if (placed[gi]) continue;
      placed[gi] = true;
      os << "    g" << gi << " [label=\"" << join(g.order_groups[gi], f) << "\"];\n";
    }
    os << "  }\n";
  }
  std::map<std::pair<int, int>, std::vector<std::string>> labels;
  for (const auto& e : g.edges) {
    int u = group_of(e.a), v = group_of(e.b);
    if (u == v) continue;  // equal order is shown by grouping
    if (u > v) std::swap(u, v);
    const std::string l = to_string(e.criterion) + ": " + e.condition;
    auto& ls = labels[{u, v}];
    if (std::find(ls.begin(), ls.end(), l) == ls.end()) ls.push_back(l);
  }
  for (const auto& [uv, ls] : labels) {
    std::string l;
    for (std::size_t i = 0; i < ls.size(); ++i) l += (i ? "\\n" : "") + ls[i];
    os << "  g" << uv.first << " -- g" << uv.second << " [label=\"" << l << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const EquivGraph& g, const Field& f) {
  nlohmann::json j;
  j["q"] = g.q;
  j["n"] = g.n;
  auto names = [&](const std::vector<Elem>& xs) {
    std::vector<std::string> out;
    for (auto x : xs) out.push_back(f.to_string(x));
    return out;
  };
  j["nodes"] = names(g.nodes);
  j["classes"] = nlohmann::json::array();
  for (const auto& c : g.classes) j["classes"].push_back(names(c));
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"a", f.to_string(e.a)},
                          {"b", f.to_string(e.b)},
                          {"criterion", to_string(e.criterion)},
                          {"predicate_only", e.predicate_only},
                          {"condition", e.condition}});
  return j;
}

}  // namespace consta
