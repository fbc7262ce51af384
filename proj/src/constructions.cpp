#include "consta/constructions.hpp"

#include <algorithm>

#include "consta/distance.hpp"

namespace consta {

std::optional<int> known_lower(const LinearCode& c) {
  if (c.k() == 0) return kInfiniteDistance;
  if (!c.distance().known()) return std::nullopt;
  return c.distance().value;
}

int x_bound(int d1, int d2, int d3) { return std::min(d2, d1 + d3); }

int xx_bound(int d, int d1, int d2, int delta0, int delta1, int delta2) {
  return std::min({delta0, d1 + delta1, d2 + delta2, d + delta1 + delta2});
}

namespace {

void same_field(const LinearCode& a, const LinearCode& b) {
  if (a.field_ptr() != b.field_ptr()) fail(ErrorKind::FieldMismatch, "codes over different fields");
}

void set_predicted(LinearCode& e, std::optional<int> bound) {
  nlohmann::json lin = e.lineage();
  if (bound && *bound < kInfiniteDistance) {
    const int d = std::min(*bound, e.n() + 1);
    e.set_distance({d, DistanceStatus::Lower});
    lin["predicted"] = {{"n", e.n()}, {"k", e.k()}, {"d", d}};
  } else {
    lin["predicted"] = {{"n", e.n()}, {"k", e.k()}, {"d", nullptr}};
  }
  e.set_lineage(std::move(lin));
}

// Rows of rref(big) that are independent modulo `small` (in row order).
std::vector<std::vector<Elem>> complement_rows(const LinearCode& big, const LinearCode& small) {
  Mat basis = small.k() ? rref(small.generator()).reduced : Mat(small.field_ptr(), 0, small.n());
  const Rref rb = rref(big.generator());
  std::vector<std::vector<Elem>> out;
  int r = rank(basis);
  for (int i = 0; i < rb.rank; ++i) {
    Mat trial = basis;
    trial.append_row(rb.reduced.row_vector(i));
    const int tr = rank(trial);
    if (tr > r) {
      basis = std::move(trial);
      r = tr;
      out.push_back(rb.reduced.row_vector(i));
    }
  }
  return out;
}

// Linear map on C with kernel `kernel`, sending the complement rows of
// `kernel` in C to the generator rows of `target` in order.
class QuotientMap {
 public:
  QuotientMap(const LinearCode& c, const LinearCode& kernel, const LinearCode& target)
      : target_(target.generator()), kdim_(kernel.k()) {
    adapted_ = kernel.k() ? kernel.generator() : Mat(c.field_ptr(), 0, c.n());
    for (auto& row : complement_rows(c, kernel)) adapted_.append_row(row);
    if (adapted_.rows() != c.k()) fail(ErrorKind::Internal, "adapted basis has wrong size");
  }
  std::vector<Elem> operator()(const std::vector<Elem>& v) const {
    const auto x = solve_left(adapted_, v);
    if (!x) fail(ErrorKind::Internal, "vector outside the source code");
    std::vector<Elem> coeff(x->begin() + kdim_, x->end());
    if (coeff.empty()) return std::vector<Elem>(target_.cols(), Elem{0});
    return row_times(coeff, target_);
  }

 private:
  Mat adapted_;
  Mat target_;
  int kdim_;
};

}  // namespace

namespace {

std::uint64_t ipow_u(int q, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= q;
  return r;
}

nlohmann::json rows_json(const std::vector<std::vector<Elem>>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) {
    std::vector<int> v;
    for (auto e : r) v.push_back(e.v);
    out.push_back(v);
  }
  return out;
}

void check_x_inputs(const LinearCode& c1, const LinearCode& c2, const LinearCode& c3) {
  same_field(c1, c2);
  same_field(c1, c3);
  if (c1.n() != c2.n()) fail(ErrorKind::Containment, "C1 and C2 have different lengths");
  if (!contains(c1, c2)) fail(ErrorKind::Containment, "C2 is not a subcode of C1");
  if (c3.k() != c1.k() - c2.k())
    fail(ErrorKind::Containment, "dim C3 must equal dim C1 - dim C2");
}

LinearCode glue_x(const LinearCode& c1, const LinearCode& c2, const LinearCode& c3,
                  const std::vector<std::vector<Elem>>& leaders, nlohmann::json lineage) {
  const int n = c1.n(), n3 = c3.n();
  Mat g(c1.field_ptr(), 0, n + n3);
  for (int i = 0; i < c2.k(); ++i) {
    auto row = c2.generator().row_vector(i);
    row.resize(n + n3, Elem{0});
    g.append_row(row);
  }
  for (std::size_t i = 0; i < leaders.size(); ++i) {
    auto row = leaders[i];
    const auto z = c3.generator().row_vector(static_cast<int>(i));
    row.insert(row.end(), z.begin(), z.end());
    g.append_row(row);
  }
  LinearCode e(std::move(g), std::move(lineage));
  if (e.k() != c1.k()) fail(ErrorKind::Internal, "construction X lost dimension");
  std::optional<int> bound;
  const auto d1 = known_lower(c1), d2 = known_lower(c2), d3 = known_lower(c3);
  if (d1 && d2 && d3) bound = x_bound(*d1, *d2, *d3);
  set_predicted(e, bound);
  return e;
}

}  // namespace

LinearCode construction_x(const LinearCode& c1, const LinearCode& c2, const LinearCode& c3) {
  check_x_inputs(c1, c2, c3);
  return glue_x(c1, c2, c3, complement_rows(c1, c2),
                {{"kind", "X"}, {"pairing", "canonical"}, {"c1", c1.lineage()}, {"c2", c2.lineage()},
                 {"c3", c3.lineage()}});
}

LinearCode construction_x(const LinearCode& c1, const LinearCode& c2, const LinearCode& c3,
                          const std::vector<std::vector<Elem>>& leaders) {
  check_x_inputs(c1, c2, c3);
  if (static_cast<int>(leaders.size()) != c3.k())
    fail(ErrorKind::Containment, "need exactly dim C1 - dim C2 leaders");
  Mat stacked = c2.k() ? c2.generator() : Mat(c1.field_ptr(), 0, c1.n());
  const Rref r1 = rref(c1.generator());
  for (const auto& l : leaders) {
    if (static_cast<int>(l.size()) != c1.n()) fail(ErrorKind::Containment, "leader has wrong length");
    if (!in_rowspace(r1, l)) fail(ErrorKind::Containment, "leader is not a codeword of C1");
    stacked.append_row(l);
  }
  if (rank(stacked) != c1.k()) fail(ErrorKind::Containment, "leaders are dependent modulo C2");
  return glue_x(c1, c2, c3, leaders,
                {{"kind", "X"}, {"pairing", "explicit"}, {"leaders", rows_json(leaders)},
                 {"c1", c1.lineage()}, {"c2", c2.lineage()}, {"c3", c3.lineage()}});
}

XPairing tuned_x_pairing(const LinearCode& c1, const LinearCode& c2, const LinearCode& c3,
                         int max_directions) {
  check_x_inputs(c1, c2, c3);
  const Field& f = c1.field();
  const int q = f.q(), r = c3.k(), n = c1.n();
  const auto base = complement_rows(c1, c2);
  XPairing out;
  if (r == 0) {
    out.certified = known_lower(c2).value_or(0);
    return out;
  }
  // all lambda in GF(q)^r, index = sum lambda_i q^i
  const std::uint64_t total = code_size(q, r);
  if (total / (q - 1) > static_cast<std::uint64_t>(max_directions))
    fail(ErrorKind::Budget, "too many coset directions to tune the pairing");
  auto lambda_of = [&](std::uint64_t idx) {
    std::vector<Elem> lam(r);
    for (int i = 0; i < r; ++i) {
      lam[i] = Elem{static_cast<std::uint16_t>(idx % q)};
      idx /= q;
    }
    return lam;
  };
  auto combine = [&](const std::vector<Elem>& lam, const std::vector<std::vector<Elem>>& rows) {
    std::vector<Elem> v(rows.empty() ? 0 : rows[0].size(), Elem{0});
    for (int i = 0; i < r; ++i)
      if (lam[i].v)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(lam[i], rows[i][j]));
    return v;
  };
  // directions: first nonzero coordinate equal to one
  std::vector<std::vector<Elem>> dirs;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    auto lam = lambda_of(idx);
    const auto first = std::find_if(lam.begin(), lam.end(), [](Elem e) { return e.v != 0; });
    if (first->v == 1) dirs.push_back(std::move(lam));
  }
  std::vector<std::vector<Elem>> vecs;
  for (const auto& lam : dirs) {
    const auto v = combine(lam, base);
    Mat g = c2.k() ? c2.generator() : Mat(c1.field_ptr(), 0, n);
    g.append_row(v);
    // the distance of C2 + <v> is min(d2, mu(v)), and mu(v) <= that value
    // only matters below d2
    out.direction_weights.push_back(minimum_distance(LinearCode(std::move(g))).value);
    vecs.push_back(v);
  }
  // vectors of GF(q)^r by index; dir_of[u] = position of u's direction in dirs
  const std::uint64_t dir_count = dirs.size();
  std::vector<int> dir_of(total, -1), zw(total, 0);
  std::vector<std::vector<Elem>> zrows;
  for (int i = 0; i < r; ++i) zrows.push_back(c3.generator().row_vector(i));
  auto index_of = [&](const std::vector<Elem>& lam) {
    std::uint64_t idx = 0;
    for (int i = r - 1; i >= 0; --i) idx = idx * q + lam[i].v;
    return idx;
  };
  for (std::uint64_t d = 0; d < dir_count; ++d)
    for (int s = 0; s < q - 1; ++s) {
      auto u = dirs[d];
      for (auto& e : u) e = f.mul(e, f.exp(s));
      dir_of[index_of(u)] = static_cast<int>(d);
    }
  for (std::uint64_t idx = 1; idx < total; ++idx) zw[idx] = hamming_weight(combine(lambda_of(idx), zrows));
  std::vector<std::uint64_t> add(total * total);
  std::vector<std::uint64_t> smul(total * q);
  for (std::uint64_t a = 0; a < total; ++a) {
    const auto la = lambda_of(a);
    for (std::uint64_t b = 0; b < total; ++b) {
      auto lb = lambda_of(b);
      for (int i = 0; i < r; ++i) lb[i] = f.add(lb[i], la[i]);
      add[a * total + b] = index_of(lb);
    }
    for (int s = 0; s < q; ++s) {
      auto l = la;
      for (auto& e : l) e = f.mul(e, Elem{static_cast<std::uint16_t>(s)});
      smul[a * q + s] = index_of(l);
    }
  }
  std::vector<std::uint64_t> lam_dirs;
  for (std::uint64_t d = 0; d < dir_count; ++d) lam_dirs.push_back(index_of(dirs[d]));

  // a pairing is a basis B of GF(q)^r: label lambda goes with the coset of
  // direction lambda B; certificate(B) = min over lambda of mu(lambda B) + wt(lambda Z)
  std::vector<std::uint64_t> best_rows;
  int best = -1;
  auto score = [&](const std::vector<std::uint64_t>& rows) {
    int m = kInfiniteDistance;
    for (auto li : lam_dirs) {
      std::uint64_t u = 0;
      for (int i = 0; i < r; ++i) u = add[u * total + smul[rows[i] * q + (li / ipow_u(q, i)) % q]];
      if (u == 0) return -1;  // B singular
      m = std::min(m, out.direction_weights[dir_of[u]] + zw[li]);
      if (m <= best) return m;
    }
    return m;
  };
  auto consider = [&](const std::vector<std::uint64_t>& rows) {
    const int sc = score(rows);
    if (sc > best) {
      best = sc;
      best_rows = rows;
    }
  };
  // canonical leaders first, so ties keep them
  std::vector<std::uint64_t> canon(r);
  for (int i = 0; i < r; ++i) canon[i] = ipow_u(q, i);
  consider(canon);
  {
    // greedy from the heaviest directions
    std::vector<int> order(dirs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return out.direction_weights[a] > out.direction_weights[b]; });
    Mat chosen(c1.field_ptr(), 0, r);
    std::vector<std::uint64_t> rows;
    for (int i : order) {
      Mat trial = chosen;
      trial.append_row(dirs[i]);
      if (rank(trial) > chosen.rows()) {
        chosen = std::move(trial);
        rows.push_back(lam_dirs[i]);
      }
      if (static_cast<int>(rows.size()) == r) break;
    }
    consider(rows);
  }
  // every basis when there are few of them
  std::uint64_t tuples = 1;
  for (int i = 0; i < r && tuples <= (1u << 20); ++i) tuples *= total;
  if (tuples <= (1u << 20)) {
    std::vector<std::uint64_t> rows(r, 1);
    for (std::uint64_t t = 0; t < tuples; ++t) {
      std::uint64_t v = t;
      bool zero = false;
      for (int i = 0; i < r; ++i, v /= total) {
        rows[i] = v % total;
        zero |= rows[i] == 0;
      }
      if (!zero) consider(rows);
    }
  }
  for (int i = 0; i < r; ++i) out.leaders.push_back(combine(lambda_of(best_rows[i]), base));

  const DistanceRecord& rec2 = c2.distance();
  const int d2 = c2.k() == 0 ? kInfiniteDistance
                 : rec2.status == DistanceStatus::Exact ? rec2.value
                                                        : minimum_distance(c2).value;
  const int cert = std::min(d2, best);
  out.certified = cert;
  return out;
}

LinearCode construction_xx(const LinearCode& c, const LinearCode& c1sub, const LinearCode& c2sub,
                           const LinearCode& d1, const LinearCode& d2) {
  same_field(c, c1sub);
  same_field(c, c2sub);
  same_field(c, d1);
  same_field(c, d2);
  if (!contains(c, c1sub) || !contains(c, c2sub))
    fail(ErrorKind::Containment, "both subcodes must lie inside C");
  if (d1.k() != c.k() - c2sub.k())
    fail(ErrorKind::Containment, "dim D1 must equal dim C - dim C2sub");
  if (d2.k() != c.k() - c1sub.k())
    fail(ErrorKind::Containment, "dim D2 must equal dim C - dim C1sub");
  const QuotientMap phi_a(c, c2sub, d1), phi_b(c, c1sub, d2);
  const int n = c.n() + d1.n() + d2.n();
  Mat g(c.field_ptr(), 0, n);
  for (int i = 0; i < c.k(); ++i) {
    auto row = c.generator().row_vector(i);
    const auto a = phi_a(row), b = phi_b(row);
    row.insert(row.end(), a.begin(), a.end());
    row.insert(row.end(), b.begin(), b.end());
    g.append_row(row);
  }
  LinearCode e(std::move(g), {{"kind", "XX"},
                              {"c", c.lineage()},
                              {"c1sub", c1sub.lineage()},
                              {"c2sub", c2sub.lineage()},
                              {"d1", d1.lineage()},
                              {"d2", d2.lineage()}});
  if (e.k() != c.k()) fail(ErrorKind::Internal, "construction XX lost dimension");

  LinearCode meet = intersection(c1sub, c2sub);
  int delta0 = kInfiniteDistance;
  if (meet.k() > 0) delta0 = minimum_distance(meet).value;
  nlohmann::json lin = e.lineage();
  lin["delta0"] = delta0 >= kInfiniteDistance ? nlohmann::json(nullptr) : nlohmann::json(delta0);
  e.set_lineage(std::move(lin));

  std::optional<int> bound;
  const auto dc = known_lower(c), e1 = known_lower(c1sub), e2 = known_lower(c2sub);
  const auto g1 = known_lower(d1), g2 = known_lower(d2);
  if (dc && e1 && e2 && g1 && g2) {
    // a zero D contributes no coordinates and its term is never reached
    const int delta1 = d1.k() == 0 ? 0 : *g1, delta2 = d2.k() == 0 ? 0 : *g2;
    bound = xx_bound(*dc, *e1, *e2, delta0, delta1, delta2);
  }
  set_predicted(e, bound);
  return e;
}

LinearCode shorten(const LinearCode& c, const std::vector<int>& positions) {
  for (int p : positions)
    if (p < 0 || p >= c.n()) fail(ErrorKind::Precondition, "shorten: position out of range");
  const Mat& g = c.generator();
  const Mat cols = select_columns(g, positions);
  // messages x with x G_P = 0
  const Mat x = c.k() ? left_nullspace(cols) : Mat(c.field_ptr(), 0, 0);
  Mat sub(c.field_ptr(), 0, c.n());
  for (int i = 0; i < x.rows(); ++i) sub.append_row(row_times(x.row_vector(i), g));
  std::vector<int> pos = positions;
  LinearCode out(delete_columns(sub, pos),
                 {{"kind", "shorten"}, {"positions", positions}, {"of", c.lineage()}});
  if (out.k() > 0 && c.distance().known()) out.set_distance({c.distance().value, DistanceStatus::Lower});
  return out;
}

LinearCode puncture(const LinearCode& c, const std::vector<int>& positions) {
  LinearCode out(delete_columns(c.generator(), positions),
                 {{"kind", "puncture"}, {"positions", positions}, {"of", c.lineage()}});
  const int removed = static_cast<int>(positions.size());
  if (out.k() > 0 && out.k() == c.k() && c.distance().known() && c.distance().value - removed >= 1)
    out.set_distance({c.distance().value - removed, DistanceStatus::Lower});
  return out;
}

LinearCode subcode(const LinearCode& c, int k_prime) {
  if (k_prime < 0 || k_prime > c.k()) fail(ErrorKind::Precondition, "subcode dimension out of range");
  Mat g(c.field_ptr(), 0, c.n());
  for (int i = 0; i < k_prime; ++i) g.append_row(c.generator().row_vector(i));
  LinearCode out(std::move(g), {{"kind", "subcode"}, {"k", k_prime}, {"of", c.lineage()}});
  if (out.k() > 0 && c.distance().known()) out.set_distance({c.distance().value, DistanceStatus::Lower});
  return out;
}

LinearCode extend(const LinearCode& c) {
  const Field& f = c.field();
  Mat g(c.field_ptr(), c.k(), c.n() + 1);
  for (int i = 0; i < c.k(); ++i) {
    Elem sum{0};
    for (int j = 0; j < c.n(); ++j) {
      g(i, j) = c.generator()(i, j);
      sum = f.add(sum, g(i, j));
    }
    g(i, c.n()) = f.neg(sum);
  }
  LinearCode out(std::move(g), {{"kind", "extend"}, {"of", c.lineage()}});
  if (out.k() > 0 && c.distance().known()) out.set_distance({c.distance().value, DistanceStatus::Lower});
  return out;
}

bool hermitian_dual_containing(const LinearCode& c) {
  if (!c.field().is_square_order())
    fail(ErrorKind::Precondition, "Hermitian duality needs a square field order");
  return contains(c, hermitian_dual(c));
}

nlohmann::json QuantumParams::to_json() const {
  return {{"n", n}, {"k", k}, {"d", d}, {"d_status", to_string(status)}, {"self_dual", self_dual}};
}

QuantumParams quantum_params(int n, int k, int d, DistanceStatus status) {
  require(n >= 1 && k >= 0 && k <= n, "classical parameters out of range");
  const int kq = 2 * k - n;
  if (kq < 0) fail(ErrorKind::Containment, "2k - n < 0: a dual-containing code needs k >= n/2");
  QuantumParams qp;
  qp.n = n;
  qp.k = kq;
  qp.d = d;
  qp.status = status;
  qp.self_dual = kq == 0;
  return qp;
}

QuantumParams quantum_params(const LinearCode& c) {
  if (c.field().q() != 4) fail(ErrorKind::Precondition, "quantum parameters are defined for GF(4) codes");
  if (!hermitian_dual_containing(c))
    fail(ErrorKind::Containment, "code does not contain its Hermitian dual");
  if (2 * c.k() == c.n() && !same_code(c, hermitian_dual(c)))
    fail(ErrorKind::Containment, "k = n/2 but the code is not Hermitian self-dual");
  return quantum_params(c.n(), c.k(), c.distance().value, c.distance().status);
}

}  // namespace consta
