#include "consta/distance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <fstream>
#include <limits>
#include <mutex>
#include <thread>

namespace consta {

nlohmann::json DistanceResult::to_json() const {
  std::vector<int> w;
  for (auto e : witness) w.push_back(e.v);
  return {{"value", value},         {"status", to_string(status)}, {"lower", lower},
          {"upper", upper},         {"codewords", codewords},      {"info_sets", info_sets},
          {"witness", w}};
}

std::uint64_t code_size(int q, int k) {
  std::uint64_t s = 1;
  for (int i = 0; i < k; ++i) {
    if (s > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(q))
      return std::numeric_limits<std::uint64_t>::max();
    s *= static_cast<std::uint64_t>(q);
  }
  return s;
}

namespace {

int thread_count(const DistanceOptions& opt) {
  if (opt.threads > 0) return opt.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---------------------------------------------------------------------------
// Packed codeword kernels.  A vector occupies size() words of type word.

// GF(2^m): bit plane b holds bit b of every coordinate.  W > 0 fixes the
// number of 64-bit words per plane at compile time.
template <int W>
class Char2Kernel {
 public:
  using word = std::uint64_t;

  Char2Kernel(int n, int planes) : n_(n), planes_(planes), words_(W > 0 ? W : (n + 63) / 64) {}

  int size() const { return planes_ * words(); }
  int n() const { return n_; }

  void pack(const Elem* v, word* out) const {
    std::fill(out, out + size(), word{0});
    for (int j = 0; j < n_; ++j)
      for (int b = 0; b < planes_; ++b)
        if ((v[j].v >> b) & 1) out[b * words() + j / 64] |= word{1} << (j % 64);
  }
  void unpack(const word* v, Elem* out) const {
    for (int j = 0; j < n_; ++j) {
      std::uint16_t x = 0;
      for (int b = 0; b < planes_; ++b)
        if ((v[b * words() + j / 64] >> (j % 64)) & 1) x |= static_cast<std::uint16_t>(1u << b);
      out[j] = Elem{x};
    }
  }
  void add(word* dst, const word* a, const word* b) const {
    const int s = size();
    for (int i = 0; i < s; ++i) dst[i] = a[i] ^ b[i];
  }
  void add_in_place(word* dst, const word* b) const {
    const int s = size();
    for (int i = 0; i < s; ++i) dst[i] ^= b[i];
  }
  int weight(const word* v) const {
    int w = 0;
    for (int i = 0; i < words(); ++i) {
      word acc = 0;
      for (int b = 0; b < planes_; ++b) acc |= v[b * words() + i];
      w += std::popcount(acc);
    }
    return w;
  }
  int sum_weight(const word* a, const word* b) const {
    int w = 0;
    for (int i = 0; i < words(); ++i) {
      word acc = 0;
      for (int p = 0; p < planes_; ++p) acc |= a[p * words() + i] ^ b[p * words() + i];
      w += std::popcount(acc);
    }
    return w;
  }

 private:
  int words() const { return W > 0 ? W : words_; }
  int n_, planes_, words_;
};

// Odd characteristic: plane b holds the GF(p) digit b of every coordinate.
template <class D>
class OddKernel {
 public:
  using word = D;

  OddKernel(const Field& f, int n)
      : f_(&f), n_(n), planes_(f.m()), p_(static_cast<D>(f.p())), stride_((n + 31) / 32 * 32) {}

  int size() const { return planes_ * stride_; }
  int n() const { return n_; }

  void pack(const Elem* v, word* out) const {
    std::fill(out, out + size(), D{0});
    for (int j = 0; j < n_; ++j)
      for (int b = 0; b < planes_; ++b) out[b * stride_ + j] = static_cast<D>(f_->digit(v[j], b));
  }
  void unpack(const word* v, Elem* out) const {
    std::vector<int> digits(planes_);
    for (int j = 0; j < n_; ++j) {
      for (int b = 0; b < planes_; ++b) digits[b] = v[b * stride_ + j];
      out[j] = f_->from_digits(digits);
    }
  }
  void add(word* dst, const word* a, const word* b) const {
    const int s = size();
    const D p = p_;
    for (int i = 0; i < s; ++i) {
      const D x = static_cast<D>(a[i] + b[i]);
      dst[i] = x >= p ? static_cast<D>(x - p) : x;
    }
  }
  void add_in_place(word* dst, const word* b) const { add(dst, dst, b); }
  int weight(const word* v) const {
    int w = 0;
    if (planes_ == 1) {
      for (int j = 0; j < n_; ++j) w += v[j] != 0;
      return w;
    }
    for (int j = 0; j < n_; ++j) {
      D acc = 0;
      for (int b = 0; b < planes_; ++b) acc |= v[b * stride_ + j];
      w += acc != 0;
    }
    return w;
  }
  int sum_weight(const word* a, const word* b) const {
    int w = 0;
    const D p = p_;
    if (planes_ == 1) {
      for (int j = 0; j < n_; ++j) {
        const D x = static_cast<D>(a[j] + b[j]);
        w += (x != 0) & (x != p);
      }
      return w;
    }
    for (int j = 0; j < n_; ++j) {
      bool nz = false;
      for (int c = 0; c < planes_; ++c) {
        const D x = static_cast<D>(a[c * stride_ + j] + b[c * stride_ + j]);
        nz |= (x != 0) & (x != p);
      }
      w += nz;
    }
    return w;
  }

 private:
  const Field* f_;
  int n_, planes_;
  D p_;
  int stride_;
};

// Dispatches `fn(kernel)` on the kernel suited to the code's field.
template <class Fn>
auto with_kernel(const Field& f, int n, Fn&& fn) {
  if (f.p() == 2) {
    if (n <= 64) return fn(Char2Kernel<1>(n, f.m()));
    if (n <= 128) return fn(Char2Kernel<2>(n, f.m()));
    if (n <= 256) return fn(Char2Kernel<4>(n, f.m()));
    return fn(Char2Kernel<0>(n, f.m()));
  }
  if (f.p() < 128) return fn(OddKernel<std::uint8_t>(f, n));
  return fn(OddKernel<std::uint16_t>(f, n));
}

template <class K>
using Store = std::vector<typename K::word>;

// ---------------------------------------------------------------------------
// Gray-code walk over the GF(p)-span of a basis.

// Each worker thread owns one object from make_local(); it is called once
// per visited vector and handed to merge() when the worker finishes.
template <class K, class MakeLocal, class Merge>
void gray_walk(const K& kern, const Store<K>& basis, int count, int p, int threads,
               MakeLocal&& make_local, Merge&& merge, const std::atomic<bool>* stop) {
  const int sz = kern.size();
  // the top digits select independent blocks
  int top = 0;
  std::uint64_t blocks = 1;
  while (top < count && blocks < static_cast<std::uint64_t>(16 * threads)) {
    ++top;
    blocks *= p;
  }
  const int low = count - top;
  std::uint64_t inner = 1;
  for (int i = 0; i < low; ++i) inner *= p;

  std::atomic<std::uint64_t> next{0};
  std::mutex merge_mu;
  auto worker = [&]() {
    auto local = make_local();
    Store<K> cur(sz);
    for (std::uint64_t b; (b = next.fetch_add(1)) < blocks;) {
      if (stop && stop->load(std::memory_order_relaxed)) break;
      std::fill(cur.begin(), cur.end(), typename K::word{0});
      std::uint64_t x = b;
      for (int t = 0; t < top; ++t) {
        const int d = static_cast<int>(x % p);
        x /= p;
        for (int r = 0; r < d; ++r) kern.add_in_place(cur.data(), basis.data() + (low + t) * sz);
      }
      local(cur.data());
      for (std::uint64_t i = 1; i < inner; ++i) {
        // digit t = number of trailing base-p zeros of i moves up by one
        int t = 0;
        if (p == 2) {
          t = std::countr_zero(i);
        } else {
          for (std::uint64_t y = i; y % p == 0; y /= p) ++t;
        }
        kern.add_in_place(cur.data(), basis.data() + t * sz);
        local(cur.data());
        if ((i & 0xFFFF) == 0 && stop && stop->load(std::memory_order_relaxed)) break;
      }
    }
    std::lock_guard<std::mutex> lock(merge_mu);
    merge(local);
  };
  if (threads <= 1 || blocks == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
}

// GF(p)-basis {xi^e g_j} of the code, packed.
template <class K>
Store<K> gf_p_basis(const K& kern, const LinearCode& c) {
  const Field& f = c.field();
  const Mat& g = c.generator();
  const int sz = kern.size();
  Store<K> basis(static_cast<std::size_t>(c.k()) * f.m() * sz);
  std::vector<Elem> row(c.n());
  int idx = 0;
  for (int j = 0; j < c.k(); ++j)
    for (int e = 0; e < f.m(); ++e, ++idx) {
      const Elem s = f.exp(e);
      for (int i = 0; i < c.n(); ++i) row[i] = f.mul(s, g(j, i));
      kern.pack(row.data(), basis.data() + idx * sz);
    }
  return basis;
}

template <class K>
DistanceResult brute_impl(const K& kern, const LinearCode& c, const DistanceOptions& opt) {
  const Field& f = c.field();
  const Store<K> basis = gf_p_basis(kern, c);
  const int n = c.n();
  std::atomic<bool> stop{false};
  struct Local {
    const K* kern;
    std::atomic<bool>* stop;
    int best;
    Store<K> vec;
    std::uint64_t count = 0;
    void operator()(const typename K::word* v) {
      ++count;
      const int w = kern->weight(v);
      if (w == 0 || w >= best) return;
      best = w;
      std::copy(v, v + kern->size(), vec.begin());
      if (w == 1) *stop = true;
    }
  };
  Local total{&kern, &stop, n + 1, Store<K>(kern.size())};
  gray_walk(
      kern, basis, c.k() * f.m(), f.p(), thread_count(opt),
      [&] { return Local{&kern, &stop, n + 1, Store<K>(kern.size())}; },
      [&](const Local& l) {
        total.count += l.count;
        if (l.best < total.best) {
          total.best = l.best;
          total.vec = l.vec;
        }
      },
      &stop);
  DistanceResult r;
  r.value = r.lower = r.upper = total.best;
  r.status = DistanceStatus::Exact;
  r.codewords = total.count;
  r.witness.resize(n);
  kern.unpack(total.vec.data(), r.witness.data());
  return r;
}

// ---------------------------------------------------------------------------
// Brouwer-Zimmermann.

struct InfoMatrix {
  Mat systematic;  // k x n, identity on `pivots`
  std::vector<int> pivots;
  int relative_rank = 0;  // pivots in columns unused by earlier matrices
};

std::vector<InfoMatrix> information_matrices(const LinearCode& c) {
  const int n = c.n(), k = c.k();
  std::vector<bool> used(n, false);
  std::vector<InfoMatrix> out;
  while (true) {
    std::vector<int> order;
    for (int j = 0; j < n; ++j)
      if (!used[j]) order.push_back(j);
    for (int j = 0; j < n; ++j)
      if (used[j]) order.push_back(j);
    Rref r = rref_with_order(c.generator(), order);
    if (r.rank != k) fail(ErrorKind::Internal, "generator matrix lost rank");
    int fresh = 0;
    for (int p : r.pivots)
      if (!used[p]) ++fresh;
    if (fresh == 0) break;
    for (int p : r.pivots) used[p] = true;
    out.push_back({std::move(r.reduced), std::move(r.pivots), fresh});
  }
  return out;
}

struct Unit {
  int matrix, weight;
};

std::string now_iso() {
  const auto t = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  char buf[32];
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Checkpoint {
  long unit = -1;
  int upper = 0;
  std::vector<Elem> witness;
};

Checkpoint read_checkpoint(const std::string& path, const LinearCode& c) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open progress log '" + path + "'");
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  Checkpoint cp;
  if (last.empty()) return cp;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(last);
  } catch (const std::exception& e) {
    fail(ErrorKind::Parse, "bad progress log line: " + std::string(e.what()));
  }
  if (j.value("n", -1) != c.n() || j.value("k", -1) != c.k() || j.value("q", -1) != c.field().q())
    fail(ErrorKind::Precondition, "progress log belongs to a different code");
  cp.unit = j.at("unit").get<long>();
  cp.upper = j.at("upper").get<int>();
  for (int v : j.at("witness").get<std::vector<int>>()) cp.witness.push_back(Elem{static_cast<std::uint16_t>(v)});
  return cp;
}

template <class K>
DistanceResult bz_impl(const K& kern, const LinearCode& c, const DistanceOptions& opt) {
  const Field& f = c.field();
  const int n = c.n(), k = c.k(), q = f.q();
  const int threads = thread_count(opt);
  const int sz = kern.size();
  const auto mats = information_matrices(c);
  const int nm = static_cast<int>(mats.size());

  // mult[j][(row * (q-1) + s) * sz]: packed xi^s * row of matrix j
  std::vector<Store<K>> mult(nm);
  {
    std::vector<Elem> row(n);
    for (int j = 0; j < nm; ++j) {
      mult[j].resize(static_cast<std::size_t>(k) * (q - 1) * sz);
      for (int r = 0; r < k; ++r)
        for (int s = 0; s < q - 1; ++s) {
          const Elem x = f.exp(s);
          for (int i = 0; i < n; ++i) row[i] = f.mul(x, mats[j].systematic(r, i));
          kern.pack(row.data(), mult[j].data() + (static_cast<std::size_t>(r) * (q - 1) + s) * sz);
        }
    }
  }

  std::vector<Unit> units;
  {
    std::vector<int> done(nm, 0);
    for (int w = 1; w <= k; ++w)
      for (int j = 0; j < nm; ++j)
        if (w + 1 - (k - mats[j].relative_rank) > 0)
          for (; done[j] < w;) units.push_back({j, ++done[j]});
  }

  std::vector<int> done(nm, 0);
  auto lower_bound = [&]() {
    int l = 0;
    for (int j = 0; j < nm; ++j) l += std::max(0, done[j] + 1 - (k - mats[j].relative_rank));
    return std::max(l, 1);
  };

  std::atomic<int> best{n + 1};
  std::mutex mu;
  Store<K> best_vec(sz);
  std::vector<Elem> best_witness;
  std::atomic<std::uint64_t> visited{0};

  long start_unit = 0;
  if (opt.resume && !opt.progress_log.empty()) {
    const Checkpoint cp = read_checkpoint(opt.progress_log, c);
    if (cp.unit >= 0) {
      for (long u = 0; u <= cp.unit && u < static_cast<long>(units.size()); ++u)
        done[units[u].matrix] = units[u].weight;
      start_unit = cp.unit + 1;
      best = cp.upper;
      best_witness = cp.witness;
      if (!best_witness.empty()) kern.pack(best_witness.data(), best_vec.data());
    }
  }

  std::ofstream log;
  if (!opt.progress_log.empty()) {
    log.open(opt.progress_log, std::ios::app);
    if (!log) fail(ErrorKind::Io, "cannot open progress log '" + opt.progress_log + "'");
  }

  DistanceResult res;
  res.info_sets = nm;
  auto decided = [&](int lower) -> bool {
    const int up = best.load();
    if (up <= lower) return true;
    if (opt.target && (lower >= *opt.target || up < *opt.target)) return true;
    return false;
  };

  std::atomic<bool> stop{false};
  int lower = lower_bound();
  bool finished = decided(lower);

  for (long u = start_unit; u < static_cast<long>(units.size()) && !finished; ++u) {
    const int j = units[u].matrix, w = units[u].weight;
    const auto& M = mult[j];
    auto vec = [&](int row, int s) { return M.data() + (static_cast<std::size_t>(row) * (q - 1) + s) * sz; };

    // blocks: fixed choice of the first one or two rows (and the second scalar)
    struct Block {
      int r1, r2, s2;
    };
    std::vector<Block> blocks;
    const int prefix = std::min(w - 1, 2);
    if (prefix == 0) {
      blocks.push_back({-1, -1, -1});
    } else if (prefix == 1) {
      for (int r1 = 0; r1 <= k - w; ++r1) blocks.push_back({r1, -1, -1});
    } else {
      for (int r1 = 0; r1 <= k - w; ++r1)
        for (int r2 = r1 + 1; r2 <= k - w + 1; ++r2)
          for (int s2 = 0; s2 < q - 1; ++s2) blocks.push_back({r1, r2, s2});
    }

    const int bound_now = lower;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      std::vector<Store<K>> partial(w + 1, Store<K>(sz));
      std::uint64_t count = 0;
      auto improve = [&](const typename K::word* a, const typename K::word* b, int wt) {
        std::lock_guard<std::mutex> lock(mu);
        if (wt < best.load()) {
          kern.add(best_vec.data(), a, b);
          best = wt;
          if (wt <= bound_now || (opt.target && wt < *opt.target)) stop = true;
        }
      };
      // depth d: rows chosen so far live in partial[d]; the first row has scalar 1
      auto rec = [&](auto&& self, int depth, int start) -> void {
        const int remaining = w - depth;
        const int s_last = depth == 0 ? 1 : q - 1;  // first nonzero coefficient is 1
        if (remaining == 1) {
          const auto* base = partial[depth].data();
          int local = best.load(std::memory_order_relaxed);
          for (int r = start; r < k; ++r)
            for (int s = 0; s < s_last; ++s) {
              const int wt = kern.sum_weight(base, vec(r, s));
              ++count;
              if (wt < local) {
                improve(base, vec(r, s), wt);
                local = best.load();
              }
            }
          return;
        }
        for (int r = start; r <= k - remaining; ++r)
          for (int s = 0; s < s_last; ++s) {
            kern.add(partial[depth + 1].data(), partial[depth].data(), vec(r, s));
            self(self, depth + 1, r + 1);
          }
      };
      for (std::size_t b; (b = next.fetch_add(1)) < blocks.size();) {
        if (stop.load(std::memory_order_relaxed)) break;
        const Block& bl = blocks[b];
        std::fill(partial[0].begin(), partial[0].end(), typename K::word{0});
        if (prefix == 0) {
          rec(rec, 0, 0);
        } else if (prefix == 1) {
          kern.add(partial[1].data(), partial[0].data(), vec(bl.r1, 0));
          rec(rec, 1, bl.r1 + 1);
        } else {
          kern.add(partial[1].data(), partial[0].data(), vec(bl.r1, 0));
          kern.add(partial[2].data(), partial[1].data(), vec(bl.r2, bl.s2));
          rec(rec, 2, bl.r2 + 1);
        }
      }
      visited.fetch_add(count);
    };
    if (threads <= 1 || blocks.size() == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      const int nt = static_cast<int>(std::min<std::size_t>(threads, blocks.size()));
      for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (stop.load()) {
      // the unit was cut short; its weight does not count towards the bound
      finished = true;
      break;
    }
    done[j] = w;
    lower = lower_bound();
    if (log) {
      std::vector<int> wv(n);
      std::vector<Elem> tmp(n);
      kern.unpack(best_vec.data(), tmp.data());
      for (int i = 0; i < n; ++i) wv[i] = best.load() <= n ? tmp[i].v : 0;
      nlohmann::json line = {{"unit", u},       {"round", w},         {"matrix", j},
                             {"block", std::to_string(w) + ":" + std::to_string(j)},
                             {"upper", best.load()}, {"best", best.load()}, {"lower", lower},
                             {"n", n},          {"k", k},             {"q", q},
                             {"codewords", visited.load()}, {"witness", wv},
                             {"timestamp", now_iso()}};
      log << line.dump() << '\n';
      log.flush();
    }
    finished = decided(lower);
  }

  // every unit done means matrix 0 (a full information set) was enumerated completely
  const int up = best.load();
  res.upper = up;
  res.lower = std::min(std::max(lower, 1), up);
  res.codewords = visited.load();
  const bool all_done = done.empty() ? true : done[0] >= k;
  if (up <= lower || all_done) {
    res.status = DistanceStatus::Exact;
    res.value = up;
    res.lower = up;
  } else if (opt.target && up < *opt.target) {
    res.status = DistanceStatus::Upper;
    res.value = up;
  } else {
    res.status = DistanceStatus::Lower;
    res.value = res.lower;
  }
  if (up <= n) {
    res.witness.resize(n);
    kern.unpack(best_vec.data(), res.witness.data());
  }
  return res;
}

template <class K>
WeightEnumerator enumerate_weights(const K& kern, const LinearCode& c, int threads) {
  const Field& f = c.field();
  const Store<K> basis = gf_p_basis(kern, c);
  struct Local {
    const K* kern;
    WeightEnumerator hist;
    void operator()(const typename K::word* v) { ++hist[kern->weight(v)]; }
  };
  WeightEnumerator total(c.n() + 1, 0);
  gray_walk(
      kern, basis, c.k() * f.m(), f.p(), threads,
      [&] { return Local{&kern, WeightEnumerator(c.n() + 1, 0)}; },
      [&](const Local& l) {
        for (std::size_t w = 0; w < total.size(); ++w) total[w] += l.hist[w];
      },
      nullptr);
  return total;
}

}  // namespace

DistanceResult brute_distance(const LinearCode& c, const DistanceOptions& opt) {
  if (c.k() == 0) {
    DistanceResult r;
    r.value = r.lower = r.upper = c.n() + 1;
    r.status = DistanceStatus::Exact;
    return r;
  }
  if (code_size(c.field().q(), c.k()) > opt.budget)
    fail(ErrorKind::Budget, "q^k exceeds the brute-force budget; use the information-set engine");
  return with_kernel(c.field(), c.n(), [&](const auto& kern) { return brute_impl(kern, c, opt); });
}

DistanceResult bz_distance(const LinearCode& c, const DistanceOptions& opt) {
  if (c.k() == 0) {
    DistanceResult r;
    r.value = r.lower = r.upper = c.n() + 1;
    r.status = DistanceStatus::Exact;
    return r;
  }
  return with_kernel(c.field(), c.n(), [&](const auto& kern) { return bz_impl(kern, c, opt); });
}

DistanceResult minimum_distance(const LinearCode& c, const DistanceOptions& opt) {
  if (!opt.target && code_size(c.field().q(), c.k()) <= std::min<std::uint64_t>(opt.budget, 1u << 12))
    return brute_distance(c, opt);
  return bz_distance(c, opt);
}

WeightEnumerator direct_weight_enumerator(const LinearCode& c, std::uint64_t budget) {
  if (code_size(c.field().q(), c.k()) > budget)
    fail(ErrorKind::Budget, "weight enumeration exceeds the budget");
  if (c.k() == 0) {
    WeightEnumerator w(c.n() + 1, 0);
    w[0] = 1;
    return w;
  }
  return with_kernel(c.field(), c.n(),
                     [&](const auto& kern) { return enumerate_weights(kern, c, 1); });
}

WeightEnumerator weight_enumerator(const LinearCode& c, std::uint64_t budget) {
  if (c.k() <= c.n() - c.k()) return direct_weight_enumerator(c, budget);
  const LinearCode d = euclidean_dual(c);
  return macwilliams(direct_weight_enumerator(d, budget), c.n(), d.k(), c.field().q());
}

BigInt krawtchouk(int j, int i, int n, int q) {
  auto binom = [](int a, int b) -> BigInt {
    if (b < 0 || b > a) return 0;
    BigInt r = 1;
    for (int t = 1; t <= b; ++t) r = r * (a - b + t) / t;
    return r;
  };
  BigInt sum = 0;
  for (int s = 0; s <= j; ++s) {
    BigInt term = binom(i, s) * binom(n - i, j - s);
    if (term == 0) continue;
    BigInt pw = 1;
    for (int t = 0; t < j - s; ++t) pw *= (q - 1);
    term *= pw;
    if (s % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

WeightEnumerator macwilliams(const WeightEnumerator& w, int n, int k, int q) {
  if (static_cast<int>(w.size()) != n + 1) fail(ErrorKind::Precondition, "enumerator length must be n+1");
  BigInt size = 1;
  for (int t = 0; t < k; ++t) size *= q;
  WeightEnumerator out(n + 1, 0);
  for (int j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (int i = 0; i <= n; ++i)
      if (w[i]) acc += BigInt(w[i]) * krawtchouk(j, i, n, q);
    if (acc % size != 0 || acc < 0)
      fail(ErrorKind::Internal, "MacWilliams transform is not integral; input is not a linear code's enumerator");
    acc /= size;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      fail(ErrorKind::Budget, "dual weight count overflows 64 bits");
    out[j] = static_cast<std::uint64_t>(acc);
  }
  return out;
}

}  // namespace consta
