#include "quiddity/irreducible.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

#include "quiddity/counting.hpp"
#include "quiddity/error.hpp"

namespace quid {

namespace {

std::string encode(std::span<const Elem> t) {
  std::string s(t.size(), '\0');
  for (std::size_t i = 0; i < t.size(); ++i) {
    s[i] = static_cast<char>(t[i].index);
  }
  return s;
}

std::vector<Elem> decode(const std::string& s) {
  std::vector<Elem> t(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    t[i] = Elem{static_cast<unsigned char>(s[i])};
  }
  return t;
}

// Column kernel over raw residues, 1-based: w[1..n+3] from u[1..n+1] and
// v[1..n+2].
inline void extend_raw(std::uint32_t mod, const std::uint32_t* u,
                       const std::uint32_t* v, std::uint32_t x, std::size_t n,
                       std::uint32_t* w) {
  w[1] = 0;
  w[2] = 1 % mod;
  w[3] = x;
  for (std::size_t i = 3; i <= n + 2; ++i) {
    w[i + 1] = static_cast<std::uint32_t>(
        (std::uint64_t{x} * v[i] + mod - u[i - 1]) % mod);
  }
}

class Search {
 public:
  Search(std::uint32_t mod, const EnumerateOptions& opt, ClassSet& out)
      : mod_(mod),
        max_len_(opt.max_len),
        prune_(opt.prune),
        out_(out),
        prefix_(opt.max_len + 1, 0),
        cols_(opt.max_len + 3, std::vector<std::uint32_t>(opt.max_len + 8, 0)),
        w1_(opt.max_len + 8, 0),
        w2_(opt.max_len + 8, 0),
        tuple_(opt.max_len + 3) {
    // cols_[k + 1] is the column of the prefix of length k
    cols_[0][1] = 0;
    cols_[1][1] = 0;
    cols_[1][2] = 1 % mod_;
  }

  /// Loads a prefix and its columns; returns false if the prefix itself
  /// would have been cut (pruned, or a +/-1 seen along the way).
  bool load(std::span<const std::uint32_t> prefix) {
    for (std::size_t n = 0; n < prefix.size(); ++n) {
      prefix_[n] = prefix[n];
      extend_raw(mod_, cols_[n].data(), cols_[n + 1].data(), prefix[n], n,
                 cols_[n + 2].data());
    }
    return true;
  }

  /// Expands every child of the prefix of length n. When split_depth is
  /// reached the node is handed to `defer` instead.
  template <class Defer>
  void visit(std::size_t n, std::size_t split_depth, Defer&& defer) {
    if (n == split_depth) {
      defer(std::span<const std::uint32_t>(prefix_.data(), n));
      return;
    }
    const std::uint32_t* u = cols_[n].data();
    const std::uint32_t* v = cols_[n + 1].data();
    std::uint32_t* w = cols_[n + 2].data();
    for (std::uint32_t x = 0; x < mod_; ++x) {
      prefix_[n] = x;
      if (prune_ && reversed_is_smaller(n + 1)) continue;
      extend_raw(mod_, u, v, x, n, w);
      bool interior = false;
      for (std::size_t i = 3; i <= n + 2; ++i) {
        if (pm_one(w[i])) {
          interior = true;
          break;
        }
      }
      if (interior) continue;
      if (pm_one(w[n + 3])) {
        close(n, v, w);
      } else if (n + 4 > max_len_) {
        ++truncated_;
      } else {
        visit(n + 1, split_depth, defer);
      }
    }
  }

  std::uint64_t truncated() const { return truncated_; }

 private:
  bool pm_one(std::uint32_t a) const { return a == 1 % mod_ || a == mod_ - 1; }

  // d = prefix_[0..len-1]; true when reverse(d) < d
  bool reversed_is_smaller(std::size_t len) const {
    for (std::size_t i = 0, j = len - 1; i < j; ++i, --j) {
      if (prefix_[j] != prefix_[i]) return prefix_[j] < prefix_[i];
    }
    return false;
  }

  // Prefix d = prefix_[0..n] has its full continuant w_{n+3} = eps. Append the
  // forced y and z and keep the tuple if no interior +/-1 appears and the
  // final continuant is -eps.
  void close(std::size_t n, const std::uint32_t* v, const std::uint32_t* w) {
    const std::uint32_t eps = w[n + 3];
    const std::uint32_t y =
        static_cast<std::uint32_t>(std::uint64_t{eps} * v[n + 2] % mod_);
    extend_raw(mod_, v, w, y, n + 1, w1_.data());
    for (std::size_t i = 3; i <= n + 2; ++i) {
      if (pm_one(w1_[i])) return;
    }
    const std::uint32_t z =
        static_cast<std::uint32_t>(std::uint64_t{eps} * w[n + 2] % mod_);
    extend_raw(mod_, w, w1_.data(), z, n + 2, w2_.data());
    for (std::size_t i = 3; i <= n + 2; ++i) {
      if (pm_one(w2_[i])) return;
    }
    const std::uint32_t minus_eps = (mod_ - eps) % mod_;
    if (w2_[n + 5] != minus_eps) return;
    const std::size_t len = n + 3;
    for (std::size_t i = 0; i <= n; ++i) tuple_[i] = Elem{prefix_[i]};
    tuple_[n + 1] = Elem{y};
    tuple_[n + 2] = Elem{z};
    out_.insert(canonical_form(std::span<const Elem>(tuple_.data(), len)));
  }

  std::uint32_t mod_;
  std::size_t max_len_;
  bool prune_;
  ClassSet& out_;
  std::vector<std::uint32_t> prefix_;
  std::vector<std::vector<std::uint32_t>> cols_;
  std::vector<std::uint32_t> w1_, w2_;
  std::vector<Elem> tuple_;
  std::uint64_t truncated_ = 0;
};

}  // namespace

std::vector<Elem> extend_columns(const Ring& ring, std::span<const Elem> u,
                                 std::span<const Elem> v, Elem x) {
  if (u.empty() || v.size() != u.size() + 1) {
    throw InvalidArgument("extend_columns: expected |u| = n+1, |v| = n+2");
  }
  const std::size_t n = u.size() - 1;
  std::vector<Elem> w(n + 3);
  w[0] = ring.zero();
  w[1] = ring.one();
  w[2] = x;
  // 0-based: w[i] = x v[i-1] - u[i-2] for i = 3..n+2
  for (std::size_t i = 3; i <= n + 2; ++i) {
    w[i] = ring.sub(ring.mul(x, v[i - 1]), u[i - 2]);
  }
  return w;
}

// ---------------------------------------------------------------------------
// ClassSet

std::size_t ClassSet::max_length() const {
  return tallies_.empty() ? 0 : tallies_.rbegin()->first;
}

bool ClassSet::insert(std::span<const Elem> canonical) {
  if (!members_.insert(encode(canonical)).second) return false;
  ++tallies_[canonical.size()];
  return true;
}

bool ClassSet::contains(std::span<const Elem> canonical) const {
  return members_.count(encode(canonical)) != 0;
}

void ClassSet::merge(const ClassSet& other) {
  for (const auto& s : other.members_) {
    if (members_.insert(s).second) ++tallies_[s.size()];
  }
  truncated_branches += other.truncated_branches;
  complete = complete && other.complete;
}

std::vector<std::vector<Elem>> ClassSet::sorted_members() const {
  std::vector<std::string> keys(members_.begin(), members_.end());
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
          return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
        });
  });
  std::vector<std::vector<Elem>> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(decode(k));
  return out;
}

// ---------------------------------------------------------------------------
// Enumerator

ClassSet enumerate_irreducible(const Ring& ring,
                               const EnumerateOptions& options) {
  if (!ring.is_zmod()) {
    throw Unsupported("enumerate_irreducible runs over Z/NZ only");
  }
  const std::uint32_t mod = ring.size();
  if (mod > 256) {
    throw Unsupported("enumerate_irreducible: class encoding needs N <= 256");
  }
  if (options.max_len < 4) {
    throw InvalidArgument("enumerate_irreducible needs max_len >= 4");
  }
  ClassSet result(mod);
  result.max_len = options.max_len;

  const unsigned jobs = std::max(1u, options.jobs);
  constexpr std::size_t kSplit = 2;
  std::uint64_t truncated = 0;
  std::vector<std::vector<std::uint32_t>> tasks;
  {
    Search root(mod, options, result);
    const std::size_t split = jobs > 1 ? kSplit : options.max_len + 1;
    root.visit(0, split, [&](std::span<const std::uint32_t> p) {
      tasks.emplace_back(p.begin(), p.end());
    });
    truncated += root.truncated();
  }

  if (!tasks.empty()) {
    std::atomic<std::size_t> next{0};
    std::mutex merge_mutex;
    auto worker = [&] {
      ClassSet local(mod);
      std::uint64_t local_truncated = 0;
      for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
        Search s(mod, options, local);
        s.load(tasks[i]);
        s.visit(tasks[i].size(), options.max_len + 1,
                [](std::span<const std::uint32_t>) {});
        local_truncated += s.truncated();
      }
      std::lock_guard lock(merge_mutex);
      result.merge(local);
      truncated += local_truncated;
    };
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  result.truncated_branches = truncated;
  result.complete = truncated == 0;
  return result;
}

// ---------------------------------------------------------------------------
// Oracle

ClassSet oracle_irreducible_classes(const Ring& ring, std::size_t max_len) {
  if (!ring.is_zmod()) throw Unsupported("oracle runs over Z/NZ only");
  const std::uint32_t q = ring.size();
  if (q > 256) throw Unsupported("oracle: class encoding needs N <= 256");
  if (std::pow(static_cast<double>(q), static_cast<double>(max_len)) >
      static_cast<double>(kNaiveLimit)) {
    throw ResourceLimit("oracle: " + std::to_string(q) + "^" +
                        std::to_string(max_len) + " tuples exceed the guard");
  }
  ClassSet solutions(q);
  std::vector<Elem> tuple;
  std::vector<Mat2> prefix;
  // enumerate all tuples up to max_len, recording canonical solutions of
  // length >= 3
  auto rec = [&](auto&& self) -> void {
    const std::size_t len = tuple.size();
    if (len >= 3 && classify(ring, prefix.back()) != Target::Other) {
      const auto canon = canonical_form(tuple);
      if (canon == tuple) solutions.insert(canon);
    }
    if (len == max_len) return;
    for (std::uint32_t a = 0; a < q; ++a) {
      const Mat2 step = m1(ring, Elem{a});
      tuple.push_back(Elem{a});
      prefix.push_back(prefix.empty() ? step : mul(ring, step, prefix.back()));
      self(self);
      tuple.pop_back();
      prefix.pop_back();
    }
  };
  rec(rec);

  ClassSet result(q);
  result.max_len = max_len;
  for (const auto& t : solutions.sorted_members()) {
    if (!is_reducible(Quiddity(ring, t))) result.insert(t);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Families over Z/2^{2m}Z

std::vector<Pow2Member> pow2_family(unsigned m) {
  if (m < 2 || m > 15) throw InvalidArgument("pow2_family needs 2 <= m <= 15");
  const std::int64_t big_n = std::int64_t{1} << (2 * m);
  const Ring ring(RingSpec::zmod(static_cast<std::uint32_t>(big_n)));
  std::vector<Pow2Member> out;
  for (std::int64_t a = 0; a <= big_n / 2; ++a) {
    if (a == 1) continue;
    out.push_back({Quiddity(ring, {a, 0, -a, 0}), 0});
  }
  for (unsigned k = 1; k + 1 <= m; ++k) {
    const std::int64_t sa = std::int64_t{1} << (m + k);
    const std::int64_t sb = std::int64_t{1} << (m - k);
    for (std::int64_t a = 1; a <= sb; a += 2) {
      for (std::int64_t b = 1; b <= sa; b += 2) {
        out.push_back(
            {Quiddity(ring, {sa * a, sb * b, -sa * a, -sb * b}), k});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// v_N driver

VTableRow v_row(std::uint32_t modulus, const VTableBudget& budget) {
  const Ring ring(RingSpec::zmod(modulus));
  const auto start = std::chrono::steady_clock::now();
  VTableRow row;
  row.modulus = modulus;
  for (std::size_t len = std::max<std::size_t>(budget.start_len, 4);;
       len += std::max<std::size_t>(budget.len_step, 1)) {
    len = std::min(len, budget.max_len_cap);
    EnumerateOptions opt;
    opt.max_len = len;
    opt.jobs = budget.jobs;
    const ClassSet classes = enumerate_irreducible(ring, opt);
    row.v = classes.size();
    row.ell = classes.max_length();
    row.complete = classes.complete;
    row.truncated_branches = classes.truncated_branches;
    row.max_len = len;
    if (classes.complete || len >= budget.max_len_cap) break;
    const std::chrono::duration<double> spent =
        std::chrono::steady_clock::now() - start;
    if (budget.seconds_per_modulus > 0 &&
        spent.count() > budget.seconds_per_modulus) {
      break;
    }
  }
  return row;
}

std::vector<VTableRow> v_table(std::uint32_t max_modulus,
                               const VTableBudget& budget) {
  std::vector<VTableRow> rows;
  for (std::uint32_t n = 2; n <= max_modulus; ++n) {
    rows.push_back(v_row(n, budget));
  }
  return rows;
}

}  // namespace quid
