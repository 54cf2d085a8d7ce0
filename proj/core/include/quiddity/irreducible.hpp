#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "quiddity/quiddity.hpp"
#include "quiddity/ring.hpp"

namespace quid {

/// Next frieze column for the prefix c.x, given the two previous columns
/// u (length n+1) and v (length n+2) of the prefix c of length n. The result
/// w has length n+3: w = (0, 1, x, x v_3 - u_2, ..., x v_{n+2} - u_{n+1})
/// in 1-based positions, i.e. entry j+2 is the continuant of the last j
/// entries of c.x.
std::vector<Elem> extend_columns(const Ring& ring, std::span<const Elem> u,
                                 std::span<const Elem> v, Elem x);

/// Dihedral canonical representatives of irreducible solutions over Z/NZ.
class ClassSet {
 public:
  explicit ClassSet(std::uint32_t modulus) : modulus_(modulus) {}

  std::uint32_t modulus() const { return modulus_; }
  std::size_t size() const { return members_.size(); }
  /// Largest member length, 0 when empty.
  std::size_t max_length() const;
  const std::map<std::size_t, std::size_t>& tallies() const { return tallies_; }

  /// Inserts an already canonical tuple; returns false if present.
  bool insert(std::span<const Elem> canonical);
  bool contains(std::span<const Elem> canonical) const;
  void merge(const ClassSet& other);

  /// Members ordered by length, then lexicographically.
  std::vector<std::vector<Elem>> sorted_members() const;

  /// Set when some branch hit the length cap without closing.
  bool complete = true;
  std::uint64_t truncated_branches = 0;
  std::size_t max_len = 0;

  friend bool operator==(const ClassSet& a, const ClassSet& b) {
    return a.modulus_ == b.modulus_ && a.members_ == b.members_;
  }

 private:
  std::uint32_t modulus_;
  std::unordered_set<std::string> members_;
  std::map<std::size_t, std::size_t> tallies_;
};

struct EnumerateOptions {
  std::size_t max_len = 12;
  unsigned jobs = 1;
  /// Keep only prefixes d with reverse(d) >= d.
  bool prune = true;
};

/// Depth-first column-propagation search for irreducible solutions over
/// Z/NZ. Prefixes grow while no continuant of a suffix is +/-1; a +/-1 in the
/// full-prefix position triggers the two-step closure, anywhere else it
/// proves reducibility and the branch is dropped.
ClassSet enumerate_irreducible(const Ring& ring, const EnumerateOptions& options);

/// Definitional oracle: every solution of length 3..max_len, canonicalized,
/// kept when is_reducible is false. Throws ResourceLimit when
/// |R|^max_len exceeds kNaiveLimit.
ClassSet oracle_irreducible_classes(const Ring& ring, std::size_t max_len);

/// Size-4 irreducible solutions over Z/2^{2m}Z: (a, 0, -a, 0) for
/// 0 <= a <= N/2, a != 1 (k = 0), and
/// (2^{m+k} a, 2^{m-k} b, -2^{m+k} a, -2^{m-k} b) for 1 <= k <= m-1 with a, b
/// odd, 0 <= a <= 2^{m-k}, 0 <= b <= 2^{m+k}.
struct Pow2Member {
  Quiddity tuple;
  unsigned k;
};
std::vector<Pow2Member> pow2_family(unsigned m);

struct VTableRow {
  std::uint32_t modulus = 0;
  std::size_t v = 0;
  std::size_t ell = 0;
  bool complete = false;
  std::uint64_t truncated_branches = 0;
  std::size_t max_len = 0;
};

struct VTableBudget {
  std::size_t start_len = 8;
  std::size_t len_step = 2;
  std::size_t max_len_cap = 32;
  /// Wall-clock limit per N; non-positive means unlimited.
  double seconds_per_modulus = 0;
  unsigned jobs = 1;
};

/// Runs enumerate_irreducible with a growing length cap until no branch is
/// truncated or the budget runs out.
VTableRow v_row(std::uint32_t modulus, const VTableBudget& budget);
std::vector<VTableRow> v_table(std::uint32_t max_modulus,
                               const VTableBudget& budget);

}  // namespace quid
