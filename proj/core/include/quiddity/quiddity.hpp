#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quiddity/mat2.hpp"
#include "quiddity/ring.hpp"

namespace quid {

/// A finite tuple (a_1, ..., a_n), n >= 1, over a single ring.
class Quiddity {
 public:
  Quiddity(Ring ring, std::vector<Elem> entries);
  /// Entries given as integers, reduced into the ring.
  Quiddity(Ring ring, std::initializer_list<long long> values);

  const Ring& ring() const { return ring_; }
  std::span<const Elem> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Elem operator[](std::size_t i) const { return entries_[i]; }

  /// `zmod:8:(2,2,6,2)`
  std::string to_string() const;
  static Quiddity parse(std::string_view text);

  friend bool operator==(const Quiddity& x, const Quiddity& y) {
    return x.ring_ == y.ring_ && x.entries_ == y.entries_;
  }

 private:
  Ring ring_;
  std::vector<Elem> entries_;
};

Mat2 product(const Quiddity& t);

/// (a_1 + b_m, a_2, ..., a_{n-1}, a_n + b_1, b_2, ..., b_{m-1}); both operands
/// need length >= 2.
Quiddity oplus(const Quiddity& a, const Quiddity& b);

/// Lexicographic minimum over the 2n rotations of t and of its reversal.
struct CanonicalClass {
  Quiddity representative;

  friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
};

CanonicalClass canonical_rep(const Quiddity& t);

/// All 2n dihedral images, rotations of t first, then rotations of reverse(t).
std::vector<std::vector<Elem>> dihedral_images(std::span<const Elem> t);

/// Index-level canonical form used by the enumerators.
std::vector<Elem> canonical_form(std::span<const Elem> t);

bool is_lambda_quiddity(const Quiddity& t);

/// Whether some dihedral image of t splits as a (+) b with b a solution and
/// both parts of length >= 3. Requires t to be a solution of length >= 3.
bool is_reducible(const Quiddity& t);

Quiddity negate(const Quiddity& t);

/// (lambda a_1, lambda^-1 a_2, ..., lambda a_{2m-1}, lambda^-1 a_{2m}).
/// Requires even length and a unit lambda.
Quiddity scale(const Quiddity& t, Elem lambda);

/// Explicit solution inventories for sizes 1..4, sorted by canonical index
/// order and free of duplicates.
std::vector<Quiddity> small_solutions(const Ring& ring, std::size_t n,
                                      Sign sign);

}  // namespace quid
