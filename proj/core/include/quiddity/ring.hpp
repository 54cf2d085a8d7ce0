#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quid {

/// A ring element, identified by its position in the ring's canonical
/// enumeration. For Z/NZ this is the residue 0..N-1; for F_{p^k} it is the
/// base-p encoding sum c_i p^i of the reduced polynomial representative.
struct Elem {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

enum class RingKind { Zmod, FiniteField };

struct RingSpec {
  RingKind kind = RingKind::Zmod;
  std::uint32_t modulus = 2;         // Zmod only
  std::uint32_t characteristic = 0;  // FiniteField only
  unsigned degree = 0;               // FiniteField only
  std::vector<std::uint32_t> poly;   // c0..ck, monic; empty picks a default

  static RingSpec zmod(std::uint32_t n);
  static RingSpec field(std::uint32_t p, unsigned k,
                        std::vector<std::uint32_t> poly = {});

  /// Parses `zmod:N` or `gf:p^k[:poly=c0,c1,...,ck]`.
  static RingSpec parse(std::string_view text);

  std::string to_string() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Finite commutative ring: Z/NZ or F_{p^k}. Immutable and cheap to copy;
/// copies share the arithmetic tables.
class Ring {
 public:
  explicit Ring(RingSpec spec);

  const RingSpec& spec() const;
  RingKind kind() const { return spec().kind; }
  std::uint32_t size() const { return size_; }
  std::uint32_t characteristic() const;
  bool is_zmod() const { return kind() == RingKind::Zmod; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem minus_one() const { return neg(one()); }

  /// Image of an integer under Z -> R.
  Elem from_int(long long value) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;

  bool is_unit(Elem a) const;
  /// Throws InvalidArgument when `a` is not a unit.
  Elem inv(Elem a) const;
  std::optional<Elem> try_inv(Elem a) const;

  /// True for 1 and -1 (a single element in characteristic 2).
  bool is_pm_one(Elem a) const {
    return a.index == 1 || a == minus_one_;
  }

  std::vector<Elem> elements() const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.impl_ == b.impl_ || a.spec() == b.spec();
  }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  std::uint32_t size_ = 0;
  Elem minus_one_;
};

/// make_ring from the build contract; equivalent to the constructor.
inline Ring make_ring(RingSpec spec) { return Ring(std::move(spec)); }

/// Built-in default reduction polynomial (c0..ck) for F_{p^k}; searches for
/// the first irreducible monic polynomial when no table entry exists.
std::vector<std::uint32_t> default_field_polynomial(std::uint32_t p, unsigned k);

/// Exhaustive irreducibility test over F_p for a monic polynomial c0..ck.
bool is_irreducible_over_fp(std::span<const std::uint32_t> poly, std::uint32_t p);

bool is_prime(std::uint64_t n);

/// Prime-power factorization of n, as the list of factors p^alpha in
/// increasing order of p.
std::vector<std::uint32_t> prime_power_factors(std::uint32_t n);

/// Componentwise reduction of tuples over Z/NZ onto pairwise coprime factors,
/// with its inverse.
class CrtSplit {
 public:
  CrtSplit(std::uint32_t modulus, std::vector<std::uint32_t> factors);

  std::uint32_t modulus() const { return modulus_; }
  const std::vector<std::uint32_t>& factors() const { return factors_; }
  const std::vector<Ring>& components() const { return components_; }

  std::vector<std::vector<Elem>> split(std::span<const Elem> tuple) const;
  std::vector<Elem> recombine(std::span<const std::vector<Elem>> parts) const;

 private:
  std::uint32_t modulus_;
  std::vector<std::uint32_t> factors_;
  std::vector<Ring> components_;
  // idempotents e_i with e_i = 1 mod f_i, 0 mod f_j
  std::vector<std::uint64_t> idempotents_;
};

inline CrtSplit crt_split(std::uint32_t modulus,
                          std::vector<std::uint32_t> factors) {
  return CrtSplit(modulus, std::move(factors));
}

}  // namespace quid
