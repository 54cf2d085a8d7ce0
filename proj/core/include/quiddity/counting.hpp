#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "quiddity/mat2.hpp"
#include "quiddity/ring.hpp"

namespace quid {

using BigInt = mpz_class;

// ---------------------------------------------------------------------------
// q-analogues

/// [m]_q = (q^m - 1) / (q - 1)
BigInt q_int(unsigned m, const BigInt& q);

/// Gaussian coefficient binom(m, 2)_q = (q^m - 1)(q^{m-1} - 1) / ((q-1)(q^2-1)).
BigInt q_binom2(unsigned m, const BigInt& q);

/// Checks (q^{2m-2} - 1)/(q^2 - 1) + q binom(m-1, 2)_q == binom(m, 2)_q, m >= 2.
bool q_binom2_identity_holds(unsigned m, const BigInt& q);

// ---------------------------------------------------------------------------
// Closed forms

/// Number of n-tuples over F_q with M_n = +/-Id, n > 4. Throws Unsupported
/// for n <= 4 and for the even-length Plus count in characteristic 2.
BigInt u_formula(unsigned n, std::uint64_t q, std::uint32_t p, Sign sign);

/// Number of n-tuples over Z/4Z with M_n = +/-Id, n >= 3.
BigInt w4_formula(unsigned n, Sign sign);

/// Count over Z/NZ as the product of per-factor counts. Factors may be odd
/// primes, 2 and 4; any other prime power throws Unsupported.
BigInt crt_count(unsigned n, std::uint32_t modulus, Sign sign);

/// Prior values for one step of the general recurrence, for target B and -B.
struct RecurrenceInputs {
  BigInt b1, b2, b3, b4;      // u^B at n-1, n-2, n-3, n-4
  BigInt nb1, nb2, nb3, nb4;  // u^{-B} at n-1, n-2, n-3, n-4
};

/// u^B_n = (q-1)(u^B_{n-1} - q u^{-B}_{n-3}) + q u^{-B}_{n-2}
///         + q (u^B_{n-2} - q u^{-B}_{n-4}),   n > 4.
BigInt recurrence_step(const RecurrenceInputs& in, const BigInt& q, unsigned n);

/// Values u^B_k and u^{-B}_k for k = 1..n_max over a finite field, driven by
/// recurrence_step from bases at k <= 4. Bases come from small_solutions for
/// B = +/-Id and from naive_count otherwise. Index 0 is unused.
struct SignedSeries {
  std::vector<BigInt> plus;   // u^B
  std::vector<BigInt> minus;  // u^{-B}
};
SignedSeries recurrence_series(const Ring& field, const Mat2& target,
                               unsigned n_max);

/// w^B_n over Z/4Z via w_n^B = w_{n-1}^B + w_{n-1}^{-B} + 6 w_{n-2}^{-B}
/// + 2 w_{n-2}^B, from bases at n = 2, 3 computed by naive_count. B is given
/// over Z/4Z. n >= 2.
BigInt z4_recurrence(const Mat2& target, unsigned n);

enum class StTarget { S, MinusS, T, MinusT };

/// Closed forms for w^{+/-S}_{n,4} and w^{+/-T}_{n,4}, n >= 2.
BigInt st_formula(unsigned n, StTarget target);

/// Mat2 over Z/4Z for an StTarget.
Mat2 st_matrix(const Ring& z4, StTarget target);

/// Number of parity sequences of triangulations of an n-gon, n >= 3.
BigInt parity_count(unsigned n);

// ---------------------------------------------------------------------------
// Exact counters

/// SL_2(R), materialized once and densely indexed.
class Sl2Group {
 public:
  /// Throws ResourceLimit when |R|^4 exceeds the scan guard.
  explicit Sl2Group(Ring ring);

  const Ring& ring() const { return ring_; }
  std::size_t size() const { return elements_.size(); }
  const Mat2& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Mat2>& elements() const { return elements_; }

  /// Throws InvalidArgument for a matrix outside SL_2(R).
  std::size_t index_of(const Mat2& m) const;

  static constexpr std::uint64_t kScanLimit = std::uint64_t{1} << 20;

 private:
  std::uint64_t key(const Mat2& m) const;

  Ring ring_;
  std::vector<Mat2> elements_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

/// Exact number of n-tuples reaching each element of SL_2(R).
class CountVector {
 public:
  CountVector(std::shared_ptr<const Sl2Group> group, unsigned n,
              std::vector<BigInt> counts);

  const Ring& ring() const { return group_->ring(); }
  const Sl2Group& group() const { return *group_; }
  unsigned length() const { return n_; }
  const std::vector<BigInt>& counts() const { return counts_; }

  const BigInt& operator[](const Mat2& m) const;
  const BigInt& at(Sign sign) const;
  BigInt total() const;

 private:
  std::shared_ptr<const Sl2Group> group_;
  unsigned n_;
  std::vector<BigInt> counts_;
};

/// Transfer-matrix count over SL_2(R) for length n >= 1.
CountVector dp_count_all(const Ring& ring, unsigned n);

/// dp_count_all for every length 1..n_max in one pass; element k-1 holds
/// length k.
std::vector<CountVector> dp_count_series(const Ring& ring, unsigned n_max);

/// Literal enumeration of all |R|^n tuples. Throws ResourceLimit when
/// |R|^n > kNaiveLimit.
BigInt naive_count(const Ring& ring, unsigned n, const Mat2& target,
                   unsigned jobs = 1);

inline constexpr std::uint64_t kNaiveLimit = 1'000'000'000;

}  // namespace quid
