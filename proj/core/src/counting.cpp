#include "quiddity/counting.hpp"

#include <cmath>
#include <functional>
#include <thread>

#include "quiddity/error.hpp"
#include "quiddity/quiddity.hpp"

namespace quid {

namespace {

BigInt pow_big(const BigInt& base, unsigned exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt pow_big(unsigned long base, unsigned exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// base^exp for a possibly negative exponent
mpq_class pow_q(long base, int exp) {
  mpq_class r = 1;
  const mpq_class b = base;
  for (int i = 0; i < std::abs(exp); ++i) r *= b;
  if (exp < 0) r = 1 / r;
  return r;
}

bool is_power_of(std::uint64_t q, std::uint32_t p) {
  if (p < 2 || q < p) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::size_t count_of(const std::vector<Quiddity>& v) { return v.size(); }

}  // namespace

// ---------------------------------------------------------------------------
// q-analogues

BigInt q_int(unsigned m, const BigInt& q) {
  if (m < 1 || q < 2) throw InvalidArgument("q_int needs m >= 1, q >= 2");
  return (pow_big(q, m) - 1) / (q - 1);
}

BigInt q_binom2(unsigned m, const BigInt& q) {
  if (m < 1 || q < 2) throw InvalidArgument("q_binom2 needs m >= 1, q >= 2");
  const BigInt num = (pow_big(q, m) - 1) * (pow_big(q, m - 1) - 1);
  const BigInt den = (q - 1) * (q * q - 1);
  return num / den;
}

bool q_binom2_identity_holds(unsigned m, const BigInt& q) {
  if (m < 2) throw InvalidArgument("identity needs m >= 2");
  const BigInt q2 = q * q;
  return (pow_big(q, 2 * m - 2) - 1) / (q2 - 1) + q * q_binom2(m - 1, q) ==
         q_binom2(m, q);
}

// ---------------------------------------------------------------------------
// Closed forms

BigInt u_formula(unsigned n, std::uint64_t q, std::uint32_t p, Sign sign) {
  if (!is_prime(p) || !is_power_of(q, p)) {
    throw InvalidArgument("u_formula: q must be a power of the prime p");
  }
  if (n <= 4) {
    throw Unsupported("u_formula: closed form requires n > 4 (got " +
                      std::to_string(n) + ")");
  }
  const BigInt qq = static_cast<unsigned long>(q);
  if (n % 2 == 1) return q_int((n - 1) / 2, qq * qq);
  const unsigned m = n / 2;
  const BigInt base = (qq - 1) * q_binom2(m, qq);
  const BigInt extra = pow_big(qq, m - 1);
  if (sign == Sign::Plus) {
    if (p == 2) {
      throw Unsupported(
          "u_formula: no closed form for the Plus count at even n in "
          "characteristic 2");
    }
    return m % 2 == 0 ? base + extra : base;
  }
  if (p == 2) return base + extra;
  return m % 2 == 0 ? base : base + extra;
}

BigInt w4_formula(unsigned n, Sign sign) {
  if (n < 3) throw InvalidArgument("w4_formula needs n >= 3");
  const BigInt p4 = pow_big(4ul, n - 2);
  const BigInt high = (p4 + 4 * pow_big(2ul, n - 3)) / 3;
  const BigInt low = (p4 - pow_big(2ul, n - 2)) / 3;
  if (n % 2 == 1) return (p4 - pow_big(2ul, n - 3)) / 3;
  const bool m_even = (n / 2) % 2 == 0;
  if (sign == Sign::Plus) return m_even ? high : low;
  return m_even ? low : high;
}

BigInt crt_count(unsigned n, std::uint32_t modulus, Sign sign) {
  if (modulus < 2) throw InvalidArgument("crt_count needs N >= 2");
  BigInt result = 1;
  for (std::uint32_t f : prime_power_factors(modulus)) {
    if (f == 4) {
      result *= n >= 3 ? w4_formula(n, sign)
                       : BigInt(static_cast<unsigned long>(count_of(
                             small_solutions(Ring(RingSpec::zmod(4)), n, sign))));
    } else if (is_prime(f)) {
      // in characteristic 2 the targets Id and -Id coincide
      const Sign s = f == 2 ? Sign::Minus : sign;
      if (n > 4) {
        result *= u_formula(n, f, f, s);
      } else {
        result *= static_cast<unsigned long>(
            count_of(small_solutions(Ring(RingSpec::zmod(f)), n, s)));
      }
    } else {
      throw Unsupported("crt_count: factor " + std::to_string(f) + " of N=" +
                        std::to_string(modulus) +
                        " is a prime power with no closed form");
    }
  }
  return result;
}

BigInt recurrence_step(const RecurrenceInputs& in, const BigInt& q,
                       unsigned n) {
  if (n <= 4) throw InvalidArgument("recurrence_step needs n > 4");
  return (q - 1) * (in.b1 - q * in.nb3) + q * in.nb2 + q * (in.b2 - q * in.nb4);
}

SignedSeries recurrence_series(const Ring& field, const Mat2& target,
                               unsigned n_max) {
  const bool is_field = field.kind() == RingKind::FiniteField ||
                        is_prime(field.spec().modulus);
  if (!is_field) {
    throw Unsupported("recurrence_series: " + field.spec().to_string() +
                      " is not a finite field");
  }
  const Mat2 neg_target = negate(field, target);
  const Target kind = classify(field, target);
  SignedSeries s;
  s.plus.assign(n_max + 1, 0);
  s.minus.assign(n_max + 1, 0);
  for (unsigned k = 1; k <= std::min(n_max, 4u); ++k) {
    if (kind != Target::Other) {
      const Sign sb = kind == Target::PlusId ? Sign::Plus : Sign::Minus;
      const Sign snb = kind == Target::PlusId ? Sign::Minus : Sign::Plus;
      s.plus[k] = static_cast<unsigned long>(small_solutions(field, k, sb).size());
      s.minus[k] = static_cast<unsigned long>(small_solutions(field, k, snb).size());
    } else {
      s.plus[k] = naive_count(field, k, target);
      s.minus[k] = naive_count(field, k, neg_target);
    }
  }
  const BigInt q = static_cast<unsigned long>(field.size());
  for (unsigned k = 5; k <= n_max; ++k) {
    const RecurrenceInputs fwd{s.plus[k - 1],  s.plus[k - 2],  s.plus[k - 3],
                               s.plus[k - 4],  s.minus[k - 1], s.minus[k - 2],
                               s.minus[k - 3], s.minus[k - 4]};
    const RecurrenceInputs bwd{s.minus[k - 1], s.minus[k - 2], s.minus[k - 3],
                               s.minus[k - 4], s.plus[k - 1],  s.plus[k - 2],
                               s.plus[k - 3],  s.plus[k - 4]};
    s.plus[k] = recurrence_step(fwd, q, k);
    s.minus[k] = recurrence_step(bwd, q, k);
  }
  return s;
}

BigInt z4_recurrence(const Mat2& target, unsigned n) {
  if (n < 2) throw InvalidArgument("z4_recurrence needs n >= 2");
  const Ring z4(RingSpec::zmod(4));
  const Mat2 neg_target = negate(z4, target);
  BigInt b_prev = naive_count(z4, 2, target), nb_prev = naive_count(z4, 2, neg_target);
  BigInt b_cur = naive_count(z4, 3, target), nb_cur = naive_count(z4, 3, neg_target);
  if (n == 2) return b_prev;
  for (unsigned k = 4; k <= n; ++k) {
    BigInt b_next = b_cur + nb_cur + 6 * nb_prev + 2 * b_prev;
    BigInt nb_next = b_cur + nb_cur + 6 * b_prev + 2 * nb_prev;
    b_prev = std::move(b_cur);
    nb_prev = std::move(nb_cur);
    b_cur = std::move(b_next);
    nb_cur = std::move(nb_next);
  }
  return b_cur;
}

namespace {

// (re, im) of i^k, split on k mod 4
std::pair<int, int> i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

BigInt st_formula(unsigned n, StTarget target) {
  if (n < 2) throw InvalidArgument("st_formula needs n >= 2");
  const int k = static_cast<int>(n);
  const bool is_s = target == StTarget::S || target == StTarget::MinusS;
  const mpq_class lead =
      (pow_q(4, k - 2) - pow_q(-2, is_s ? k - 2 : k - 3)) / 3;
  // coefficient 2^e i^j (sign factor)
  const int e = is_s ? k - 3 : k - 4;
  const int j = is_s ? k - 3 : k - 2;
  mpq_class factor;
  switch (target) {
    case StTarget::S: factor = pow_q(-1, k - 2) - 1; break;
    case StTarget::MinusS: factor = 1 + pow_q(-1, k - 3); break;
    case StTarget::T: factor = pow_q(-1, k - 3) - 1; break;
    case StTarget::MinusT: factor = 1 + pow_q(-1, k - 2); break;
  }
  const auto [re, im] = i_power(j);
  const mpq_class scale = pow_q(2, e) * factor;
  const mpq_class real = lead + scale * re;
  const mpq_class imag = scale * im;
  if (imag != 0 || real.get_den() != 1) {
    throw Error("st_formula: non-integral value at n=" + std::to_string(n));
  }
  return real.get_num();
}

Mat2 st_matrix(const Ring& z4, StTarget target) {
  switch (target) {
    case StTarget::S: return s_matrix(z4);
    case StTarget::MinusS: return negate(z4, s_matrix(z4));
    case StTarget::T: return t_matrix(z4);
    case StTarget::MinusT: return negate(z4, t_matrix(z4));
  }
  return s_matrix(z4);
}

BigInt parity_count(unsigned n) {
  if (n < 3) throw InvalidArgument("parity_count needs n >= 3");
  if (n % 2 == 1) return q_int((n - 1) / 2, 4);
  const unsigned m = n / 2;
  return q_binom2(m, 2) + pow_big(2ul, m - 1) - 1;
}

// ---------------------------------------------------------------------------
// SL_2(R) and the transfer-matrix counter

Sl2Group::Sl2Group(Ring ring) : ring_(std::move(ring)) {
  const std::uint64_t q = ring_.size();
  const std::uint64_t scan = q * q * q * q;
  if (q > 0xffff || scan > kScanLimit) {
    throw ResourceLimit("SL_2 scan over " + ring_.spec().to_string() +
                        " needs " + std::to_string(q) + "^4 = " +
                        std::to_string(q > 0xffff ? 0 : scan) +
                        " entry combinations; limit is " +
                        std::to_string(kScanLimit));
  }
  const Elem one = ring_.one();
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::uint32_t c = 0; c < q; ++c) {
        for (std::uint32_t d = 0; d < q; ++d) {
          const Mat2 m{Elem{a}, Elem{b}, Elem{c}, Elem{d}};
          if (det(ring_, m) == one) {
            index_.emplace(key(m), static_cast<std::uint32_t>(elements_.size()));
            elements_.push_back(m);
          }
        }
      }
    }
  }
}

std::uint64_t Sl2Group::key(const Mat2& m) const {
  const std::uint64_t q = ring_.size();
  return ((std::uint64_t{m.a.index} * q + m.b.index) * q + m.c.index) * q +
         m.d.index;
}

std::size_t Sl2Group::index_of(const Mat2& m) const {
  auto it = index_.find(key(m));
  if (it == index_.end()) {
    throw InvalidArgument("matrix " + to_string(m) + " is not in SL_2(" +
                          ring_.spec().to_string() + ")");
  }
  return it->second;
}

CountVector::CountVector(std::shared_ptr<const Sl2Group> group, unsigned n,
                         std::vector<BigInt> counts)
    : group_(std::move(group)), n_(n), counts_(std::move(counts)) {}

const BigInt& CountVector::operator[](const Mat2& m) const {
  return counts_[group_->index_of(m)];
}

const BigInt& CountVector::at(Sign sign) const {
  return (*this)[signed_identity(ring(), sign)];
}

BigInt CountVector::total() const {
  BigInt t = 0;
  for (const auto& c : counts_) t += c;
  return t;
}

namespace {

template <class Count>
std::vector<std::vector<Count>> run_transfer(const Sl2Group& group,
                                             unsigned n_max) {
  const Ring& ring = group.ring();
  const std::size_t g = group.size();
  const std::uint32_t q = ring.size();
  // next[a * g + i] = index of M_1(a) * group[i]
  std::vector<std::uint32_t> next(std::size_t{q} * g);
  for (std::uint32_t a = 0; a < q; ++a) {
    const Mat2 step = m1(ring, Elem{a});
    for (std::size_t i = 0; i < g; ++i) {
      next[a * g + i] = static_cast<std::uint32_t>(
          group.index_of(mul(ring, step, group[i])));
    }
  }
  std::vector<std::vector<Count>> out;
  std::vector<Count> cur(g, Count(0));
  cur[group.index_of(identity(ring))] = 1;
  for (unsigned k = 1; k <= n_max; ++k) {
    std::vector<Count> nxt(g, Count(0));
    for (std::size_t i = 0; i < g; ++i) {
      if (cur[i] == 0) continue;
      for (std::uint32_t a = 0; a < q; ++a) nxt[next[a * g + i]] += cur[i];
    }
    cur = std::move(nxt);
    out.push_back(cur);
  }
  return out;
}

}  // namespace

std::vector<CountVector> dp_count_series(const Ring& ring, unsigned n_max) {
  if (n_max < 1) throw InvalidArgument("dp_count needs n >= 1");
  auto group = std::make_shared<const Sl2Group>(ring);
  std::vector<CountVector> out;
  const double bits = n_max * std::log2(static_cast<double>(ring.size()));
  if (bits < 62.0) {
    for (auto& row : run_transfer<std::uint64_t>(*group, n_max)) {
      std::vector<BigInt> big(row.size());
      for (std::size_t i = 0; i < row.size(); ++i) {
        mpz_import(big[i].get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0,
                   &row[i]);
      }
      out.emplace_back(group, static_cast<unsigned>(out.size() + 1),
                       std::move(big));
    }
  } else {
    for (auto& row : run_transfer<BigInt>(*group, n_max)) {
      out.emplace_back(group, static_cast<unsigned>(out.size() + 1),
                       std::move(row));
    }
  }
  return out;
}

CountVector dp_count_all(const Ring& ring, unsigned n) {
  return std::move(dp_count_series(ring, n).back());
}

BigInt naive_count(const Ring& ring, unsigned n, const Mat2& target,
                   unsigned jobs) {
  if (n < 1) throw InvalidArgument("naive_count needs n >= 1");
  const double size = std::pow(static_cast<double>(ring.size()), n);
  if (size > static_cast<double>(kNaiveLimit)) {
    throw ResourceLimit("naive enumeration of " + ring.spec().to_string() +
                        "^" + std::to_string(n) + " exceeds " +
                        std::to_string(kNaiveLimit) + " tuples");
  }
  const std::uint32_t q = ring.size();
  // depth-first over prefixes; prefix[k] = M_k(a_1..a_k)
  auto count_from = [&](Elem first) {
    std::uint64_t hits = 0;
    std::vector<Mat2> prefix(n);
    std::vector<std::uint32_t> digit(n, 0);
    prefix[0] = m1(ring, first);
    if (n == 1) return std::uint64_t{prefix[0] == target};
    unsigned depth = 1;
    while (true) {
      if (digit[depth] < q) {
        const Mat2 m = mul(ring, m1(ring, Elem{digit[depth]}), prefix[depth - 1]);
        ++digit[depth];
        if (depth + 1 == n) {
          hits += m == target;
        } else {
          prefix[depth] = m;
          ++depth;
          digit[depth] = 0;
        }
      } else {
        if (--depth == 0) break;
      }
    }
    return hits;
  };
  std::vector<std::uint64_t> partial(q, 0);
  jobs = std::max(1u, std::min(jobs, q));
  if (jobs == 1) {
    for (std::uint32_t a = 0; a < q; ++a) partial[a] = count_from(Elem{a});
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint32_t a = w; a < q; a += jobs) partial[a] = count_from(Elem{a});
      });
    }
    for (auto& t : pool) t.join();
  }
  BigInt total = 0;
  for (auto h : partial) total += static_cast<unsigned long>(h);
  return total;
}

}  // namespace quid
