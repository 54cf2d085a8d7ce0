#include "quiddity/ring.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "quiddity/error.hpp"

namespace quid {

namespace {

constexpr std::uint64_t kMaxRingSize = std::uint64_t{1} << 31;
constexpr std::uint32_t kTableLimit = 1024;

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    r *= base;
    if (r > kMaxRingSize) {
      throw InvalidArgument("ring too large: p^k exceeds 2^31");
    }
  }
  return r;
}

std::uint32_t parse_uint(std::string_view s, const char* what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidArgument(std::string("malformed ") + what + ": '" +
                          std::string(s) + "'");
  }
  return v;
}

// Polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo d (d nonzero, any leading coefficient).
Poly poly_mod(Poly a, const Poly& d, std::uint32_t p) {
  trim(a);
  const std::size_t dd = d.size() - 1;
  const std::uint64_t lead_inv = inv_mod_prime(d.back(), p);
  while (a.size() > dd) {
    const std::size_t shift = a.size() - 1 - dd;
    const std::uint64_t f = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dd; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + p - f * d[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits_of(std::uint32_t index, std::uint32_t p, unsigned k) {
  Poly c(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

std::uint32_t index_of(const Poly& c, std::uint32_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
  return static_cast<std::uint32_t>(idx);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> prime_power_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d) continue;
    std::uint32_t pp = 1;
    while (n % d == 0) {
      n /= d;
      pp *= d;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible_over_fp(std::span<const std::uint32_t> poly,
                            std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  // any factorization has a monic factor of degree <= k/2
  for (unsigned d = 1; d <= k / 2; ++d) {
    const std::uint64_t count = checked_pow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = digits_of(static_cast<std::uint32_t>(idx), p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_field_polynomial(std::uint32_t p,
                                                    unsigned k) {
  struct Entry {
    std::uint32_t p;
    unsigned k;
    Poly poly;
  };
  static const Entry table[] = {
      {2, 2, {1, 1, 1}},     {2, 3, {1, 1, 0, 1}}, {3, 2, {1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}}, {5, 2, {2, 0, 1}},  {3, 3, {1, 2, 0, 1}},
  };
  for (const auto& e : table) {
    if (e.p == p && e.k == k) return e.poly;
  }
  if (k == 1) return {0, 1};
  const std::uint64_t count = checked_pow(p, k);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Poly f = digits_of(static_cast<std::uint32_t>(idx), p, k);
    f.push_back(1);
    if (is_irreducible_over_fp(f, p)) return f;
  }
  throw InvalidArgument("no irreducible polynomial found");  // unreachable
}

// ---------------------------------------------------------------------------
// RingSpec

RingSpec RingSpec::zmod(std::uint32_t n) {
  RingSpec s;
  s.kind = RingKind::Zmod;
  s.modulus = n;
  return s;
}

RingSpec RingSpec::field(std::uint32_t p, unsigned k,
                         std::vector<std::uint32_t> poly) {
  RingSpec s;
  s.kind = RingKind::FiniteField;
  s.characteristic = p;
  s.degree = k;
  s.poly = std::move(poly);
  return s;
}

RingSpec RingSpec::parse(std::string_view text) {
  if (text.starts_with("zmod:")) {
    return zmod(parse_uint(text.substr(5), "modulus"));
  }
  if (text.starts_with("gf:")) {
    std::string_view rest = text.substr(3);
    std::string_view order = rest;
    std::string_view poly_part;
    if (auto colon = rest.find(':'); colon != std::string_view::npos) {
      order = rest.substr(0, colon);
      poly_part = rest.substr(colon + 1);
      if (!poly_part.starts_with("poly=")) {
        throw InvalidArgument("expected poly=c0,...,ck in '" +
                              std::string(text) + "'");
      }
      poly_part.remove_prefix(5);
    }
    const auto caret = order.find('^');
    std::uint32_t p = 0;
    unsigned k = 1;
    if (caret == std::string_view::npos) {
      p = parse_uint(order, "characteristic");
    } else {
      p = parse_uint(order.substr(0, caret), "characteristic");
      k = parse_uint(order.substr(caret + 1), "degree");
    }
    std::vector<std::uint32_t> poly;
    while (!poly_part.empty()) {
      const auto comma = poly_part.find(',');
      poly.push_back(parse_uint(poly_part.substr(0, comma), "coefficient"));
      if (comma == std::string_view::npos) break;
      poly_part.remove_prefix(comma + 1);
    }
    return field(p, k, std::move(poly));
  }
  throw InvalidArgument("unknown ring spec '" + std::string(text) +
                        "' (expected zmod:N or gf:p^k)");
}

std::string RingSpec::to_string() const {
  std::ostringstream os;
  if (kind == RingKind::Zmod) {
    os << "zmod:" << modulus;
    return os.str();
  }
  os << "gf:" << characteristic << '^' << degree;
  if (!poly.empty()) {
    os << ":poly=";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      os << (i ? "," : "") << poly[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Ring

struct Ring::Impl {
  RingSpec spec;
  std::uint32_t size = 0;
  std::uint32_t p = 0;  // characteristic
  // finite field data
  Poly modulus_poly;
  std::vector<std::uint32_t> add_table, mul_table;
  std::vector<std::uint32_t> neg_table;
  std::vector<std::uint32_t> inv_table;  // size == |R|; 0 marks non-units

  std::uint32_t field_add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, scale = 1;
    for (unsigned i = 0; i < spec.degree; ++i) {
      r += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return r;
  }

  std::uint32_t field_mul(std::uint32_t a, std::uint32_t b) const {
    const unsigned k = spec.degree;
    Poly x = digits_of(a, p, k), y = digits_of(b, p, k);
    Poly prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i) {
      for (unsigned j = 0; j < k; ++j) {
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p);
      }
    }
    Poly r = poly_mod(std::move(prod), modulus_poly, p);
    r.resize(k, 0);
    return index_of(r, p);
  }

  std::uint32_t field_neg(std::uint32_t a) const {
    std::uint32_t r = 0, scale = 1;
    for (unsigned i = 0; i < spec.degree; ++i) {
      r += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return r;
  }
};

Ring::Ring(RingSpec spec) {
  auto impl = std::make_shared<Impl>();
  if (spec.kind == RingKind::Zmod) {
    if (spec.modulus < 2) throw InvalidArgument("Z/NZ requires N >= 2");
    if (spec.modulus > kMaxRingSize) throw InvalidArgument("N exceeds 2^31");
    impl->size = spec.modulus;
    impl->p = 0;
  } else {
    if (!is_prime(spec.characteristic)) {
      throw InvalidArgument("field characteristic " +
                            std::to_string(spec.characteristic) +
                            " is not prime");
    }
    if (spec.degree < 1) throw InvalidArgument("field degree must be >= 1");
    const std::uint32_t p = spec.characteristic;
    impl->p = p;
    impl->size = static_cast<std::uint32_t>(checked_pow(p, spec.degree));
    if (spec.poly.empty()) spec.poly = default_field_polynomial(p, spec.degree);
    if (spec.poly.size() != spec.degree + 1 || spec.poly.back() != 1) {
      throw InvalidArgument("reduction polynomial must be monic of degree " +
                            std::to_string(spec.degree));
    }
    for (auto c : spec.poly) {
      if (c >= p) throw InvalidArgument("polynomial coefficient out of range");
    }
    if (!is_irreducible_over_fp(spec.poly, p)) {
      throw InvalidArgument("reduction polynomial is reducible over F_" +
                            std::to_string(p));
    }
    impl->modulus_poly = spec.poly;
  }
  impl->spec = spec;

  const std::uint32_t q = impl->size;
  if (spec.kind == RingKind::FiniteField && q <= kTableLimit) {
    impl->add_table.resize(std::size_t{q} * q);
    impl->mul_table.resize(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        impl->add_table[std::size_t{a} * q + b] = impl->field_add(a, b);
        impl->mul_table[std::size_t{a} * q + b] = impl->field_mul(a, b);
      }
    }
    impl->neg_table.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) impl->neg_table[a] = impl->field_neg(a);
  }
  impl_ = std::move(impl);
  size_ = q;
  minus_one_ = neg(one());
}

const RingSpec& Ring::spec() const { return impl_->spec; }

std::uint32_t Ring::characteristic() const {
  return is_zmod() ? impl_->spec.modulus : impl_->p;
}

Elem Ring::from_int(long long value) const {
  const long long c = characteristic();
  long long r = value % c;
  if (r < 0) r += c;
  // the prime subfield sits at indices 0..p-1
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Ring::add(Elem a, Elem b) const {
  if (is_zmod()) {
    const std::uint64_t s = std::uint64_t{a.index} + b.index;
    return Elem{static_cast<std::uint32_t>(s % size_)};
  }
  if (!impl_->add_table.empty()) {
    return Elem{impl_->add_table[std::size_t{a.index} * size_ + b.index]};
  }
  return Elem{impl_->field_add(a.index, b.index)};
}

Elem Ring::neg(Elem a) const {
  if (is_zmod()) return Elem{a.index == 0 ? 0 : size_ - a.index};
  if (!impl_->neg_table.empty()) return Elem{impl_->neg_table[a.index]};
  return Elem{impl_->field_neg(a.index)};
}

Elem Ring::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Ring::mul(Elem a, Elem b) const {
  if (is_zmod()) {
    return Elem{static_cast<std::uint32_t>(std::uint64_t{a.index} * b.index %
                                           size_)};
  }
  if (!impl_->mul_table.empty()) {
    return Elem{impl_->mul_table[std::size_t{a.index} * size_ + b.index]};
  }
  return Elem{impl_->field_mul(a.index, b.index)};
}

std::optional<Elem> Ring::try_inv(Elem a) const {
  if (is_zmod()) {
    // extended Euclid on (a, N)
    long long r0 = size_, r1 = a.index, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const long long qt = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
      std::tie(t0, t1) = std::make_pair(t1, t0 - qt * t1);
    }
    if (r0 != 1) return std::nullopt;
    return from_int(t0);
  }
  if (a.index == 0) return std::nullopt;
  // a^(q-2)
  Elem result = one(), base = a;
  for (std::uint64_t e = size_ - 2; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

bool Ring::is_unit(Elem a) const { return try_inv(a).has_value(); }

Elem Ring::inv(Elem a) const {
  if (auto r = try_inv(a)) return *r;
  throw InvalidArgument("element " + std::to_string(a.index) +
                        " is not a unit in " + spec().to_string());
}

std::vector<Elem> Ring::elements() const {
  std::vector<Elem> out(size_);
  for (std::uint32_t i = 0; i < size_; ++i) out[i] = Elem{i};
  return out;
}

// ---------------------------------------------------------------------------
// CRT

CrtSplit::CrtSplit(std::uint32_t modulus, std::vector<std::uint32_t> factors)
    : modulus_(modulus), factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidArgument("empty factorization");
  std::uint64_t product = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw InvalidArgument("CRT factor must be >= 2");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::gcd(factors_[i], factors_[j]) != 1) {
        throw InvalidArgument("CRT factors " + std::to_string(factors_[j]) +
                              " and " + std::to_string(factors_[i]) +
                              " are not coprime");
      }
    }
    product *= factors_[i];
    if (product > modulus_) break;
  }
  if (product != modulus_) {
    throw InvalidArgument("CRT factors do not multiply to " +
                          std::to_string(modulus_));
  }
  const Ring whole(RingSpec::zmod(modulus_));
  for (auto f : factors_) {
    components_.emplace_back(RingSpec::zmod(f));
    const std::uint32_t cofactor = modulus_ / f;
    // e = cofactor * (cofactor^-1 mod f)
    const Ring rf(RingSpec::zmod(f));
    const Elem inv = rf.inv(rf.from_int(cofactor));
    idempotents_.push_back(std::uint64_t{cofactor} * inv.index % modulus_);
  }
}

std::vector<std::vector<Elem>> CrtSplit::split(
    std::span<const Elem> tuple) const {
  std::vector<std::vector<Elem>> out;
  out.reserve(factors_.size());
  for (auto f : factors_) {
    std::vector<Elem> part;
    part.reserve(tuple.size());
    for (Elem e : tuple) {
      if (e.index >= modulus_) throw InvalidArgument("element out of range");
      part.push_back(Elem{e.index % f});
    }
    out.push_back(std::move(part));
  }
  return out;
}

std::vector<Elem> CrtSplit::recombine(
    std::span<const std::vector<Elem>> parts) const {
  if (parts.size() != factors_.size()) {
    throw InvalidArgument("recombine: expected one tuple per CRT factor");
  }
  const std::size_t len = parts.front().size();
  for (const auto& p : parts) {
    if (p.size() != len) throw InvalidArgument("recombine: length mismatch");
  }
  std::vector<Elem> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    unsigned __int128 acc = 0;
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      acc += static_cast<unsigned __int128>(parts[j][i].index) *
             idempotents_[j];
    }
    out[i] = Elem{static_cast<std::uint32_t>(acc % modulus_)};
  }
  return out;
}

}  // namespace quid
