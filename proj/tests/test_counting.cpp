#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "quiddity/counting.hpp"
#include "quiddity/error.hpp"

using namespace quid;

namespace {

BigInt big(unsigned long v) { return BigInt(v); }

// Number of length-n tuples over F_2 with product Id and some nonzero entry.
unsigned long parity_brute_force(unsigned n) {
  const Ring f2(RingSpec::field(2, 1));
  unsigned long count = 0;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<Elem> t(n);
    for (unsigned i = 0; i < n; ++i) t[i] = Elem{static_cast<std::uint32_t>((mask >> i) & 1)};
    if (product(f2, t) == identity(f2)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("q-analogues") {
  CHECK(q_int(2, 25) == 26);
  CHECK(q_binom2(3, 5) == 31);
  for (unsigned long q : {2ul, 3ul, 4ul, 7ul, 9ul}) {
    CHECK(q_binom2(2, q) == 1);
    for (unsigned m = 2; m <= 12; ++m) CHECK(q_binom2_identity_holds(m, q));
  }
}

TEST_CASE("u_formula examples and regimes") {
  CHECK(u_formula(7, 7, 7, Sign::Minus) == 2451);
  CHECK(u_formula(8, 3, 3, Sign::Plus) == 287);
  CHECK(u_formula(8, 3, 3, Sign::Minus) == 260);
  CHECK(u_formula(6, 4, 2, Sign::Minus) == 79);
  CHECK(u_formula(6, 11, 11, Sign::Plus) == 1330);
  CHECK_THROWS_AS(u_formula(4, 5, 5, Sign::Minus), Unsupported);
  CHECK_THROWS_AS(u_formula(6, 4, 2, Sign::Plus), Unsupported);
}

TEST_CASE("w4_formula examples") {
  CHECK(w4_formula(5, Sign::Plus) == 20);
  CHECK(w4_formula(5, Sign::Minus) == 20);
  CHECK(w4_formula(4, Sign::Plus) == 8);
  CHECK(w4_formula(4, Sign::Minus) == 4);
  CHECK(w4_formula(6, Sign::Plus) == 80);
  CHECK(w4_formula(6, Sign::Minus) == 96);
}

TEST_CASE("crt_count examples and regimes") {
  CHECK(crt_count(6, 6, Sign::Minus) == 385);
  CHECK(crt_count(8, 12, Sign::Plus) == 404096);
  CHECK(crt_count(5, 10, Sign::Plus) == 130);
  CHECK(crt_count(5, 10, Sign::Minus) == 130);
  CHECK_THROWS_AS(crt_count(6, 9, Sign::Minus), Unsupported);
  CHECK_THROWS_AS(crt_count(6, 8, Sign::Minus), Unsupported);
  CHECK_THROWS_AS(crt_count(6, 45, Sign::Minus), Unsupported);
}

TEST_CASE("recurrence step") {
  RecurrenceInputs in;
  in.b1 = 26;
  in.b2 = 9;
  in.nb2 = 4;
  in.nb3 = 1;
  in.nb4 = 1;
  CHECK(recurrence_step(in, 5, 6) == 124);
  CHECK_THROWS_AS(recurrence_step(in, 5, 4), InvalidArgument);
  const Ring z5(RingSpec::zmod(5));
  CHECK(recurrence_series(z5, identity(z5), 7).plus[7] == 651);
  CHECK_THROWS_AS(recurrence_series(Ring(RingSpec::zmod(4)), identity(Ring(RingSpec::zmod(4))), 6),
                  Unsupported);
}

TEST_CASE("recurrence series equals dp for every B over F_3") {
  const Ring f3(RingSpec::field(3, 1));
  const auto series = dp_count_series(f3, 8);
  for (const Mat2& b : series.front().group().elements()) {
    const auto rec = recurrence_series(f3, b, 8);
    for (unsigned n = 1; n <= 8; ++n) {
      CHECK(rec.plus[n] == series[n - 1][b]);
      CHECK(rec.minus[n] == series[n - 1][negate(f3, b)]);
    }
  }
}

TEST_CASE("Z/4 recurrence and S/T closed forms") {
  const Ring z4(RingSpec::zmod(4));
  CHECK(z4_recurrence(s_matrix(z4), 5) == 32);
  CHECK(z4_recurrence(negate(z4, t_matrix(z4)), 8) == 1344);
  for (unsigned n = 3; n <= 20; ++n) {
    CHECK(z4_recurrence(identity(z4), n) == w4_formula(n, Sign::Plus));
    CHECK(z4_recurrence(minus_identity(z4), n) == w4_formula(n, Sign::Minus));
  }
  CHECK(st_formula(4, StTarget::S) == 4);
  CHECK(st_formula(9, StTarget::MinusS) == 5376);
  CHECK(st_formula(10, StTarget::T) == 21760);
  const auto series = dp_count_series(z4, 12);
  for (auto target : {StTarget::S, StTarget::MinusS, StTarget::T, StTarget::MinusT}) {
    for (unsigned n = 2; n <= 12; ++n) {
      CHECK(st_formula(n, target) == series[n - 1][st_matrix(z4, target)]);
    }
  }
}

TEST_CASE("parity_count") {
  CHECK(parity_count(3) == 1);
  CHECK(parity_count(5) == 5);
  CHECK(parity_count(6) == 10);
  for (unsigned n = 3; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(parity_count(n) == big(parity_brute_force(n)));
  }
}

TEST_CASE("SL2 group sizes") {
  CHECK(Sl2Group(Ring(RingSpec::zmod(4))).size() == 48);
  CHECK(Sl2Group(Ring(RingSpec::zmod(12))).size() == 1152);
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    CHECK(Sl2Group(Ring(RingSpec::zmod(q))).size() == q * (q * q - 1));
  }
  const Ring z4(RingSpec::zmod(4));
  const Sl2Group g(z4);
  CHECK(g[g.index_of(s_matrix(z4))] == s_matrix(z4));
  CHECK_THROWS_AS(g.index_of(Mat2{Elem{2}, Elem{0}, Elem{0}, Elem{2}}), InvalidArgument);
}

TEST_CASE("dp examples") {
  const Ring z4(RingSpec::zmod(4));
  const auto v = dp_count_all(z4, 4);
  CHECK(v.at(Sign::Plus) == 8);
  CHECK(v.at(Sign::Minus) == 4);
  CHECK(v.total() == 256);
  CHECK(dp_count_all(Ring(RingSpec::field(2, 1)), 6).at(Sign::Plus) == 11);
  CHECK(dp_count_all(Ring(RingSpec::zmod(11)), 8).at(Sign::Minus) == 162260);
  CHECK(dp_count_all(Ring(RingSpec::field(2, 2)), 6).at(Sign::Minus) == 79);
}

TEST_CASE("global mass") {
  for (const auto& spec : {RingSpec::zmod(2), RingSpec::zmod(6), RingSpec::zmod(12),
                           RingSpec::zmod(16), RingSpec::field(3, 2), RingSpec::field(2, 3)}) {
    const Ring r(spec);
    const auto series = dp_count_series(r, 10);
    for (unsigned n = 1; n <= 10; ++n) {
      BigInt expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), r.size(), n);
      CHECK(series[n - 1].total() == expected);
    }
  }
}

TEST_CASE("naive counts") {
  CHECK(naive_count(Ring(RingSpec::zmod(3)), 5, minus_identity(Ring(RingSpec::zmod(3)))) == 10);
  const Ring z2(RingSpec::zmod(2));
  CHECK(naive_count(z2, 7, identity(z2)) == 21);
  CHECK(naive_count(z2, 1, identity(z2)) == 0);
  CHECK(naive_count(Ring(RingSpec::zmod(7)), 1, identity(Ring(RingSpec::zmod(7)))) == 0);
  const Ring z11(RingSpec::zmod(11));
  CHECK_THROWS_AS(naive_count(z11, 10, identity(z11)), ResourceLimit);
}

TEST_CASE("naive and dp agree on every target") {
  for (const auto& spec : {RingSpec::zmod(3), RingSpec::zmod(4), RingSpec::zmod(6),
                           RingSpec::field(2, 2)}) {
    const Ring r(spec);
    const auto series = dp_count_series(r, 6);
    for (unsigned n = 1; n <= 6; ++n) {
      for (const Mat2& b : series.front().group().elements()) {
        CHECK(naive_count(r, n, b, 2) == series[n - 1][b]);
      }
    }
  }
  const Ring z9(RingSpec::zmod(9));
  CHECK(naive_count(z9, 5, identity(z9)) == dp_count_all(z9, 5).at(Sign::Plus));
}

TEST_CASE("odd lengths have equal plus and minus counts for odd p") {
  for (const auto& spec : {RingSpec::field(3, 1), RingSpec::field(5, 1), RingSpec::field(3, 2),
                           RingSpec::field(7, 1)}) {
    const auto series = dp_count_series(Ring(spec), 11);
    for (unsigned n = 1; n <= 11; n += 2) {
      CHECK(series[n - 1].at(Sign::Plus) == series[n - 1].at(Sign::Minus));
    }
  }
}

TEST_CASE("F_4 and Z/4 differ") {
  CHECK(dp_count_all(Ring(RingSpec::field(2, 2)), 6).at(Sign::Minus) !=
        dp_count_all(Ring(RingSpec::zmod(4)), 6).at(Sign::Minus));
}

TEST_CASE("F_9 counts do not depend on the reduction polynomial") {
  const Ring a(RingSpec::field(3, 2, {1, 0, 1}));
  const Ring b(RingSpec::field(3, 2, {2, 2, 1}));
  const auto sa = dp_count_series(a, 9);
  const auto sb = dp_count_series(b, 9);
  for (unsigned n = 1; n <= 9; ++n) {
    CHECK(sa[n - 1].at(Sign::Plus) == sb[n - 1].at(Sign::Plus));
    CHECK(sa[n - 1].at(Sign::Minus) == sb[n - 1].at(Sign::Minus));
    auto ca = sa[n - 1].counts();
    auto cb = sb[n - 1].counts();
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    CHECK(ca == cb);
  }
}

TEST_CASE("closed forms agree with dp") {
  for (auto [p, k] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}, {2u, 1u}, {2u, 2u},
                      {2u, 3u}}) {
    const Ring f(RingSpec::field(p, k));
    const auto series = dp_count_series(f, 10);
    for (unsigned n = 5; n <= 10; ++n) {
      CHECK(u_formula(n, f.size(), p, Sign::Minus) == series[n - 1].at(Sign::Minus));
      if (p != 2 || n % 2 == 1) {
        CHECK(u_formula(n, f.size(), p, Sign::Plus) == series[n - 1].at(Sign::Plus));
      }
    }
  }
}
