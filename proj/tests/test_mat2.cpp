#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "quiddity/error.hpp"
#include "quiddity/mat2.hpp"

using namespace quid;

namespace {

Mat2 mk(const Ring& r, long long a, long long b, long long c, long long d) {
  return {r.from_int(a), r.from_int(b), r.from_int(c), r.from_int(d)};
}

Mat2 prod(const Ring& r, std::initializer_list<Elem> t) {
  return product(r, std::vector<Elem>(t));
}

// Checks the five product reduction identities at one point.
bool reductions_hold(const Ring& r, Elem x, Elem y, Elem u, Elem v) {
  const Elem one = r.one();
  bool ok = prod(r, {x, r.zero(), y}) == negate(r, m1(r, r.add(x, y)));
  ok = ok && prod(r, {x, one, y}) == prod(r, {r.sub(x, one), r.sub(y, one)});
  ok = ok && prod(r, {x, r.minus_one(), y}) ==
                 negate(r, prod(r, {r.add(x, one), r.add(y, one)}));
  const Elem w = r.sub(r.mul(u, v), one);
  if (auto wi = r.try_inv(w)) {
    ok = ok && prod(r, {x, u, v, y}) ==
                   prod(r, {r.add(x, r.mul(r.sub(one, v), *wi)), w,
                            r.add(y, r.mul(r.sub(one, u), *wi))});
  }
  if (auto ai = r.try_inv(u)) {
    const Elem a = u;
    const Elem b = v;
    const Elem ai2 = r.mul(*ai, *ai);
    const Elem first =
        r.mul(r.add(r.sub(r.mul(r.mul(a, a), x), r.add(a, a)), b), ai2);
    const Elem last = r.mul(r.sub(r.mul(a, y), one), *ai);
    ok = ok && prod(r, {x, a, *ai, b, y}) == prod(r, {first, r.neg(a), last});
  }
  return ok;
}

}  // namespace

TEST_CASE("m1 and product examples") {
  const Ring z5(RingSpec::zmod(5));
  CHECK(m1(z5, Elem{0}) == mk(z5, 0, 4, 1, 0));
  CHECK(mul(z5, m1(z5, Elem{3}), m1(z5, Elem{3})) == mk(z5, 3, 2, 3, 4));
  CHECK(prod(z5, {Elem{1}, Elem{1}, Elem{1}}) == minus_identity(z5));
  CHECK(prod(z5, {Elem{0}, Elem{0}}) == minus_identity(z5));

  const Ring z7(RingSpec::zmod(7));
  CHECK(prod(z7, {Elem{2}, Elem{0}, Elem{3}}) == mk(z7, 2, 1, 6, 0));
  CHECK_THROWS_AS(product(z7, std::vector<Elem>{}), InvalidArgument);
}

TEST_CASE("det of m1 is one") {
  const Ring z7(RingSpec::zmod(7));
  for (Elem a : z7.elements()) CHECK(det(z7, m1(z7, a)) == z7.one());
}

TEST_CASE("classify") {
  const Ring z4(RingSpec::zmod(4));
  CHECK(classify(z4, identity(z4)) == Target::PlusId);
  const Ring z3(RingSpec::zmod(3));
  CHECK(classify(z3, prod(z3, {Elem{0}, Elem{0}})) == Target::MinusId);
  CHECK(classify(z3, s_matrix(z3)) == Target::Other);
  const Ring f2(RingSpec::field(2, 1));
  CHECK(classify(f2, identity(f2)) == Target::PlusId);
  CHECK(classify(f2, minus_identity(f2)) == Target::PlusId);
}

TEST_CASE("product reverses concatenation and has determinant one") {
  const Ring r(RingSpec::zmod(9));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Elem> s(1 + trial % 5), t(1 + trial % 4);
    for (auto& e : s) e = Elem{pick(rng)};
    for (auto& e : t) e = Elem{pick(rng)};
    std::vector<Elem> st = s;
    st.insert(st.end(), t.begin(), t.end());
    CHECK(product(r, st) == mul(r, product(r, t), product(r, s)));
    CHECK(det(r, product(r, st)) == r.one());
  }
}

TEST_CASE("product reduction identities, exhaustive for small rings") {
  for (const auto& spec :
       {RingSpec::zmod(2), RingSpec::zmod(4), RingSpec::zmod(6), RingSpec::zmod(8),
        RingSpec::zmod(9), RingSpec::field(2, 2), RingSpec::field(2, 3),
        RingSpec::field(3, 2)}) {
    const Ring r(spec);
    CAPTURE(spec.to_string());
    bool ok = true;
    const auto els = r.elements();
    for (Elem x : els)
      for (Elem y : els)
        for (Elem u : els)
          for (Elem v : els) ok = ok && reductions_hold(r, x, y, u, v);
    CHECK(ok);
  }
}

TEST_CASE("product reduction identities, sampled for larger rings") {
  std::mt19937 rng(11);
  for (const auto& spec : {RingSpec::zmod(30), RingSpec::zmod(64), RingSpec::field(5, 2),
                           RingSpec::field(2, 6)}) {
    const Ring r(spec);
    CAPTURE(spec.to_string());
    std::uniform_int_distribution<std::uint32_t> pick(0, r.size() - 1);
    bool ok = true;
    for (int i = 0; i < 5000; ++i) {
      ok = ok && reductions_hold(r, Elem{pick(rng)}, Elem{pick(rng)}, Elem{pick(rng)},
                                  Elem{pick(rng)});
    }
    CHECK(ok);
  }
}
