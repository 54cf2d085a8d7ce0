#include "quiddity/mat2.hpp"

#include "quiddity/error.hpp"

namespace quid {

Mat2 identity(const Ring& ring) {
  return {ring.one(), ring.zero(), ring.zero(), ring.one()};
}

Mat2 minus_identity(const Ring& ring) {
  return {ring.minus_one(), ring.zero(), ring.zero(), ring.minus_one()};
}

Mat2 s_matrix(const Ring& ring) {
  return {ring.zero(), ring.minus_one(), ring.one(), ring.zero()};
}

Mat2 t_matrix(const Ring& ring) {
  return {ring.one(), ring.one(), ring.zero(), ring.one()};
}

Mat2 mul(const Ring& r, const Mat2& x, const Mat2& y) {
  return {r.add(r.mul(x.a, y.a), r.mul(x.b, y.c)),
          r.add(r.mul(x.a, y.b), r.mul(x.b, y.d)),
          r.add(r.mul(x.c, y.a), r.mul(x.d, y.c)),
          r.add(r.mul(x.c, y.b), r.mul(x.d, y.d))};
}

Mat2 negate(const Ring& r, const Mat2& m) {
  return {r.neg(m.a), r.neg(m.b), r.neg(m.c), r.neg(m.d)};
}

Elem det(const Ring& r, const Mat2& m) {
  return r.sub(r.mul(m.a, m.d), r.mul(m.b, m.c));
}

Mat2 m1(const Ring& ring, Elem x) {
  return {x, ring.minus_one(), ring.one(), ring.zero()};
}

Mat2 product(const Ring& ring, std::span<const Elem> tuple) {
  if (tuple.empty()) throw InvalidArgument("M_n of an empty tuple");
  // [[x,-1],[1,0]] * [[a,b],[c,d]] = [[xa - c, xb - d], [a, b]]
  Mat2 acc = m1(ring, tuple.front());
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    const Elem x = tuple[i];
    acc = {ring.sub(ring.mul(x, acc.a), acc.c),
           ring.sub(ring.mul(x, acc.b), acc.d), acc.a, acc.b};
  }
  return acc;
}

Target classify(const Ring& ring, const Mat2& m) {
  if (m == identity(ring)) return Target::PlusId;
  if (m == minus_identity(ring)) return Target::MinusId;
  return Target::Other;
}

Mat2 signed_identity(const Ring& ring, Sign sign) {
  return sign == Sign::Plus ? identity(ring) : minus_identity(ring);
}

std::string to_string(const Mat2& m) {
  return "[[" + std::to_string(m.a.index) + "," + std::to_string(m.b.index) +
         "],[" + std::to_string(m.c.index) + "," + std::to_string(m.d.index) +
         "]]";
}

}  // namespace quid
