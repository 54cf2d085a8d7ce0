#pragma once

#include <span>
#include <string>

#include "quiddity/ring.hpp"

namespace quid {

/// 2x2 matrix [[a, b], [c, d]] over a Ring.
struct Mat2 {
  Elem a, b, c, d;

  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 identity(const Ring& ring);
Mat2 minus_identity(const Ring& ring);
/// S = [[0, -1], [1, 0]]
Mat2 s_matrix(const Ring& ring);
/// T = [[1, 1], [0, 1]]
Mat2 t_matrix(const Ring& ring);

Mat2 mul(const Ring& ring, const Mat2& x, const Mat2& y);
Mat2 negate(const Ring& ring, const Mat2& m);
Elem det(const Ring& ring, const Mat2& m);

/// The elementary factor [[x, -1], [1, 0]].
Mat2 m1(const Ring& ring, Elem x);

/// M_n(a_1, ..., a_n) = M_1(a_n) * ... * M_1(a_1). Throws InvalidArgument on
/// an empty tuple.
Mat2 product(const Ring& ring, std::span<const Elem> tuple);

enum class Target { PlusId, MinusId, Other };

/// Which of Id / -Id the matrix equals. When 1 = -1 the two coincide and
/// PlusId is returned.
Target classify(const Ring& ring, const Mat2& m);

enum class Sign { Plus, Minus };

/// Id for Sign::Plus, -Id for Sign::Minus.
Mat2 signed_identity(const Ring& ring, Sign sign);

/// m == +/-Id for the requested sign (both signs accept Id when 1 = -1).
inline bool matches(const Ring& ring, const Mat2& m, Sign sign) {
  return m == signed_identity(ring, sign);
}

std::string to_string(const Mat2& m);
inline const char* to_string(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

}  // namespace quid
