#include "quiddity/quiddity.hpp"

#include <algorithm>
#include <set>

#include "quiddity/error.hpp"

namespace quid {

Quiddity::Quiddity(Ring ring, std::vector<Elem> entries)
    : ring_(std::move(ring)), entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("a tuple needs length >= 1");
  for (Elem e : entries_) {
    if (e.index >= ring_.size()) {
      throw InvalidArgument("entry " + std::to_string(e.index) +
                            " is outside " + ring_.spec().to_string());
    }
  }
}

Quiddity::Quiddity(Ring ring, std::initializer_list<long long> values)
    : ring_(std::move(ring)) {
  if (values.size() == 0) throw InvalidArgument("a tuple needs length >= 1");
  entries_.reserve(values.size());
  for (long long v : values) entries_.push_back(ring_.from_int(v));
}

std::string Quiddity::to_string() const {
  std::string out = ring_.spec().to_string() + ":(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i].index);
  }
  return out + ")";
}

Quiddity Quiddity::parse(std::string_view text) {
  const auto open = text.rfind(":(");
  if (open == std::string_view::npos || !text.ends_with(")")) {
    throw InvalidArgument("expected RING:(i1,...,in), got '" +
                          std::string(text) + "'");
  }
  Ring ring(RingSpec::parse(text.substr(0, open)));
  std::string_view body = text.substr(open + 2, text.size() - open - 3);
  std::vector<Elem> entries;
  while (true) {
    const auto comma = body.find(',');
    const std::string item(body.substr(0, comma));
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw InvalidArgument("malformed tuple entry '" + item + "'");
    }
    entries.push_back(Elem{static_cast<std::uint32_t>(v)});
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Quiddity(std::move(ring), std::move(entries));
}

Mat2 product(const Quiddity& t) { return product(t.ring(), t.entries()); }

Quiddity oplus(const Quiddity& a, const Quiddity& b) {
  if (!(a.ring() == b.ring())) {
    throw InvalidArgument("oplus: tuples live in different rings");
  }
  const Ring& r = a.ring();
  const std::size_t n = a.size(), m = b.size();
  if (n < 2 || m < 2) throw InvalidArgument("oplus: operands need length >= 2");
  std::vector<Elem> out;
  out.reserve(n + m - 2);
  out.push_back(r.add(a[0], b[m - 1]));
  for (std::size_t i = 1; i + 1 < n; ++i) out.push_back(a[i]);
  out.push_back(r.add(a[n - 1], b[0]));
  for (std::size_t i = 1; i + 1 < m; ++i) out.push_back(b[i]);
  return Quiddity(r, std::move(out));
}

std::vector<std::vector<Elem>> dihedral_images(std::span<const Elem> t) {
  const std::size_t n = t.size();
  std::vector<std::vector<Elem>> out;
  out.reserve(2 * n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<Elem> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = t[(s + i) % n];
    out.push_back(std::move(img));
  }
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<Elem> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = t[(s + n - i) % n];
    out.push_back(std::move(img));
  }
  return out;
}

std::vector<Elem> canonical_form(std::span<const Elem> t) {
  const std::size_t n = t.size();
  // best = (start, direction); compare candidate images without copying
  std::size_t best_start = 0;
  int best_dir = 1;
  auto at = [&](std::size_t start, int dir, std::size_t i) {
    return dir > 0 ? t[(start + i) % n] : t[(start + n - i) % n];
  };
  for (int dir : {1, -1}) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t i = 0; i < n; ++i) {
        const Elem x = at(s, dir, i), y = at(best_start, best_dir, i);
        if (x < y) {
          best_start = s;
          best_dir = dir;
          break;
        }
        if (y < x) break;
      }
    }
  }
  std::vector<Elem> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(best_start, best_dir, i);
  return out;
}

CanonicalClass canonical_rep(const Quiddity& t) {
  return {Quiddity(t.ring(), canonical_form(t.entries()))};
}

bool is_lambda_quiddity(const Quiddity& t) {
  return classify(t.ring(), product(t)) != Target::Other;
}

bool is_reducible(const Quiddity& t) {
  const Ring& r = t.ring();
  const std::size_t n = t.size();
  if (n < 3) throw InvalidArgument("is_reducible: length must be >= 3");
  if (!is_lambda_quiddity(t)) {
    throw InvalidArgument("is_reducible: " + t.to_string() +
                          " is not a solution");
  }
  const auto elems = r.elements();
  for (const auto& image : dihedral_images(t.entries())) {
    for (std::size_t l = 3; l + 1 <= n; ++l) {
      // b = (b_1, image[n-l+2 .. n-1], b_l); only the ends are free
      const std::span<const Elem> interior(image.data() + (n - l + 2), l - 2);
      const Mat2 inner = product(r, interior);
      // M_1(b_l) * inner * M_1(b_1) has bottom-right entry -inner.a
      if (!r.is_pm_one(inner.a)) continue;
      for (Elem b1 : elems) {
        const Mat2 right = mul(r, inner, m1(r, b1));
        for (Elem bl : elems) {
          if (classify(r, mul(r, m1(r, bl), right)) != Target::Other) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

Quiddity negate(const Quiddity& t) {
  std::vector<Elem> out;
  out.reserve(t.size());
  for (Elem e : t.entries()) out.push_back(t.ring().neg(e));
  return Quiddity(t.ring(), std::move(out));
}

Quiddity scale(const Quiddity& t, Elem lambda) {
  const Ring& r = t.ring();
  if (t.size() % 2 != 0) throw InvalidArgument("scale: length must be even");
  const auto inv = r.try_inv(lambda);
  if (!inv) throw InvalidArgument("scale: lambda must be a unit");
  std::vector<Elem> out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    out.push_back(r.mul(i % 2 == 0 ? lambda : *inv, t[i]));
  }
  return Quiddity(r, std::move(out));
}

std::vector<Quiddity> small_solutions(const Ring& ring, std::size_t n,
                                      Sign sign) {
  if (n > 4) throw InvalidArgument("small_solutions covers sizes 1..4 only");
  std::set<std::vector<Elem>> found;
  const Elem one = ring.one(), m_one = ring.minus_one();
  switch (n) {
    case 0:
    case 1:
      break;
    case 2:
      found.insert({ring.zero(), ring.zero()});
      break;
    case 3:
      found.insert({one, one, one});
      found.insert({m_one, m_one, m_one});
      break;
    case 4: {
      const Elem two = ring.from_int(2);
      for (Elem a : ring.elements()) {
        for (Elem b : ring.elements()) {
          const Elem ab = ring.mul(a, b);
          if (ab == ring.zero()) {
            found.insert({ring.neg(a), b, a, ring.neg(b)});
          }
          if (ab == two) found.insert({a, b, a, b});
        }
      }
      break;
    }
  }
  std::vector<Quiddity> out;
  for (const auto& t : found) {
    if (matches(ring, product(ring, t), sign)) out.emplace_back(ring, t);
  }
  return out;
}

}  // namespace quid
