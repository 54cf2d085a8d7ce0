#include "quiddity/tables.hpp"

#include "quiddity/counting.hpp"
#include "quiddity/reference.hpp"

namespace quid {

Table w_table(Sign sign) {
  using namespace reference;
  Table t;
  t.name = sign == Sign::Minus ? "w-minus" : "w-plus";
  t.header.push_back(t.name);
  for (auto n : kWModuli) t.header.push_back(std::to_string(n));
  t.rows.assign(kWLastLength - kWFirstLength + 1, {});
  for (unsigned n = kWFirstLength; n <= kWLastLength; ++n) {
    t.rows[n - kWFirstLength].push_back(std::to_string(n));
  }
  for (auto modulus : kWModuli) {
    const auto series = dp_count_series(Ring(RingSpec::zmod(modulus)), kWLastLength);
    for (unsigned n = kWFirstLength; n <= kWLastLength; ++n) {
      t.rows[n - kWFirstLength].push_back(series[n - 1].at(sign).get_str());
    }
  }
  return t;
}

Table st_table() {
  const Ring z4(RingSpec::zmod(4));
  Table t;
  t.name = "st";
  t.header = {"st", "S", "-S", "T", "-T"};
  for (unsigned n = reference::kStFirstLength; n <= reference::kStLastLength;
       ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (auto target : {StTarget::S, StTarget::MinusS, StTarget::T,
                        StTarget::MinusT}) {
      row.push_back(z4_recurrence(st_matrix(z4, target), n).get_str());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table v_ell_table(std::uint32_t max_modulus, const VTableBudget& budget) {
  Table t;
  t.name = "v-ell";
  t.header = {"v-ell", "v", "ell"};
  for (const auto& row : v_table(max_modulus, budget)) {
    t.rows.push_back({std::to_string(row.modulus), std::to_string(row.v),
                      std::to_string(row.ell)});
  }
  return t;
}

std::string to_csv(const Table& table) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
  return out;
}

}  // namespace quid
