#pragma once

#include <string>
#include <vector>

#include "quiddity/irreducible.hpp"
#include "quiddity/mat2.hpp"

namespace quid {

/// A rectangular table of exact values. The first header cell names the
/// table; the first column holds the row key (n or N).
struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// w^{+/-}_{n,N} for n = 4..8 and the published moduli, from dp_count_all.
Table w_table(Sign sign);

/// w^{+/-S}_{n,4}, w^{+/-T}_{n,4} for n = 2..10, from z4_recurrence.
Table st_table();

/// (v_N, ell_N) for N = 2..max_modulus from the adaptive enumerator.
Table v_ell_table(std::uint32_t max_modulus, const VTableBudget& budget);

/// Comma-separated, header first, '\n' line endings, trailing newline.
std::string to_csv(const Table& table);

}  // namespace quid
