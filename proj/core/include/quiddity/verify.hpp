#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quid {

enum class CheckStatus { Match, Mismatch, FlaggedTypo, SkippedResource };

const char* to_string(CheckStatus status);

struct CheckRecord {
  std::string name;
  /// Which published table cell or identity the check is about.
  std::string anchor;
  std::string expected;
  std::string computed;
  CheckStatus status = CheckStatus::Match;
  /// Free-form detail, e.g. the arbitration values of a flagged cell.
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  std::size_t count(CheckStatus status) const;
  /// No check ended in Mismatch.
  bool passed() const { return count(CheckStatus::Mismatch) == 0; }
  void append(VerificationReport other);
};

/// A published cell believed to be misprinted. `arbitration` lists the
/// independent methods ("dp", "formula", "naive") that must agree with each
/// other before the cell is reported as flagged-typo.
struct TypoEntry {
  std::string table;
  unsigned row = 0;
  std::uint32_t column = 0;
  std::string printed;
  std::vector<std::string> arbitration;
};

/// CSV with header `table,n,N,printed,arbitration`; arbitration methods are
/// joined by '+'. Lines starting with '#' are ignored.
std::vector<TypoEntry> parse_typo_registry(std::istream& in);
std::vector<TypoEntry> load_typo_registry(const std::filesystem::path& path);

enum class Suite { Tables, Formulas, Recurrence, Irreducible, All };

/// Throws InvalidArgument for an unknown suite name.
Suite parse_suite(std::string_view name);
const char* to_string(Suite suite);

struct VerifyOptions {
  unsigned jobs = 1;
  /// Largest modulus of the irreducible census.
  std::uint32_t irreducible_max_modulus = 10;
};

VerificationReport verify(Suite suite, std::span<const TypoEntry> typos,
                          const VerifyOptions& options = {});

VerificationReport verify_tables(std::span<const TypoEntry> typos);
VerificationReport verify_formulas();
VerificationReport verify_recurrence();
VerificationReport verify_irreducible(const VerifyOptions& options);

}  // namespace quid
