#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "quiddity/counting.hpp"
#include "quiddity/ring.hpp"

namespace quid::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUnsupported = 2,
  kResource = 3,
};

enum class CountTarget { Minus, Plus, All };
enum class CountMethod { Formula, Dp, Naive, Recurrence };

CountTarget parse_target(std::string_view text);
CountMethod parse_method(std::string_view text);
const char* to_string(CountTarget target);
const char* to_string(CountMethod method);

/// Number of n-tuples over `ring` with M_n equal to the target. `All` counts
/// M_n = +Id or -Id, each solution once. Throws Unsupported when the method
/// does not cover the ring or length, ResourceLimit past a guard.
BigInt count(const Ring& ring, unsigned n, CountTarget target,
             CountMethod method, unsigned jobs = 1);

/// Worker count from --jobs, overridden by QUIDDITY_JOBS when set.
unsigned resolve_jobs(unsigned flag_value);

/// Full command-line driver. `args` excludes the program name. Returns the
/// process exit code; JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace quid::cli
