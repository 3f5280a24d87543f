#pragma once

// Sweeps of the library's identities up to a size bound, reporting each
// identity with its pass/fail status and the first counterexample found.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minmat/bigint.hpp"
#include "minmat/symfun.hpp"

namespace minmat {

enum class Suite { dets, symfun, binomial, fibonacci, all };

std::string_view to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);

struct VerifyOptions {
  Index n_max = 12;
  Index minor_cap = kDefaultMinorCap;
  std::uint64_t seed = 42;
  Index random_lists = 200;  // per determinant family, split across the two value ranges
};

struct CheckResult {
  std::string identity;
  bool passed = true;
  Index cases = 0;
  std::string counterexample;  // first failing case, empty when passed
  std::string note;            // e.g. why a check was vacuous
};

struct VerifyReport {
  Suite suite = Suite::all;
  VerifyOptions options;
  std::vector<CheckResult> checks;

  bool passed() const;
};

VerifyReport run_verify(Suite suite, const VerifyOptions& options);

}  // namespace minmat
