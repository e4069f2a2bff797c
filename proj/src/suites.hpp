#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "isotet/harness.hpp"

namespace isotet::detail {

struct TrialOutcome {
  double residual = 0.0;
  bool failed = false;
};

using TrialFn = TrialOutcome (*)(TrialRng&, const TrialConfig&, std::size_t);

struct Suite {
  std::string_view id;
  std::string_view unit;
  TrialFn trial;
};

const std::vector<Suite>& suite_table();

}  // namespace isotet::detail
