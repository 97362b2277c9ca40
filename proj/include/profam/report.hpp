// Copyright 2026 The profam Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Named pass/fail/inconclusive results shared by the verification suites.

#ifndef PROFAM_REPORT_HPP_
#define PROFAM_REPORT_HPP_

#include <algorithm>
#include <string>
#include <vector>

namespace profam {

enum class CheckStatus { kPass, kFail, kInconclusive };

inline const char* StatusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kInconclusive:
      return "inconclusive";
  }
  return "fail";
}

struct NamedCheck {
  std::string name;
  CheckStatus status = CheckStatus::kFail;
  std::string witness;

  static NamedCheck Of(std::string name, bool ok, std::string witness = {}) {
    return {std::move(name), ok ? CheckStatus::kPass : CheckStatus::kFail,
            std::move(witness)};
  }
  bool passed() const { return status == CheckStatus::kPass; }
  bool failed() const { return status == CheckStatus::kFail; }
};

using CheckList = std::vector<NamedCheck>;

inline bool NoFailures(const CheckList& checks) {
  return std::none_of(checks.begin(), checks.end(),
                      [](const NamedCheck& c) { return c.failed(); });
}

inline bool AllPassed(const CheckList& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const NamedCheck& c) { return c.passed(); });
}

}  // namespace profam

#endif  // PROFAM_REPORT_HPP_
