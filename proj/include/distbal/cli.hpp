// Copyright 2026 The distbal Authors
//
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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "distbal/balance.hpp"

namespace distbal {

inline constexpr std::string_view kToolVersion = "0.1.0";

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInput = 2;
inline constexpr int kDifferential = 3;
}  // namespace exit_code

/// A report plus where it came from.
struct ReportDocument {
  BalanceReport report;
  std::string source;  // input path or family spec
  std::string tool_version{kToolVersion};
  double wall_seconds = 0.0;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Fields are emitted in a fixed order; absent optionals become null.
nlohmann::ordered_json to_json(const ReportDocument& doc);
ReportDocument report_document_from_json(const nlohmann::ordered_json& j);

/// Human-readable table.
std::string format_report(const ReportDocument& doc, bool color);

struct BenchRow {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  double seconds = 0.0;  // best single full_report run
  double ns_per_mn() const noexcept {
    return seconds * 1e9 / (static_cast<double>(m) * static_cast<double>(n));
  }
};

/// Times full_report on gamma_k for each k (single-threaded). Each k is
/// rerun until `min_total_seconds` have elapsed and the fastest run is kept.
std::vector<BenchRow> run_bench(std::span<const std::size_t> k_values,
                                double min_total_seconds = 0.25);

struct CliStreams {
  std::ostream& out;
  std::ostream& err;
  bool color = false;
};

/// Entry point behind the `distbal` binary. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, CliStreams io);

}  // namespace distbal
