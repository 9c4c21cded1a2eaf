#pragma once

// Command-line front end. `run` is the whole program minus process setup, so tests can drive it
// with captured streams.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zlocal/presentation.hpp"

namespace zlocal::cli {

enum class OutputFormat { json, text, dot };

std::string to_string(OutputFormat f);
OutputFormat parse_format(std::string_view s);

struct CliConfig {
  std::uint64_t order_bound = 4096;
  std::uint64_t node_budget = 10'000'000;
  OutputFormat output_format = OutputFormat::json;
  Variant variant_default = Variant::corrected;
};

/// Flat `key = value` lines; `#` starts a comment; values may be double-quoted. Unknown keys and
/// non-positive bounds are validation errors.
CliConfig parse_config(std::string_view text, CliConfig base = {});

/// Defaults, then ./zlocal.toml when present, then ZLOCAL_BUDGET.
CliConfig load_config();

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitInconclusive = 4;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zlocal::cli
