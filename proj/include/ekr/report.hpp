#pragma once

#include <optional>
#include <vector>
#include <string>
#include <utility>

#include <json.hpp>

#include "ekr/verifier.hpp"

namespace ekr {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "ekr2-report/1";

// Report builders behind the CLI subcommands. All numbers that can be
// non-integral are serialized as exact "p/q" strings; big integers as decimal
// strings. Documents are deterministic except for the timing_ms field.

// Certification verdict: exhaustive search for n <= 7, spectral path for
// n >= 8. Setwise needs n >= 2, pointwise n >= 5.
Json cmd_verify(int n, Action action);

// Appendix character table instantiated at n (>= 13), cross-checked cell by
// cell against the Murnaghan-Nakayama recursion.
Json cmd_table3(int n);

// Full exact spectrum at the sampled (or overridden) parameter point, n >= 8.
// The override has 2 entries (branch coordinates) or, for pointwise, 3
// entries (r, s, t) addressing the full parameter space.
Json cmd_spectrum(int n, Action action,
                  std::optional<std::vector<Rational>> point);

// Exhaustive coclique data for 2 <= n <= 7.
Json cmd_coclique(int n, Action action);

// Projections of the canonical JSON document.
std::string to_csv(const Json& doc);
std::string to_markdown(const Json& doc);

// Renders with the requested format ("json", "csv" or "md").
std::string render(const Json& doc, const std::string& format);

}  // namespace ekr
