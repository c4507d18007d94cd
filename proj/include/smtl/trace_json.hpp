#pragma once

#include "smtl/trace.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace smtl {

/// Trace file contents. When a hierarchy is present it was checked against
/// the levels on load.
struct TraceDocument {
  StratifiedTrace trace;
  std::optional<Hierarchy> hierarchy;
};

/// Reads the JSON trace format:
///   { "timestamps": [0, 0.1, "1/3", ...],
///     "resolutions": {"1": 0.1, "2": 0.5},
///     "levels": {"1": [["p","q"], ["p"], ...], "2": [...]},
///     "hierarchy": [{"op":"identity"}, {"op":"project","keep":["p"]},
///                   {"op":"smooth_isolated","radius":0.3},
///                   {"op":"downsample","period":1.0,"hold":true}] }
/// Numbers are read from their source text, so 0.1 is exactly 1/10.
/// Throws TraceFormatError on malformed input or a failed consistency check.
TraceDocument parse_trace_json(std::string_view text);
TraceDocument load_trace_file(const std::string& path);

/// Serializes in the same format; non-integer values are written as
/// exact strings ("0.1", "1/3").
std::string to_trace_json(const StratifiedTrace& t, const Hierarchy* hierarchy = nullptr);

} // namespace smtl
