#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "teleport/dynamics.hpp"
#include "teleport/measures.hpp"

namespace teleport {

/// Fixed notation with 12 decimals, '.' separator, no negative zero.
std::string format_fixed(double x);
/// 12 significant digits, shortest of fixed/scientific.
std::string format_sig(double x);

/// key=value block for a measure report; optional fields absent are skipped.
void write_report(std::ostream& out, const MeasureReport& r);

/// Header `axis,C,f,F,trace_err,min_eig`, LF line endings.
void write_csv(std::ostream& out, const std::vector<TrajectoryPoint>& points);
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex_digest(std::uint64_t h);

struct RunManifest {
  std::uint64_t seed = 0;
  std::string version;
  std::vector<std::string> command_line;
  /// (label, FNV-1a digest) per input.
  std::vector<std::pair<std::string, std::string>> input_digests;
  double wall_seconds = 0.0;
};

std::string manifest_json(const RunManifest& m);

} // namespace teleport
