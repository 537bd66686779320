#include "teleport/report.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace teleport {

namespace {

std::string chars(double x, std::chars_format fmt, int precision) {
  char buf[128];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, fmt, precision);
  std::string s(buf, res.ptr);
  if (s.front() == '-' && s.find_first_not_of("-0.e+", 0) == std::string::npos) s.erase(0, 1);
  return s;
}

void csv_row(std::ostream& out, double axis, const TrajectoryPoint& p) {
  out << format_sig(axis) << ',' << format_sig(p.concurrence) << ',' << format_sig(p.singlet_fraction) << ','
      << format_sig(p.fidelity) << ',' << format_sig(p.trace_err) << ',' << format_sig(p.min_eig) << '\n';
}

constexpr std::string_view kCsvHeader = "axis,C,f,F,trace_err,min_eig\n";

} // namespace

std::string format_fixed(double x) { return chars(x, std::chars_format::fixed, 12); }

std::string format_sig(double x) { return chars(x, std::chars_format::general, 12); }

void write_report(std::ostream& out, const MeasureReport& r) {
  const auto kv = [&](std::string_view k, const std::string& v) { out << k << '=' << v << '\n'; };
  kv("d", std::to_string(r.d));
  kv("schmidt_rank", std::to_string(r.schmidt_rank));
  kv("negativity", format_fixed(r.negativity));
  kv("f", format_fixed(r.singlet_fraction));
  kv("F", format_fixed(r.fidelity));
  if (r.concurrence) kv("C", format_fixed(*r.concurrence));
  if (r.cren) kv("cren", format_fixed(*r.cren));
  if (r.e_d2) kv("e_d2", format_fixed(*r.e_d2));
  if (r.e_d3) kv("e_d3", format_fixed(*r.e_d3));
  kv("useful", r.useful_for_teleportation ? "true" : "false");
  kv("rank_class", std::string(to_string(r.rank_class)));
}

void write_csv(std::ostream& out, const std::vector<TrajectoryPoint>& points) {
  out << kCsvHeader;
  for (const auto& p : points) csv_row(out, p.t, p);
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvHeader;
  for (const auto& r : rows) csv_row(out, r.axis_value, r.endpoint);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex_digest(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string manifest_json(const RunManifest& m) {
  nlohmann::json j;
  j["seed"] = m.seed;
  j["version"] = m.version;
  j["command_line"] = m.command_line;
  nlohmann::json inputs = nlohmann::json::object();
  for (const auto& [label, digest] : m.input_digests) inputs[label] = digest;
  j["input_digests"] = inputs;
  j["wall_seconds"] = m.wall_seconds;
  return j.dump(2);
}

} // namespace teleport
