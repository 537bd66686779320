#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "teleport/states.hpp"

namespace teleport {

/// Malformed state file: bad header, non-numeric token, wrong entry count.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Text state format:
///
///   # comment
///   pure 3          (or: dm 3)
///   re im re im ... (d^2 or d^4 complex entries, row-major)
///
/// Pure files hold the state vector with index j*d + k for |j>|k>.
using ParsedState = std::variant<PureBipartiteState, DensityMatrix>;

/// Throws ParseError on syntax problems and InvariantViolation when the entries
/// do not form a valid state.
ParsedState parse_state(std::string_view text);
ParsedState read_state_file(const std::string& path);

/// Writes with shortest round-trip float formatting.
void write_state(std::ostream& out, const PureBipartiteState& psi);
void write_state(std::ostream& out, const DensityMatrix& rho);

} // namespace teleport
