#ifndef ASSOCPOLY_REPORT_HPP
#define ASSOCPOLY_REPORT_HPP

#include <string>

#include "json.hpp"

namespace assocpoly {

/// Deterministic dump: sorted keys (nlohmann default), two-space indent,
/// trailing newline.
std::string canonical_dump(const nlohmann::json& j);

/// FNV-1a 64-bit of a string, as 16 hex digits. Stable across runs and
/// platforms; used to key report filenames by config.
std::string fnv1a_hex(const std::string& s);

/// Re-runs the check a witness records and reports whether the violation
/// (or counterexample) reproduces. Result: {"claim": ..., "reproduced":
/// bool, "detail": ...}. Throws std::invalid_argument for unknown claims
/// or malformed witnesses.
nlohmann::json replay_witness(const nlohmann::json& witness);

}  // namespace assocpoly

#endif
