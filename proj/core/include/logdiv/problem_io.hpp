#pragma once

#include "logdiv/theorems.hpp"

#include <string>

namespace logdiv {

/// Reads a JSON problem file:
///   {
///     "n": 3,
///     "variables": ["x0", "x1", "x2", "x3"],
///     "divisors": [{"name": "D", "poly": "x0*x1 - x2^2"}],
///     "decomposition": ["D1", "D2"],         // optional
///     "total": "D",                          // optional
///     "vector_field": [["0", ...], ...],     // optional (n+1)^2 rationals
///     "singular_points": {"D": [["0","0","0","1"]], "C": [...]},  // optional
///     "options": {"chart": 3, "probes": true, "allow_linear_change": false}
///   }
/// Rationals are strings ("p" or "p/q") everywhere. Malformed documents raise
/// InputError; the result has passed validate_problem.
ProblemSpec load_problem(const std::string& path);
ProblemSpec parse_problem_text(const std::string& text);

/// Byte-deterministic machine form (fixed key order, rationals as "p/q"
/// strings, integers as decimal strings) and a human-readable rendering.
std::string report_json(const VerificationReport& rep);
std::string report_text(const VerificationReport& rep);

std::string milnor_json(const MilnorReport& rep, const std::string& divisor);
std::string milnor_text(const MilnorReport& rep, const std::string& divisor);

std::string euler_json(const EulerComplement& e);
std::string euler_text(const EulerComplement& e);

/// {"error": {"kind": ..., "message": ...}} for scripted consumers.
std::string error_json(const std::string& kind, const std::string& message);

} // namespace logdiv
