#pragma once

#include <cstdint>

#include "latt/json_io.hpp"
#include "latt/oracle.hpp"

namespace latt {

/// Full structural analysis of a subspace given as
/// {"labels": [...], "basis": [[...], ...]}.  All fields are canonical:
/// the same input always yields the same bytes under canonical_dump.
Json analyze_report(const Json& input);

/// Classification of a functional given as
/// {"labels": [...], "coefficients": {label: "p/q", ...}}, with the
/// kernel cross-checks.
Json classify_report(const Json& input);

/// The executable certificate around the vanishing-near-zero ideal of the
/// piecewise-linear lattice, at index n.
Json pl_demo_report(std::size_t n);

Json oracle_check_report(const OracleSweep& sweep, std::uint64_t seed, std::size_t max_dim);

/// Plain-text renderings for --format text.
std::string analyze_text(const Json& report);
std::string classify_text(const Json& report);
std::string pl_demo_text(const Json& report);
std::string oracle_check_text(const Json& report);

} // namespace latt
