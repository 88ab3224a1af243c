#pragma once

// Shared file formats: the domain spec (JSON), curve CSV export/import, and
// the run-header helpers used by the CLI.

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "corank1/curves.hpp"

namespace corank1 {

inline constexpr const char* kArtifactVersion = "0.1.0";

nlohmann::json domain_to_json(const ModelDomain& D);
ModelDomain domain_from_json(const nlohmann::json& j);
ModelDomain load_domain(const std::string& path);
void save_domain(const ModelDomain& D, const std::string& path);

/// Rows: t, re z0, im z0, ..., re zd, im zd.  The header comment carries the
/// artifact version and the caller's config hash.
void write_curve_csv(std::ostream& os, const CurvePath& c, const std::string& header_comment);
CurvePath read_curve_csv(std::istream& is);

std::uint64_t fnv1a(std::string_view s);
std::string run_header(const std::string& config_digest, std::uint64_t seed);

}  // namespace corank1
