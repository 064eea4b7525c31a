// File and serialization helpers for the command-line tool.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace ebmeans::cli {

using nlohmann::json;

// Newline-delimited reals; '#' starts a comment line. Throws io_error with a
// line number on malformed or non-finite values, and when no values remain.
std::vector<double> read_data_file(const std::string& path);

// Whole-file read / write; io_error on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Parse a JSON document; malformed content maps to io_error (exit 1).
json parse_json_file(const std::string& path);

// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);

// FNV-1a over the canonical (sorted-key, compact) dump of a resolved
// configuration; stable across platforms.
std::string config_digest(const json& resolved);

std::string iso_utc_now();

// Manifest embedded in every output document. Timestamps live in their own
// subobject so consumers can strip them before byte comparisons.
json make_manifest(const std::string& command, const json& resolved_config,
                   std::uint64_t root_seed, const std::string& started,
                   const std::string& finished);

}  // namespace ebmeans::cli
