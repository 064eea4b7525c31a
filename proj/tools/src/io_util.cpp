#include "io_util.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "ebmeans/errors.hpp"
#include "ebmeans/version.hpp"

namespace ebmeans::cli {

std::vector<double> read_data_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open data file: " + path);

  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    if (line[b] == '#') continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    const char* first = line.data() + b;
    const char* last = line.data() + e + 1;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
      throw io_error(path + ":" + std::to_string(lineno) +
                     ": expected one real number per line, got '" +
                     line.substr(b, e - b + 1) + "'");
    if (!std::isfinite(v))
      throw io_error(path + ":" + std::to_string(lineno) +
                     ": non-finite value not allowed");
    values.push_back(v);
  }
  if (values.empty())
    throw io_error(path + ": no numeric values found");
  return values;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open output file for writing: " + path);
  out << content;
  if (!out) throw io_error("failed writing output file: " + path);
}

json parse_json_file(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw io_error(path + ": " + e.what());
  }
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

namespace {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::string config_digest(const json& resolved) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(resolved.dump())));
  return buf;
}

std::string iso_utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json make_manifest(const std::string& command, const json& resolved_config,
                   std::uint64_t root_seed, const std::string& started,
                   const std::string& finished) {
  return json{
      {"command", command},
      {"config_digest", config_digest(resolved_config)},
      {"root_seed", root_seed},
      {"tool_version", kVersion},
      {"timestamps", json{{"started", started}, {"finished", finished}}},
  };
}

}  // namespace ebmeans::cli
