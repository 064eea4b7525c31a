// Error types shared across the library.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ebmeans {

// Unreadable or malformed input (data files, documents).
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally valid input whose values violate a contract (bad kappa,
// dimension mismatch, unknown config key, ...).
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its stated domain (empty chain,
// degenerate threshold, s >= n, ...).
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite values surfaced mid-computation; carries enough context to
// re-run the offending replication.
class numeric_error : public std::runtime_error {
 public:
  numeric_error(const std::string& what, int replication, std::uint64_t seed)
      : std::runtime_error(what + " (replication " + std::to_string(replication) +
                           ", seed " + std::to_string(seed) + ")"),
        replication_(replication),
        seed_(seed) {}

  int replication() const { return replication_; }
  std::uint64_t seed() const { return seed_; }

 private:
  int replication_;
  std::uint64_t seed_;
};

}  // namespace ebmeans
