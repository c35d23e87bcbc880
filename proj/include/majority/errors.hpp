#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace majority {

// Preconditions on (n, k, ...) or on an input object were violated.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search or scan exceeded its configured budget. When the search can say
// something, it reports the bracket [lower, upper] it had established.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what, std::optional<long> lower = {},
                         std::optional<long> upper = {})
      : std::runtime_error(what), lower_(lower), upper_(upper) {}

  std::optional<long> lower() const { return lower_; }
  std::optional<long> upper() const { return upper_; }

 private:
  std::optional<long> lower_;
  std::optional<long> upper_;
};

// An answer vector that no coloring can produce.
class NoConsistentColoring : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace majority
