#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace stylo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

// A pipeline stage was invoked before the stage it depends on.
struct DependencyError : Error {
  explicit DependencyError(const std::string& missing_path)
      : Error("missing upstream artifact: " + missing_path), path(missing_path) {}
  std::string path;
};

struct NumericError : Error {
  using Error::Error;
};

// Raised by the unsmoothed n-gram model when queried with a context that was
// never observed during fitting.
struct UnseenContextError : Error {
  explicit UnseenContextError(std::vector<int> ctx)
      : Error("unseen n-gram context"), context(std::move(ctx)) {}
  std::vector<int> context;
};

}  // namespace stylo
