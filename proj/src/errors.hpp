#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mng {

// All recoverable failures carry a machine-readable kind (e.g. "LoopFound",
// "NonAbelianGroup") plus a human-readable detail string.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace mng
