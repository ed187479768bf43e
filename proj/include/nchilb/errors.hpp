#pragma once

#include <stdexcept>
#include <string>

namespace nchilb {

// Thrown when an enumeration would exceed its configured cap. Carries the
// count that would have been generated (decimal string, may exceed 2^64).
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::string count)
      : std::runtime_error(what), count_(std::move(count)) {}
  const std::string& count() const noexcept { return count_; }

 private:
  std::string count_;
};

}  // namespace nchilb
