#pragma once

#include <chrono>
#include <optional>

namespace cadlab {

/// Installs a per-thread deadline for the lifetime of the object. Long-running
/// kernels call check_deadline() and throw Timeout once it has passed. Nested
/// scopes keep the earlier of the two deadlines.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::milliseconds budget);
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;
  ~ScopedDeadline();

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

void check_deadline();

}  // namespace cadlab
