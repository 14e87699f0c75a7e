#include "cadlab/deadline.hpp"

#include "cadlab/error.hpp"

namespace cadlab {
namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> current_deadline;
}

ScopedDeadline::ScopedDeadline(std::chrono::milliseconds budget) : previous_(current_deadline) {
  auto when = std::chrono::steady_clock::now() + budget;
  if (!current_deadline || when < *current_deadline) current_deadline = when;
}

ScopedDeadline::~ScopedDeadline() { current_deadline = previous_; }

void check_deadline() {
  if (current_deadline && std::chrono::steady_clock::now() >= *current_deadline) throw Timeout();
}

}  // namespace cadlab
