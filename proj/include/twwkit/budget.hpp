#ifndef TWWKIT_BUDGET_HPP
#define TWWKIT_BUDGET_HPP

#include <chrono>
#include <cstdint>
#include <optional>

namespace twwkit {

/// Work limits shared by the exhaustive searches. A search checks the state
/// counter on every expansion and the clock every few thousand expansions.
struct Budget {
  std::uint64_t max_states = 50'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  /// Budget whose deadline comes from TWWKIT_BUDGET_MS, when set.
  static Budget from_environment();

  bool expired() const {
    return deadline && std::chrono::steady_clock::now() > *deadline;
  }
};

}  // namespace twwkit

#endif  // TWWKIT_BUDGET_HPP
