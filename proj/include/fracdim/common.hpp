#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>

namespace fracdim {

/// Error type thrown on precondition violations and malformed inputs.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

// ---------------------------------------------------------------------------
// Content hashing (FNV-1a 64) for caches and run manifests.
// ---------------------------------------------------------------------------

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

inline std::uint64_t fnv1a(const void* data, std::size_t len,
                           std::uint64_t seed = kFnvOffset) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Worker-count configuration. Zero means "use hardware concurrency".
// The setting bounds the number of workers; results never depend on it.
// ---------------------------------------------------------------------------

namespace detail {
inline std::atomic<int>& thread_count_setting() {
  static std::atomic<int> value{0};
  return value;
}
}  // namespace detail

inline void set_thread_count(int n) {
  detail::thread_count_setting().store(n < 0 ? 0 : n);
}

inline int thread_count() {
  int n = detail::thread_count_setting().load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace fracdim
