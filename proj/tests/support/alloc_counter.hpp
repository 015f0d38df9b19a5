#pragma once

#include <cstddef>

namespace rtmbe::test {

/// Heap allocations (operator new and the malloc family) observed while a
/// counting scope is active on any thread. Only meaningful in binaries that
/// link alloc_counter.cpp.
std::size_t allocation_count() noexcept;

class CountAllocations {
 public:
  CountAllocations() noexcept;
  ~CountAllocations();
  CountAllocations(const CountAllocations&) = delete;
  CountAllocations& operator=(const CountAllocations&) = delete;

  /// Allocations since construction.
  std::size_t count() const noexcept;

 private:
  std::size_t start_;
};

}  // namespace rtmbe::test
