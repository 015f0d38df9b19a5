// Global allocation instrumentation for allocation-freedom tests. Replaces the
// global operator new family and interposes the glibc malloc entry points, so
// that Eigen's aligned_malloc and C allocations are counted as well.
#include "alloc_counter.hpp"

#include <atomic>
#include <cstdlib>
#include <new>

extern "C" {
void* __libc_malloc(std::size_t);
void* __libc_calloc(std::size_t, std::size_t);
void* __libc_realloc(void*, std::size_t);
void* __libc_memalign(std::size_t, std::size_t);
}

namespace {

std::atomic<std::size_t> g_allocations{0};
std::atomic<int> g_active{0};

inline void note() noexcept {
  if (g_active.load(std::memory_order_relaxed) > 0) {
    g_allocations.fetch_add(1, std::memory_order_relaxed);
  }
}

void* checked(void* p) {
  if (p == nullptr) throw std::bad_alloc();
  return p;
}

}  // namespace

extern "C" {

void* malloc(std::size_t n) {
  note();
  return __libc_malloc(n);
}

void* calloc(std::size_t count, std::size_t n) {
  note();
  return __libc_calloc(count, n);
}

void* realloc(void* p, std::size_t n) {
  note();
  return __libc_realloc(p, n);
}

void* memalign(std::size_t align, std::size_t n) {
  note();
  return __libc_memalign(align, n);
}

void* aligned_alloc(std::size_t align, std::size_t n) {
  note();
  return __libc_memalign(align, n);
}

int posix_memalign(void** out, std::size_t align, std::size_t n) {
  note();
  void* p = __libc_memalign(align, n);
  if (p == nullptr) return 12;  // ENOMEM
  *out = p;
  return 0;
}

}  // extern "C"

void* operator new(std::size_t n) { return checked(malloc(n == 0 ? 1 : n)); }
void* operator new[](std::size_t n) { return checked(malloc(n == 0 ? 1 : n)); }
void* operator new(std::size_t n, const std::nothrow_t&) noexcept { return malloc(n == 0 ? 1 : n); }
void* operator new[](std::size_t n, const std::nothrow_t&) noexcept {
  return malloc(n == 0 ? 1 : n);
}
void* operator new(std::size_t n, std::align_val_t a) {
  return checked(memalign(static_cast<std::size_t>(a), n == 0 ? 1 : n));
}
void* operator new[](std::size_t n, std::align_val_t a) {
  return checked(memalign(static_cast<std::size_t>(a), n == 0 ? 1 : n));
}
void operator delete(void* p) noexcept { std::free(p); }
void operator delete[](void* p) noexcept { std::free(p); }
void operator delete(void* p, std::size_t) noexcept { std::free(p); }
void operator delete[](void* p, std::size_t) noexcept { std::free(p); }
void operator delete(void* p, std::align_val_t) noexcept { std::free(p); }
void operator delete[](void* p, std::align_val_t) noexcept { std::free(p); }
void operator delete(void* p, std::size_t, std::align_val_t) noexcept { std::free(p); }
void operator delete[](void* p, std::size_t, std::align_val_t) noexcept { std::free(p); }

namespace rtmbe::test {

std::size_t allocation_count() noexcept { return g_allocations.load(); }

CountAllocations::CountAllocations() noexcept : start_(g_allocations.load()) { ++g_active; }
CountAllocations::~CountAllocations() { --g_active; }
std::size_t CountAllocations::count() const noexcept { return g_allocations.load() - start_; }

}  // namespace rtmbe::test
