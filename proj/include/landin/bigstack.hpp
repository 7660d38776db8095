#pragma once

// Engines build long continuation and context chains on the heap; releasing
// them can recurse through destructors. Entry points run on a thread with a
// generous stack so that pathological (fuel-bounded) chains unwind safely.

#include <pthread.h>

#include <cstddef>
#include <functional>

namespace landin {

namespace detail {
struct BigStackCall {
  std::function<int()> fn;
  int result;
};

inline void* big_stack_trampoline(void* arg) {
  auto* call = static_cast<BigStackCall*>(arg);
  call->result = call->fn();
  return nullptr;
}
}  // namespace detail

inline int run_with_big_stack(std::function<int()> fn,
                              std::size_t stack_bytes = std::size_t{512} << 20) {
  detail::BigStackCall call{std::move(fn), 1};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, stack_bytes);
  pthread_t thread;
  if (pthread_create(&thread, &attr, detail::big_stack_trampoline, &call) != 0) {
    pthread_attr_destroy(&attr);
    return call.fn();  // fall back to the current stack
  }
  pthread_join(thread, nullptr);
  pthread_attr_destroy(&attr);
  return call.result;
}

}  // namespace landin
