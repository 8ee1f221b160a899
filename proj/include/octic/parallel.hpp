#pragma once

#include <cstddef>
#include <functional>

namespace octic {

/// Worker count: hardware concurrency, capped by the OCTIC_THREADS
/// environment variable when it holds a positive integer.
unsigned thread_budget();

/// Runs body(i) for i in [0, count) on up to thread_budget() threads. The
/// body must only touch state owned by index i.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace octic
