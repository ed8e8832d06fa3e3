#pragma once

#include <cstddef>

namespace zenoptics {

/// Number of worker threads to use. `requested == 0` means "auto" (hardware
/// concurrency). The ZENOPTICS_THREADS environment variable, when set to a
/// positive integer, caps the result. Always returns at least 1.
std::size_t resolve_thread_count(std::size_t requested = 0);

}  // namespace zenoptics
