#include "zenoptics/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>

namespace zenoptics {

std::size_t resolve_thread_count(std::size_t requested) {
    std::size_t n = requested;
    if (n == 0) {
        n = std::thread::hardware_concurrency();
        if (n == 0) n = 1;
    }
    if (const char* env = std::getenv("ZENOPTICS_THREADS")) {
        std::size_t cap = 0;
        const char* end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, cap);
        if (ec == std::errc{} && ptr == end && cap > 0 && cap < n) n = cap;
    }
    return n == 0 ? 1 : n;
}

}  // namespace zenoptics
