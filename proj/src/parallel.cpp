#include "gf2lab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace gf2lab {

namespace {

std::atomic<unsigned> configured{0};

unsigned default_threads() {
    if (const char* env = std::getenv("GF2LAB_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

} // namespace

unsigned thread_count() {
    unsigned n = configured.load();
    if (n == 0) {
        n = default_threads();
        configured.store(n);
    }
    return n;
}

void set_thread_count(unsigned n) { configured.store(n == 0 ? default_threads() : n); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t min_chunk) {
    std::size_t workers = std::min<std::size_t>(thread_count(), (count + min_chunk - 1) / std::max<std::size_t>(min_chunk, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::thread> pool;
    std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace gf2lab
