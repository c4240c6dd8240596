#pragma once

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lr {

// Evaluates fn(first..last) into a vector in index order, optionally on a few
// threads.  The first exception wins and is rethrown after all workers join.
template <typename T>
std::vector<T> indexed_parallel(long first, long last, unsigned threads,
                                const std::function<T(long)>& fn) {
    if (last < first) return {};
    std::vector<T> out(last - first + 1);
    unsigned T_ = std::max(1u, std::min<unsigned>(threads, out.size()));
    if (T_ == 1) {
        for (long n = first; n <= last; ++n) out[n - first] = fn(n);
        return out;
    }
    std::mutex err_mutex;
    std::exception_ptr err;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < T_; ++t)
        pool.emplace_back([&, t] {
            try {
                for (long n = first + t; n <= last; n += static_cast<long>(T_)) out[n - first] = fn(n);
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (!err) err = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace lr
