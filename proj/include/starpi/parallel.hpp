#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace starpi {

namespace detail {
inline std::atomic<int> g_jobs{1};
}

// Worker count used by parallel_map. Results never depend on it: tasks are
// computed independently and combined in index order.
inline void set_jobs(int jobs) { detail::g_jobs = std::max(1, jobs); }
inline int get_jobs() { return detail::g_jobs.load(); }

// Runs fn(i) for i in [0, n) and returns the results in index order.
template <typename T>
std::vector<T> parallel_map(int n, const std::function<T(int)>& fn) {
    std::vector<std::optional<T>> slots(static_cast<size_t>(n));
    int jobs = std::min(get_jobs(), n);
    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) slots[i] = fn(i);
    } else {
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w]() {
                for (int i = w; i < n; i += jobs) slots[i] = fn(i);
            });
        }
        for (auto& t : workers) t.join();
    }
    std::vector<T> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace starpi
