#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace panev {

/// Run trial 0..trials-1, possibly concurrently, and concatenate the per-trial
/// output strictly in trial order.  Trials must be pure functions of their
/// index; the first raised exception is rethrown in trial order.
inline std::string run_trials_ordered(long trials, unsigned jobs,
                                      const std::function<std::string(long)>& trial_fn) {
    if (trials <= 0) return {};
    if (jobs <= 1) {
        std::string out;
        for (long t = 0; t < trials; ++t) out += trial_fn(t);
        return out;
    }

    std::vector<std::string> parts(static_cast<std::size_t>(trials));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(trials));
    std::atomic<long> cursor{0};
    unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(trials));

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                long t = cursor.fetch_add(1);
                if (t >= trials) return;
                try {
                    parts[static_cast<std::size_t>(t)] = trial_fn(t);
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();

    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::string out;
    for (const auto& part : parts) out += part;
    return out;
}

} // namespace panev
