#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <string_view>
#include <thread>
#include <vector>

#include "supercong/report.hpp"

namespace supercong {

struct PrimeRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

/// Parses an inclusive "lo..hi" (or a single "p"). Throws Error{ParseError}.
PrimeRange parse_prime_range(std::string_view text);

/// Odd primes in [lo, hi], ascending, by a segmented sieve of Eratosthenes.
std::vector<std::uint64_t> odd_primes_in(PrimeRange range);

/// Runs fn(p) -> std::vector<CheckReport> for every prime on `jobs` worker
/// threads and returns all reports sorted by report_less. The first
/// exception thrown by any worker is rethrown after all workers stop.
template <class Fn>
std::vector<CheckReport> sweep_primes(const std::vector<std::uint64_t>& primes, unsigned jobs, Fn fn) {
    std::vector<std::vector<CheckReport>> per_prime(primes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};
    std::exception_ptr failure;
    std::atomic_flag failure_set = ATOMIC_FLAG_INIT;

    auto worker = [&] {
        for (;;) {
            if (abort.load(std::memory_order_relaxed)) return;
            const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= primes.size()) return;
            try {
                per_prime[i] = fn(primes[i]);
            } catch (...) {
                if (!failure_set.test_and_set()) failure = std::current_exception();
                abort.store(true);
                return;
            }
        }
    };

    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(primes.size(), 1))));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<CheckReport> out;
    for (auto& chunk : per_prime) {
        for (auto& r : chunk) out.push_back(std::move(r));
    }
    std::stable_sort(out.begin(), out.end(), report_less);
    return out;
}

}  // namespace supercong
