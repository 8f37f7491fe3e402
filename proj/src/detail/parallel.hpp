#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace wedgelab::detail {

inline unsigned resolve_workers(unsigned requested, std::size_t work_items)
{
    unsigned w = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    if (work_items < w)
        w = static_cast<unsigned>(std::max<std::size_t>(1, work_items));
    return w;
}

// Splits [0, n) into contiguous chunks, runs fn(begin, end) for each on its
// own thread and returns the results in chunk order, so callers that merge
// them front to back get the same answer for any worker count.
template <class Fn>
auto map_chunks(std::size_t n, unsigned workers, Fn&& fn)
{
    using Result = decltype(fn(std::size_t{}, std::size_t{}));
    const unsigned w = resolve_workers(workers, n);
    std::vector<Result> results(w);
    if (w == 1) {
        results[0] = fn(std::size_t{0}, n);
        return results;
    }
    std::vector<std::exception_ptr> errors(w);
    std::vector<std::thread> threads;
    threads.reserve(w - 1);
    auto run = [&](unsigned k) {
        const std::size_t begin = n * k / w, end = n * (k + 1) / w;
        try {
            results[k] = fn(begin, end);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    };
    for (unsigned k = 1; k < w; ++k)
        threads.emplace_back(run, k);
    run(0);
    for (auto& t : threads)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

template <class T>
std::vector<T> concat(std::vector<std::vector<T>>&& parts)
{
    std::size_t total = 0;
    for (const auto& p : parts)
        total += p.size();
    std::vector<T> out;
    out.reserve(total);
    for (auto& p : parts)
        std::move(p.begin(), p.end(), std::back_inserter(out));
    return out;
}

} // namespace wedgelab::detail
