#include "diaglab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace diaglab {

int threadBudget() {
    if (const char* env = std::getenv("DIAGLAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min(v, 64);
        return 1;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return std::clamp(static_cast<int>(hc == 0 ? 1 : hc), 1, 16);
}

void parallelFor(std::size_t count, const std::function<void(std::size_t)>& fn) {
    int budget = threadBudget();
    if (budget <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(budget), count);
    std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([begin, end, &fn] {
            for (std::size_t i = begin; i < end; ++i) fn(i);
        });
    }
    for (auto& t : threads) t.join();
}

}  // namespace diaglab
