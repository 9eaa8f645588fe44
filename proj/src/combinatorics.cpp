#include "pbern/combinatorics.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace pbern {

namespace {

void require_non_negative(std::int64_t n, const char* what)
{
    if (n < 0) {
        throw std::invalid_argument(std::string(what) + ": argument must be non-negative");
    }
}

}  // namespace

Rational harmonic(std::int64_t n)
{
    require_non_negative(n, "harmonic");
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(0)};

    std::lock_guard lock(mutex);
    while (static_cast<std::int64_t>(cache.size()) <= n) {
        const auto j = static_cast<std::int64_t>(cache.size());
        cache.push_back(cache.back() + Rational(BigInt(1), BigInt(std::to_string(j))));
    }
    return cache[static_cast<std::size_t>(n)];
}

BigInt factorial(std::int64_t n)
{
    require_non_negative(n, "factorial");
    static std::mutex mutex;
    static std::vector<BigInt> cache{BigInt(1)};

    std::lock_guard lock(mutex);
    while (static_cast<std::int64_t>(cache.size()) <= n) {
        const auto j = static_cast<unsigned long>(cache.size());
        cache.push_back(cache.back() * j);
    }
    return cache[static_cast<std::size_t>(n)];
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    require_non_negative(n, "binomial");
    if (k < 0 || k > n) {
        return BigInt(0);
    }
    static std::mutex mutex;
    static std::vector<std::vector<BigInt>> rows{{BigInt(1)}};

    std::lock_guard lock(mutex);
    while (static_cast<std::int64_t>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<BigInt> row(prev.size() + 1);
        row.front() = 1;
        row.back() = 1;
        for (std::size_t i = 1; i + 1 < row.size(); ++i) {
            row[i] = prev[i - 1] + prev[i];
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace pbern
