#include "dirspaces/primes.hpp"

#include <mutex>
#include <stdexcept>

namespace dirspaces {

PrimeTable::PrimeTable(std::size_t limit)
    : limit_(limit < 2 ? 2 : limit), spf_(limit_ + 1, 0), index_of_(limit_ + 1, 0) {
    for (std::size_t i = 2; i <= limit_; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            index_of_[i] = static_cast<std::uint32_t>(primes_.size());
            primes_.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes_) {
            const std::size_t m = i * p;
            if (p > spf_[i] || m > limit_) break;
            spf_[m] = p;
        }
    }
}

std::shared_ptr<const PrimeTable> PrimeTable::shared(std::size_t limit) {
    static std::mutex mutex;
    static std::shared_ptr<const PrimeTable> table;
    std::lock_guard lock(mutex);
    if (!table || table->limit() < limit) {
        std::size_t grown = table ? table->limit() : 1024;
        while (grown < limit) grown *= 2;
        table = std::make_shared<const PrimeTable>(grown);
    }
    return table;
}

std::size_t PrimeTable::prime_index(std::uint32_t p) const {
    if (p < 2 || p > limit_ || spf_[p] != p) throw std::out_of_range("not a tabulated prime");
    return index_of_[p];
}

std::vector<std::pair<std::uint32_t, unsigned>> PrimeTable::factor(std::size_t n) const {
    if (n == 0 || n > limit_) throw std::out_of_range("factor: n outside sieve range");
    std::vector<std::pair<std::uint32_t, unsigned>> out;
    while (n > 1) {
        const std::uint32_t p = spf_[n];
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    return out;
}

}  // namespace dirspaces
