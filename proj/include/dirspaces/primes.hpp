#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace dirspaces {

/// Smallest-prime-factor sieve up to a fixed limit.
class PrimeTable {
public:
    explicit PrimeTable(std::size_t limit);

    /// Table covering at least `limit`, shared process-wide and grown on demand.
    static std::shared_ptr<const PrimeTable> shared(std::size_t limit);

    std::size_t limit() const noexcept { return limit_; }
    const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

    /// Smallest prime factor of n (n >= 2, n <= limit()).
    std::uint32_t smallest_factor(std::size_t n) const { return spf_.at(n); }

    /// Zero-based position of prime p in primes(); p must be prime.
    std::size_t prime_index(std::uint32_t p) const;

    /// (prime, exponent) pairs in increasing prime order; empty for n = 1.
    std::vector<std::pair<std::uint32_t, unsigned>> factor(std::size_t n) const;

private:
    std::size_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> primes_;
    std::vector<std::uint32_t> index_of_;
};

}  // namespace dirspaces
