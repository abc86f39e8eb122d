#pragma once

// Segmented, odd-only, bit-packed sieve of Eratosthenes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bertrand::sieve {

struct SieveOptions {
    /// Bytes of flag storage per segment; each byte covers 16 integers.
    std::size_t segment_bytes = 262144;
    /// Worker threads for parallel sweeps; 0 means all hardware threads.
    unsigned threads = 0;

    std::uint64_t segment_span() const;
    unsigned resolved_threads() const;
};

/// Largest r with r*r <= x.
std::uint64_t isqrt(std::uint64_t x);

/// All primes <= limit from a plain (unsegmented) odd-only sieve. Used for
/// base primes and small ranges.
std::vector<std::uint64_t> small_primes(std::uint64_t limit);

/// Odd base primes covering every composite below `hi`, i.e. odd primes
/// <= isqrt(hi - 1).
std::vector<std::uint64_t> base_primes_for(std::uint64_t hi);

class SieveSegment {
public:
    /// Sieves [lo, hi). `base` must contain every odd prime <= isqrt(hi - 1)
    /// (extra larger primes are ignored).
    SieveSegment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> base);

    std::uint64_t lo() const { return lo_; }
    std::uint64_t hi() const { return hi_; }

    /// k must lie in [lo, hi).
    bool is_prime(std::uint64_t k) const;

    /// Calls fn(p) for each prime in the segment, ascending.
    template <class Fn>
    void for_each_prime(Fn&& fn) const {
        if (lo_ <= 2 && 2 < hi_) fn(std::uint64_t{2});
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            std::uint64_t word = bits_[w];
            while (word != 0) {
                const int bit = __builtin_ctzll(word);
                word &= word - 1;
                fn(first_odd_ + 2 * (64 * w + static_cast<std::uint64_t>(bit)));
            }
        }
    }

    std::size_t count() const;

private:
    std::uint64_t lo_;
    std::uint64_t hi_;
    std::uint64_t first_odd_;
    std::size_t odd_count_;
    std::vector<std::uint64_t> bits_;  // bit i <-> first_odd_ + 2i
};

/// Sequential cursor over the primes <= upper_limit. Sieves one segment at a
/// time, so memory stays bounded by the segment span.
class PrimeStream {
public:
    PrimeStream(std::uint64_t upper_limit, const SieveOptions& options = {});

    /// Next prime, or nullopt once the stream is exhausted.
    std::optional<std::uint64_t> next();

    std::uint64_t cursor() const { return cursor_; }
    std::uint64_t upper_limit() const { return upper_limit_; }

    std::vector<std::uint64_t> collect();

private:
    bool load_next_segment();

    std::uint64_t cursor_ = 0;  // next segment starts here
    std::uint64_t upper_limit_;
    std::uint64_t span_;
    std::vector<std::uint64_t> base_;
    std::vector<std::uint64_t> buffer_;
    std::size_t pos_ = 0;
};

PrimeStream primes_up_to(std::uint64_t limit, const SieveOptions& options = {});

bool is_prime(std::uint64_t k);

/// Smallest prime > k, found by forward segment scans. Throws
/// std::overflow_error for k >= 2^63.
std::uint64_t next_prime_after(std::uint64_t k, const SieveOptions& options = {});

/// Number of primes <= limit (parallel over segments).
std::uint64_t prime_count(std::uint64_t limit, const SieveOptions& options = {});

/// Splits [lo, hi) into consecutive segments of the configured span.
std::vector<std::pair<std::uint64_t, std::uint64_t>> segment_ranges(std::uint64_t lo, std::uint64_t hi,
                                                                    const SieveOptions& options);

}  // namespace bertrand::sieve
