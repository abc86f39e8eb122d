#include "bertrand/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "parallel.hpp"

namespace bertrand::sieve {

namespace {

constexpr std::uint64_t kMaxArgument = std::uint64_t{1} << 63;
constexpr std::uint64_t kMinScanWindow = 4096;

}  // namespace

std::uint64_t SieveOptions::segment_span() const {
    if (segment_bytes == 0) throw std::invalid_argument("segment_bytes must be positive");
    return static_cast<std::uint64_t>(segment_bytes) * 16;
}

unsigned SieveOptions::resolved_threads() const {
    if (threads != 0) return threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t isqrt(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    auto sq = [](std::uint64_t v) { return static_cast<unsigned __int128>(v) * v; };
    while (r > 0 && sq(r) > x) --r;
    while (sq(r + 1) <= x) ++r;
    return r;
}

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    primes.push_back(2);
    // composite[i] <-> 2i + 1
    const std::uint64_t odd_count = (limit + 1) / 2;
    std::vector<bool> composite(odd_count, false);
    for (std::uint64_t i = 1; i < odd_count; ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 1;
        primes.push_back(p);
        for (std::uint64_t j = p * p / 2; j < odd_count; j += p) composite[j] = true;
    }
    return primes;
}

std::vector<std::uint64_t> base_primes_for(std::uint64_t hi) {
    if (hi <= 2) return {};
    auto primes = small_primes(isqrt(hi - 1));
    if (!primes.empty()) primes.erase(primes.begin());
    return primes;
}

SieveSegment::SieveSegment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> base)
    : lo_(lo), hi_(hi), first_odd_(lo | 1), odd_count_(0) {
    if (hi < lo) throw std::invalid_argument("SieveSegment: hi < lo");
    if (hi > kMaxArgument) throw std::overflow_error("SieveSegment: range too large");
    if (hi > first_odd_) odd_count_ = static_cast<std::size_t>((hi - first_odd_ + 1) / 2);
    bits_.assign((odd_count_ + 63) / 64, ~std::uint64_t{0});
    if (odd_count_ % 64 != 0) bits_.back() = (std::uint64_t{1} << (odd_count_ % 64)) - 1;
    if (odd_count_ == 0) return;
    if (first_odd_ == 1) bits_[0] &= ~std::uint64_t{1};

    for (const std::uint64_t p : base) {
        if (p == 2) continue;
        if (p * p >= hi) break;
        std::uint64_t m = (first_odd_ + p - 1) / p * p;
        if (m % 2 == 0) m += p;
        const std::uint64_t start = std::max(p * p, m);
        const std::uint64_t step = 2 * p;
        for (std::uint64_t j = start; j < hi; j += step) {
            const std::uint64_t i = (j - first_odd_) / 2;
            bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
        }
    }
}

bool SieveSegment::is_prime(std::uint64_t k) const {
    if (k < lo_ || k >= hi_) throw std::out_of_range("SieveSegment::is_prime: outside segment");
    if (k == 2) return true;
    if (k % 2 == 0) return false;
    const std::uint64_t i = (k - first_odd_) / 2;
    return (bits_[i >> 6] >> (i & 63)) & 1;
}

std::size_t SieveSegment::count() const {
    std::size_t n = (lo_ <= 2 && 2 < hi_) ? 1 : 0;
    for (const auto w : bits_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
}

PrimeStream::PrimeStream(std::uint64_t upper_limit, const SieveOptions& options)
    : upper_limit_(upper_limit), span_(options.segment_span()) {
    if (upper_limit >= kMaxArgument) throw std::overflow_error("PrimeStream: limit too large");
    base_ = base_primes_for(upper_limit + 1);
}

bool PrimeStream::load_next_segment() {
    while (cursor_ <= upper_limit_) {
        const std::uint64_t hi = std::min(cursor_ + span_, upper_limit_ + 1);
        SieveSegment segment(cursor_, hi, base_);
        cursor_ = hi;
        buffer_.clear();
        pos_ = 0;
        segment.for_each_prime([this](std::uint64_t p) { buffer_.push_back(p); });
        if (!buffer_.empty()) return true;
    }
    return false;
}

std::optional<std::uint64_t> PrimeStream::next() {
    if (pos_ >= buffer_.size() && !load_next_segment()) return std::nullopt;
    return buffer_[pos_++];
}

std::vector<std::uint64_t> PrimeStream::collect() {
    std::vector<std::uint64_t> out;
    while (auto p = next()) out.push_back(*p);
    return out;
}

PrimeStream primes_up_to(std::uint64_t limit, const SieveOptions& options) { return PrimeStream(limit, options); }

bool is_prime(std::uint64_t k) {
    if (k < 2) return false;
    if (k % 2 == 0) return k == 2;
    if (k >= kMaxArgument) throw std::overflow_error("is_prime: argument too large");
    const auto base = base_primes_for(k + 1);
    return SieveSegment(k, k + 1, base).is_prime(k);
}

std::uint64_t next_prime_after(std::uint64_t k, const SieveOptions& options) {
    if (k >= kMaxArgument - 1) throw std::overflow_error("next_prime_after: argument too large");
    if (k < 2) return 2;
    const std::uint64_t span = options.segment_span();
    std::uint64_t window = std::min(span, kMinScanWindow);
    std::uint64_t lo = k + 1;
    std::uint64_t covered = 0;  // base primes cover composites below this
    std::vector<std::uint64_t> base;
    for (;;) {
        const std::uint64_t hi = std::min(lo + window, kMaxArgument);
        if (hi > covered) {
            // Over-provision so that consecutive windows reuse the base.
            covered = std::min(kMaxArgument, hi + 4 * span);
            base = base_primes_for(covered);
        }
        std::optional<std::uint64_t> found;
        SieveSegment(lo, hi, base).for_each_prime([&](std::uint64_t p) {
            if (!found) found = p;
        });
        if (found) return *found;
        if (hi == kMaxArgument) throw std::overflow_error("next_prime_after: search range exhausted");
        lo = hi;
        window = std::min(span, window * 2);
    }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> segment_ranges(std::uint64_t lo, std::uint64_t hi,
                                                                    const SieveOptions& options) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const std::uint64_t span = options.segment_span();
    for (std::uint64_t a = lo; a < hi;) {
        const std::uint64_t b = hi - a > span ? a + span : hi;
        out.emplace_back(a, b);
        a = b;
    }
    return out;
}

std::uint64_t prime_count(std::uint64_t limit, const SieveOptions& options) {
    if (limit >= kMaxArgument) throw std::overflow_error("prime_count: limit too large");
    const auto base = base_primes_for(limit + 1);
    const auto ranges = segment_ranges(0, limit + 1, options);
    const auto counts = bertrand::detail::ordered_map<std::uint64_t>(
        ranges.size(), options.resolved_threads(), [&](std::size_t i) {
            return static_cast<std::uint64_t>(SieveSegment(ranges[i].first, ranges[i].second, base).count());
        });
    std::uint64_t total = 0;
    for (const auto c : counts) total += c;
    return total;
}

}  // namespace bertrand::sieve
