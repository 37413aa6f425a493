#include <cmath>
#include <stdexcept>

#include "isogeny/arith.hpp"

namespace isogeny::arith {

std::uint64_t isqrt(std::uint64_t n) {
  constexpr std::uint64_t kMax = 0xFFFFFFFFull;  // isqrt(2^64 - 1)
  auto r = std::min(kMax, static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n))));
  while (r > 0 && r * r > n) --r;
  while (r < kMax && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

namespace {

std::vector<std::uint32_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

// Odd-only byte sieve: index i stands for lo' + 2i where lo' is the first odd >= lo.
void sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& base,
                   std::vector<std::uint64_t>& out) {
  if (hi < lo) return;
  if (lo <= 2 && hi >= 2) out.push_back(2);
  std::uint64_t first = std::max<std::uint64_t>(lo, 3) | 1;
  if (first > hi) return;
  const std::uint64_t count = (hi - first) / 2 + 1;
  std::vector<std::uint8_t> composite(count, 0);
  for (std::uint32_t p32 : base) {
    const std::uint64_t p = p32;
    if (p == 2) continue;
    if (p * p > hi) break;
    std::uint64_t start = std::max(p * p, (first + p - 1) / p * p);
    if ((start & 1) == 0) start += p;
    for (std::uint64_t j = (start - first) / 2; j < count; j += p) composite[j] = 1;
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    if (!composite[i]) out.push_back(first + 2 * i);
  }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  const auto base = small_primes(isqrt(n));
  constexpr std::uint64_t kSegment = 1u << 20;
  for (std::uint64_t lo = 0; lo <= n; lo += kSegment) {
    sieve_segment(lo, std::min(n, lo + kSegment - 1), base, out);
    if (lo + kSegment < lo) break;
  }
  return out;
}

PrimeStream::PrimeStream(std::uint64_t from, std::uint64_t segment_size)
    : low_(from), segment_size_(segment_size) {
  if (segment_size_ < 2) throw std::invalid_argument("PrimeStream: segment too small");
}

std::uint64_t PrimeStream::next() {
  while (pos_ >= buffer_.size()) refill();
  return buffer_[pos_++];
}

void PrimeStream::refill() {
  buffer_.clear();
  pos_ = 0;
  const std::uint64_t hi = low_ + segment_size_ - 1;
  const std::uint64_t need = isqrt(hi) + 1;
  if (need > base_limit_) {
    base_limit_ = std::max(need, 2 * base_limit_);
    base_primes_ = small_primes(base_limit_);
  }
  sieve_segment(low_, hi, base_primes_, buffer_);
  low_ = hi + 1;
}

}  // namespace isogeny::arith
