#pragma once

// Integer and real arithmetic shared by every module: primality,
// factorization, Kronecker symbols, prime generation.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

namespace isogeny {

using BigInt = mpz_class;

/// 80 decimal digits is ~266 bits, above the 256-bit floor for DLMV/T_K work.
using BigReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>,
                                              boost::multiprecision::et_off>;

inline constexpr unsigned kWorkingPrecisionBits = 256;

BigReal to_real(const BigInt& n);

}  // namespace isogeny

namespace isogeny::arith {

__extension__ typedef unsigned __int128 uint128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Deterministic below 2^64; above that 40 Miller-Rabin rounds with bases
/// drawn from a fixed-seed generator, so results are reproducible.
bool is_prime(const BigInt& n);

/// Jacobi symbol (a|n) for odd n > 0.
int jacobi(std::uint64_t a, std::uint64_t n);

/// Kronecker symbol (a|n); n may be even or negative, n != 0.
int kronecker(const BigInt& a, const BigInt& n);
int kronecker(std::int64_t a, std::int64_t n);

/// Square root of a modulo an odd prime p, if a is a square.
std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

struct FactorBudget {
  std::uint64_t trial_limit = 1'000'000;
  std::uint64_t rho_iterations = 10'000'000;  // per split attempt
  unsigned rho_attempts = 16;                 // polynomial constants tried per cofactor
};

/// Prime powers (p, e), sorted by p.
using Factorization = std::vector<std::pair<BigInt, unsigned>>;

/// Complete factorization of |n|. Throws FactorizationExhausted if a composite
/// cofactor survives the budget.
Factorization factor(const BigInt& n, const FactorBudget& budget = {});

/// Sorted prime divisors of |n| (empty for n = +-1).
std::vector<BigInt> support(const BigInt& n, const FactorBudget& budget = {});

/// All primes <= n, increasing.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Streams primes in increasing order from `from` onwards, one sieved
/// segment at a time.
class PrimeStream {
 public:
  explicit PrimeStream(std::uint64_t from = 2, std::uint64_t segment_size = 1u << 18);

  std::uint64_t next();

 private:
  void refill();

  std::uint64_t low_;
  std::uint64_t segment_size_;
  std::vector<std::uint64_t> buffer_;
  std::size_t pos_ = 0;
  std::vector<std::uint32_t> base_primes_;
  std::uint64_t base_limit_ = 0;
};

/// Primes in [lo, hi] by segmented sieve, using `base` which must contain
/// every prime <= sqrt(hi).
void sieve_segment(std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint32_t>& base,
                   std::vector<std::uint64_t>& out);

std::uint64_t isqrt(std::uint64_t n);

}  // namespace isogeny::arith
