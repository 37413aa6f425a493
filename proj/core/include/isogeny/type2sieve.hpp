#pragma once

// Momose Type 2 primes: the bound T_K and the Condition CC scan.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isogeny/quadfield.hpp"

namespace isogeny {

/// Root of x = (16 ln x + 16 ln(12|disc|) + 26)^4 above e.
BigReal type_two_bound(const QuadField& F);

struct CcVerdict {
  bool survives = true;
  std::optional<std::uint64_t> witness;  // least violating q when !survives
};

/// Condition CC for a prime p = 3 mod 4: p fails with witness q if some prime
/// q < p/4 with q^2 + q + 1 != 0 mod p is split or ramified in K and splits
/// in Q(sqrt(-p)).
CcVerdict condition_cc(const QuadField& F, std::uint64_t p);

struct SieveOptions {
  std::uint64_t cap = 0;  // 0: scan up to ceil(T_K)
  unsigned threads = 1;
  std::uint64_t chunk_size = 1u << 22;
  std::string checkpoint_path;  // empty: no checkpointing
  std::size_t witness_samples = 32;
};

struct SieveStats {
  std::uint64_t primes_tested = 0;  // primes p = 3 mod 4 examined in this run
  double seconds = 0;
  std::uint64_t largest_witness = 0;
  std::uint64_t largest_witness_p = 0;
  std::uint64_t resumed_from = 0;  // checkpointed bound we resumed after, or 0
};

struct SieveResult {
  BigReal bound;               // T_K
  std::uint64_t cap = 0;       // last integer scanned: min(cap, ceil(T_K))
  std::vector<std::uint64_t> survivors;
  bool complete = false;       // cap >= ceil(T_K)
  std::map<std::uint64_t, std::uint64_t> witnesses;  // sample: p -> least witness q
  SieveStats stats;
};

SieveResult sieve(const QuadField& F, const SieveOptions& options);
SieveResult sieve(const QuadField& F, std::uint64_t cap, unsigned threads);

}  // namespace isogeny
