#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "isogeny/classgroup.hpp"
#include "isogeny/frobnorm.hpp"
#include "isogeny/signatures.hpp"
#include "isogeny/type2sieve.hpp"

namespace isogeny {

using PrimeSet = std::vector<BigInt>;  // sorted, no duplicates

enum class AuxConstraint {
  NotType12,  // split; non-principal when K is imaginary
  Type1,      // split and q > 5
};

/// The first `count` split primes (increasing) meeting the constraint.
std::vector<AuxPrime> select_aux_primes(const ClassGroup& G, std::size_t count,
                                        AuxConstraint constraint);

struct SignatureContribution {
  Signature eps;
  BigInt gcd;       // gcd over aux of ABC(eps, q)
  PrimeSet support; // Supp(gcd)
  PrimeSet kept;    // support passing congruence_filter(eps)
};

struct ComputeOptions {
  unsigned threads = 1;
  arith::FactorBudget budget;
};

PrimeSet not_type_one_two(const ClassGroup& G, const std::vector<AuxPrime>& aux,
                          const ComputeOptions& options = {},
                          std::vector<SignatureContribution>* detail = nullptr);

/// Primes up to 61, 71, and Supp(gcd over aux of D(q)).
PrimeSet type_one(const ClassGroup& G, const std::vector<AuxPrime>& aux,
                  const ComputeOptions& options = {});

/// Supp(gcd over generating sets of ABC_o(Gen)); empty when every set is empty.
PrimeSet type_two_not_momose(const ClassGroup& G, const std::vector<std::vector<AuxPrime>>& auxgen,
                             const ComputeOptions& options = {});

struct SupersetConfig {
  std::size_t aux_count = 25;
  std::size_t type1_aux_count = 25;
  std::size_t auxgen_count = 5;
  std::uint64_t type_two_cap = 0;  // 0: scan to ceil(T_K)
  unsigned threads = 1;
  arith::FactorBudget budget;
  std::string checkpoint_path;
};

struct TypeTwoMomose {
  double bound = 0;        // T_K
  std::uint64_t cap = 0;   // last integer scanned
  bool complete = false;
  std::vector<std::uint64_t> survivors;

  friend bool operator==(const TypeTwoMomose&, const TypeTwoMomose&) = default;
};

struct SupersetReport {
  std::int64_t D = 0;
  std::int64_t disc = 0;
  std::uint64_t h = 0;
  PrimeSet not_type_one_two;
  PrimeSet type_one;
  PrimeSet type_two_not_momose;
  TypeTwoMomose type_two_momose;
  PrimeSet ramified;
  PrimeSet superset;
  std::vector<std::uint64_t> aux_primes;
  std::vector<std::uint64_t> type1_aux_primes;
  std::vector<std::vector<std::uint64_t>> aux_generating_sets;
  std::map<std::string, double> timings_ms;

  friend bool operator==(const SupersetReport&, const SupersetReport&) = default;
};

/// The full superset. Throws ImaginaryClassNumberOne for imaginary K with h = 1.
SupersetReport assemble(const QuadField& F, const SupersetConfig& config);

PrimeSet merge(const std::vector<PrimeSet>& sets);

}  // namespace isogeny
