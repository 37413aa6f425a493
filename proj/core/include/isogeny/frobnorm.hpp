#pragma once

// Frobenius traces over prime fields and the norm integers A, B, C_s, C_o,
// C and ABC attached to a signature and an auxiliary prime.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "isogeny/classgroup.hpp"
#include "isogeny/signatures.hpp"

namespace isogeny {

struct TraceSet {
  std::uint64_t q = 0;
  std::vector<std::int64_t> ordinary;       // gcd(t, q) = 1
  std::vector<std::int64_t> supersingular;  // q | t
};

/// All t with t^2 <= 4q, split by Deuring's classification over F_q.
TraceSet weil_traces(std::uint64_t q);

/// (b0, b1) with x^e = b0 + b1*x modulo x^2 - t*x + q.
std::pair<BigInt, BigInt> frob_power(std::int64_t t, std::uint64_t q, std::uint64_t e);

/// gamma^a * conj(gamma)^b.
QuadInt eps_power(const QuadField& F, const QuadInt& gamma, const Signature& eps);

struct NormIntegers {
  BigInt A, B, C_s, C_o, C, ABC;
};

/// Which values must be non-zero. A disabled value may be zero; a zero
/// value is then left out of every lcm it would enter.
struct ZeroGuard {
  bool A = true;
  bool B = true;
  bool C_s = true;
  bool C_o = true;
};

/// |Nm((u - b0)^2 - t*b1*(u - b0) + q*b1^2)| for u = eps_power(gamma, eps),
/// (b0, b1) = frob_power(t, q, 12h).
BigInt trace_value(const QuadField& F, const QuadInt& u, std::int64_t t, std::uint64_t q,
                   std::uint64_t h);

NormIntegers norm_integers(const QuadField& F, const Signature& eps, const AuxPrime& aux,
                           const ZeroGuard& guard = {});

/// Integers whose lcm is ABC(eps, aux): A, B, every per-trace value, and q.
/// Zero entries permitted by `guard` are dropped. Lets callers take
/// gcd(g, ABC) as lcm_i gcd(g, x_i) without forming the full lcm.
std::vector<BigInt> abc_components(const QuadField& F, const Signature& eps, const AuxPrime& aux,
                                   const ZeroGuard& guard = {});

/// lcm(q, q^(12h) - 1, C((0,0), aux)). Throws AuxTooSmall for q <= 5.
BigInt type1_D(const QuadField& F, const AuxPrime& aux);
std::vector<BigInt> type1_components(const QuadField& F, const AuxPrime& aux);

/// lcm over members of A, B, C_o at (6,6) and q; 1 for the empty set.
BigInt abc_o(const QuadField& F, const std::vector<AuxPrime>& gen);
std::vector<BigInt> abc_o_components(const QuadField& F, const std::vector<AuxPrime>& gen);

BigInt lcm_of(const std::vector<BigInt>& values);

}  // namespace isogeny
