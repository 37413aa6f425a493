#pragma once

#include <cstdint>
#include <memory>

#include "isogeny/arith.hpp"

namespace isogeny {

enum class SplitType { Split, Inert, Ramified };

const char* to_string(SplitType s);

/// a + b*omega in the basis [1, omega] of the ring of integers.
struct QuadInt {
  BigInt a;
  BigInt b;

  QuadInt() = default;
  QuadInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit QuadInt(const BigInt& n) : a(n), b(0) {}

  bool is_rational() const { return b == 0; }
  friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a == y.a && x.b == y.b; }
};

struct FundamentalUnit {
  QuadInt unit;       // the unit > 1 under the real embedding with sqrt(D) > 0
  int norm = 0;       // +1 or -1
  BigReal regulator;  // ln(unit)
};

/// K = Q(sqrt(D)) for squarefree D not in {0, 1}.
///
/// omega = (1 + sqrt(D))/2 when D = 1 mod 4, else sqrt(D). In both cases
/// omega^2 = T*omega - N with T = Tr(omega) in {0, 1} and N = Nm(omega).
class QuadField {
 public:
  static QuadField make(std::int64_t D);

  std::int64_t D() const { return D_; }
  std::int64_t disc() const { return disc_; }
  BigInt disc_big() const { return BigInt(static_cast<long>(disc_)); }
  bool is_real() const { return D_ > 0; }
  int unit_rank() const { return is_real() ? 1 : 0; }
  bool omega_is_half_integral() const { return omega_trace_ == 1; }
  std::int64_t omega_trace() const { return omega_trace_; }
  std::int64_t omega_norm() const { return omega_norm_; }
  BigInt omega_trace_big() const { return BigInt(static_cast<long>(omega_trace_)); }
  BigInt omega_norm_big() const { return BigInt(static_cast<long>(omega_norm_)); }

  QuadInt add(const QuadInt& x, const QuadInt& y) const;
  QuadInt sub(const QuadInt& x, const QuadInt& y) const;
  QuadInt mul(const QuadInt& x, const QuadInt& y) const;
  QuadInt pow(const QuadInt& x, unsigned e) const;
  QuadInt conj(const QuadInt& x) const;
  BigInt norm(const QuadInt& x) const;
  BigInt trace(const QuadInt& x) const;

  /// Coordinates of the element (u + v*sqrt(disc))/2; u and v must share parity
  /// with the appropriate correction so the result is integral.
  QuadInt from_half_sqrt_disc(const BigInt& u, const BigInt& v) const;

  /// Value under the real embedding (real fields only; sqrt(D) > 0).
  BigReal embed(const QuadInt& x) const;

  /// Computed on first use, then cached. Throws CalledOnImaginary.
  const FundamentalUnit& fundamental_unit() const;
  BigReal regulator() const { return fundamental_unit().regulator; }

 private:
  QuadField(std::int64_t D, std::int64_t disc);

  std::int64_t D_;
  std::int64_t disc_;
  std::int64_t omega_trace_;
  std::int64_t omega_norm_;
  std::shared_ptr<struct UnitCache> unit_cache_;
};

SplitType splitting_type(const QuadField& F, std::uint64_t q);

bool is_squarefree(std::int64_t n);

}  // namespace isogeny
