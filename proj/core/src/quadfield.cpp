#include "isogeny/quadfield.hpp"

#include <mutex>

#include "isogeny/errors.hpp"

namespace isogeny {

struct UnitCache {
  std::once_flag once;
  FundamentalUnit value;
};

const char* to_string(SplitType s) {
  switch (s) {
    case SplitType::Split: return "split";
    case SplitType::Inert: return "inert";
    case SplitType::Ramified: return "ramified";
  }
  return "?";
}

bool is_squarefree(std::int64_t n) {
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  if (m == 0) return false;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

QuadField::QuadField(std::int64_t D, std::int64_t disc)
    : D_(D), disc_(disc), unit_cache_(std::make_shared<UnitCache>()) {
  if (disc_ % 4 == 0) {
    omega_trace_ = 0;
    omega_norm_ = -D_;
  } else {
    omega_trace_ = 1;
    omega_norm_ = -(D_ - 1) / 4;
  }
}

QuadField QuadField::make(std::int64_t D) {
  if (D == 0 || D == 1) throw InvalidD("D must not be 0 or 1");
  if (D > (std::int64_t{1} << 60) || D < -(std::int64_t{1} << 60)) throw InvalidD("D out of range");
  if (!is_squarefree(D)) throw NotSquarefree("D = " + std::to_string(D) + " is not squarefree");
  const std::int64_t mod4 = ((D % 4) + 4) % 4;
  return QuadField(D, mod4 == 1 ? D : 4 * D);
}

QuadInt QuadField::add(const QuadInt& x, const QuadInt& y) const { return {x.a + y.a, x.b + y.b}; }

QuadInt QuadField::sub(const QuadInt& x, const QuadInt& y) const { return {x.a - y.a, x.b - y.b}; }

QuadInt QuadField::mul(const QuadInt& x, const QuadInt& y) const {
  const BigInt bd = x.b * y.b;
  QuadInt r;
  r.a = x.a * y.a - omega_norm_big() * bd;
  r.b = x.a * y.b + x.b * y.a;
  if (omega_trace_ != 0) r.b += bd;
  return r;
}

QuadInt QuadField::pow(const QuadInt& x, unsigned e) const {
  QuadInt result(BigInt(1));
  QuadInt base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

QuadInt QuadField::conj(const QuadInt& x) const {
  return {omega_trace_ != 0 ? BigInt(x.a + x.b) : x.a, -x.b};
}

BigInt QuadField::norm(const QuadInt& x) const {
  BigInt n = x.a * x.a + omega_norm_big() * x.b * x.b;
  if (omega_trace_ != 0) n += x.a * x.b;
  return n;
}

BigInt QuadField::trace(const QuadInt& x) const {
  BigInt t = 2 * x.a;
  if (omega_trace_ != 0) t += x.b;
  return t;
}

QuadInt QuadField::from_half_sqrt_disc(const BigInt& u, const BigInt& v) const {
  BigInt twice_a = u - v * omega_trace_big();
  if (!mpz_even_p(twice_a.get_mpz_t())) {
    throw std::invalid_argument("from_half_sqrt_disc: element is not integral");
  }
  mpz_divexact_ui(twice_a.get_mpz_t(), twice_a.get_mpz_t(), 2);
  return {twice_a, v};
}

BigReal QuadField::embed(const QuadInt& x) const {
  if (!is_real()) throw CalledOnImaginary("embed: field is imaginary");
  const BigReal root = sqrt(BigReal(static_cast<long long>(disc_)));
  const BigReal t(static_cast<long long>(omega_trace_));
  const BigReal s1 = to_real(x.a) + to_real(x.b) * ((t + root) / 2);
  const BigReal s2 = to_real(x.a) + to_real(x.b) * ((t - root) / 2);
  // The smaller embedding loses every digit to cancellation once the unit is
  // large; recover it from the norm instead.
  if (abs(s1) >= abs(s2)) return s1;
  return to_real(norm(x)) / s2;
}

// Continued fraction of omega = (s + sqrt(disc))/2 with s = Tr(omega).
// The first convergent p/q with |Nm(p - q*omega)| = 1 gives the fundamental
// unit; its conjugate is the one greater than 1.
const FundamentalUnit& QuadField::fundamental_unit() const {
  if (!is_real()) throw CalledOnImaginary("fundamental unit requested for an imaginary field");
  std::call_once(unit_cache_->once, [this] {
    const std::int64_t s = static_cast<std::int64_t>(arith::isqrt(static_cast<std::uint64_t>(disc_)));
    std::int64_t P = omega_trace_;
    std::int64_t Q = 2;
    BigInt p = 1, p_prev = 0, q = 0, q_prev = 1;
    for (;;) {
      const std::int64_t a = (P + s) / Q;
      BigInt tmp = a * p + p_prev;
      p_prev = std::move(p);
      p = std::move(tmp);
      tmp = a * q + q_prev;
      q_prev = std::move(q);
      q = std::move(tmp);
      const QuadInt candidate(p, -q);
      const BigInt n = norm(candidate);
      if (n == 1 || n == -1) {
        FundamentalUnit& u = unit_cache_->value;
        u.unit = conj(candidate);
        u.norm = n == 1 ? 1 : -1;
        const BigReal t = to_real(trace(u.unit));
        u.regulator = log((t + sqrt(t * t - 4 * u.norm)) / 2);
        return;
      }
      P = a * Q - P;
      Q = (disc_ - P * P) / Q;
    }
  });
  return unit_cache_->value;
}

SplitType splitting_type(const QuadField& F, std::uint64_t q) {
  const std::int64_t disc = F.disc();
  const auto uq = static_cast<std::int64_t>(q);
  if (disc % uq == 0) return SplitType::Ramified;
  return arith::kronecker(disc, uq) == 1 ? SplitType::Split : SplitType::Inert;
}

}  // namespace isogeny
