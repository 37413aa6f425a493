#include "isogeny/frobnorm.hpp"

#include <numeric>

#include "isogeny/errors.hpp"

namespace isogeny {

TraceSet weil_traces(std::uint64_t q) {
  TraceSet out;
  out.q = q;
  const auto bound = static_cast<std::int64_t>(arith::isqrt(4 * q));
  const auto sq = static_cast<std::int64_t>(q);
  for (std::int64_t t = -bound; t <= bound; ++t) {
    if (t % sq == 0) {
      out.supersingular.push_back(t);
    } else {
      out.ordinary.push_back(t);
    }
  }
  return out;
}

std::pair<BigInt, BigInt> frob_power(std::int64_t t, std::uint64_t q, std::uint64_t e) {
  if (e == 0) return {BigInt(1), BigInt(0)};
  const BigInt T(static_cast<long>(t));
  const BigInt Q(static_cast<unsigned long>(q));
  // (u0 + u1 x)(v0 + v1 x) with x^2 = t x - q
  auto mul = [&](const std::pair<BigInt, BigInt>& u, const std::pair<BigInt, BigInt>& v) {
    const BigInt hi = u.second * v.second;
    return std::pair<BigInt, BigInt>{u.first * v.first - Q * hi,
                                     u.first * v.second + u.second * v.first + T * hi};
  };
  std::pair<BigInt, BigInt> result{1, 0};
  std::pair<BigInt, BigInt> base{0, 1};
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

QuadInt eps_power(const QuadField& F, const QuadInt& gamma, const Signature& eps) {
  return F.mul(F.pow(gamma, static_cast<unsigned>(eps.a)),
               F.pow(F.conj(gamma), static_cast<unsigned>(eps.b)));
}

BigInt trace_value(const QuadField& F, const QuadInt& u, std::int64_t t, std::uint64_t q,
                   std::uint64_t h) {
  const auto [b0, b1] = frob_power(t, q, 12 * h);
  const QuadInt v(u.a - b0, u.b);
  // v^2 - t*b1*v + q*b1^2
  QuadInt w = F.mul(v, v);
  const BigInt tb1 = BigInt(static_cast<long>(t)) * b1;
  w.a -= tb1 * v.a;
  w.b -= tb1 * v.b;
  w.a += BigInt(static_cast<unsigned long>(q)) * b1 * b1;
  return abs(F.norm(w));
}

namespace {

BigInt q_power(std::uint64_t q, std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

[[noreturn]] void zero(const std::string& which, const Signature& eps, const AuxPrime& aux) {
  throw ZeroNormEncountered(which + " = 0 for signature " + eps.str() + " and q = " +
                            std::to_string(aux.q));
}

struct Evaluated {
  BigInt A, B;
  std::vector<BigInt> supersingular, ordinary;
};

Evaluated evaluate_all(const QuadField& F, const Signature& eps, const AuxPrime& aux,
                       const ZeroGuard& guard, bool need_ab) {
  Evaluated ev;
  const QuadInt u = eps_power(F, aux.gamma, eps);
  if (need_ab) {
    ev.A = abs(F.norm(QuadInt(u.a - 1, u.b)));
    ev.B = abs(F.norm(QuadInt(u.a - q_power(aux.q, 12 * aux.order), u.b)));
    if (guard.A && ev.A == 0) zero("A", eps, aux);
    if (guard.B && ev.B == 0) zero("B", eps, aux);
  }
  const TraceSet traces = weil_traces(aux.q);
  for (std::int64_t t : traces.supersingular) {
    BigInt v = trace_value(F, u, t, aux.q, aux.order);
    if (guard.C_s && v == 0) zero("C_s (t = " + std::to_string(t) + ")", eps, aux);
    ev.supersingular.push_back(std::move(v));
  }
  for (std::int64_t t : traces.ordinary) {
    BigInt v = trace_value(F, u, t, aux.q, aux.order);
    if (guard.C_o && v == 0) zero("C_o (t = " + std::to_string(t) + ")", eps, aux);
    ev.ordinary.push_back(std::move(v));
  }
  return ev;
}

void append_nonzero(std::vector<BigInt>& out, const BigInt& v) {
  if (v != 0) out.push_back(v);
}

}  // namespace

BigInt lcm_of(const std::vector<BigInt>& values) {
  BigInt r = 1;
  for (const BigInt& v : values) {
    if (v == 0) return 0;
    mpz_lcm(r.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t());
  }
  return r;
}

NormIntegers norm_integers(const QuadField& F, const Signature& eps, const AuxPrime& aux,
                           const ZeroGuard& guard) {
  const Evaluated ev = evaluate_all(F, eps, aux, guard, true);
  NormIntegers n;
  n.A = ev.A;
  n.B = ev.B;
  n.C_s = lcm_of(ev.supersingular);
  n.C_o = lcm_of(ev.ordinary);
  n.C = lcm_of({n.C_o, n.C_s});
  n.ABC = lcm_of({n.A, n.B, n.C, BigInt(static_cast<unsigned long>(aux.q))});
  return n;
}

std::vector<BigInt> abc_components(const QuadField& F, const Signature& eps, const AuxPrime& aux,
                                   const ZeroGuard& guard) {
  const Evaluated ev = evaluate_all(F, eps, aux, guard, true);
  std::vector<BigInt> out;
  append_nonzero(out, ev.A);
  append_nonzero(out, ev.B);
  for (const BigInt& v : ev.supersingular) append_nonzero(out, v);
  for (const BigInt& v : ev.ordinary) append_nonzero(out, v);
  out.emplace_back(static_cast<unsigned long>(aux.q));
  return out;
}

std::vector<BigInt> type1_components(const QuadField& F, const AuxPrime& aux) {
  if (aux.q <= 5) {
    throw AuxTooSmall("Type 1 auxiliary primes must exceed 5, got q = " + std::to_string(aux.q));
  }
  const Evaluated ev = evaluate_all(F, Signature{0, 0}, aux, ZeroGuard{false, false, true, true}, false);
  std::vector<BigInt> out;
  out.emplace_back(static_cast<unsigned long>(aux.q));
  out.push_back(q_power(aux.q, 12 * aux.order) - 1);
  for (const BigInt& v : ev.supersingular) out.push_back(v);
  for (const BigInt& v : ev.ordinary) out.push_back(v);
  return out;
}

BigInt type1_D(const QuadField& F, const AuxPrime& aux) { return lcm_of(type1_components(F, aux)); }

std::vector<BigInt> abc_o_components(const QuadField& F, const std::vector<AuxPrime>& gen) {
  std::vector<BigInt> out;
  const ZeroGuard guard{true, true, false, true};
  for (const AuxPrime& aux : gen) {
    const Evaluated ev = evaluate_all(F, Signature{6, 6}, aux, guard, true);
    out.push_back(ev.A);
    out.push_back(ev.B);
    for (const BigInt& v : ev.ordinary) out.push_back(v);
    out.emplace_back(static_cast<unsigned long>(aux.q));
  }
  return out;
}

BigInt abc_o(const QuadField& F, const std::vector<AuxPrime>& gen) {
  return lcm_of(abc_o_components(F, gen));
}

}  // namespace isogeny
