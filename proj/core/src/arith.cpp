#include "isogeny/arith.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "isogeny/errors.hpp"

namespace isogeny {

BigReal to_real(const BigInt& n) {
  BigReal r;
  mpfr_set_z(r.backend().data(), n.get_mpz_t(), MPFR_RNDN);
  return r;
}

}  // namespace isogeny

namespace isogeny::arith {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace {

constexpr std::uint64_t kWitnesses64[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool miller_rabin_round(const BigInt& n, const BigInt& a, const BigInt& d, unsigned s,
                        const BigInt& n_minus_1) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

const std::vector<std::uint64_t>& trial_primes(std::uint64_t limit) {
  static const std::vector<std::uint64_t> cached = primes_up_to(1'000'000);
  if (limit > 1'000'000) {
    throw std::invalid_argument("trial division limit above 10^6 is not supported");
  }
  return cached;
}

// Brent's variant of Pollard rho with batched gcds.
bool brent_split(const BigInt& n, unsigned long c, std::uint64_t budget, BigInt& out) {
  constexpr std::uint64_t kBatch = 128;
  BigInt y = 2 + c, x, ys, q = 1, g = 1, diff;
  std::uint64_t r = 1;
  std::uint64_t iterations = 0;
  auto step = [&](BigInt& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) step(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t batch = std::min(kBatch, r - k);
      for (std::uint64_t i = 0; i < batch; ++i) {
        step(y);
        diff = x - y;
        q = q * abs(diff) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += batch;
    }
    iterations += 2 * r;
    r *= 2;
    if (iterations > budget && g == 1) return false;
  } while (g == 1);

  if (g == n) {
    do {
      step(ys);
      diff = x - ys;
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n || g == 1) return false;
  out = g;
  return true;
}

void split_into(const BigInt& n, const FactorBudget& budget, std::vector<BigInt>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  // Rho needs about sqrt(p) steps on p^k, so take exact roots first.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    BigInt root;
    for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::vector<BigInt> sub;
        split_into(root, budget, sub);
        for (unsigned long i = 0; i < k; ++i) primes.insert(primes.end(), sub.begin(), sub.end());
        return;
      }
    }
  }
  BigInt d;
  for (unsigned attempt = 0; attempt < budget.rho_attempts; ++attempt) {
    if (brent_split(n, 1 + 2 * attempt, budget.rho_iterations, d)) {
      split_into(d, budget, primes);
      split_into(n / d, budget, primes);
      return;
    }
  }
  throw FactorizationExhausted(n.get_str());
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses64) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses64) {
    if (!miller_rabin_round(n, a, d, s)) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  for (std::uint64_t p : kWitnesses64) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  const unsigned s = static_cast<unsigned>(mpz_scan1(d.get_mpz_t(), 0));
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  for (std::uint64_t a : kWitnesses64) {
    if (!miller_rabin_round(n, BigInt(static_cast<unsigned long>(a)), d, s, n_minus_1)) return false;
  }
  // 28 further rounds with reproducible pseudo-random bases in [2, n-2].
  std::mt19937_64 rng(0x5eed1509u);
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(static_cast<unsigned long>(rng()));
  const BigInt range = n - 3;
  for (int round = 0; round < 28; ++round) {
    const BigInt a = gen.get_z_range(range) + 2;
    if (!miller_rabin_round(n, a, d, s, n_minus_1)) return false;
  }
  return true;
}

int jacobi(std::uint64_t a, std::uint64_t n) {
  if (n == 0 || (n & 1) == 0) throw std::invalid_argument("jacobi: n must be odd and positive");
  a %= n;
  int result = 1;
  while (a != 0) {
    const int twos = std::countr_zero(a);
    a >>= twos;
    if ((twos & 1) && ((n & 7) == 3 || (n & 7) == 5)) result = -result;
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? result : 0;
}

int kronecker(const BigInt& a, const BigInt& n) {
  if (n == 0) throw std::invalid_argument("kronecker: n must be non-zero");
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) throw std::invalid_argument("kronecker: n must be non-zero");
  int result = 1;
  std::uint64_t m;
  if (n < 0) {
    m = static_cast<std::uint64_t>(-(n + 1)) + 1;
    if (a < 0) result = -result;
  } else {
    m = static_cast<std::uint64_t>(n);
  }
  const int twos = std::countr_zero(m);
  if (twos > 0) {
    if ((a & 1) == 0) return 0;
    m >>= twos;
    const std::int64_t a8 = ((a % 8) + 8) % 8;
    if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  if (m == 1) return result;
  const std::int64_t sm = static_cast<std::int64_t>(m);
  const std::uint64_t reduced = static_cast<std::uint64_t>(((a % sm) + sm) % sm);
  return result * jacobi(reduced, m);
}

std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (p == 2 || a == 0) return a;
  if (jacobi(a, p) != 1) return std::nullopt;
  if ((p & 3) == 3) return powmod(a, (p + 1) / 4, p);
  // Tonelli-Shanks.
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (jacobi(z, p) != -1) ++z;
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t x = powmod(a, (q + 1) / 2, p);
  std::uint64_t t = powmod(a, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    std::uint64_t t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    x = mulmod(x, b, p);
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    m = i;
  }
  return x;
}

Factorization factor(const BigInt& n, const FactorBudget& budget) {
  if (n == 0) throw std::invalid_argument("factor: n must be non-zero");
  BigInt m = abs(n);
  Factorization result;
  for (std::uint64_t p : trial_primes(budget.trial_limit)) {
    if (p > budget.trial_limit) break;
    if (BigInt(static_cast<unsigned long>(p * p)) > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
      result.emplace_back(BigInt(static_cast<unsigned long>(p)), e);
    }
  }
  if (m == 1) return result;

  std::vector<BigInt> primes;
  split_into(m, budget, primes);
  std::sort(primes.begin(), primes.end());
  for (const BigInt& p : primes) {
    if (!result.empty() && result.back().first == p) {
      ++result.back().second;
    } else {
      result.emplace_back(p, 1);
    }
  }
  std::sort(result.begin(), result.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return result;
}

std::vector<BigInt> support(const BigInt& n, const FactorBudget& budget) {
  std::vector<BigInt> out;
  for (auto& [p, e] : factor(n, budget)) out.push_back(p);
  return out;
}

}  // namespace isogeny::arith
