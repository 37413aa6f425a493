#include "isogeny/classgroup.hpp"

#include <set>
#include <stdexcept>

#include "isogeny/errors.hpp"

namespace isogeny {

ClassGroup::ClassGroup(QuadField F) : F_(std::move(F)) {
  if (F_.is_real()) {
    s_ = BigInt(static_cast<unsigned long>(arith::isqrt(static_cast<std::uint64_t>(F_.disc()))));
    build_real();
  } else {
    s_ = 0;
    build_imaginary();
  }
}

void ClassGroup::build_imaginary() {
  const std::int64_t disc = F_.disc();
  const std::int64_t n = -disc;
  for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (((b - disc) & 1) != 0) continue;
      const std::int64_t num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      Form f{BigInt(static_cast<long>(a)), BigInt(static_cast<long>(b)), BigInt(static_cast<long>(c))};
      index_.emplace(std::make_pair(f.a, f.b), reps_.size());
      reps_.push_back(std::move(f));
    }
  }
}

std::size_t ClassGroup::register_cycle(const Form& start) {
  const std::size_t idx = reps_.size();
  reps_.push_back(start);
  bool have_positive = start.a > 0;
  std::size_t length = 0;
  Form f = start;
  do {
    index_.emplace(std::make_pair(abs(f.a), f.b), idx);
    if (!have_positive && f.a > 0) {
      reps_[idx] = f;
      have_positive = true;
    }
    if (idx == 0 && f.a == -1) principal_cycle_has_minus_one_ = true;
    f = rho(f, s_);
    ++length;
  } while (!(f == start));
  if (idx == 0) principal_cycle_length_ = length;
  return idx;
}

void ClassGroup::build_real() {
  const BigInt disc = F_.disc_big();
  BigInt b0 = s_;
  if (!mpz_even_p(BigInt(b0 - disc).get_mpz_t())) b0 -= 1;
  register_cycle(Form{1, b0, (b0 * b0 - disc) / 4});

  // Every ideal class contains an integral ideal of norm <= sqrt(disc)/2.
  const std::uint64_t bound = s_.get_ui() / 2 + 1;
  for (std::uint64_t ell : arith::primes_up_to(bound)) {
    if (splitting_type(F_, ell) == SplitType::Inert) continue;
    const Form P = prime_form(F_, ell, /*allow_ramified=*/true);
    if (lookup(reduced(P)).first) continue;

    const std::size_t base_size = reps_.size();
    Form cur = P;
    for (;;) {
      if (lookup(reduced(cur)).first) break;
      for (std::size_t e = 0; e < base_size; ++e) {
        const Form y = reduced(isogeny::compose(cur, reps_[e]));
        if (!lookup(y).first) register_cycle(y);
      }
      cur = isogeny::compose(reps_[class_index(cur)], P);
    }
  }
}

Form ClassGroup::reduced(const Form& f) const {
  return F_.is_real() ? reduce_indefinite(f, s_) : reduce_definite(f);
}

std::pair<bool, std::size_t> ClassGroup::lookup(const Form& f) const {
  const auto it = index_.find({F_.is_real() ? BigInt(abs(f.a)) : f.a, f.b});
  if (it == index_.end()) return {false, 0};
  return {true, it->second};
}

std::size_t ClassGroup::class_index(const Form& f) const {
  if (f.discriminant() != F_.disc_big()) throw std::invalid_argument("class_index: discriminant mismatch");
  const auto [found, idx] = lookup(reduced(f));
  if (!found) throw std::logic_error("class_index: form outside the enumerated class group");
  return idx;
}

std::uint64_t ClassGroup::narrow_class_number() const {
  if (!F_.is_real()) return class_number();
  return unit_norm() == 1 ? 2 * class_number() : class_number();
}

int ClassGroup::unit_norm() const {
  if (!F_.is_real()) throw CalledOnImaginary("unit_norm: field is imaginary");
  return principal_cycle_has_minus_one_ ? -1 : 1;
}

Form ClassGroup::compose(const Form& f, const Form& g) const {
  const Form& x = f.a > 0 ? f : reps_[class_index(f)];
  const Form& y = g.a > 0 ? g : reps_[class_index(g)];
  return reps_[class_index(isogeny::compose(x, y))];
}

Form ClassGroup::power(const Form& f, std::uint64_t k) const {
  Form result = identity();
  Form base = reduce(f);
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

std::uint64_t ClassGroup::order(const Form& f) const {
  const Form base = reduce(f);
  Form x = base;
  std::uint64_t k = 1;
  while (!is_principal(x)) {
    x = compose(x, base);
    ++k;
  }
  return k;
}

std::uint64_t ClassGroup::subgroup_order(const std::vector<Form>& generators) const {
  std::set<std::size_t> seen{0};
  std::vector<std::size_t> frontier{0};
  std::vector<Form> gens;
  for (const Form& g : generators) gens.push_back(reduce(g));
  while (!frontier.empty()) {
    const std::size_t i = frontier.back();
    frontier.pop_back();
    for (const Form& g : gens) {
      const std::size_t j = class_index(compose(reps_[i], g));
      if (seen.insert(j).second) frontier.push_back(j);
    }
  }
  return seen.size();
}

Form prime_form(const QuadField& F, std::uint64_t q, bool allow_ramified) {
  const SplitType st = splitting_type(F, q);
  if (st == SplitType::Inert || (st == SplitType::Ramified && !allow_ramified)) {
    throw NotSplit("q = " + std::to_string(q) + " is " + to_string(st) + " in Q(sqrt(" +
                   std::to_string(F.D()) + "))");
  }
  const std::int64_t disc = F.disc();
  const auto sq = static_cast<std::int64_t>(q);
  std::int64_t best = -1;
  if (q == 2) {
    for (std::int64_t b = 0; b < 4; ++b) {
      if (((b * b - disc) % 8 + 8) % 8 == 0) {
        best = b;
        break;
      }
    }
  } else {
    const auto dq = static_cast<std::uint64_t>(((disc % sq) + sq) % sq);
    const std::uint64_t r = *arith::sqrt_mod_prime(dq, q);
    for (std::uint64_t x0 : {r, (q - r) % q}) {
      auto x = static_cast<std::int64_t>(x0);
      if (((x - disc) & 1) != 0) x += sq;
      if (best < 0 || x < best) best = x;
    }
  }
  const BigInt b(static_cast<long>(best));
  const BigInt a(static_cast<unsigned long>(q));
  return Form{a, b, (b * b - F.disc_big()) / (4 * a)};
}

bool ideal_contains(const QuadField& F, const Form& ideal, const QuadInt& x) {
  // [a, w - (b + s)/2] with w = omega and s = Tr(omega)
  const BigInt shift = (ideal.b + F.omega_trace_big()) / 2;
  const BigInt residue = x.a + x.b * shift;
  return mpz_divisible_p(residue.get_mpz_t(), ideal.a.get_mpz_t()) != 0;
}

namespace {

QuadInt balance_real(const QuadField& F, QuadInt g) {
  const FundamentalUnit& fu = F.fundamental_unit();
  // L = ln|g| - ln|conj g|, each computed without cancellation by embed().
  const BigReal L = log(abs(F.embed(g))) - log(abs(F.embed(F.conj(g))));
  const long k = static_cast<long>(round(-L / (2 * fu.regulator)));
  if (k != 0) {
    QuadInt unit = fu.unit;
    if (k < 0) {
      unit = F.conj(fu.unit);
      if (fu.norm == -1) unit = QuadInt(-unit.a, -unit.b);
    }
    g = F.mul(g, F.pow(unit, static_cast<unsigned>(k < 0 ? -k : k)));
  }
  if (F.embed(g) < 0) g = QuadInt(-g.a, -g.b);
  return g;
}

}  // namespace

QuadInt principal_generator(const ClassGroup& G, std::uint64_t q, std::uint64_t h) {
  const QuadField& F = G.field();
  const Form P = prime_form(F, q);
  Form f = P;
  for (std::uint64_t i = 1; i < h; ++i) f = compose(f, P);

  Mat2 M;
  Form g;
  if (F.is_real()) {
    g = reduce_indefinite(f, G.isqrt_disc(), &M);
    const std::size_t budget = 2 * G.principal_cycle_length() + 64;
    std::size_t steps = 0;
    while (abs(g.a) != 1) {
      if (++steps > budget) {
        throw GeneratorSearchFailed("no form with |a| = 1 on the cycle of q^h for q = " +
                                    std::to_string(q));
      }
      g = rho(g, G.isqrt_disc(), &M);
    }
  } else {
    g = reduce_definite(f, &M);
    if (g.a != 1) {
      throw GeneratorSearchFailed("q^h is not principal for q = " + std::to_string(q));
    }
  }

  // f(x, y) = g(1, 0) = +-1, and x*a - y*(-b + sqrt(disc))/2 has norm a*f(x, y).
  const BigInt& x = M.m00;
  const BigInt& y = M.m10;
  QuadInt gamma(x * f.a + y * ((f.b + F.omega_trace_big()) / 2), -y);

  const BigInt n = F.norm(gamma);
  if (abs(n) != f.a) {
    throw GeneratorSearchFailed("generator norm check failed for q = " + std::to_string(q));
  }
  if (F.is_real()) return balance_real(F, std::move(gamma));
  if (gamma.a < 0 || (gamma.a == 0 && gamma.b < 0)) gamma = QuadInt(-gamma.a, -gamma.b);
  return gamma;
}

AuxPrime make_aux_prime(const ClassGroup& G, std::uint64_t q) {
  AuxPrime aux;
  aux.q = q;
  aux.form = prime_form(G.field(), q);
  aux.order = G.order(aux.form);
  aux.gamma = principal_generator(G, q, aux.order);
  return aux;
}

std::vector<std::vector<AuxPrime>> generating_sets(const ClassGroup& G, std::size_t count) {
  std::vector<std::vector<AuxPrime>> sets(count);
  const std::uint64_t h = G.class_number();
  if (h == 1) return sets;

  std::set<std::uint64_t> used;
  for (auto& set : sets) {
    std::vector<Form> gens;
    std::uint64_t size = 1;
    arith::PrimeStream primes(2);
    while (size < h) {
      const std::uint64_t q = primes.next();
      if (used.count(q) || splitting_type(G.field(), q) != SplitType::Split) continue;
      gens.push_back(prime_form(G.field(), q));
      const std::uint64_t grown = G.subgroup_order(gens);
      if (grown == size) {
        gens.pop_back();
        continue;
      }
      size = grown;
      used.insert(q);
      set.push_back(make_aux_prime(G, q));
    }
  }
  return sets;
}

}  // namespace isogeny
