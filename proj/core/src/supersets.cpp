#include "isogeny/supersets.hpp"

#include <algorithm>
#include <chrono>

#include "isogeny/errors.hpp"
#include "parallel.hpp"

namespace isogeny {

namespace {

// gcd(g, lcm(xs)) = lcm_i gcd(g, x_i): never materializes the lcm.
BigInt gcd_with_lcm(const BigInt& g, const std::vector<BigInt>& xs) {
  BigInt result = 1, t;
  for (const BigInt& x : xs) {
    mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), t.get_mpz_t());
  }
  return result;
}

// gcd over j of lcm(components(j)). The first lcm is formed in full; every
// other item is only ever reduced against it.
template <class Components>
BigInt gcd_of_lcms(std::size_t n, unsigned threads, Components components) {
  if (n == 0) return 0;
  const BigInt first = lcm_of(components(0));
  std::vector<BigInt> reduced(n);
  detail::parallel_for(n - 1, threads,
                       [&](std::size_t j) { reduced[j + 1] = gcd_with_lcm(first, components(j + 1)); });
  BigInt g = first;
  for (std::size_t j = 1; j < n; ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), reduced[j].get_mpz_t());
  return g;
}

PrimeSet support_of(const BigInt& g, const arith::FactorBudget& budget) {
  if (g == 0) throw std::logic_error("support of 0 requested");
  return arith::support(g, budget);
}

PrimeSet primes_to_set(const std::vector<std::uint64_t>& ps) {
  PrimeSet out;
  for (std::uint64_t p : ps) out.emplace_back(static_cast<unsigned long>(p));
  return out;
}

class StageTimer {
 public:
  explicit StageTimer(std::map<std::string, double>& sink) : sink_(sink) {}
  template <class Fn>
  auto run(const std::string& name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto value = fn();
    sink_[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return value;
  }

 private:
  std::map<std::string, double>& sink_;
};

}  // namespace

PrimeSet merge(const std::vector<PrimeSet>& sets) {
  PrimeSet out;
  for (const PrimeSet& s : sets) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<AuxPrime> select_aux_primes(const ClassGroup& G, std::size_t count,
                                        AuxConstraint constraint) {
  if (count == 0) throw ValidationError("aux prime count must be at least 1");
  const QuadField& F = G.field();
  std::vector<std::uint64_t> chosen;
  arith::PrimeStream primes(2);
  while (chosen.size() < count) {
    const std::uint64_t q = primes.next();
    if (splitting_type(F, q) != SplitType::Split) continue;
    if (constraint == AuxConstraint::Type1 && q <= 5) continue;
    if (constraint == AuxConstraint::NotType12 && !F.is_real() && G.is_principal(prime_form(F, q))) {
      continue;
    }
    chosen.push_back(q);
  }
  std::vector<AuxPrime> out;
  out.reserve(count);
  for (std::uint64_t q : chosen) out.push_back(make_aux_prime(G, q));
  return out;
}

PrimeSet not_type_one_two(const ClassGroup& G, const std::vector<AuxPrime>& aux,
                          const ComputeOptions& options,
                          std::vector<SignatureContribution>* detail) {
  if (aux.empty()) throw ValidationError("not_type_one_two needs at least one aux prime");
  const QuadField& F = G.field();
  const std::vector<Signature> sigs = not_type_one_two_signatures();
  const std::size_t ns = sigs.size();
  const std::size_t na = aux.size();

  // Phase 1: full ABC for the first aux prime, one per signature.
  std::vector<BigInt> first(ns);
  detail::parallel_for(ns, options.threads,
                       [&](std::size_t i) { first[i] = lcm_of(abc_components(F, sigs[i], aux[0])); });

  // Phase 2: every other (signature, aux) pair reduced against phase 1.
  std::vector<BigInt> reduced(ns * na);
  detail::parallel_for(ns * (na - 1), options.threads, [&](std::size_t k) {
    const std::size_t i = k / (na - 1);
    const std::size_t j = k % (na - 1) + 1;
    reduced[i * na + j] = gcd_with_lcm(first[i], abc_components(F, sigs[i], aux[j]));
  });

  std::vector<SignatureContribution> contributions(ns);
  detail::parallel_for(ns, options.threads, [&](std::size_t i) {
    SignatureContribution& c = contributions[i];
    c.eps = sigs[i];
    c.gcd = first[i];
    for (std::size_t j = 1; j < na; ++j) {
      mpz_gcd(c.gcd.get_mpz_t(), c.gcd.get_mpz_t(), reduced[i * na + j].get_mpz_t());
    }
    c.support = support_of(c.gcd, options.budget);
    for (const BigInt& p : c.support) {
      if (congruence_filter(c.eps, p, F)) c.kept.push_back(p);
    }
  });

  std::vector<PrimeSet> parts;
  for (const auto& c : contributions) parts.push_back(c.kept);
  if (detail) *detail = std::move(contributions);
  return merge(parts);
}

PrimeSet type_one(const ClassGroup& G, const std::vector<AuxPrime>& aux,
                  const ComputeOptions& options) {
  if (aux.empty()) throw ValidationError("type_one needs at least one aux prime");
  const QuadField& F = G.field();
  const BigInt g = gcd_of_lcms(aux.size(), options.threads,
                               [&](std::size_t j) { return type1_components(F, aux[j]); });
  std::vector<std::uint64_t> small = arith::primes_up_to(61);
  small.push_back(71);
  return merge({primes_to_set(small), support_of(g, options.budget)});
}

PrimeSet type_two_not_momose(const ClassGroup& G, const std::vector<std::vector<AuxPrime>>& auxgen,
                             const ComputeOptions& options) {
  const QuadField& F = G.field();
  const BigInt g = gcd_of_lcms(auxgen.size(), options.threads,
                               [&](std::size_t j) { return abc_o_components(F, auxgen[j]); });
  if (g == 0) return {};
  return support_of(g, options.budget);
}

SupersetReport assemble(const QuadField& F, const SupersetConfig& config) {
  if (config.aux_count == 0 || config.type1_aux_count == 0 || config.auxgen_count == 0) {
    throw ValidationError("aux counts must be at least 1");
  }
  SupersetReport report;
  StageTimer timer(report.timings_ms);
  report.D = F.D();
  report.disc = F.disc();

  const ClassGroup G = timer.run("class_group", [&] { return ClassGroup(F); });
  report.h = G.class_number();
  if (!F.is_real() && report.h == 1) {
    throw ImaginaryClassNumberOne(
        "Q(sqrt(" + std::to_string(F.D()) +
        ")) is imaginary of class number one: CM elliptic curves give isogenies of infinitely "
        "many prime degrees, so no finite superset exists");
  }

  const ComputeOptions options{std::max(1u, config.threads), config.budget};
  const auto aux = timer.run("aux_selection", [&] {
    return select_aux_primes(G, config.aux_count, AuxConstraint::NotType12);
  });
  const auto t1_aux = timer.run("type_one_aux_selection", [&] {
    return select_aux_primes(G, config.type1_aux_count, AuxConstraint::Type1);
  });
  const auto auxgen = timer.run("generating_sets", [&] { return generating_sets(G, config.auxgen_count); });
  for (const auto& a : aux) report.aux_primes.push_back(a.q);
  for (const auto& a : t1_aux) report.type1_aux_primes.push_back(a.q);
  for (const auto& gen : auxgen) {
    std::vector<std::uint64_t> qs;
    for (const auto& a : gen) qs.push_back(a.q);
    report.aux_generating_sets.push_back(std::move(qs));
  }

  report.not_type_one_two =
      timer.run("not_type_one_two", [&] { return not_type_one_two(G, aux, options); });
  report.type_one = timer.run("type_one", [&] { return type_one(G, t1_aux, options); });
  report.type_two_not_momose =
      timer.run("type_two_not_momose", [&] { return type_two_not_momose(G, auxgen, options); });

  const SieveResult sr = timer.run("type_two_momose", [&] {
    SieveOptions so;
    so.cap = config.type_two_cap;
    so.threads = options.threads;
    so.checkpoint_path = config.checkpoint_path;
    return sieve(F, so);
  });
  report.type_two_momose.bound = sr.bound.convert_to<double>();
  report.type_two_momose.cap = sr.cap;
  report.type_two_momose.complete = sr.complete;
  report.type_two_momose.survivors = sr.survivors;

  report.ramified = support_of(F.disc_big(), options.budget);
  report.superset = merge({report.not_type_one_two, report.type_one, report.type_two_not_momose,
                           primes_to_set(sr.survivors), report.ramified});
  return report;
}

}  // namespace isogeny
