#include "isogeny/signatures.hpp"

#include <stdexcept>

namespace isogeny {

const char* to_string(SignatureClass c) {
  switch (c) {
    case SignatureClass::Quadratic: return "quadratic";
    case SignatureClass::Quartic: return "quartic";
    case SignatureClass::Sextic: return "sextic";
    case SignatureClass::Mixed: return "mixed";
  }
  return "?";
}

SignatureClass Signature::klass() const {
  auto all_divisible = [this](int m) { return a % m == 0 && b % m == 0; };
  if (all_divisible(12)) return SignatureClass::Quadratic;
  if (all_divisible(6)) return SignatureClass::Quartic;
  if (all_divisible(4)) return SignatureClass::Sextic;
  return SignatureClass::Mixed;
}

std::string Signature::str() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::vector<Signature> all_signatures() {
  static constexpr int kValues[] = {0, 4, 6, 8, 12};
  std::vector<Signature> out;
  for (int a : kValues) {
    for (int b : kValues) out.push_back({a, b});
  }
  return out;
}

std::vector<Signature> not_type_one_two_signatures() {
  return {{0, 12}, {0, 4}, {0, 8}, {4, 4}, {4, 8}, {4, 12}, {4, 6}, {0, 6}};
}

std::vector<Signature> representative_signatures() {
  auto out = not_type_one_two_signatures();
  out.push_back({0, 0});
  out.push_back({6, 6});
  return out;
}

bool congruence_filter(const Signature& eps, std::uint64_t p, const QuadField& F) {
  const auto disc = F.disc();
  if (disc % static_cast<std::int64_t>(p) == 0) return false;
  if (!eps.is_constant() && splitting_type(F, p) != SplitType::Split) return false;
  switch (eps.klass()) {
    case SignatureClass::Quadratic: return true;
    case SignatureClass::Quartic: return p % 4 == 3;
    case SignatureClass::Sextic: return p % 3 == 2;
    case SignatureClass::Mixed: return p % 12 == 11;
  }
  return false;
}

bool congruence_filter(const Signature& eps, const BigInt& p, const QuadField& F) {
  if (mpz_fits_ulong_p(p.get_mpz_t())) return congruence_filter(eps, static_cast<std::uint64_t>(p.get_ui()), F);
  // p exceeds every discriminant we accept, so it is unramified.
  if (!eps.is_constant() && arith::kronecker(F.disc_big(), p) != 1) return false;
  auto mod = [&p](unsigned long m) { return mpz_fdiv_ui(p.get_mpz_t(), m); };
  switch (eps.klass()) {
    case SignatureClass::Quadratic: return true;
    case SignatureClass::Quartic: return mod(4) == 3;
    case SignatureClass::Sextic: return mod(3) == 2;
    case SignatureClass::Mixed: return mod(12) == 11;
  }
  return false;
}

}  // namespace isogeny
