#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "isogeny/forms.hpp"
#include "isogeny/quadfield.hpp"

namespace isogeny {

/// Ideal class group (wide sense) of the maximal order of K.
///
/// Imaginary fields: classes are the reduced positive definite forms.
/// Real fields: a class is the union of the cycle of reduced forms of f and
/// that of (-a, b, -c); classes are generated from prime forms below the
/// Minkowski bound.
class ClassGroup {
 public:
  explicit ClassGroup(QuadField F);

  const QuadField& field() const { return F_; }
  std::uint64_t class_number() const { return reps_.size(); }
  /// Real fields: 2h when the fundamental unit has norm +1. Imaginary: h.
  std::uint64_t narrow_class_number() const;
  /// Norm of the fundamental unit read off the principal cycle (real only).
  int unit_norm() const;

  /// Index in [0, h) of the class of a primitive form of discriminant disc(K).
  std::size_t class_index(const Form& f) const;
  /// Canonical representative (a > 0) of class i.
  const Form& representative(std::size_t i) const { return reps_.at(i); }
  Form reduce(const Form& f) const { return reps_[class_index(f)]; }

  Form identity() const { return reps_[0]; }
  Form compose(const Form& f, const Form& g) const;
  Form power(const Form& f, std::uint64_t k) const;
  bool equal(const Form& f, const Form& g) const { return class_index(f) == class_index(g); }
  bool is_principal(const Form& f) const { return class_index(f) == 0; }
  std::uint64_t order(const Form& f) const;
  /// Size of the subgroup generated by the given classes.
  std::uint64_t subgroup_order(const std::vector<Form>& generators) const;

  const BigInt& isqrt_disc() const { return s_; }
  /// Number of reduced forms on the principal cycle (real fields).
  std::size_t principal_cycle_length() const { return principal_cycle_length_; }

 private:
  void build_imaginary();
  void build_real();
  Form reduced(const Form& f) const;
  std::size_t register_cycle(const Form& reduced_form);
  std::pair<bool, std::size_t> lookup(const Form& f) const;

  QuadField F_;
  BigInt s_;
  std::vector<Form> reps_;
  std::map<std::pair<BigInt, BigInt>, std::size_t> index_;
  bool principal_cycle_has_minus_one_ = false;
  std::size_t principal_cycle_length_ = 1;
};

/// Primitive form (q, b, c) with the least b >= 0 such that b^2 = disc(K)
/// mod 4q. Throws NotSplit unless q splits (or, with allow_ramified, ramifies).
Form prime_form(const QuadField& F, std::uint64_t q, bool allow_ramified = false);

/// The ideal of the form (a, b, c) with a > 0 is [a, (-b + sqrt(disc))/2].
bool ideal_contains(const QuadField& F, const Form& ideal, const QuadInt& x);

struct AuxPrime {
  std::uint64_t q = 0;
  Form form;             // prime_form(F, q)
  std::uint64_t order = 0;
  QuadInt gamma;         // generates the ideal of form^order
};

/// A generator of the (principal) ideal of prime_form(F, q)^h.
/// Real fields: balanced against the fundamental unit; sign makes the real
/// embedding positive. Imaginary fields: sign makes the leading nonzero
/// coordinate positive. Throws GeneratorSearchFailed if the power is not
/// principal or the walk exceeds its budget.
QuadInt principal_generator(const ClassGroup& G, std::uint64_t q, std::uint64_t h);

AuxPrime make_aux_prime(const ClassGroup& G, std::uint64_t q);

/// `count` pairwise-disjoint lists of split primes, each generating Cl(K).
/// Greedy over increasing q; primes whose class already lies in the
/// subgroup built so far are skipped and stay available for later sets.
std::vector<std::vector<AuxPrime>> generating_sets(const ClassGroup& G, std::size_t count);

}  // namespace isogeny
