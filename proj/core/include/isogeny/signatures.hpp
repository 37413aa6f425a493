#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isogeny/quadfield.hpp"

namespace isogeny {

enum class SignatureClass { Quadratic, Quartic, Sextic, Mixed };

const char* to_string(SignatureClass c);

/// Isogeny signature (a, b), a and b in {0, 4, 6, 8, 12}.
struct Signature {
  int a = 0;
  int b = 0;

  bool is_constant() const { return a == b; }
  SignatureClass klass() const;
  Signature dual() const { return {12 - a, 12 - b}; }
  Signature swapped() const { return {b, a}; }
  std::string str() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// All 25 pairs over {0, 4, 6, 8, 12}.
std::vector<Signature> all_signatures();

/// The eight signatures not of Type 1 or 2, up to duality and swapping.
std::vector<Signature> not_type_one_two_signatures();

/// not_type_one_two_signatures() followed by (0,0) and (6,6).
std::vector<Signature> representative_signatures();

/// Congruence conditions a prime p must meet to survive under eps.
/// Always false for p dividing disc(K).
bool congruence_filter(const Signature& eps, std::uint64_t p, const QuadField& F);
bool congruence_filter(const Signature& eps, const BigInt& p, const QuadField& F);

}  // namespace isogeny
