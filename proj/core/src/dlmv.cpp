#include "isogeny/dlmv.hpp"

#include <algorithm>

#include "isogeny/type2sieve.hpp"

namespace isogeny {

DlmvBreakdown dlmv_bound(const ClassGroup& G) {
  const QuadField& F = G.field();
  DlmvBreakdown out;
  out.disc = F.disc();
  out.h = G.class_number();
  out.r = F.unit_rank();
  out.regulator = F.is_real() ? F.regulator() : BigReal(0);

  const BigReal r(out.r);
  const BigReal h(static_cast<unsigned long long>(out.h));
  out.delta = log(BigReal(2)) / (r + 1);
  // r^(r+1) is 0 for imaginary fields, so C1 = 0 and C2 = 1.
  out.C1 = pow(r, r + 1) * pow(out.delta, -(r - 1)) / 2;
  out.C2 = exp(24 * out.C1 * out.regulator);

  const BigReal log_disc = log(abs(BigReal(static_cast<long long>(out.disc))));
  const BigReal root_n = 4 * h * log_disc + 5 * h + 5;
  out.n = root_n * root_n;
  const BigReal inner = pow(out.n, 12 * h) * out.C2 + pow(out.n, 6 * h);
  out.C = pow(inner, 4);

  const BigReal t1 = 1 + pow(BigReal(3), 12 * h);
  out.type1_bound = t1 * t1;
  out.T_K = type_two_bound(F);
  out.dlmv = std::max({out.type1_bound, out.T_K, out.C});
  return out;
}

DlmvBreakdown dlmv_bound(const QuadField& F) { return dlmv_bound(ClassGroup(F)); }

}  // namespace isogeny
