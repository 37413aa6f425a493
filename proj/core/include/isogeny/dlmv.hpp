#pragma once

#include <cstdint>

#include "isogeny/classgroup.hpp"

namespace isogeny {

struct DlmvBreakdown {
  int d_K = 2;
  std::int64_t disc = 0;
  std::uint64_t h = 0;
  int r = 0;
  BigReal regulator;  // 0 for imaginary fields
  BigReal delta;
  BigReal C1;
  BigReal C2;
  BigReal n;          // (4 h ln|disc| + 5h + 5)^2
  BigReal C;          // (n^(12h) C2 + n^(6h))^4
  BigReal type1_bound;
  BigReal T_K;
  BigReal dlmv;       // max(type1_bound, T_K, C)
};

DlmvBreakdown dlmv_bound(const ClassGroup& G);
DlmvBreakdown dlmv_bound(const QuadField& F);

}  // namespace isogeny
