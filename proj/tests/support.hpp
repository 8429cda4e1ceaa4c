#pragma once

#include <optional>

#include "bqf/form.hpp"

namespace bqf::testing {

inline Form F(long a, long b, long c) { return Form(a, b, c); }
inline Form F(const Ring& r, long a, long b, long c) { return Form(r, a, b, c); }
inline Elem Z(long v) { return Elem(Ring::integers(), v); }
inline Mat M(long a, long b, long c, long d) { return make_mat(Ring::integers(), a, b, c, d); }

// Brute-force SL2(Z) search, independent of reduction: p(M v) = q(v).
inline std::optional<Mat> proper_search(const Form& p, const Form& q, long bound) {
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d) {
          if (a * d - b * c != 1) continue;
          const Mat m = M(a, b, c, d);
          if (act(p, m, Z(1)) == q) return m;
        }
  return std::nullopt;
}

}  // namespace bqf::testing
