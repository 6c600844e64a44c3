#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace gammavec {

/// Exact integer used for every coefficient and count in the library.
using Integer = mpz_class;

inline std::string to_decimal(const Integer& value) { return value.get_str(10); }

/// C(n, k) with the usual convention that it vanishes outside 0 <= k <= n.
inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

/// Product of two count sequences viewed as polynomials in one variable.
std::vector<Integer> convolve(const std::vector<Integer>& a,
                              const std::vector<Integer>& b);

}  // namespace gammavec
