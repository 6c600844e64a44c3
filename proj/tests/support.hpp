#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gammavec/integer.hpp"
#include "gammavec/polyring.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Counts to_counts(const std::vector<gammavec::Integer>& v) {
  oracle::Counts out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

inline oracle::Counts to_counts(const gammavec::IntPolynomial& p) {
  return to_counts(p.coeffs());
}

inline gammavec::IntPolynomial from_counts(const oracle::Counts& c) {
  std::vector<gammavec::Integer> v;
  for (long long x : c) v.emplace_back(static_cast<long>(x));
  return gammavec::IntPolynomial(v);
}

/// Deterministic generator for the hand-rolled property tests.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed1234u);
  return engine;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

/// Random polynomial with the given degree bound and coefficient range.
inline gammavec::IntPolynomial random_poly(std::size_t max_degree, long bound) {
  const auto deg = static_cast<std::size_t>(uniform(0, static_cast<long>(max_degree)));
  std::vector<gammavec::Integer> c(deg + 1);
  for (auto& x : c) x = uniform(-bound, bound);
  return gammavec::IntPolynomial(c);
}

/// Random palindromic polynomial q^shift * (palindrome of degree d).
inline gammavec::IntPolynomial random_palindrome(std::size_t max_degree, long bound) {
  const auto d = static_cast<std::size_t>(uniform(0, static_cast<long>(max_degree)));
  std::vector<gammavec::Integer> c(d + 1);
  for (std::size_t i = 0; i <= d / 2; ++i) {
    c[i] = uniform(-bound, bound);
    c[d - i] = c[i];
  }
  if (c[0] == 0) c[0] = c[d] = 1;
  const auto shift = static_cast<std::size_t>(uniform(0, 3));
  return gammavec::IntPolynomial(c).shift_up(shift);
}

}  // namespace support
