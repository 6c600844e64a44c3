#pragma once

// Dense polynomials in q with exact integer coefficients, the q-analogues
// built from them, and the g- / gamma-vector coordinates of palindromic
// polynomials.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gammavec/integer.hpp"

namespace gammavec {

/// Dense polynomial in q. Index i of coeffs() holds the coefficient of q^i;
/// trailing zeros are always trimmed, so the zero polynomial has no entries.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  /// c * q^power
  static IntPolynomial monomial(const Integer& c, std::size_t power);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const {
    return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  /// Smallest power with a nonzero coefficient. Requires !is_zero().
  std::size_t min_degree() const;
  /// Coefficient of q^i, zero past the end.
  Integer coeff(std::size_t i) const;

  /// Integer value at q = x.
  Integer evaluate(const Integer& x) const;

  /// Exact quotient by `divisor`; throws std::logic_error on a nonzero
  /// remainder and std::invalid_argument on division by zero.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  /// Drops the factor q^k. Requires k <= min_degree().
  IntPolynomial shift_down(std::size_t k) const;
  IntPolynomial shift_up(std::size_t k) const;

  /// Human form such as "1 + 3q + 5q^2".
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& p);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// q-analogues ----------------------------------------------------------------

/// [n] = 1 + q + ... + q^(n-1). Throws std::invalid_argument for n == 0.
IntPolynomial q_int(unsigned n);
/// [n]! = [1][2]...[n], with [0]! = 1.
IntPolynomial q_factorial(unsigned n);
/// Gaussian binomial [n choose k]_q as the exact quotient
/// [n]! / ([k]! [n-k]!). Throws std::invalid_argument when k > n.
IntPolynomial q_binomial(unsigned n, unsigned k);
/// (1+q)(1+q^2)...(1+q^n).
IntPolynomial distinct_parts_product(unsigned n);
/// (1+q)^e
IntPolynomial one_plus_q_power(unsigned e);

// Palindromic structure -----------------------------------------------------

/// min degree + max degree when h is palindromic about that centre, otherwise
/// nullopt. Throws std::invalid_argument for the zero polynomial.
std::optional<std::size_t> palindromic_degree(const IntPolynomial& h);

/// Weakly increasing then weakly decreasing coefficients. The zero polynomial
/// counts as unimodal.
bool is_unimodal(const IntPolynomial& h);

enum class VectorKind { G, Gamma };

/// Coordinates of a palindromic polynomial in the staircase basis
/// q^i + ... + q^(d-i) (kind G) or in the basis q^i (1+q)^(d-2i) (kind Gamma).
///
/// `degree` is the palindromic degree after a common factor q^shift has been
/// removed, so the polynomial described is q^shift times the basis expansion.
/// entries.size() == degree / 2 + 1 always.
struct SymVector {
  VectorKind kind = VectorKind::G;
  std::size_t degree = 0;
  std::size_t shift = 0;
  std::vector<Integer> entries;

  /// Validates the length invariant; throws std::invalid_argument.
  static SymVector make(VectorKind kind, std::size_t degree,
                        std::vector<Integer> entries, std::size_t shift = 0);

  std::size_t size() const { return entries.size(); }
  const Integer& operator[](std::size_t i) const { return entries[i]; }

  friend bool operator==(const SymVector&, const SymVector&) = default;
};

/// g_i = h_i - h_{i-1} for 0 <= i <= d/2 (after normalising out q^shift).
/// Throws std::invalid_argument if h is zero or not palindromic.
SymVector g_vector(const IntPolynomial& h);

/// Gamma coordinates by peeling q^i (1+q)^(d-2i) from the lowest power up.
/// Throws std::invalid_argument if h is zero or not palindromic, and
/// std::logic_error if a residual survives the peeling.
SymVector gamma_vector(const IntPolynomial& h);

/// Inverse of g_vector. Throws std::invalid_argument on a Gamma vector.
IntPolynomial from_g(const SymVector& g);
/// Inverse of gamma_vector. Throws std::invalid_argument on a G vector.
IntPolynomial from_gamma(const SymVector& gamma);

/// sum_i gamma_i z^i. Throws std::invalid_argument unless kind == Gamma.
Integer gamma_poly_eval(const SymVector& gamma, const Integer& z);

/// Entries read as a polynomial in z (the g- or gamma-polynomial).
IntPolynomial as_polynomial(const SymVector& v);

}  // namespace gammavec
