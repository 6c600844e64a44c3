#include "gammavec/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gammavec {

std::vector<Integer> convolve(const std::vector<Integer>& a,
                              const std::vector<Integer>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// IntPolynomial ---------------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t IntPolynomial::min_degree() const {
  if (is_zero()) throw std::invalid_argument("min_degree of the zero polynomial");
  std::size_t i = 0;
  while (coeffs_[i] == 0) ++i;
  return i;
}

Integer IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::shift_down(std::size_t k) const {
  if (is_zero()) return {};
  if (k > min_degree()) throw std::invalid_argument("shift_down past the lowest term");
  return IntPolynomial(std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k),
                                            coeffs_.end()));
}

IntPolynomial IntPolynomial::shift_up(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree())
    throw std::logic_error("inexact polynomial division: dividend degree too small");

  std::vector<Integer> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  const Integer& lead = divisor.coeffs_.back();
  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Integer& top = rem[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::logic_error("inexact polynomial division: coefficient not divisible");
    Integer q = top / lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
    quot[k] = std::move(q);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; }))
    throw std::logic_error("inexact polynomial division: nonzero remainder");
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) out << to_decimal(mag);
    if (i >= 1) out << "q";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  return IntPolynomial(convolve(a.coeffs_, b.coeffs_));
}

IntPolynomial operator*(const Integer& c, const IntPolynomial& p) {
  std::vector<Integer> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return IntPolynomial(std::move(v));
}

// q-analogues -------------------------------------------------------------------

IntPolynomial q_int(unsigned n) {
  if (n == 0) throw std::invalid_argument("q_int: n must be at least 1");
  return IntPolynomial(std::vector<Integer>(n, Integer(1)));
}

IntPolynomial q_factorial(unsigned n) {
  IntPolynomial out{1};
  for (unsigned i = 2; i <= n; ++i) out = out * q_int(i);
  return out;
}

IntPolynomial q_binomial(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("q_binomial: k must not exceed n");
  return q_factorial(n).divide_exact(q_factorial(k) * q_factorial(n - k));
}

IntPolynomial distinct_parts_product(unsigned n) {
  IntPolynomial out{1};
  for (unsigned j = 1; j <= n; ++j)
    out = out * (IntPolynomial{1} + IntPolynomial::monomial(1, j));
  return out;
}

IntPolynomial one_plus_q_power(unsigned e) {
  std::vector<Integer> v(e + 1);
  for (unsigned r = 0; r <= e; ++r) v[r] = binomial(e, r);
  return IntPolynomial(std::move(v));
}

// Palindromic structure -------------------------------------------------------

std::optional<std::size_t> palindromic_degree(const IntPolynomial& h) {
  if (h.is_zero()) throw std::invalid_argument("palindromic_degree of the zero polynomial");
  const std::size_t lo = h.min_degree();
  const auto hi = static_cast<std::size_t>(h.degree());
  const std::size_t d = lo + hi;
  for (std::size_t i = lo; 2 * i < d; ++i)
    if (h.coeff(i) != h.coeff(d - i)) return std::nullopt;
  return d;
}

bool is_unimodal(const IntPolynomial& h) {
  const auto& c = h.coeffs();
  std::size_t i = 1;
  while (i < c.size() && c[i - 1] <= c[i]) ++i;
  while (i < c.size() && c[i - 1] >= c[i]) ++i;
  return i >= c.size();
}

SymVector SymVector::make(VectorKind kind, std::size_t degree,
                          std::vector<Integer> entries, std::size_t shift) {
  if (entries.size() != degree / 2 + 1)
    throw std::invalid_argument("SymVector: expected " + std::to_string(degree / 2 + 1) +
                                " entries for degree " + std::to_string(degree) + ", got " +
                                std::to_string(entries.size()));
  return SymVector{kind, degree, shift, std::move(entries)};
}

namespace {

struct Normalized {
  IntPolynomial poly;  // min degree 0
  std::size_t degree;
  std::size_t shift;
};

Normalized normalize_palindromic(const IntPolynomial& h) {
  if (h.is_zero()) throw std::invalid_argument("expected a nonzero palindromic polynomial");
  auto d = palindromic_degree(h);
  if (!d) throw std::invalid_argument("polynomial is not palindromic: " + h.to_string());
  const std::size_t shift = h.min_degree();
  return {h.shift_down(shift), *d - 2 * shift, shift};
}

}  // namespace

SymVector g_vector(const IntPolynomial& h) {
  auto [p, d, shift] = normalize_palindromic(h);
  std::vector<Integer> g(d / 2 + 1);
  for (std::size_t i = 0; i < g.size(); ++i)
    g[i] = i == 0 ? p.coeff(0) : p.coeff(i) - p.coeff(i - 1);
  return SymVector::make(VectorKind::G, d, std::move(g), shift);
}

SymVector gamma_vector(const IntPolynomial& h) {
  auto [p, d, shift] = normalize_palindromic(h);
  std::vector<Integer> residual = p.coeffs();
  residual.resize(d + 1);
  std::vector<Integer> gamma(d / 2 + 1);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    gamma[i] = residual[i];
    if (gamma[i] == 0) continue;
    const std::size_t e = d - 2 * i;
    for (std::size_t r = 0; r <= e; ++r) residual[i + r] -= gamma[i] * binomial(e, r);
  }
  if (std::any_of(residual.begin(), residual.end(), [](const Integer& c) { return c != 0; }))
    throw std::logic_error("gamma_vector: residual did not vanish");
  return SymVector::make(VectorKind::Gamma, d, std::move(gamma), shift);
}

IntPolynomial from_g(const SymVector& g) {
  if (g.kind != VectorKind::G) throw std::invalid_argument("from_g: expected a g-vector");
  const std::size_t d = g.degree;
  std::vector<Integer> h(d + 1);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j + i <= d; ++j) h[j] += g[i];
  return IntPolynomial(std::move(h)).shift_up(g.shift);
}

IntPolynomial from_gamma(const SymVector& gamma) {
  if (gamma.kind != VectorKind::Gamma)
    throw std::invalid_argument("from_gamma: expected a gamma-vector");
  const std::size_t d = gamma.degree;
  std::vector<Integer> h(d + 1);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] == 0) continue;
    const std::size_t e = d - 2 * i;
    for (std::size_t r = 0; r <= e; ++r) h[i + r] += gamma[i] * binomial(e, r);
  }
  return IntPolynomial(std::move(h)).shift_up(gamma.shift);
}

Integer gamma_poly_eval(const SymVector& gamma, const Integer& z) {
  if (gamma.kind != VectorKind::Gamma)
    throw std::invalid_argument("gamma_poly_eval: expected a gamma-vector");
  return as_polynomial(gamma).evaluate(z);
}

IntPolynomial as_polynomial(const SymVector& v) { return IntPolynomial(v.entries); }

}  // namespace gammavec
