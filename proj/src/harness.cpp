#include "gammavec/harness.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

#include "gammavec/matchgen.hpp"
#include "gammavec/polyring.hpp"

namespace gammavec {

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Poly:
      return "poly";
    case Provenance::Recurrence:
      return "recurrence";
    case Provenance::FixedPoint:
      return "fixedpoint";
    case Provenance::AltSum:
      return "altsum";
  }
  return "unknown";
}

std::optional<Provenance> parse_provenance(std::string_view name) {
  for (auto p : {Provenance::Poly, Provenance::Recurrence, Provenance::FixedPoint,
                 Provenance::AltSum})
    if (provenance_name(p) == name) return p;
  return std::nullopt;
}

const std::vector<std::vector<long>>& reference_g_table() {
  static const std::vector<std::vector<long>> rows = {
      {1},
      {1},
      {1, 1},
      {1, 2, 2, 1},
      {1, 3, 5, 6, 5, 2},
      {1, 4, 9, 15, 20, 22, 19, 11},
      {1, 5, 14, 29, 49, 71, 90, 100, 96, 76, 42},
      {1, 6, 20, 49, 98, 169, 259, 359, 454, 525, 553, 524, 433, 286, 100},
  };
  return rows;
}

GTable gtable(unsigned n_max, Provenance provenance) {
  if (n_max == 0) throw std::invalid_argument("gtable: n_max must be at least 1");
  GTable table{provenance, {}};
  for (unsigned n = 1; n <= n_max; ++n) {
    std::vector<Integer> row;
    switch (provenance) {
      case Provenance::Poly:
        row = g_vector(q_factorial(n)).entries;
        break;
      case Provenance::Recurrence:
        row = g_recurrence(n);
        break;
      case Provenance::FixedPoint:
        row.resize(decorated_length(n) / 2 + 1);
        for (std::size_t i = 0; i < row.size(); ++i) row[i] = g_by_fixed_points(n, i);
        break;
      case Provenance::AltSum:
        row = alternating_g(FamilyParams{Family::QFactorial, n, 0});
        break;
    }
    table.rows.emplace(n, std::move(row));
  }
  return table;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.passed(); });
}

namespace {

struct Context {
  unsigned n_max;
  CheckOptions options;

  BasisMatrix basis(std::size_t d) const {
    BasisMatrix b = basis_matrix(d);
    if (const auto& f = options.basis_fault; f && f->degree == d && f->i < b.dim && f->j < b.dim)
      b.at(f->i, f->j) += f->delta;
    return b;
  }
};

/// Accumulates the first failure of a check.
class Outcome {
 public:
  bool failed() const { return witness_.has_value(); }

  void fail(std::string witness) {
    if (!witness_) witness_ = std::move(witness);
  }

  void expect(bool ok, const std::function<std::string()>& describe) {
    if (!ok && !failed()) witness_ = describe();
  }

  void expect_equal(const std::string& where, const std::vector<Integer>& expected,
                    const std::vector<Integer>& actual) {
    if (failed()) return;
    const std::size_t len = std::max(expected.size(), actual.size());
    for (std::size_t i = 0; i < len; ++i) {
      Integer e = i < expected.size() ? expected[i] : Integer(0);
      Integer a = i < actual.size() ? actual[i] : Integer(0);
      if (e != a) {
        witness_ = where + ": first mismatch at i=" + std::to_string(i) + ", expected " +
                   to_decimal(e) + ", got " + to_decimal(a);
        return;
      }
    }
  }

  CheckReport report(std::string name, std::vector<std::pair<std::string, std::string>> params) {
    CheckReport r{std::move(name), std::move(params), CheckStatus::Pass, std::nullopt};
    if (witness_) {
      r.status = CheckStatus::Fail;
      r.witness = witness_;
    }
    return r;
  }

 private:
  std::optional<std::string> witness_;
};

using Params = std::vector<std::pair<std::string, std::string>>;

std::vector<Integer> signed_counts(std::vector<Integer> counts) {
  for (std::size_t j = 1; j < counts.size(); j += 2) counts[j] = -counts[j];
  return counts;
}

std::string family_label(const FamilyParams& p) {
  switch (p.family) {
    case Family::QFactorial:
      return "qfact n=" + std::to_string(p.n);
    case Family::DistinctParts:
      return "distinct n=" + std::to_string(p.n);
    case Family::QBinomial:
      return "qbinom n=" + std::to_string(p.n) + " k=" + std::to_string(p.k);
  }
  return "?";
}

std::vector<FamilyParams> families_up_to(unsigned n_max) {
  std::vector<FamilyParams> out;
  for (unsigned n = 1; n <= n_max; ++n) out.push_back({Family::QFactorial, n, 0});
  for (unsigned n = 1; n <= n_max; ++n) out.push_back({Family::DistinctParts, n, 0});
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned k = 0; k <= n; ++k) out.push_back({Family::QBinomial, n, k});
  return out;
}

/// Random palindromic polynomial with nonzero constant term.
IntPolynomial random_palindromic(std::mt19937_64& rng, std::size_t max_degree, long lo, long hi) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(lo, hi);
  const std::size_t d = deg(rng);
  std::vector<Integer> c(d + 1);
  for (std::size_t i = 0; 2 * i <= d; ++i) {
    long v = coef(rng);
    if (i == 0 && v == 0) v = 1;
    c[i] = v;
    c[d - i] = v;
  }
  return IntPolynomial(std::move(c));
}

// Checks ----------------------------------------------------------------------

CheckReport check_polyring_roundtrip(const Context& ctx) {
  Outcome out;
  for (const auto& f : families_up_to(ctx.n_max)) {
    const IntPolynomial h = family_polynomial(f);
    out.expect(from_g(g_vector(h)) == h, [&] { return family_label(f) + ": from_g(g_vector(h)) != h"; });
    out.expect(from_gamma(gamma_vector(h)) == h,
               [&] { return family_label(f) + ": from_gamma(gamma_vector(h)) != h"; });
  }
  std::mt19937_64 rng(0x5eed0001);
  constexpr int kSamples = 64;
  for (int s = 0; s < kSamples && !out.failed(); ++s) {
    const IntPolynomial h = random_palindromic(rng, 40, -50, 50);
    out.expect(from_g(g_vector(h)) == h && from_gamma(gamma_vector(h)) == h,
               [&] { return "round trip failed for " + h.to_string(); });
  }
  return out.report("polyring_roundtrip", {{"n_max", std::to_string(ctx.n_max)},
                                           {"random_samples", std::to_string(kSamples)},
                                           {"max_degree", "40"}});
}

CheckReport check_gamma_multiplicative(const Context&) {
  Outcome out;
  std::mt19937_64 rng(0x5eed0002);
  constexpr int kSamples = 48;
  for (int s = 0; s < kSamples && !out.failed(); ++s) {
    const IntPolynomial h = random_palindromic(rng, 10, -9, 9);
    const IntPolynomial k = random_palindromic(rng, 10, -9, 9);
    const IntPolynomial lhs = as_polynomial(gamma_vector(h * k));
    const IntPolynomial rhs = as_polynomial(gamma_vector(h)) * as_polynomial(gamma_vector(k));
    out.expect(lhs == rhs, [&] {
      return "gamma(h*k) = " + lhs.to_string() + " but gamma(h)*gamma(k) = " + rhs.to_string() +
             " for h = " + h.to_string() + ", k = " + k.to_string();
    });
  }
  return out.report("gamma_multiplicative", {{"random_pairs", std::to_string(kSamples)}});
}

CheckReport check_g_not_multiplicative(const Context&) {
  Outcome out;
  const IntPolynomial g_single = as_polynomial(g_vector(one_plus_q_power(1)));
  const IntPolynomial g_square = as_polynomial(g_vector(one_plus_q_power(2)));
  out.expect(g_single == IntPolynomial{1}, [&] { return "g of 1+q is " + g_single.to_string(); });
  out.expect(g_square == IntPolynomial{1, 1},
             [&] { return "g of (1+q)^2 is " + g_square.to_string(); });
  out.expect(g_square != g_single * g_single,
             [] { return "g-polynomial of (1+q)^2 equals the square of that of 1+q"; });
  return out.report("g_not_multiplicative", {{"witness_polynomial", "(1+q)^2"}});
}

CheckReport check_unimodal_iff_g_nonnegative(const Context& ctx) {
  Outcome out;
  auto test = [&](const IntPolynomial& h, const std::string& label) {
    const auto g = g_vector(h);
    const bool nonneg =
        std::all_of(g.entries.begin(), g.entries.end(), [](const Integer& x) { return x >= 0; });
    out.expect(nonneg == is_unimodal(h), [&] {
      return label + ": is_unimodal=" + (is_unimodal(h) ? "true" : "false") +
             " but g nonnegative=" + (nonneg ? "true" : "false");
    });
  };
  for (const auto& f : families_up_to(ctx.n_max)) test(family_polynomial(f), family_label(f));
  std::mt19937_64 rng(0x5eed0003);
  constexpr int kSamples = 200;
  for (int s = 0; s < kSamples && !out.failed(); ++s) {
    const IntPolynomial h = random_palindromic(rng, 12, 1, 6);
    test(h, h.to_string());
  }
  return out.report("unimodal_iff_g_nonnegative", {{"n_max", std::to_string(ctx.n_max)},
                                                   {"random_samples", std::to_string(kSamples)}});
}

CheckReport check_qbinomial_identity(const Context& ctx) {
  Outcome out;
  for (unsigned n = 0; n <= ctx.n_max; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      const IntPolynomial lhs = q_binomial(n, k) * q_factorial(k) * q_factorial(n - k);
      out.expect(lhs == q_factorial(n), [&] {
        return "[n choose k][k]![n-k]! != [n]! at n=" + std::to_string(n) +
               " k=" + std::to_string(k);
      });
    }
  return out.report("qbinomial_factorial_identity", {{"n_max", std::to_string(ctx.n_max)}});
}

std::vector<Integer> tally(MatchingStream stream) {
  std::vector<Integer> counts;
  while (auto m = stream.next()) {
    const unsigned k = m->edge_count();
    if (counts.size() <= k) counts.resize(k + 1);
    ++counts[k];
  }
  return counts;
}

constexpr unsigned kEnumerationCap = 16;

CheckReport check_fibonacci_enumeration(const Context& ctx) {
  Outcome out;
  const unsigned top = std::min(ctx.n_max, kEnumerationCap);
  for (unsigned n = 0; n <= top; ++n) {
    out.expect_equal("F_" + std::to_string(n), tally(path_matchings(n)), fibonacci_poly(n).counts);
    std::vector<Integer> closed(n / 2 + 1);
    for (unsigned k = 0; k < closed.size(); ++k) closed[k] = count_path_matchings(n, k);
    out.expect_equal("C(n-k,k) n=" + std::to_string(n), closed, fibonacci_poly(n).counts);
  }
  return out.report("fibonacci_vs_enumeration", {{"n_max", std::to_string(top)}});
}

CheckReport check_lucas_enumeration(const Context& ctx) {
  Outcome out;
  const unsigned top = std::min(ctx.n_max, kEnumerationCap);
  for (unsigned n = 1; n <= top; ++n) {
    out.expect_equal("L_" + std::to_string(n), tally(cycle_matchings(n)), lucas_poly(n).counts);
    std::vector<Integer> closed(n / 2 + 1);
    for (unsigned k = 0; k < closed.size(); ++k) closed[k] = count_cycle_matchings(n, k);
    out.expect_equal("n/(n-k) C(n-k,k) n=" + std::to_string(n), closed, lucas_poly(n).counts);
    if (n >= 2) {
      const BivariateCount via_f =
          fibonacci_poly(n - 1).times_s() + (BivariateCount{0, {2}} * fibonacci_poly(n - 2)).times_t();
      out.expect_equal("L_n = sF_{n-1} + 2tF_{n-2} n=" + std::to_string(n), via_f.counts,
                       lucas_poly(n).counts);
    }
  }
  return out.report("lucas_vs_enumeration", {{"n_max", std::to_string(top)}});
}

CheckReport check_specialize_q(const Context& ctx) {
  Outcome out;
  for (unsigned n = 0; n <= ctx.n_max; ++n) {
    const IntPolynomial f = specialize_q(fibonacci_poly(n));
    out.expect(f == q_int(n + 1), [&] {
      return "F_" + std::to_string(n) + "(1+q,-q) = " + f.to_string();
    });
    if (n >= 1) {
      const IntPolynomial l = specialize_q(lucas_poly(n));
      out.expect(l == IntPolynomial{1} + IntPolynomial::monomial(1, n), [&] {
        return "L_" + std::to_string(n) + "(1+q,-q) = " + l.to_string();
      });
    }
  }
  return out.report("specialize_q", {{"n_max", std::to_string(ctx.n_max)}});
}

CheckReport check_matching_gamma(const Context& ctx) {
  Outcome out;
  for (const auto& f : families_up_to(ctx.n_max))
    out.expect_equal(family_label(f), gamma_vector(family_polynomial(f)).entries,
                     signed_counts(family_matching_counts(f)));
  // The gamma-polynomial of [n] is F_{n-1}(1,-z).
  for (unsigned n = 1; n <= ctx.n_max; ++n)
    out.expect_equal("gamma of [" + std::to_string(n) + "]", gamma_vector(q_int(n)).entries,
                     specialize_gamma(fibonacci_poly(n - 1)).entries);
  return out.report("matching_models_gamma", {{"n_max", std::to_string(ctx.n_max)}});
}

CheckReport check_fibonacci_product(const Context& ctx) {
  Outcome out;
  Integer fib_prev = 0, fib = 1, product = 1;  // Fib_1 = 1
  for (unsigned n = 1; n <= ctx.n_max; ++n) {
    product *= fib;
    const auto counts = fibotorial_counts(n);
    Integer total = 0;
    for (const auto& c : counts) total += c;
    out.expect(total == product, [&] {
      return "sum |T(" + std::to_string(n) + ",j)| = " + to_decimal(total) + ", expected " +
             to_decimal(product);
    });
    const Integer at_minus_one = gamma_poly_eval(gamma_vector(q_factorial(n)), -1);
    out.expect(at_minus_one == product, [&] {
      return "gamma_[" + std::to_string(n) + "]!(-1) = " + to_decimal(at_minus_one) +
             ", expected " + to_decimal(product);
    });
    Integer next = fib + fib_prev;
    fib_prev = fib;
    fib = next;
  }
  return out.report("fibonacci_product", {{"n_max", std::to_string(ctx.n_max)}});
}

CheckReport check_complement(const Context& ctx) {
  Outcome out;
  const unsigned top = std::min(ctx.n_max, 6u);
  for (unsigned m = 0; m <= top; ++m)
    for (unsigned n = 0; n <= top; ++n) {
      PartitionStream stream(m, n);
      unsigned seen = 0;
      while (auto lambda = stream.next()) {
        ++seen;
        const Partition star = complement(*lambda);
        out.expect(star.fits_box() && star.rows() == n && star.width == m &&
                       star.size() == m * n - lambda->size(),
                   [&] { return "complement of " + lambda->to_string() + " malformed"; });
        out.expect(complement(star) == *lambda,
                   [&] { return "complement not an involution at " + lambda->to_string(); });
      }
      out.expect(Integer(seen) == binomial(m + n, m), [&] {
        return "partitions in " + std::to_string(m) + "x" + std::to_string(n) + " box: " +
               std::to_string(seen);
      });
    }
  return out.report("complement_involution", {{"max_box", std::to_string(top)}});
}

CheckReport check_lucanomial_enumeration(const Context& ctx) {
  Outcome out;
  const unsigned top = std::min(ctx.n_max, 8u);
  for (unsigned n = 0; n <= top; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      std::vector<Integer> counts;
      LucanomialStream stream(n, k);
      while (auto t = stream.next()) {
        const unsigned e = t->edge_count();
        if (counts.size() <= e) counts.resize(e + 1);
        ++counts[e];
      }
      const std::string where = "lucanomial n=" + std::to_string(n) + " k=" + std::to_string(k);
      out.expect_equal(where + " stream vs counts", lucanomial_counts(n, k), counts);
      out.expect_equal(where + " counts vs {n choose k}", lucanomial(n, k).counts,
                       lucanomial_counts(n, k));
    }
  for (unsigned m = 2; m <= ctx.n_max; ++m)
    for (unsigned n = 1; m + n <= ctx.n_max; ++n)
      out.expect(lucanomial_recurrence_check(m, n), [&] {
        return "lucanomial recurrence fails at m=" + std::to_string(m) + " n=" + std::to_string(n);
      });
  return out.report("lucanomial_models", {{"enumeration_n_max", std::to_string(top)},
                                          {"recurrence_n_max", std::to_string(ctx.n_max)}});
}

CheckReport check_basis_matrix(const Context& ctx) {
  Outcome out;
  constexpr std::size_t kMaxDegree = 60;
  for (std::size_t d = 0; d <= kMaxDegree; ++d) {
    const BasisMatrix b = ctx.basis(d);
    out.expect(b.is_unit_lower_triangular(),
               [&] { return "B_" + std::to_string(d) + " is not unit lower triangular"; });
    if (out.failed()) break;
    const BasisMatrix inv = b.inverse();
    out.expect(inv.is_unit_lower_triangular(),
               [&] { return "inverse of B_" + std::to_string(d) + " is not unit lower triangular"; });
    const BasisMatrix id = b * inv;
    for (std::size_t i = 0; i < id.dim; ++i)
      for (std::size_t j = 0; j < id.dim; ++j)
        out.expect(id.at(i, j) == (i == j ? 1 : 0), [&] {
          return "B_" + std::to_string(d) + " * inverse differs from I at (" + std::to_string(i) +
                 "," + std::to_string(j) + ")";
        });
  }
  return out.report("basis_matrix_unitriangular", {{"max_degree", std::to_string(kMaxDegree)}});
}

CheckReport check_g_from_gamma(const Context& ctx) {
  Outcome out;
  for (const auto& f : families_up_to(ctx.n_max)) {
    const IntPolynomial h = family_polynomial(f);
    const SymVector gamma = gamma_vector(h);
    out.expect_equal(family_label(f), g_vector(h).entries,
                     g_from_gamma(gamma, ctx.basis(gamma.degree)).entries);
  }
  return out.report("g_from_gamma", {{"n_max", std::to_string(ctx.n_max)}});
}

CheckReport check_alternating_sums(const Context& ctx) {
  Outcome out;
  for (const auto& f : families_up_to(ctx.n_max)) {
    const auto expected = g_vector(family_polynomial(f)).entries;
    const auto alt = alternating_g(f, ctx.basis(family_degree(f)));
    out.expect_equal(family_label(f), expected, alt);
    for (std::size_t i = 0; i < alt.size(); ++i)
      out.expect(alt[i] >= 0, [&] {
        return family_label(f) + ": negative g_" + std::to_string(i) + " = " + to_decimal(alt[i]);
      });
  }
  return out.report("alternating_sums", {{"n_max", std::to_string(ctx.n_max)}});
}

/// Every tuple of path matchings on 1..n-1 nodes.
std::vector<std::vector<Matching>> fibotorial_tuples(unsigned n) {
  std::vector<std::vector<Matching>> tuples{{}};
  for (unsigned k = 1; k < n; ++k) {
    std::vector<std::vector<Matching>> grown;
    MatchingStream stream = path_matchings(k);
    std::vector<Matching> options;
    while (auto m = stream.next()) options.push_back(*m);
    for (const auto& t : tuples)
      for (const auto& m : options) {
        grown.push_back(t);
        grown.back().push_back(m);
      }
    tuples = std::move(grown);
  }
  return tuples;
}

constexpr unsigned kInvolutionCap = 5;

CheckReport check_bijection(const Context& ctx) {
  Outcome out;
  const unsigned top = std::min(ctx.n_max, kInvolutionCap);
  for (unsigned n = 1; n <= top; ++n) {
    const std::size_t d = decorated_length(n);
    const auto tuples = fibotorial_tuples(n);
    for (std::size_t i = 0; 2 * i <= d; ++i) {
      Integer y_size = 0;
      DecoratedStream ys(n, i);
      while (auto p = ys.next()) {
        ++y_size;
        const FibotorialPair pair = decode(*p);
        out.expect(pair.edge_count() == p->decorated_count() && encode(pair, n) == *p,
                   [&] { return "encode(decode(p)) != p for " + p->to_string(); });
      }
      Integer x_size = 0;
      for (const auto& t : tuples) {
        FibotorialPair pair{t, {}};
        const std::size_t j = pair.edge_count();
        if (j > i) continue;
        BallotStream paths(d - 2 * j, i - j);
        while (auto path = paths.next()) {
          ++x_size;
          pair.path = *path;
          out.expect(decode(encode(pair, n)) == pair, [&] {
            return "decode(encode(T,p)) != (T,p) for n=" + std::to_string(n) + " p=" + path->word();
          });
        }
      }
      out.expect(x_size == y_size, [&] {
        return "|X| = " + to_decimal(x_size) + " but |Y| = " + to_decimal(y_size) +
               " at n=" + std::to_string(n) + " i=" + std::to_string(i);
      });
    }
  }
  return out.report("encode_decode_bijection", {{"n_max", std::to_string(top)}});
}

CheckReport check_involution(const Context& ctx) {
  Outcome out;
  const unsigned top = std::min(ctx.n_max, kInvolutionCap);
  for (unsigned n = 1; n <= top; ++n) {
    const auto g = g_vector(q_factorial(n)).entries;
    for (std::size_t i = 0; i < g.size(); ++i) {
      Integer fixed = 0;
      Integer signed_total = 0;
      DecoratedStream ys(n, i);
      while (auto p = ys.next()) {
        const DecoratedBallotPath image = involution(*p);
        out.expect(involution(image) == *p,
                   [&] { return "iota(iota(p)) != p for " + p->to_string(); });
        signed_total += (p->decorated_count() % 2 == 0) ? 1 : -1;
        if (image == *p) {
          ++fixed;
          out.expect(p->decorated_count() == 0 && p->active_valleys().empty(),
                     [&] { return "fixed point with an active valley: " + p->to_string(); });
        } else {
          out.expect(image.decorated_count() % 2 != p->decorated_count() % 2,
                     [&] { return "iota keeps the sign of " + p->to_string(); });
        }
      }
      const std::string where = "n=" + std::to_string(n) + " i=" + std::to_string(i);
      out.expect(fixed == g[i], [&] {
        return where + ": " + to_decimal(fixed) + " fixed points, g_i = " + to_decimal(g[i]);
      });
      out.expect(signed_total == g[i], [&] {
        return where + ": signed count " + to_decimal(signed_total) + ", g_i = " + to_decimal(g[i]);
      });
    }
  }
  return out.report("involution_sign_reversing", {{"n_max", std::to_string(top)}});
}

CheckReport check_fixed_point_methods(const Context& ctx) {
  Outcome out;
  const unsigned top = std::min(ctx.n_max, ctx.options.fixed_point_limit);
  for (unsigned n = 1; n <= top; ++n)
    for (std::size_t i = 0; 2 * i <= decorated_length(n); ++i) {
      const Integer a = g_by_fixed_points(n, i);
      const Integer b = g_by_fixed_points_filtered(n, i);
      out.expect(a == b, [&] {
        return "n=" + std::to_string(n) + " i=" + std::to_string(i) + ": segment composition " +
               to_decimal(a) + ", ballot filtering " + to_decimal(b);
      });
    }
  Params params{{"n_max", std::to_string(top)}};
  if (ctx.n_max > top)
    params.emplace_back("skipped", "n > " + std::to_string(ctx.options.fixed_point_limit));
  return out.report("fixed_point_methods", std::move(params));
}

CheckReport check_gtable_agreement(const Context& ctx) {
  Outcome out;
  const GTable poly = gtable(ctx.n_max, Provenance::Poly);
  for (auto p : {Provenance::Recurrence, Provenance::AltSum}) {
    const GTable other = gtable(ctx.n_max, p);
    for (const auto& [n, row] : poly.rows)
      out.expect_equal(std::string(provenance_name(p)) + " row n=" + std::to_string(n), row,
                       other.rows.at(n));
  }
  const unsigned fp_top = std::min(ctx.n_max, ctx.options.fixed_point_limit);
  const GTable fixed = gtable(fp_top, Provenance::FixedPoint);
  for (const auto& [n, row] : fixed.rows)
    out.expect_equal("fixedpoint row n=" + std::to_string(n), poly.rows.at(n), row);
  for (const auto& [n, row] : poly.rows)
    out.expect(row.size() == decorated_length(n) / 2 + 1,
               [&] { return "row n=" + std::to_string(n) + " has the wrong length"; });
  Params params{{"n_max", std::to_string(ctx.n_max)},
                {"provenances", "poly,recurrence,altsum,fixedpoint"},
                {"fixedpoint_n_max", std::to_string(fp_top)}};
  if (ctx.n_max > fp_top)
    params.emplace_back("fixedpoint", "skipped above n=" + std::to_string(fp_top));
  return out.report("gtable_agreement", std::move(params));
}

CheckReport check_table1(const Context& ctx) {
  Outcome out;
  const auto& reference = reference_g_table();
  const unsigned top = std::min<unsigned>(ctx.n_max, static_cast<unsigned>(reference.size()));
  const GTable poly = gtable(top, Provenance::Poly);
  for (unsigned n = 1; n <= top; ++n) {
    std::vector<Integer> expected(reference[n - 1].begin(), reference[n - 1].end());
    const auto& row = poly.rows.at(n);
    out.expect(row.size() == expected.size(), [&] {
      return "row n=" + std::to_string(n) + " has " + std::to_string(row.size()) + " entries";
    });
    out.expect_equal("row n=" + std::to_string(n), expected, row);
  }
  return out.report("table1_match", {{"rows", std::to_string(top)}});
}

struct Registered {
  const char* name;
  CheckReport (*run)(const Context&);
};

constexpr Registered kRegistry[] = {
    {"polyring_roundtrip", check_polyring_roundtrip},
    {"gamma_multiplicative", check_gamma_multiplicative},
    {"g_not_multiplicative", check_g_not_multiplicative},
    {"unimodal_iff_g_nonnegative", check_unimodal_iff_g_nonnegative},
    {"qbinomial_factorial_identity", check_qbinomial_identity},
    {"fibonacci_vs_enumeration", check_fibonacci_enumeration},
    {"lucas_vs_enumeration", check_lucas_enumeration},
    {"specialize_q", check_specialize_q},
    {"matching_models_gamma", check_matching_gamma},
    {"fibonacci_product", check_fibonacci_product},
    {"complement_involution", check_complement},
    {"lucanomial_models", check_lucanomial_enumeration},
    {"basis_matrix_unitriangular", check_basis_matrix},
    {"g_from_gamma", check_g_from_gamma},
    {"alternating_sums", check_alternating_sums},
    {"encode_decode_bijection", check_bijection},
    {"involution_sign_reversing", check_involution},
    {"fixed_point_methods", check_fixed_point_methods},
    {"gtable_agreement", check_gtable_agreement},
    {"table1_match", check_table1},
};

CheckReport run_guarded(const Registered& check, const Context& ctx) {
  try {
    return check.run(ctx);
  } catch (const std::exception& e) {
    return CheckReport{check.name, {}, CheckStatus::Fail, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& c : kRegistry) out.emplace_back(c.name);
  return out;
}

std::vector<CheckReport> check_all(unsigned n_max, const CheckOptions& options) {
  if (n_max == 0) throw std::invalid_argument("check_all: n_max must be at least 1");
  const Context ctx{n_max, options};
  std::vector<CheckReport> reports;
  if (!options.parallel) {
    for (const auto& c : kRegistry) reports.push_back(run_guarded(c, ctx));
    return reports;
  }
  std::vector<std::future<CheckReport>> pending;
  for (const auto& c : kRegistry)
    pending.push_back(std::async(std::launch::async, [&ctx, &c] { return run_guarded(c, ctx); }));
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

}  // namespace gammavec
