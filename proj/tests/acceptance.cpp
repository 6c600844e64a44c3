// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. The CLI path is passed as the first argument.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "gammavec/ballot.hpp"
#include "gammavec/harness.hpp"
#include "gammavec/matchgen.hpp"
#include "gammavec/polyring.hpp"

using namespace gammavec;

namespace {

using Row = std::vector<long>;

const std::vector<Row> kTable1 = {
    {1},
    {1},
    {1, 1},
    {1, 2, 2, 1},
    {1, 3, 5, 6, 5, 2},
    {1, 4, 9, 15, 20, 22, 19, 11},
    {1, 5, 14, 29, 49, 71, 90, 100, 96, 76, 42},
    {1, 6, 20, 49, 98, 169, 259, 359, 454, 525, 553, 524, 433, 286, 100},
};

/// Collects the first few failure descriptions for one criterion.
struct Outcome {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
};

bool equal(const std::vector<Integer>& got, const Row& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i)
    if (got[i] != want[i]) return false;
  return true;
}

std::vector<Integer> trimmed(std::vector<Integer> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::vector<Integer> signed_counts(const std::vector<Integer>& counts) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < counts.size(); ++i) out.push_back(i % 2 ? -counts[i] : counts[i]);
  return out;
}

std::vector<Integer> convolve_counts(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Integer> stream_tally(MatchingStream s) {
  std::vector<Integer> out;
  while (auto m = s.next()) {
    if (out.size() <= m->edge_count()) out.resize(m->edge_count() + 1, 0);
    out[m->edge_count()] += 1;
  }
  return out;
}

std::string run_command(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome table1(const std::string& cli) {
  Outcome o;
  const auto t = gtable(8, Provenance::Poly);
  for (unsigned n = 1; n <= 8; ++n)
    o.expect(equal(t.rows.at(n), kTable1[n - 1]), "library row n=" + std::to_string(n));
  o.expect(t.rows.at(8)[14] == 100, "g_{8,14} = 100");

  int status = 0;
  const auto text = run_command("\"" + cli + "\" --format csv table 8", status);
  o.expect(status == 0, "cli exit status");
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  o.expect(line == "n,i,g", "csv header");
  std::vector<Row> parsed(8);
  while (std::getline(in, line)) {
    unsigned n = 0, i = 0;
    long g = 0;
    if (std::sscanf(line.c_str(), "%u,%u,%ld", &n, &i, &g) != 3 || n < 1 || n > 8) {
      o.expect(false, "csv line: " + line);
      continue;
    }
    auto& row = parsed[n - 1];
    o.expect(row.size() == i, "csv order at n=" + std::to_string(n));
    row.push_back(g);
  }
  for (unsigned n = 1; n <= 8; ++n)
    o.expect(parsed[n - 1] == kTable1[n - 1], "cli row n=" + std::to_string(n));
  return o;
}

Outcome worked_example() {
  Outcome o;
  const IntPolynomial h{1, 3, 5, 6, 5, 3, 1};
  o.expect(h == q_factorial(4), "[4]! coefficients");
  const auto g = g_vector(h);
  const auto gamma = gamma_vector(h);
  o.expect(equal(g.entries, {1, 2, 2, 1}), "g = (1,2,2,1)");
  o.expect(equal(gamma.entries, {1, -3, 2, 0}), "gamma = (1,-3,2,0)");
  const auto b = basis_matrix(6);
  const long displayed[4][4] = {{1, 0, 0, 0}, {5, 1, 0, 0}, {9, 3, 1, 0}, {5, 2, 1, 1}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      o.expect(b.at(i, j) == displayed[i][j],
               "B_6(" + std::to_string(i) + "," + std::to_string(j) + ")");
  // g_0 = 1*1, g_1 = 1*5 - 3*1, g_2 = 1*9 - 3*3 + 2*1, g_3 = 1*5 - 3*2 + 2*1 + 0*1
  const std::vector<Row> terms = {{1}, {5, -3}, {9, -9, 2}, {5, -6, 2, 0}};
  for (std::size_t i = 0; i < 4; ++i) {
    Integer sum = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      const Integer term = b.at(i, j) * gamma.entries[j];
      o.expect(term == terms[i][j], "term " + std::to_string(i) + "," + std::to_string(j));
      sum += term;
    }
    o.expect(sum == g.entries[i], "scalar identity for g_" + std::to_string(i));
  }
  o.expect(g_from_gamma(gamma) == g, "B_6 gamma = g");
  return o;
}

Outcome matching_models() {
  Outcome o;
  for (unsigned n = 1; n <= 10; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    std::vector<Integer> fib{1}, luc{1};
    for (unsigned k = 1; k < n; ++k) fib = convolve_counts(fib, stream_tally(path_matchings(k)));
    for (unsigned k = 1; k <= n; ++k) luc = convolve_counts(luc, stream_tally(cycle_matchings(k)));
    o.expect(fib == fibotorial_counts(n), "fibotorial enumeration" + tag);
    o.expect(luc == lucatorial_counts(n), "lucatorial enumeration" + tag);
    o.expect(signed_counts(fib) == trimmed(gamma_vector(q_factorial(n)).entries),
             "fibotorial vs gamma([n]!)" + tag);
    o.expect(signed_counts(luc) == trimmed(gamma_vector(distinct_parts_product(n)).entries),
             "lucatorial vs gamma(prod(1+q^j))" + tag);
    for (unsigned k = 0; k <= n; ++k) {
      const std::string tk = tag + " k=" + std::to_string(k);
      std::vector<Integer> tally;
      auto s = lucanomial_enumerate(n, k);
      while (auto m = s.next()) {
        if (tally.size() <= m->edge_count()) tally.resize(m->edge_count() + 1, 0);
        tally[m->edge_count()] += 1;
      }
      o.expect(tally == lucanomial_counts(n, k), "lucanomial enumeration" + tk);
      o.expect(signed_counts(tally) == trimmed(gamma_vector(q_binomial(n, k)).entries),
               "lucanomial vs gamma(q-binomial)" + tk);
    }
  }
  return o;
}

Outcome small_polynomials() {
  Outcome o;
  const auto f6 = fibonacci_poly(6);
  o.expect(f6.weight == 6 && equal(f6.counts, {1, 5, 6, 1}), "F_6 = s^6+5s^4t+6s^2t^2+t^3");
  std::size_t count = 0;
  for (auto s = path_matchings(6); s.next();) ++count;
  o.expect(count == 13, "13 path matchings");
  const auto l4 = lucas_poly(4);
  o.expect(l4.weight == 4 && equal(l4.counts, {1, 4, 2}), "L_4 = s^4+4s^2t+2t^2");
  count = 0;
  for (auto s = cycle_matchings(4); s.next();) ++count;
  o.expect(count == 7, "7 cycle matchings");
  o.expect(equal(lucanomial_counts(5, 3), {1, 5, 7, 2}), "lucanomial (5,3) = (1,5,7,2)");
  count = 0;
  for (auto s = lucanomial_enumerate(5, 3); s.next();) ++count;
  o.expect(count == 15, "15 lucanomial objects");
  return o;
}

Outcome involution_suite() {
  Outcome o;
  for (unsigned n = 1; n <= 5; ++n) {
    const auto g = g_vector(q_factorial(n));
    const auto d = decorated_length(n);
    for (std::size_t i = 0; 2 * i <= d; ++i) {
      const std::string tag = " n=" + std::to_string(n) + " i=" + std::to_string(i);
      long fixed = 0;
      auto s = decorated_paths(n, i);
      while (auto p = s.next()) {
        const auto image = involution(*p);
        o.expect(involution(image) == *p, "involution squared" + tag + " " + p->to_string());
        if (image == *p) {
          ++fixed;
          o.expect(p->decorated_count() == 0 && p->active_valleys().empty(),
                   "fixed point without valleys" + tag);
        } else {
          o.expect((image.decorated_count() + p->decorated_count()) % 2 == 1,
                   "parity flip" + tag + " " + p->to_string());
        }
      }
      o.expect(g.entries[i] == fixed, "fixed points = g" + tag);
    }
  }
  return o;
}

Outcome specializations() {
  Outcome o;
  for (unsigned n = 1; n <= 20; ++n) {
    o.expect(specialize_q(fibonacci_poly(n)) == q_int(n + 1), "F_n(1+q,-q) n=" + std::to_string(n));
    o.expect(specialize_q(lucas_poly(n)) == IntPolynomial{1} + IntPolynomial::monomial(1, n),
             "L_n(1+q,-q) n=" + std::to_string(n));
  }
  Integer product = 1, a = 0, b = 1;  // Fibonacci numbers with Fib_1 = Fib_2 = 1
  for (unsigned n = 1; n <= 15; ++n) {
    product *= b;
    const Integer next = a + b;
    a = b;
    b = next;
    o.expect(gamma_poly_eval(gamma_vector(q_factorial(n)), -1) == product,
             "gamma(-1) n=" + std::to_string(n));
  }
  return o;
}

Outcome alternating_sums() {
  Outcome o;
  for (auto family : {Family::QFactorial, Family::DistinctParts, Family::QBinomial}) {
    for (unsigned n = 1; n <= 9; ++n) {
      const unsigned k_max = family == Family::QBinomial ? n : 0;
      for (unsigned k = 0; k <= k_max; ++k) {
        const FamilyParams fp{family, n, k};
        const auto d = family_degree(fp);
        const auto direct = g_vector(family_polynomial(fp)).entries;
        const std::string tag = " family=" + std::to_string(static_cast<int>(family)) +
                                " n=" + std::to_string(n) + " k=" + std::to_string(k);
        for (std::size_t i = 0; i <= d / 2; ++i) {
          Integer sum = 0;
          for (std::size_t j = 0; j <= i; ++j) {
            const Integer term = signed_set_size(fp, i, j);
            sum += j % 2 ? -term : term;
          }
          o.expect(i < direct.size() && sum == direct[i], "alternating sum" + tag);
          o.expect(sum >= 0, "nonnegative" + tag);
        }
      }
    }
  }
  return o;
}

Outcome mutual_oracle() {
  Outcome o;
  const auto poly = gtable(11, Provenance::Poly);
  const auto rec = gtable(11, Provenance::Recurrence);
  const auto alt = gtable(11, Provenance::AltSum);
  for (unsigned n = 1; n <= 11; ++n) {
    o.expect(poly.rows.at(n) == rec.rows.at(n), "poly vs recurrence n=" + std::to_string(n));
    o.expect(poly.rows.at(n) == alt.rows.at(n), "poly vs altsum n=" + std::to_string(n));
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance PATH_TO_CLI\n";
    return 2;
  }
  const std::string cli = argv[1];
  struct Criterion {
    int id;
    std::string title;
    double limit_seconds;  // 0 for none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "table of g-vectors of [n]! for n <= 8", 5, [&] { return table1(cli); }},
      {2, "worked example for [4]! and B_6", 0, worked_example},
      {3, "matching models agree with gamma-vectors for n <= 10", 60, matching_models},
      {4, "small Fibonacci, Lucas and lucanomial polynomials", 0, small_polynomials},
      {5, "involution suite on Y for n <= 5", 0, involution_suite},
      {6, "specialization identities", 0, specializations},
      {7, "alternating sums for all three families, n <= 9", 0, alternating_sums},
      {8, "poly, recurrence and altsum tables agree through n = 11", 120, mutual_oracle},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds)
      o.failures.push_back("runtime " + std::to_string(secs) + " s over limit");
    const bool ok = o.failures.empty();
    all_ok = all_ok && ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << " ("
         << secs << " s";
    if (c.limit_seconds > 0) line << ", limit " << c.limit_seconds << " s";
    line << ")";
    for (const auto& f : o.failures) line << "\n    " << f;
    std::cout << line.str() << std::endl;
  }
  return all_ok ? 0 : 1;
}
