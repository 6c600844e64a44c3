#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammavec/ballot.hpp"
#include "gammavec/matchgen.hpp"
#include "gammavec/polyring.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gammavec;
using support::to_counts;

namespace {

std::vector<std::string> drain(BallotStream s) {
  std::vector<std::string> out;
  while (auto p = s.next()) out.push_back(p->word());
  return out;
}

std::string exception_text(const std::string& word) {
  try {
    DecoratedBallotPath::parse(word);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

std::vector<DecoratedBallotPath> all_decorated(unsigned n, std::size_t norths) {
  std::vector<DecoratedBallotPath> out;
  auto s = decorated_paths(n, norths);
  while (auto p = s.next()) out.push_back(*p);
  return out;
}

}  // namespace

TEST_CASE("BallotPath validation") {
  CHECK(BallotPath::is_ballot("ENENEE"));
  CHECK_FALSE(BallotPath::is_ballot("NE"));
  CHECK_THROWS_AS(BallotPath("EXN"), std::invalid_argument);
  CHECK_THROWS_AS(BallotPath("EENNN"), std::invalid_argument);
  CHECK(BallotPath("EENN").norths() == 2);
}

TEST_CASE("ballot_count") {
  CHECK(ballot_count(6, 2, 0) == 9);
  CHECK(ballot_count(6, 3, 0) == 5);
  CHECK(ballot_count(6, 2, 1) == 3);
  for (std::size_t d = 0; d <= 30; ++d)
    for (std::size_t j = 0; 2 * j <= d; ++j) CHECK(ballot_count(d, j, j) == 1);
}

TEST_CASE("ballot_count agrees with exhaustive ballot words") {
  for (unsigned d = 0; d <= 14; ++d)
    for (unsigned i = 0; 2 * i <= d; ++i)
      for (unsigned j = 0; j <= i; ++j) {
        CAPTURE(d);
        CAPTURE(i);
        CAPTURE(j);
        const auto expected = oracle::ballot_words(d - 2 * j, i - j).size();
        CHECK(ballot_count(d, i, j) == static_cast<long>(expected));
      }
}

TEST_CASE("ballot_enumerate") {
  const auto six_two = drain(ballot_enumerate(6, 2));
  CHECK(six_two.size() == 9);
  CHECK(six_two.front() == "EEEENN");
  CHECK(std::find(six_two.begin(), six_two.end(), "ENENEE") != six_two.end());
  const auto east = drain(ballot_enumerate(5, 0));
  REQUIRE(east.size() == 1);
  CHECK(east[0] == "EEEEE");
  CHECK(drain(ballot_enumerate(5, 3)).empty());
  for (unsigned len = 0; len <= 14; ++len)
    for (unsigned k = 0; k <= len; ++k) {
      CAPTURE(len);
      CAPTURE(k);
      CHECK(drain(ballot_enumerate(len, k)) == oracle::ballot_words(len, k));
    }
  auto s = ballot_enumerate(8, 3);
  const auto first = drain(s);
  s.reset();
  CHECK(drain(s) == first);
}

TEST_CASE("basis_matrix") {
  const auto b6 = basis_matrix(6);
  const long expected[4][4] = {{1, 0, 0, 0}, {5, 1, 0, 0}, {9, 3, 1, 0}, {5, 2, 1, 1}};
  REQUIRE(b6.dim == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(b6.at(i, j) == expected[i][j]);
  for (std::size_t d = 0; d <= 60; ++d) {
    const auto b = basis_matrix(d);
    CHECK(b.is_unit_lower_triangular());
    const auto inv = b.inverse();
    CHECK(inv.is_unit_lower_triangular());
    const auto id = b * inv;
    for (std::size_t i = 0; i < b.dim; ++i)
      for (std::size_t j = 0; j < b.dim; ++j) CHECK(id.at(i, j) == (i == j ? 1 : 0));
  }
}

TEST_CASE("g_from_gamma") {
  const auto g = g_from_gamma(SymVector::make(VectorKind::Gamma, 6, {1, -3, 2, 0}));
  CHECK(g.kind == VectorKind::G);
  CHECK(to_counts(g.entries) == oracle::Counts{1, 2, 2, 1});
  CHECK(to_counts(g_from_gamma(SymVector::make(VectorKind::Gamma, 6, {1, -5, 6, 0})).entries) ==
        oracle::Counts{1, 0, 0, 1});
  for (std::size_t d = 0; d <= 12; ++d) {
    std::vector<Integer> unit(d / 2 + 1, 0);
    unit[0] = 1;
    const auto col = g_from_gamma(SymVector::make(VectorKind::Gamma, d, unit));
    const auto b = basis_matrix(d);
    for (std::size_t i = 0; i < b.dim; ++i) CHECK(col.entries[i] == b.at(i, 0));
  }
  for (unsigned n = 1; n <= 10; ++n) {
    for (const auto& h : {q_factorial(n), distinct_parts_product(n)})
      CHECK(g_from_gamma(gamma_vector(h)) == g_vector(h));
    for (unsigned k = 0; k <= n; ++k)
      CHECK(g_from_gamma(gamma_vector(q_binomial(n, k))) == g_vector(q_binomial(n, k)));
  }
}

TEST_CASE("anchors") {
  CHECK(anchors(6) == std::set<std::size_t>{1, 3, 6, 10, 15});
  CHECK(anchors(2) == std::set<std::size_t>{1});
  CHECK(anchors(4) == std::set<std::size_t>{1, 3, 6});
  CHECK(decorated_length(6) == 15);
}

TEST_CASE("active_valleys") {
  const auto fig = DecoratedBallotPath::parse("E|en|ENE|NEEE|enEEN");
  CHECK(fig.active_valleys().size() == 4);
  CHECK(active_valleys(BallotPath(std::string(10, 'E')), 5).empty());
  const auto small = active_valleys(BallotPath("EEN"), 3);
  REQUIRE(small.size() == 1);
  CHECK(small[0] == 2);
  // The EN whose vertex is the anchor 6 is not active.
  CHECK(active_valleys(BallotPath("EEEEEENEEN"), 5) == std::vector<std::size_t>{9});
}

TEST_CASE("active_valleys agree with the brute-force definition") {
  for (unsigned n = 2; n <= 5; ++n) {
    const auto d = static_cast<unsigned>(decorated_length(n));
    for (unsigned i = 0; 2 * i <= d; ++i)
      for (const auto& w : oracle::ballot_words(d, i)) {
        std::vector<std::size_t> expected;
        for (std::size_t t = 1; t < w.size(); ++t)
          if (w[t - 1] == 'E' && w[t] == 'N' && !oracle::is_anchor(t, n)) expected.push_back(t);
        CHECK(active_valleys(BallotPath(w), n) == expected);
      }
  }
}

TEST_CASE("decorated path parsing and diagnostics") {
  const auto p = DecoratedBallotPath::parse("E|en|ENE|NEEE|enEEN");
  CHECK(p.n() == 6);
  CHECK(p.to_string() == "E|en|ENE|NEEE|enEEN");
  CHECK(p.decorated_count() == 2);
  CHECK(p.shape().word() == "EENENENEEEENEEN");
  CHECK(DecoratedBallotPath::parse("").n() == 1);
  CHECK(exception_text("E|ne").find("not paired") != std::string::npos);
  CHECK(exception_text("E|eE").find("followed") != std::string::npos);
  CHECK(exception_text("e|nE").find("anchor") != std::string::npos);
  CHECK(exception_text("N|EE").find("ballot") != std::string::npos);
  CHECK(exception_text("E|EEE").find("length") != std::string::npos);
  CHECK_THROWS_AS(DecoratedBallotPath(3, "EEX"), std::invalid_argument);
}

TEST_CASE("decode and encode on the worked examples") {
  const auto p = DecoratedBallotPath::parse("E|en|ENE|NEEE|enEEN");
  const auto pair = decode(p);
  REQUIRE(pair.matchings.size() == 5);
  for (unsigned k = 1; k <= 5; ++k) {
    CAPTURE(k);
    CHECK(pair.matchings[k - 1].nodes == k);
    const std::uint64_t expected = (k == 2 || k == 5) ? 1 : 0;
    CHECK(pair.matchings[k - 1].edges == expected);
  }
  CHECK(pair.path.word() == "EENENEEEEEN");
  CHECK(encode(pair, 6) == p);

  const auto plain = DecoratedBallotPath::parse("E|EE|NEN|EENN|EEEEE");
  const auto plain_pair = decode(plain);
  CHECK(plain_pair.edge_count() == 0);
  CHECK(plain_pair.path.word() == "EEENENEENNEEEEE");

  const auto q = DecoratedBallotPath::parse("E|EE|Nen|EENN|enenE");
  const auto qp = decode(q);
  CHECK(qp.matchings[2].edges == 0b10);
  CHECK(qp.matchings[4].edges == 0b101);
  CHECK(qp.path.word() == "EEENEENNE");
  CHECK(encode(qp, 6) == q);
}

TEST_CASE("encode rejects inconsistent pairs") {
  FibotorialPair bad{{Matching{GraphKind::Path, 1, 0}}, BallotPath("EE")};
  CHECK_THROWS_AS(encode(bad, 3), std::invalid_argument);
  FibotorialPair wrong_length{{Matching{GraphKind::Path, 1, 0}, Matching{GraphKind::Path, 2, 0}},
                              BallotPath("EE")};
  CHECK_THROWS_AS(encode(wrong_length, 3), std::invalid_argument);
}

TEST_CASE("involution on the worked example") {
  const auto p = DecoratedBallotPath::parse("E|EE|Nen|EENN|enenE");
  CHECK(involution(p).to_string() == "E|EE|NEN|EENN|enenE");
  CHECK(involution(involution(p)) == p);
  const auto east = DecoratedBallotPath::parse("E|EE|EEE");
  CHECK(involution(east) == east);
}

TEST_CASE("decorated stream matches the brute-force count of Y") {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto expected = oracle::decorated_paths_by_norths(n);
    oracle::Counts got;
    const auto d = decorated_length(n);
    for (std::size_t i = 0; 2 * i <= d; ++i) {
      std::set<std::string> seen;
      for (const auto& p : all_decorated(n, i)) {
        CHECK(seen.insert(p.word()).second);
        CHECK(p.norths() == i);
      }
      got.push_back(static_cast<long long>(seen.size()));
    }
    CAPTURE(n);
    CHECK(oracle::trimmed(got) == oracle::trimmed(expected));
  }
}

TEST_CASE("exhaustive bijection and involution for n <= 5") {
  for (unsigned n = 1; n <= 5; ++n) {
    const auto d = decorated_length(n);
    for (std::size_t i = 0; 2 * i <= d; ++i) {
      std::size_t fixed = 0;
      for (const auto& p : all_decorated(n, i)) {
        const auto pair = decode(p);
        CHECK(encode(pair, n) == p);
        CHECK(pair.edge_count() == p.decorated_count());
        CHECK(pair.path.norths() + pair.edge_count() == i);
        const auto image = involution(p);
        CHECK(involution(image) == p);
        if (image == p) {
          ++fixed;
          CHECK(p.decorated_count() == 0);
          CHECK(p.active_valleys().empty());
        } else {
          CHECK((image.decorated_count() + p.decorated_count()) % 2 == 1);
        }
      }
      CAPTURE(n);
      CAPTURE(i);
      CHECK(Integer(static_cast<long>(fixed)) == g_vector(q_factorial(n)).entries[i]);
    }
  }
}

TEST_CASE("property: bijection on random decorated paths for n = 6, 7") {
  for (unsigned n : {6u, 7u}) {
    const auto d = decorated_length(n);
    for (int trial = 0; trial < 300; ++trial) {
      // Random ballot shape via rejection, then a random subset of its
      // active valleys (two valleys never share a letter).
      std::string w;
      do {
        w.clear();
        for (std::size_t s = 0; s < d; ++s) w += support::uniform(0, 2) == 0 ? 'N' : 'E';
      } while (!oracle::is_ballot_word(w));
      const auto valleys = active_valleys(BallotPath(w), n);
      for (auto t : valleys) {
        if (support::uniform(0, 1)) {
          w[t - 1] = 'e';
          w[t] = 'n';
        }
      }
      const DecoratedBallotPath p(n, w);
      CHECK(encode(decode(p), n) == p);
      CHECK(involution(involution(p)) == p);
    }
  }
}

TEST_CASE("fixed points") {
  auto s = fixed_points(4, 1);
  std::set<std::string> words;
  while (auto p = s.next()) words.insert(p->to_string());
  CHECK(words == std::set<std::string>{"E|NE|EEE", "E|EE|NEE"});
  for (unsigned n = 1; n <= 7; ++n) CHECK(g_by_fixed_points(n, 0) == 1);
  CHECK(g_by_fixed_points(6, 4) == 20);
  for (unsigned n = 1; n <= 6; ++n) {
    const auto d = decorated_length(n);
    for (std::size_t i = 0; 2 * i <= d; ++i) {
      std::set<std::string> got;
      auto t = fixed_points(n, i);
      while (auto p = t.next()) got.insert(p->word());
      const auto expected = oracle::no_active_valley_words(n, static_cast<unsigned>(i));
      CHECK(got == std::set<std::string>(expected.begin(), expected.end()));
      CHECK(g_by_fixed_points_filtered(n, i) == static_cast<long>(expected.size()));
    }
  }
}

TEST_CASE("g_recurrence") {
  CHECK(to_counts(g_recurrence(5)) == oracle::Counts{1, 3, 5, 6, 5, 2});
  CHECK(to_counts(g_recurrence(2)) == oracle::Counts{1});
  for (unsigned n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(g_recurrence(n) == g_vector(q_factorial(n)).entries);
  }
  for (unsigned n = 1; n <= 7; ++n) {
    const auto rec = g_recurrence(n);
    for (std::size_t i = 0; i < rec.size(); ++i) CHECK(g_by_fixed_points(n, i) == rec[i]);
  }
}

TEST_CASE("signed_set_size and alternating_g") {
  const FamilyParams fact4{Family::QFactorial, 4, 0};
  CHECK(signed_set_size(fact4, 3, 0) == 5);
  CHECK(signed_set_size(fact4, 3, 1) == 6);
  CHECK(signed_set_size(fact4, 3, 2) == 2);
  CHECK(signed_set_size(fact4, 3, 3) == 0);
  CHECK(alternating_g(fact4)[3] == 1);
  const FamilyParams binom53{Family::QBinomial, 5, 3};
  CHECK(signed_set_size(binom53, 1, 0) - signed_set_size(binom53, 1, 1) == 0);
  for (auto family : {Family::QFactorial, Family::DistinctParts, Family::QBinomial}) {
    for (unsigned n = 1; n <= 9; ++n) {
      const unsigned k_max = family == Family::QBinomial ? n : 0;
      for (unsigned k = 0; k <= k_max; ++k) {
        const FamilyParams fp{family, n, k};
        CHECK(signed_set_size(fp, 0, 0) == 1);
        const auto alt = alternating_g(fp);
        CHECK(alt == g_vector(family_polynomial(fp)).entries);
        for (const auto& x : alt) CHECK(x >= 0);
        CHECK(family_degree(fp) == *palindromic_degree(family_polynomial(fp)));
      }
    }
  }
}
