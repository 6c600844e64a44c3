#pragma once

// Ballot paths, the gamma-to-g change of basis, and decorated ballot paths
// with the sign-reversing involution whose fixed points count the g-vector
// of [n]!.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gammavec/integer.hpp"
#include "gammavec/matchgen.hpp"
#include "gammavec/polyring.hpp"

namespace gammavec {

/// Word over {E, N} in which no prefix has more N than E.
class BallotPath {
 public:
  BallotPath() = default;
  /// Throws std::invalid_argument on a foreign letter or a ballot violation.
  explicit BallotPath(std::string word);

  static bool is_ballot(std::string_view word);

  const std::string& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  std::size_t norths() const;

  friend bool operator==(const BallotPath&, const BallotPath&) = default;
  friend auto operator<=>(const BallotPath&, const BallotPath&) = default;

 private:
  std::string word_;
};

/// Ballot words with `length` steps and `norths` North steps, in
/// lexicographic order with E < N. Restartable.
class BallotStream {
 public:
  BallotStream(std::size_t length, std::size_t norths);
  std::optional<BallotPath> next();
  void reset();

 private:
  bool advance();

  std::size_t length_;
  std::size_t norths_;
  std::string current_;
  bool started_ = false;
  bool done_ = false;
};

BallotStream ballot_enumerate(std::size_t length, std::size_t norths);

/// Ballot words of the given length and North count:
/// C(length, norths) - C(length, norths - 1), or zero when none exist.
Integer ballot_paths(std::int64_t length, std::int64_t norths);

/// B_d(i, j) = C(d-2j, i-j) - C(d-2j, i-j-1).
Integer ballot_count(std::size_t d, std::size_t i, std::size_t j);

/// The (d/2+1)^2 change-of-basis matrix taking gamma-coordinates to
/// g-coordinates.
struct BasisMatrix {
  std::size_t degree = 0;
  std::size_t dim = 0;
  std::vector<Integer> entries;  // row-major

  Integer& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
  bool is_unit_lower_triangular() const;
  /// Integer inverse by forward substitution. Requires unit lower triangular.
  BasisMatrix inverse() const;
  BasisMatrix operator*(const BasisMatrix& other) const;
};

BasisMatrix basis_matrix(std::size_t d);

/// g_i = sum_j gamma_j B_d(i, j). Throws std::invalid_argument unless the
/// input is a gamma-vector; the result keeps the input's degree and shift.
SymVector g_from_gamma(const SymVector& gamma);
/// Same product against an explicit matrix, whose degree must match.
SymVector g_from_gamma(const SymVector& gamma, const BasisMatrix& basis);

// Decorated ballot paths -----------------------------------------------------

/// C(n, 2): the path length for the [n]! family.
std::size_t decorated_length(unsigned n);

/// Vertices k(k+1)/2 for 1 <= k <= n-1. Throws std::invalid_argument for n == 0.
std::set<std::size_t> anchors(unsigned n);

/// Steps t (1-based) with word[t] = E, word[t+1] = N whose middle vertex t is
/// not an anchor. Throws std::invalid_argument if |p| != C(n, 2).
std::vector<std::size_t> active_valleys(const BallotPath& p, unsigned n);

/// A ballot path of length C(n,2) over {E, N, e, n} in which lowercase
/// letters only appear as "en" pairs sitting at active valleys.
class DecoratedBallotPath {
 public:
  /// Word without bars. Throws std::invalid_argument naming the violated
  /// invariant if the word is malformed.
  DecoratedBallotPath(unsigned n, std::string word);

  /// Reads the canonical form with '|' at every anchor, e.g.
  /// "E|en|ENE|NEEE|enEEN". n is one more than the number of segments; the
  /// empty string is the single path for n = 1.
  static DecoratedBallotPath parse(std::string_view text);

  unsigned n() const { return n_; }
  const std::string& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  std::size_t norths() const;
  std::size_t decorated_count() const;
  /// The underlying ballot path with every letter uppercased.
  BallotPath shape() const;
  std::vector<std::size_t> active_valleys() const;
  /// Canonical text with bars at the anchors.
  std::string to_string() const;

  friend bool operator==(const DecoratedBallotPath&, const DecoratedBallotPath&) = default;

 private:
  unsigned n_;
  std::string word_;
};

/// A tuple of path matchings on 1, ..., n-1 nodes together with a ballot
/// path of length C(n,2) - 2j, where j is the total number of edges.
struct FibotorialPair {
  std::vector<Matching> matchings;
  BallotPath path;

  unsigned edge_count() const;
  friend bool operator==(const FibotorialPair&, const FibotorialPair&) = default;
};

/// Splits off the decorated valleys as matching edges and deletes them from
/// the word.
FibotorialPair decode(const DecoratedBallotPath& p);
/// Inverse of decode. Throws std::invalid_argument if the matchings are not
/// path matchings on 1..n-1 nodes or the path has the wrong length.
DecoratedBallotPath encode(const FibotorialPair& pair, unsigned n);

/// Toggles the case of the first active valley; paths without one are fixed.
DecoratedBallotPath involution(const DecoratedBallotPath& p);

/// Y_{C(n,2), i}: every decorated path with i North steps. Ballot shapes in
/// lexicographic order, decorations in increasing subset-mask order over the
/// active valleys. Restartable.
class DecoratedStream {
 public:
  DecoratedStream(unsigned n, std::size_t norths);
  std::optional<DecoratedBallotPath> next();
  void reset();

 private:
  bool load_shape();

  unsigned n_;
  BallotStream shapes_;
  std::string shape_;
  std::vector<std::size_t> valleys_;
  std::uint64_t mask_ = 0;
  bool pending_ = false;
};

DecoratedStream decorated_paths(unsigned n, std::size_t norths);

/// Decorated paths with i North steps and no active valley, i.e. every
/// segment between anchors has the form N^a E^b. Built segment by segment
/// with a running ballot check, in lexicographic order. Restartable.
class FixedPointStream {
 public:
  FixedPointStream(unsigned n, std::size_t norths);
  std::optional<DecoratedBallotPath> next();
  void reset();

 private:
  bool descend(std::size_t from_segment);

  unsigned n_;
  std::size_t norths_;
  std::vector<std::size_t> segment_norths_;  // a_k for segment k = 1..n-1
  bool started_ = false;
  bool done_ = false;
};

FixedPointStream fixed_points(unsigned n, std::size_t i);

/// Count of FixedPointStream.
Integer g_by_fixed_points(unsigned n, std::size_t i);
/// Same count by filtering every ballot path of length C(n,2).
Integer g_by_fixed_points_filtered(unsigned n, std::size_t i);

/// g-vector of [n]! row by row from the window-sum recurrence over the
/// previous row. Throws std::invalid_argument for n == 0.
std::vector<Integer> g_recurrence(unsigned n);

// Signed sets behind the alternating sums -------------------------------------

enum class Family { QFactorial, DistinctParts, QBinomial };

struct FamilyParams {
  Family family = Family::QFactorial;
  unsigned n = 1;
  unsigned k = 0;  // q-binomial only
};

/// Palindromic degree of the family member: C(n,2), C(n+1,2) or k(n-k).
std::size_t family_degree(const FamilyParams& params);
/// The family polynomial itself.
IntPolynomial family_polynomial(const FamilyParams& params);
/// Unsigned matching counts by edge number (fibotorial, lucatorial or
/// lucanomial).
std::vector<Integer> family_matching_counts(const FamilyParams& params);

/// |M(j) x B_d(i, j)| where M(j) is the family's matchings with j edges.
Integer signed_set_size(const FamilyParams& params, std::size_t i, std::size_t j);
/// sum_j (-1)^j signed_set_size(i, j) for every 0 <= i <= d/2.
std::vector<Integer> alternating_g(const FamilyParams& params);
/// Same sum against an explicit change-of-basis matrix of the right degree.
std::vector<Integer> alternating_g(const FamilyParams& params, const BasisMatrix& basis);

}  // namespace gammavec
