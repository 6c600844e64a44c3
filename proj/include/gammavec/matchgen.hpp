#pragma once

// Matchings of paths and cycles (monomer-dimer tilings), the Fibonacci and
// Lucas polynomials they count, and the partition-based lucanomial model for
// q-binomial gamma-vectors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gammavec/integer.hpp"
#include "gammavec/polyring.hpp"

namespace gammavec {

enum class GraphKind { Path, Cycle };

/// Largest node count a Matching bitmask can hold.
inline constexpr unsigned kMaxMatchingNodes = 63;

/// A set of pairwise disjoint edges of an n-node path or cycle.
///
/// Path edge slot e joins nodes e and e+1 (slots 0..n-2). Cycle slots are
/// 0..n-1 with slot n-1 joining node n-1 back to node 0; the 2-cycle is a
/// multigraph with two parallel slots and the 1-cycle has no slots.
struct Matching {
  GraphKind kind = GraphKind::Path;
  unsigned nodes = 0;
  std::uint64_t edges = 0;

  static unsigned slot_count(GraphKind kind, unsigned nodes);
  /// True if `edges` only uses existing slots and no two edges share a node.
  bool is_valid() const;
  unsigned edge_count() const;
  /// Selected slot indices in increasing order.
  std::vector<unsigned> edge_slots() const;
  /// "[0,2]" style edge-index list.
  std::string to_string() const;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// All matchings of one graph, in increasing bitmask order. Restartable.
class MatchingStream {
 public:
  MatchingStream(GraphKind kind, unsigned nodes);
  std::optional<Matching> next();
  void reset();

 private:
  GraphKind kind_;
  unsigned nodes_;
  std::uint64_t limit_;
  std::uint64_t cursor_ = 0;
};

MatchingStream path_matchings(unsigned n);
MatchingStream cycle_matchings(unsigned n);

/// C(n-k, k): matchings of the n-node path with k edges.
Integer count_path_matchings(unsigned n, unsigned k);
/// Matchings of the n-node cycle with k edges: n/(n-k) C(n-k, k) for n >= 3,
/// with the 1- and 2-cycle conventions described on Matching.
Integer count_cycle_matchings(unsigned n, unsigned k);

/// A polynomial in s, t that is homogeneous when s has weight 1 and t weight 2:
/// sum_k counts[k] s^(weight - 2k) t^k.
struct BivariateCount {
  unsigned weight = 0;
  std::vector<Integer> counts;

  BivariateCount times_s() const;
  BivariateCount times_t() const;
  /// "s^6 + 5s^4t + 6s^2t^2 + t^3"
  std::string to_string() const;

  /// Weights must match. Throws std::invalid_argument otherwise.
  friend BivariateCount operator+(const BivariateCount& a, const BivariateCount& b);
  friend BivariateCount operator*(const BivariateCount& a, const BivariateCount& b);
  /// Exact quotient; throws std::logic_error when the division is not exact.
  BivariateCount divide_exact(const BivariateCount& divisor) const;

  friend bool operator==(const BivariateCount&, const BivariateCount&) = default;
};

/// F_n(s,t) from F_n = s F_{n-1} + t F_{n-2}, F_0 = 1, F_1 = s.
BivariateCount fibonacci_poly(unsigned n);
/// L_n(s,t) from the same recurrence with L_1 = s, L_2 = s^2 + 2t.
/// Throws std::invalid_argument for n == 0.
BivariateCount lucas_poly(unsigned n);

/// Substitutes s = 1+q, t = -q.
IntPolynomial specialize_q(const BivariateCount& p);
/// Substitutes s = 1, t = -z and returns the result as a gamma-vector of
/// palindromic degree p.weight.
SymVector specialize_gamma(const BivariateCount& p);

/// |T(n, i)|: (n-1)-tuples of path matchings on 1..n-1 nodes with i edges.
/// Throws std::invalid_argument for n == 0.
std::vector<Integer> fibotorial_counts(unsigned n);
/// |T'(n, i)|: n-tuples of cycle matchings on 1..n nodes with i edges.
/// Throws std::invalid_argument for n == 0.
std::vector<Integer> lucatorial_counts(unsigned n);

/// Weakly decreasing parts inside a box of parts.size() rows and `width`
/// columns.
struct Partition {
  std::vector<unsigned> parts;
  unsigned width = 0;

  unsigned rows() const { return static_cast<unsigned>(parts.size()); }
  unsigned size() const;
  bool fits_box() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Every partition in a rows x width box, in colex order (last part most
/// significant). Restartable.
class PartitionStream {
 public:
  PartitionStream(unsigned rows, unsigned width);
  std::optional<Partition> next();
  void reset();

 private:
  unsigned rows_;
  unsigned width_;
  std::vector<unsigned> current_;
  bool started_ = false;
  bool done_ = false;
};

PartitionStream partitions_in_box(unsigned rows, unsigned width);

/// The complement inside the box, read as a partition with `width` parts in
/// a width x rows box: part i is rows - #{j : parts_j >= width + 1 - i}.
/// Throws std::invalid_argument if the partition does not fit its box.
Partition complement(const Partition& lambda);

/// Strict matchings of a len-node path (node 0 covered) with k edges.
Integer strict_matching_counts(unsigned len, unsigned k);

/// One lucanomial matching: a partition plus a matching on each of its rows
/// and a strict matching on each part of its complement.
struct LucanomialMatching {
  Partition lambda;
  std::vector<Matching> rows;
  std::vector<Matching> columns;

  unsigned edge_count() const;
  std::string to_string() const;
};

/// |L(n, k, j)| for all j: lucanomial matchings over the k x (n-k) box.
/// Throws std::invalid_argument when k > n.
std::vector<Integer> lucanomial_counts(unsigned n, unsigned k);

/// Every lucanomial matching for (n, k). Partitions in colex order; within a
/// partition, row matchings are the more significant digits and every
/// component advances in bitmask order. Restartable.
class LucanomialStream {
 public:
  LucanomialStream(unsigned n, unsigned k);
  std::optional<LucanomialMatching> next();
  void reset();

 private:
  bool load_partition();

  unsigned rows_;
  unsigned width_;
  PartitionStream partitions_;
  Partition lambda_;
  std::vector<std::vector<Matching>> choices_;  // rows then columns
  std::vector<std::size_t> digits_;
  bool pending_ = false;
};

LucanomialStream lucanomial_enumerate(unsigned n, unsigned k);

/// {n}! = F_0 F_1 ... F_{n-1}
BivariateCount lucas_factorial(unsigned n);
/// {n choose k} = {n}! / ({k}! {n-k}!). Throws std::invalid_argument when k > n.
BivariateCount lucanomial(unsigned n, unsigned k);

/// Whether {m+n choose m} = F_n {m+n-1 choose m-1} + t F_{m-2} {m+n-1 choose n-1}
/// holds. Throws std::invalid_argument unless m >= 2 and n >= 1.
bool lucanomial_recurrence_check(unsigned m, unsigned n);

}  // namespace gammavec
