#include "gammavec/matchgen.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace gammavec {

namespace {

void trim_counts(std::vector<Integer>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<Integer> path_count_vector(unsigned nodes) {
  std::vector<Integer> v(nodes / 2 + 1);
  for (unsigned k = 0; k < v.size(); ++k) v[k] = count_path_matchings(nodes, k);
  return v;
}

std::vector<Integer> cycle_count_vector(unsigned nodes) {
  std::vector<Integer> v(nodes / 2 + 1);
  for (unsigned k = 0; k < v.size(); ++k) v[k] = count_cycle_matchings(nodes, k);
  return v;
}

std::vector<Integer> strict_count_vector(unsigned len) {
  std::vector<Integer> v(len / 2 + 1);
  for (unsigned k = 0; k < v.size(); ++k) v[k] = strict_matching_counts(len, k);
  return v;
}

std::vector<Matching> all_matchings(GraphKind kind, unsigned nodes) {
  std::vector<Matching> out;
  MatchingStream stream(kind, nodes);
  while (auto m = stream.next()) out.push_back(*m);
  return out;
}

std::vector<Matching> strict_matchings(unsigned len) {
  std::vector<Matching> out;
  for (auto& m : all_matchings(GraphKind::Path, len))
    if (len == 0 || (m.edges & 1u)) out.push_back(m);
  return out;
}

}  // namespace

// Matching --------------------------------------------------------------------

unsigned Matching::slot_count(GraphKind kind, unsigned nodes) {
  if (kind == GraphKind::Path) return nodes == 0 ? 0 : nodes - 1;
  return nodes == 1 ? 0 : nodes;
}

bool Matching::is_valid() const {
  if (nodes > kMaxMatchingNodes) return false;
  const unsigned slots = slot_count(kind, nodes);
  if (slots < 64 && (edges >> slots) != 0) return false;
  if (kind == GraphKind::Cycle && nodes == 2) return std::popcount(edges) <= 1;
  if ((edges & (edges >> 1)) != 0) return false;
  if (kind == GraphKind::Cycle && nodes >= 3)
    return !((edges & 1u) && ((edges >> (nodes - 1)) & 1u));
  return true;
}

unsigned Matching::edge_count() const { return static_cast<unsigned>(std::popcount(edges)); }

std::vector<unsigned> Matching::edge_slots() const {
  std::vector<unsigned> out;
  for (unsigned e = 0; e < 64; ++e)
    if ((edges >> e) & 1u) out.push_back(e);
  return out;
}

std::string Matching::to_string() const {
  std::string out = "[";
  bool first = true;
  for (unsigned e : edge_slots()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "]";
}

MatchingStream::MatchingStream(GraphKind kind, unsigned nodes) : kind_(kind), nodes_(nodes) {
  if (nodes > kMaxMatchingNodes)
    throw std::invalid_argument("matching enumeration supports at most 63 nodes");
  limit_ = std::uint64_t{1} << Matching::slot_count(kind, nodes);
}

std::optional<Matching> MatchingStream::next() {
  while (cursor_ < limit_) {
    Matching m{kind_, nodes_, cursor_++};
    if (m.is_valid()) return m;
  }
  return std::nullopt;
}

void MatchingStream::reset() { cursor_ = 0; }

MatchingStream path_matchings(unsigned n) { return {GraphKind::Path, n}; }

MatchingStream cycle_matchings(unsigned n) {
  if (n == 0) throw std::invalid_argument("cycle_matchings: n must be at least 1");
  return {GraphKind::Cycle, n};
}

Integer count_path_matchings(unsigned n, unsigned k) {
  if (k > n) return 0;
  return binomial(static_cast<std::int64_t>(n) - k, k);
}

Integer count_cycle_matchings(unsigned n, unsigned k) {
  if (n == 0) throw std::invalid_argument("count_cycle_matchings: n must be at least 1");
  if (n == 1) return k == 0 ? 1 : 0;
  if (n == 2) return k == 0 ? 1 : (k == 1 ? 2 : 0);
  if (2 * k > n) return 0;
  return Integer(n) * binomial(n - k, k) / Integer(n - k);
}

// BivariateCount --------------------------------------------------------------

BivariateCount BivariateCount::times_s() const { return {weight + 1, counts}; }

BivariateCount BivariateCount::times_t() const {
  BivariateCount out{weight + 2, {}};
  if (counts.empty()) return out;
  out.counts.reserve(counts.size() + 1);
  out.counts.emplace_back(0);
  out.counts.insert(out.counts.end(), counts.begin(), counts.end());
  return out;
}

BivariateCount operator+(const BivariateCount& a, const BivariateCount& b) {
  if (a.weight != b.weight)
    throw std::invalid_argument("BivariateCount: adding terms of different weight");
  BivariateCount out{a.weight, std::vector<Integer>(std::max(a.counts.size(), b.counts.size()))};
  for (std::size_t k = 0; k < a.counts.size(); ++k) out.counts[k] += a.counts[k];
  for (std::size_t k = 0; k < b.counts.size(); ++k) out.counts[k] += b.counts[k];
  trim_counts(out.counts);
  return out;
}

BivariateCount operator*(const BivariateCount& a, const BivariateCount& b) {
  BivariateCount out{a.weight + b.weight, convolve(a.counts, b.counts)};
  trim_counts(out.counts);
  return out;
}

BivariateCount BivariateCount::divide_exact(const BivariateCount& divisor) const {
  if (divisor.counts.empty()) throw std::invalid_argument("BivariateCount: division by zero");
  if (divisor.weight > weight) throw std::logic_error("BivariateCount: inexact division");
  if (counts.empty()) return {weight - divisor.weight, {}};
  if (counts.size() < divisor.counts.size())
    throw std::logic_error("BivariateCount: inexact division");
  // Divisors here always have a nonzero constant term, so solve from the
  // bottom up and confirm by multiplying back.
  const Integer& lead = divisor.counts.front();
  if (lead == 0) throw std::invalid_argument("BivariateCount: divisor has zero constant term");
  std::vector<Integer> rem = counts;
  std::vector<Integer> quot(counts.size() - divisor.counts.size() + 1);
  for (std::size_t k = 0; k < quot.size(); ++k) {
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t()))
      throw std::logic_error("BivariateCount: inexact division");
    quot[k] = rem[k] / lead;
    for (std::size_t j = 0; j < divisor.counts.size() && k + j < rem.size(); ++j)
      rem[k + j] -= quot[k] * divisor.counts[j];
  }
  BivariateCount out{weight - divisor.weight, std::move(quot)};
  trim_counts(out.counts);
  if (!(out * divisor == *this)) throw std::logic_error("BivariateCount: inexact division");
  return out;
}

std::string BivariateCount::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const Integer& c = counts[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::size_t s_pow = weight - 2 * k;
    if (mag != 1 || (s_pow == 0 && k == 0)) out << to_decimal(mag);
    if (s_pow >= 1) out << "s";
    if (s_pow >= 2) out << "^" << s_pow;
    if (k >= 1) out << "t";
    if (k >= 2) out << "^" << k;
  }
  return first ? "0" : out.str();
}

BivariateCount fibonacci_poly(unsigned n) {
  BivariateCount prev{0, {1}};  // F_0
  if (n == 0) return prev;
  BivariateCount cur{1, {1}};  // F_1
  for (unsigned i = 2; i <= n; ++i) {
    BivariateCount next = cur.times_s() + prev.times_t();
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BivariateCount lucas_poly(unsigned n) {
  if (n == 0) throw std::invalid_argument("lucas_poly: n must be at least 1");
  BivariateCount prev{1, {1}};  // L_1
  if (n == 1) return prev;
  BivariateCount cur{2, {1, 2}};  // L_2
  for (unsigned i = 3; i <= n; ++i) {
    BivariateCount next = cur.times_s() + prev.times_t();
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial specialize_q(const BivariateCount& p) {
  IntPolynomial out;
  for (std::size_t k = 0; k < p.counts.size(); ++k) {
    if (p.counts[k] == 0) continue;
    if (2 * k > p.weight) throw std::logic_error("specialize_q: term has negative s-degree");
    Integer sign = (k % 2 == 0) ? 1 : -1;
    out = out + Integer(sign * p.counts[k]) *
                    (one_plus_q_power(static_cast<unsigned>(p.weight - 2 * k)).shift_up(k));
  }
  return out;
}

SymVector specialize_gamma(const BivariateCount& p) {
  std::vector<Integer> entries(p.weight / 2 + 1);
  for (std::size_t k = 0; k < p.counts.size(); ++k) {
    if (p.counts[k] == 0) continue;
    if (k >= entries.size()) throw std::logic_error("specialize_gamma: term has negative s-degree");
    entries[k] = (k % 2 == 0) ? p.counts[k] : Integer(-p.counts[k]);
  }
  return SymVector::make(VectorKind::Gamma, p.weight, std::move(entries));
}

std::vector<Integer> fibotorial_counts(unsigned n) {
  if (n == 0) throw std::invalid_argument("fibotorial_counts: n must be at least 1");
  std::vector<Integer> acc{1};
  for (unsigned m = 1; m < n; ++m) acc = convolve(acc, path_count_vector(m));
  trim_counts(acc);
  return acc;
}

std::vector<Integer> lucatorial_counts(unsigned n) {
  if (n == 0) throw std::invalid_argument("lucatorial_counts: n must be at least 1");
  std::vector<Integer> acc{1};
  for (unsigned m = 1; m <= n; ++m) acc = convolve(acc, cycle_count_vector(m));
  trim_counts(acc);
  return acc;
}

// Partitions ------------------------------------------------------------------

unsigned Partition::size() const {
  unsigned total = 0;
  for (unsigned p : parts) total += p;
  return total;
}

bool Partition::fits_box() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] > width) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

PartitionStream::PartitionStream(unsigned rows, unsigned width)
    : rows_(rows), width_(width), current_(rows, 0) {}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return Partition{current_, width_};
  }
  // Colex successor: bump the least significant part that is below the
  // width and level every less significant part down to it.
  std::size_t i = 0;
  while (i < current_.size() && current_[i] == width_) ++i;
  if (i == current_.size()) {
    done_ = true;
    return std::nullopt;
  }
  ++current_[i];
  for (std::size_t j = 0; j < i; ++j) current_[j] = current_[i];
  return Partition{current_, width_};
}

void PartitionStream::reset() {
  current_.assign(rows_, 0);
  started_ = false;
  done_ = false;
}

PartitionStream partitions_in_box(unsigned rows, unsigned width) { return {rows, width}; }

Partition complement(const Partition& lambda) {
  if (!lambda.fits_box()) throw std::invalid_argument("complement: partition does not fit its box");
  const unsigned m = lambda.rows();
  const unsigned n = lambda.width;
  Partition out{std::vector<unsigned>(n), m};
  for (unsigned i = 1; i <= n; ++i) {
    unsigned covered = 0;
    for (unsigned part : lambda.parts)
      if (part >= n + 1 - i) ++covered;
    out.parts[i - 1] = m - covered;
  }
  return out;
}

Integer strict_matching_counts(unsigned len, unsigned k) {
  if (len == 0) return k == 0 ? 1 : 0;
  if (len == 1 || k == 0) return 0;
  // The first edge is forced; the rest is any matching of the remaining path.
  return count_path_matchings(len - 2, k - 1);
}

// Lucanomial matchings --------------------------------------------------------

unsigned LucanomialMatching::edge_count() const {
  unsigned total = 0;
  for (const auto& m : rows) total += m.edge_count();
  for (const auto& m : columns) total += m.edge_count();
  return total;
}

std::string LucanomialMatching::to_string() const {
  std::string out = lambda.to_string() + " rows:";
  for (const auto& m : rows) out += " " + m.to_string();
  out += " cols:";
  for (const auto& m : columns) out += " " + m.to_string();
  return out;
}

std::vector<Integer> lucanomial_counts(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("lucanomial_counts: k must not exceed n");
  std::vector<Integer> total;
  PartitionStream stream(k, n - k);
  while (auto lambda = stream.next()) {
    std::vector<Integer> acc{1};
    for (unsigned part : lambda->parts) acc = convolve(acc, path_count_vector(part));
    for (unsigned part : complement(*lambda).parts) acc = convolve(acc, strict_count_vector(part));
    if (acc.size() > total.size()) total.resize(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j) total[j] += acc[j];
  }
  trim_counts(total);
  return total;
}

LucanomialStream::LucanomialStream(unsigned n, unsigned k)
    : rows_(k), width_(n >= k ? n - k : 0), partitions_(rows_, width_) {
  if (k > n) throw std::invalid_argument("lucanomial_enumerate: k must not exceed n");
}

bool LucanomialStream::load_partition() {
  while (auto lambda = partitions_.next()) {
    choices_.clear();
    bool empty = false;
    for (unsigned part : lambda->parts) choices_.push_back(all_matchings(GraphKind::Path, part));
    for (unsigned part : complement(*lambda).parts) {
      choices_.push_back(strict_matchings(part));
      if (choices_.back().empty()) empty = true;
    }
    if (empty) continue;
    lambda_ = std::move(*lambda);
    digits_.assign(choices_.size(), 0);
    return true;
  }
  return false;
}

std::optional<LucanomialMatching> LucanomialStream::next() {
  if (!pending_) {
    if (!load_partition()) return std::nullopt;
    pending_ = true;
  }
  LucanomialMatching out{lambda_, {}, {}};
  for (std::size_t c = 0; c < choices_.size(); ++c) {
    const Matching& m = choices_[c][digits_[c]];
    (c < rows_ ? out.rows : out.columns).push_back(m);
  }
  std::size_t c = digits_.size();
  for (; c-- > 0;) {
    if (++digits_[c] < choices_[c].size()) break;
    digits_[c] = 0;
  }
  if (c == static_cast<std::size_t>(-1)) pending_ = false;
  return out;
}

void LucanomialStream::reset() {
  partitions_.reset();
  pending_ = false;
}

LucanomialStream lucanomial_enumerate(unsigned n, unsigned k) { return {n, k}; }

BivariateCount lucas_factorial(unsigned n) {
  BivariateCount out{0, {1}};
  for (unsigned i = 0; i < n; ++i) out = out * fibonacci_poly(i);
  return out;
}

BivariateCount lucanomial(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("lucanomial: k must not exceed n");
  return lucas_factorial(n).divide_exact(lucas_factorial(k) * lucas_factorial(n - k));
}

bool lucanomial_recurrence_check(unsigned m, unsigned n) {
  if (m < 2 || n < 1)
    throw std::invalid_argument("lucanomial_recurrence_check: needs m >= 2 and n >= 1");
  const BivariateCount lhs = lucanomial(m + n, m);
  const BivariateCount rhs = fibonacci_poly(n) * lucanomial(m + n - 1, m - 1) +
                             (fibonacci_poly(m - 2) * lucanomial(m + n - 1, n - 1)).times_t();
  return lhs == rhs;
}

}  // namespace gammavec
