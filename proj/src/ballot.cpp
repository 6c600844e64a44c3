#include "gammavec/ballot.hpp"

#include <algorithm>
#include <stdexcept>

namespace gammavec {

namespace {

bool is_upper(char c) { return c == 'E' || c == 'N'; }

std::size_t triangular(std::size_t k) { return k * (k + 1) / 2; }

}  // namespace

// Ballot paths ----------------------------------------------------------------

bool BallotPath::is_ballot(std::string_view word) {
  std::int64_t height = 0;  // #E - #N
  for (char c : word) {
    if (c == 'E') {
      ++height;
    } else if (c == 'N') {
      if (--height < 0) return false;
    } else {
      return false;
    }
  }
  return true;
}

BallotPath::BallotPath(std::string word) : word_(std::move(word)) {
  for (char c : word_)
    if (!is_upper(c)) throw std::invalid_argument("ballot path: letters must be E or N");
  if (!is_ballot(word_))
    throw std::invalid_argument("ballot path: a prefix has more N than E: " + word_);
}

std::size_t BallotPath::norths() const {
  return static_cast<std::size_t>(std::count(word_.begin(), word_.end(), 'N'));
}

BallotStream::BallotStream(std::size_t length, std::size_t norths)
    : length_(length), norths_(norths) {}

std::optional<BallotPath> BallotStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (2 * norths_ > length_) {
      done_ = true;
      return std::nullopt;
    }
    current_ = std::string(length_ - norths_, 'E') + std::string(norths_, 'N');
    return BallotPath(current_);
  }
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return BallotPath(current_);
}

// Lexicographic successor: the rightmost E that can become N while the prefix
// stays ballot and the remaining Norths still fit, followed by the smallest
// completion E...EN...N.
bool BallotStream::advance() {
  std::vector<std::size_t> norths_before(length_ + 1, 0);
  for (std::size_t p = 0; p < length_; ++p)
    norths_before[p + 1] = norths_before[p] + (current_[p] == 'N');
  for (std::size_t p = length_; p-- > 0;) {
    if (current_[p] != 'E') continue;
    const std::size_t a = norths_before[p];
    const std::size_t easts = p - a;
    if (a + 1 > easts || a + 1 > norths_) continue;
    const std::size_t rest = norths_ - a - 1;
    const std::size_t room = length_ - p - 1;
    if (rest > room) continue;
    current_[p] = 'N';
    std::fill(current_.begin() + static_cast<std::ptrdiff_t>(p) + 1,
              current_.end() - static_cast<std::ptrdiff_t>(rest), 'E');
    std::fill(current_.end() - static_cast<std::ptrdiff_t>(rest), current_.end(), 'N');
    return true;
  }
  return false;
}

void BallotStream::reset() {
  started_ = false;
  done_ = false;
  current_.clear();
}

BallotStream ballot_enumerate(std::size_t length, std::size_t norths) { return {length, norths}; }

Integer ballot_paths(std::int64_t length, std::int64_t norths) {
  if (length < 0 || norths < 0 || 2 * norths > length) return 0;
  return binomial(length, norths) - binomial(length, norths - 1);
}

Integer ballot_count(std::size_t d, std::size_t i, std::size_t j) {
  const auto m = static_cast<std::int64_t>(d) - 2 * static_cast<std::int64_t>(j);
  const auto r = static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j);
  return binomial(m, r) - binomial(m, r - 1);
}

// Change of basis -------------------------------------------------------------

BasisMatrix basis_matrix(std::size_t d) {
  BasisMatrix b{d, d / 2 + 1, {}};
  b.entries.resize(b.dim * b.dim);
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) b.at(i, j) = ballot_count(d, i, j);
  return b;
}

bool BasisMatrix::is_unit_lower_triangular() const {
  for (std::size_t i = 0; i < dim; ++i) {
    if (at(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < dim; ++j)
      if (at(i, j) != 0) return false;
  }
  return true;
}

BasisMatrix BasisMatrix::inverse() const {
  if (!is_unit_lower_triangular())
    throw std::invalid_argument("BasisMatrix::inverse: not unit lower triangular");
  BasisMatrix inv{degree, dim, std::vector<Integer>(dim * dim)};
  for (std::size_t col = 0; col < dim; ++col) {
    inv.at(col, col) = 1;
    for (std::size_t i = col + 1; i < dim; ++i) {
      Integer acc = 0;
      for (std::size_t k = col; k < i; ++k) acc += at(i, k) * inv.at(k, col);
      inv.at(i, col) = -acc;
    }
  }
  return inv;
}

BasisMatrix BasisMatrix::operator*(const BasisMatrix& other) const {
  if (dim != other.dim) throw std::invalid_argument("BasisMatrix: dimension mismatch");
  BasisMatrix out{degree, dim, std::vector<Integer>(dim * dim)};
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) out.at(i, j) += at(i, k) * other.at(k, j);
    }
  return out;
}

SymVector g_from_gamma(const SymVector& gamma, const BasisMatrix& basis) {
  if (gamma.kind != VectorKind::Gamma)
    throw std::invalid_argument("g_from_gamma: expected a gamma-vector");
  if (basis.degree != gamma.degree || basis.dim != gamma.size())
    throw std::invalid_argument("g_from_gamma: basis degree does not match the vector");
  std::vector<Integer> g(gamma.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) g[i] += gamma[j] * basis.at(i, j);
  return SymVector::make(VectorKind::G, gamma.degree, std::move(g), gamma.shift);
}

SymVector g_from_gamma(const SymVector& gamma) {
  return g_from_gamma(gamma, basis_matrix(gamma.degree));
}

// Decorated ballot paths ------------------------------------------------------

std::size_t decorated_length(unsigned n) { return n == 0 ? 0 : triangular(n - 1); }

std::set<std::size_t> anchors(unsigned n) {
  if (n == 0) throw std::invalid_argument("anchors: n must be at least 1");
  std::set<std::size_t> out;
  for (std::size_t k = 1; k + 1 <= n; ++k) out.insert(triangular(k));
  return out;
}

std::vector<std::size_t> active_valleys(const BallotPath& p, unsigned n) {
  if (p.length() != decorated_length(n))
    throw std::invalid_argument("active_valleys: path length must be C(n,2)");
  const auto anchor_set = anchors(n);
  const std::string& w = p.word();
  std::vector<std::size_t> out;
  for (std::size_t t = 1; t < w.size(); ++t)
    if (w[t - 1] == 'E' && w[t] == 'N' && !anchor_set.contains(t)) out.push_back(t);
  return out;
}

DecoratedBallotPath::DecoratedBallotPath(unsigned n, std::string word)
    : n_(n), word_(std::move(word)) {
  if (n == 0) throw std::invalid_argument("decorated path: n must be at least 1");
  if (word_.size() != decorated_length(n))
    throw std::invalid_argument("decorated path: length " + std::to_string(word_.size()) +
                                " is not C(n,2) = " + std::to_string(decorated_length(n)));
  const auto anchor_set = anchors(n);
  for (std::size_t x = 0; x < word_.size(); ++x) {
    const char c = word_[x];
    if (c == 'E' || c == 'N') continue;
    if (c == 'n')
      throw std::invalid_argument("decorated path: lowercase n at step " + std::to_string(x + 1) +
                                  " is not paired with a preceding e");
    if (c != 'e')
      throw std::invalid_argument(std::string("decorated path: invalid letter '") + c + "'");
    if (x + 1 >= word_.size() || word_[x + 1] != 'n')
      throw std::invalid_argument("decorated path: lowercase e at step " + std::to_string(x + 1) +
                                  " is not followed by n");
    if (anchor_set.contains(x + 1))
      throw std::invalid_argument("decorated path: decorated pair at step " +
                                  std::to_string(x + 1) + " straddles an anchor");
    ++x;
  }
  if (!BallotPath::is_ballot(shape().word()))
    throw std::invalid_argument("decorated path: ballot condition violated");
}

DecoratedBallotPath DecoratedBallotPath::parse(std::string_view text) {
  if (text.empty()) return DecoratedBallotPath(1, "");
  std::vector<std::string_view> segments;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    segments.push_back(text.substr(start, bar == std::string_view::npos ? bar : bar - start));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  std::string word;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    if (segments[k].size() != k + 1)
      throw std::invalid_argument("decorated path: segment " + std::to_string(k + 1) +
                                  " has length " + std::to_string(segments[k].size()) +
                                  ", expected " + std::to_string(k + 1));
    word += segments[k];
  }
  return DecoratedBallotPath(static_cast<unsigned>(segments.size() + 1), std::move(word));
}

std::size_t DecoratedBallotPath::norths() const {
  return static_cast<std::size_t>(std::count_if(word_.begin(), word_.end(),
                                                [](char c) { return c == 'N' || c == 'n'; }));
}

std::size_t DecoratedBallotPath::decorated_count() const {
  return static_cast<std::size_t>(std::count(word_.begin(), word_.end(), 'e'));
}

BallotPath DecoratedBallotPath::shape() const {
  std::string upper = word_;
  for (char& c : upper) c = (c == 'e') ? 'E' : (c == 'n') ? 'N' : c;
  return BallotPath(std::move(upper));
}

std::vector<std::size_t> DecoratedBallotPath::active_valleys() const {
  return gammavec::active_valleys(shape(), n_);
}

std::string DecoratedBallotPath::to_string() const {
  std::string out;
  std::size_t pos = 0;
  for (std::size_t k = 1; k + 1 <= n_; ++k) {
    if (k > 1) out += '|';
    out.append(word_, pos, k);
    pos += k;
  }
  return out;
}

unsigned FibotorialPair::edge_count() const {
  unsigned total = 0;
  for (const auto& m : matchings) total += m.edge_count();
  return total;
}

FibotorialPair decode(const DecoratedBallotPath& p) {
  FibotorialPair out;
  std::string remaining;
  std::size_t pos = 0;
  for (unsigned k = 1; k < p.n(); ++k) {
    Matching m{GraphKind::Path, k, 0};
    for (unsigned x = 0; x < k;) {
      const char c = p.word()[pos + x];
      if (c == 'e') {
        m.edges |= std::uint64_t{1} << x;
        x += 2;
      } else {
        remaining += c;
        ++x;
      }
    }
    out.matchings.push_back(m);
    pos += k;
  }
  out.path = BallotPath(std::move(remaining));
  return out;
}

DecoratedBallotPath encode(const FibotorialPair& pair, unsigned n) {
  if (n == 0) throw std::invalid_argument("encode: n must be at least 1");
  if (pair.matchings.size() != n - 1)
    throw std::invalid_argument("encode: expected " + std::to_string(n - 1) + " matchings");
  for (unsigned k = 1; k < n; ++k) {
    const Matching& m = pair.matchings[k - 1];
    if (m.kind != GraphKind::Path || m.nodes != k || !m.is_valid())
      throw std::invalid_argument("encode: matching " + std::to_string(k) +
                                  " must be a path matching on " + std::to_string(k) + " nodes");
  }
  const std::size_t d = decorated_length(n);
  if (pair.path.length() + 2 * pair.edge_count() != d)
    throw std::invalid_argument("encode: path length must be C(n,2) - 2 * edges");
  std::string word;
  std::size_t next = 0;
  for (unsigned k = 1; k < n; ++k) {
    const Matching& m = pair.matchings[k - 1];
    for (unsigned x = 0; x < k;) {
      if ((m.edges >> x) & 1u) {
        word += "en";
        x += 2;
      } else {
        word += pair.path.word()[next++];
        ++x;
      }
    }
  }
  return DecoratedBallotPath(n, std::move(word));
}

DecoratedBallotPath involution(const DecoratedBallotPath& p) {
  const auto valleys = p.active_valleys();
  if (valleys.empty()) return p;
  std::string word = p.word();
  const std::size_t t = valleys.front();  // steps t and t+1, 1-based
  const bool decorated = word[t - 1] == 'e';
  word[t - 1] = decorated ? 'E' : 'e';
  word[t] = decorated ? 'N' : 'n';
  return DecoratedBallotPath(p.n(), std::move(word));
}

DecoratedStream::DecoratedStream(unsigned n, std::size_t norths)
    : n_(n), shapes_(decorated_length(n), norths) {
  if (n == 0) throw std::invalid_argument("decorated_paths: n must be at least 1");
}

bool DecoratedStream::load_shape() {
  auto shape = shapes_.next();
  if (!shape) return false;
  valleys_ = active_valleys(*shape, n_);
  shape_ = shape->word();
  mask_ = 0;
  return true;
}

std::optional<DecoratedBallotPath> DecoratedStream::next() {
  if (!pending_) {
    if (!load_shape()) return std::nullopt;
    pending_ = true;
  }
  std::string word = shape_;
  for (std::size_t v = 0; v < valleys_.size(); ++v) {
    if ((mask_ >> v) & 1u) {
      word[valleys_[v] - 1] = 'e';
      word[valleys_[v]] = 'n';
    }
  }
  if (++mask_ == (std::uint64_t{1} << valleys_.size())) pending_ = false;
  return DecoratedBallotPath(n_, std::move(word));
}

void DecoratedStream::reset() {
  shapes_.reset();
  pending_ = false;
}

DecoratedStream decorated_paths(unsigned n, std::size_t norths) { return {n, norths}; }

// Fixed points ----------------------------------------------------------------

FixedPointStream::FixedPointStream(unsigned n, std::size_t norths)
    : n_(n), norths_(norths), segment_norths_(n == 0 ? 0 : n - 1, 0) {
  if (n == 0) throw std::invalid_argument("fixed_points: n must be at least 1");
}

// Backtracking over a_1..a_{n-1}, each segment N^a E^(k-a). Only the point
// right after a segment's North run can break the ballot condition.
bool FixedPointStream::descend(std::size_t from_segment) {
  const std::size_t segments = segment_norths_.size();
  const std::size_t total = decorated_length(n_);
  if (segments == 0) return from_segment == 0 && norths_ == 0;
  auto pos = static_cast<std::ptrdiff_t>(from_segment);
  while (pos >= 0) {
    const auto k = static_cast<std::size_t>(pos);
    const std::size_t len = k + 1;
    std::size_t& a = segment_norths_[k];
    std::size_t before = 0;
    for (std::size_t s = 0; s < k; ++s) before += segment_norths_[s];
    const std::size_t steps_before = triangular(k);
    const std::size_t easts_before = steps_before - before;
    const bool exhausted =
        a > len || before + a > easts_before || before + a > norths_;
    if (exhausted) {
      if (--pos >= 0) ++segment_norths_[static_cast<std::size_t>(pos)];
      continue;
    }
    const std::size_t rest = norths_ - before - a;
    const std::size_t room = total - steps_before - len;
    if (rest > room) {
      ++a;
      continue;
    }
    if (k + 1 == segments) return true;
    segment_norths_[k + 1] = 0;
    ++pos;
  }
  return false;
}

std::optional<DecoratedBallotPath> FixedPointStream::next() {
  if (done_) return std::nullopt;
  bool found;
  if (!started_) {
    started_ = true;
    std::fill(segment_norths_.begin(), segment_norths_.end(), 0);
    found = descend(0);
  } else if (segment_norths_.empty()) {
    found = false;
  } else {
    ++segment_norths_.back();
    found = descend(segment_norths_.size() - 1);
  }
  if (!found) {
    done_ = true;
    return std::nullopt;
  }
  std::string word;
  for (std::size_t k = 0; k < segment_norths_.size(); ++k) {
    word.append(segment_norths_[k], 'N');
    word.append(k + 1 - segment_norths_[k], 'E');
  }
  return DecoratedBallotPath(n_, std::move(word));
}

void FixedPointStream::reset() {
  started_ = false;
  done_ = false;
}

FixedPointStream fixed_points(unsigned n, std::size_t i) { return {n, i}; }

Integer g_by_fixed_points(unsigned n, std::size_t i) {
  Integer count = 0;
  FixedPointStream stream(n, i);
  while (stream.next()) ++count;
  return count;
}

Integer g_by_fixed_points_filtered(unsigned n, std::size_t i) {
  Integer count = 0;
  BallotStream stream(decorated_length(n), i);
  while (auto p = stream.next())
    if (active_valleys(*p, n).empty()) ++count;
  return count;
}

std::vector<Integer> g_recurrence(unsigned n) {
  if (n == 0) throw std::invalid_argument("g_recurrence: n must be at least 1");
  std::vector<Integer> row{1};
  for (unsigned m = 2; m <= n; ++m) {
    const auto prev_degree = static_cast<std::int64_t>(decorated_length(m - 1));
    const auto degree = static_cast<std::int64_t>(decorated_length(m));
    const std::int64_t threshold = (prev_degree + 1) / 2;
    const std::int64_t window = m - 1;
    std::vector<Integer> next(static_cast<std::size_t>(degree / 2 + 1));
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(next.size()); ++i) {
      const std::int64_t upper = i <= threshold ? i : degree - i - window;
      const std::int64_t lo = std::max<std::int64_t>(0, i - window);
      const std::int64_t hi = std::min<std::int64_t>(upper, static_cast<std::int64_t>(row.size()) - 1);
      for (std::int64_t j = lo; j <= hi; ++j) next[static_cast<std::size_t>(i)] += row[static_cast<std::size_t>(j)];
    }
    row = std::move(next);
  }
  return row;
}

// Families --------------------------------------------------------------------

namespace {

void check_family(const FamilyParams& params) {
  if (params.n == 0) throw std::invalid_argument("family: n must be at least 1");
  if (params.family == Family::QBinomial && params.k > params.n)
    throw std::invalid_argument("family: k must not exceed n");
}

}  // namespace

std::size_t family_degree(const FamilyParams& params) {
  check_family(params);
  switch (params.family) {
    case Family::QFactorial:
      return triangular(params.n - 1);
    case Family::DistinctParts:
      return triangular(params.n);
    case Family::QBinomial:
      return static_cast<std::size_t>(params.k) * (params.n - params.k);
  }
  throw std::logic_error("unknown family");
}

IntPolynomial family_polynomial(const FamilyParams& params) {
  check_family(params);
  switch (params.family) {
    case Family::QFactorial:
      return q_factorial(params.n);
    case Family::DistinctParts:
      return distinct_parts_product(params.n);
    case Family::QBinomial:
      return q_binomial(params.n, params.k);
  }
  throw std::logic_error("unknown family");
}

std::vector<Integer> family_matching_counts(const FamilyParams& params) {
  check_family(params);
  switch (params.family) {
    case Family::QFactorial:
      return fibotorial_counts(params.n);
    case Family::DistinctParts:
      return lucatorial_counts(params.n);
    case Family::QBinomial:
      return lucanomial_counts(params.n, params.k);
  }
  throw std::logic_error("unknown family");
}

Integer signed_set_size(const FamilyParams& params, std::size_t i, std::size_t j) {
  const auto counts = family_matching_counts(params);
  if (j >= counts.size()) return 0;
  return counts[j] * ballot_count(family_degree(params), i, j);
}

std::vector<Integer> alternating_g(const FamilyParams& params, const BasisMatrix& basis) {
  const std::size_t d = family_degree(params);
  if (basis.degree != d) throw std::invalid_argument("alternating_g: basis degree mismatch");
  const auto counts = family_matching_counts(params);
  std::vector<Integer> g(d / 2 + 1);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j <= i && j < counts.size(); ++j) {
      Integer term = counts[j] * basis.at(i, j);
      if (j % 2 == 0)
        g[i] += term;
      else
        g[i] -= term;
    }
  return g;
}

std::vector<Integer> alternating_g(const FamilyParams& params) {
  return alternating_g(params, basis_matrix(family_degree(params)));
}

}  // namespace gammavec
