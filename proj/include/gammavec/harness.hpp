#pragma once

// Cross-validation of the polynomial, matching and ballot-path routes, and
// the g-table for [n]! computed four independent ways.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammavec/ballot.hpp"
#include "gammavec/integer.hpp"

namespace gammavec {

enum class CheckStatus { Pass, Fail };

struct CheckReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  CheckStatus status = CheckStatus::Pass;
  /// First divergence; always present on Fail.
  std::optional<std::string> witness;

  bool passed() const { return status == CheckStatus::Pass; }
};

enum class Provenance { Poly, Recurrence, FixedPoint, AltSum };

std::string_view provenance_name(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view name);

/// Rows n = 1..n_max of the g-vector of [n]!, each of length C(n,2)/2 + 1.
struct GTable {
  Provenance provenance = Provenance::Poly;
  std::map<unsigned, std::vector<Integer>> rows;
};

/// Throws std::invalid_argument for n_max == 0.
GTable gtable(unsigned n_max, Provenance provenance);

/// Published rows n = 1..8 of the g-vector of [n]!, used as golden data.
const std::vector<std::vector<long>>& reference_g_table();

/// Adds `delta` to entry (i, j) of B_degree wherever the checks use the
/// change-of-basis matrix. Test fixture for fault injection.
struct BasisFault {
  std::size_t degree = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  long delta = 1;
};

struct CheckOptions {
  /// Fixed-point enumeration is skipped for larger n.
  unsigned fixed_point_limit = 8;
  std::optional<BasisFault> basis_fault;
  bool parallel = true;
};

/// Runs every registered cross-check with family parameters up to n_max.
/// Failures are reported, never thrown; the order is the registry order.
/// Throws std::invalid_argument for n_max == 0.
std::vector<CheckReport> check_all(unsigned n_max, const CheckOptions& options = {});

/// Names of the registered checks, in report order.
std::vector<std::string> check_names();

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace gammavec
