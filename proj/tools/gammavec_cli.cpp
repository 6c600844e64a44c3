// gammavec-cli: g-vectors, gamma-vectors, g-tables, enumerations and the
// verification suite, on top of the C API. Every number printed comes from the
// library as a decimal string.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gammavec/gammavec.h"

namespace {

using json = nlohmann::ordered_json;

enum class Format { Plain, Csv, Json };

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using PolyPtr = std::unique_ptr<gv_poly, Deleter<gv_poly, gv_poly_free>>;
using VecPtr = std::unique_ptr<gv_symvec, Deleter<gv_symvec, gv_symvec_free>>;
using TablePtr = std::unique_ptr<gv_table, Deleter<gv_table, gv_table_free>>;
using ReportPtr = std::unique_ptr<gv_report, Deleter<gv_report, gv_report_free>>;
using StreamPtr = std::unique_ptr<gv_stream, Deleter<gv_stream, gv_stream_free>>;

void check(gv_status status) {
  if (status == GV_OK) return;
  std::string message = std::string(gv_status_string(status)) + ": " + gv_last_error();
  if (status == GV_ERR_INVALID_ARGUMENT || status == GV_ERR_PARSE) throw UsageError(message);
  throw std::runtime_error(message);
}

std::vector<std::string> poly_coeffs(const gv_poly* p) {
  std::vector<std::string> out;
  for (size_t i = 0; i < gv_poly_length(p); ++i) {
    const char* c = nullptr;
    check(gv_poly_coeff(p, i, &c));
    out.emplace_back(c);
  }
  return out;
}

std::vector<std::string> vec_entries(const gv_symvec* v) {
  std::vector<std::string> out;
  for (size_t i = 0; i < gv_symvec_size(v); ++i) {
    const char* c = nullptr;
    check(gv_symvec_entry(v, i, &c));
    out.emplace_back(c);
  }
  return out;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// gvec ------------------------------------------------------------------------

struct GvecArgs {
  std::string family;
  std::vector<unsigned> params;
};

int run_gvec(const GvecArgs& args, Format format, std::ostream& out) {
  gv_family family;
  std::size_t arity;
  if (args.family == "qfact") {
    family = GV_FAMILY_QFACT;
    arity = 1;
  } else if (args.family == "distinct") {
    family = GV_FAMILY_DISTINCT;
    arity = 1;
  } else if (args.family == "qbinom") {
    family = GV_FAMILY_QBINOM;
    arity = 2;
  } else {
    throw UsageError("unknown family '" + args.family + "' (expected qfact, qbinom or distinct)");
  }
  if (args.params.size() != arity)
    throw UsageError(args.family + " takes " + std::to_string(arity) + " parameter(s)");
  const unsigned n = args.params[0];
  const unsigned k = arity == 2 ? args.params[1] : 0;

  gv_poly* raw = nullptr;
  check(gv_poly_family(family, n, k, &raw));
  PolyPtr poly(raw);
  int palindromic = 0;
  size_t degree = 0;
  check(gv_poly_palindromic_degree(poly.get(), &palindromic, &degree));
  int unimodal = 0;
  check(gv_poly_is_unimodal(poly.get(), &unimodal));
  gv_symvec* g_raw = nullptr;
  check(gv_poly_g_vector(poly.get(), &g_raw));
  VecPtr g(g_raw);
  gv_symvec* gamma_raw = nullptr;
  check(gv_poly_gamma_vector(poly.get(), &gamma_raw));
  VecPtr gamma(gamma_raw);

  const auto coeffs = poly_coeffs(poly.get());
  const auto g_entries = vec_entries(g.get());
  const auto gamma_entries = vec_entries(gamma.get());
  std::string label = args.family + " n=" + std::to_string(n);
  if (arity == 2) label += " k=" + std::to_string(k);

  switch (format) {
    case Format::Plain:
      out << "family: " << label << "\n"
                << "coefficients: " << join(coeffs, " ") << "\n"
                << "palindromic degree: " << degree << "\n"
                << "g: (" << join(g_entries, ", ") << ")\n"
                << "gamma: (" << join(gamma_entries, ", ") << ")\n"
                << "unimodal: " << (unimodal ? "yes" : "no") << "\n";
      break;
    case Format::Csv:
      out << "quantity,index,value\n";
      for (size_t i = 0; i < coeffs.size(); ++i) out << "coefficient," << i << "," << coeffs[i] << "\n";
      out << "palindromic_degree,," << degree << "\n";
      for (size_t i = 0; i < g_entries.size(); ++i) out << "g," << i << "," << g_entries[i] << "\n";
      for (size_t i = 0; i < gamma_entries.size(); ++i)
        out << "gamma," << i << "," << gamma_entries[i] << "\n";
      out << "unimodal,," << (unimodal ? "true" : "false") << "\n";
      break;
    case Format::Json: {
      json doc;
      doc["family"] = args.family;
      doc["n"] = n;
      if (arity == 2) doc["k"] = k;
      doc["coefficients"] = coeffs;
      doc["palindromic_degree"] = degree;
      doc["g"] = g_entries;
      doc["gamma"] = gamma_entries;
      doc["unimodal"] = unimodal != 0;
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

// table -----------------------------------------------------------------------

int run_table(unsigned n_max, const std::string& provenance_name, Format format,
              std::ostream& out) {
  gv_provenance provenance;
  if (provenance_name == "poly") provenance = GV_PROVENANCE_POLY;
  else if (provenance_name == "recurrence") provenance = GV_PROVENANCE_RECURRENCE;
  else if (provenance_name == "fixedpoint") provenance = GV_PROVENANCE_FIXEDPOINT;
  else if (provenance_name == "altsum") provenance = GV_PROVENANCE_ALTSUM;
  else throw UsageError("unknown provenance '" + provenance_name + "'");

  gv_table* raw = nullptr;
  check(gv_table_compute(n_max, provenance, &raw));
  TablePtr table(raw);

  std::vector<std::vector<std::string>> rows;
  for (size_t r = 0; r < gv_table_rows(table.get()); ++r) {
    std::vector<std::string> row;
    for (size_t i = 0; i < gv_table_row_length(table.get(), r); ++i) {
      const char* c = nullptr;
      check(gv_table_entry(table.get(), r, i, &c));
      row.emplace_back(c);
    }
    rows.push_back(std::move(row));
  }

  switch (format) {
    case Format::Plain:
      out << "# g-vector of [n]! (" << provenance_name << ")\n";
      for (size_t r = 0; r < rows.size(); ++r) out << r + 1 << " | " << join(rows[r], " ") << "\n";
      break;
    case Format::Csv:
      out << "n,i,g\n";
      for (size_t r = 0; r < rows.size(); ++r)
        for (size_t i = 0; i < rows[r].size(); ++i) out << r + 1 << "," << i << "," << rows[r][i] << "\n";
      break;
    case Format::Json: {
      json doc;
      doc["provenance"] = provenance_name;
      doc["rows"] = json::array();
      for (size_t r = 0; r < rows.size(); ++r) doc["rows"].push_back({{"n", r + 1}, {"g", rows[r]}});
      out << doc.dump(2) << "\n";
      break;
    }
  }
  return 0;
}

// enumerate -------------------------------------------------------------------

int run_enumerate(const std::string& kind_name, const std::vector<unsigned>& params,
                  std::optional<long long> limit, Format format, std::ostream& out) {
  gv_enum_kind kind;
  if (kind_name == "ballot") kind = GV_ENUM_BALLOT;
  else if (kind_name == "path-matchings") kind = GV_ENUM_PATH_MATCHINGS;
  else if (kind_name == "cycle-matchings") kind = GV_ENUM_CYCLE_MATCHINGS;
  else if (kind_name == "lucanomial") kind = GV_ENUM_LUCANOMIAL;
  else if (kind_name == "fixed-points") kind = GV_ENUM_FIXED_POINTS;
  else if (kind_name == "decorated") kind = GV_ENUM_DECORATED;
  else throw UsageError("unknown enumeration kind '" + kind_name + "'");
  if (limit && *limit < 0) throw UsageError("--limit must be nonnegative");

  gv_stream* raw = nullptr;
  check(gv_stream_open(kind, params.data(), params.size(), &raw));
  StreamPtr stream(raw);

  json items = json::array();
  if (format == Format::Csv) out << "index,item\n";
  long long emitted = 0;
  while (!limit || emitted < *limit) {
    const char* item = nullptr;
    const gv_status status = gv_stream_next(stream.get(), &item);
    if (status == GV_END) break;
    check(status);
    switch (format) {
      case Format::Plain:
        out << item << "\n";
        break;
      case Format::Csv:
        out << emitted << "," << csv_field(item) << "\n";
        break;
      case Format::Json:
        items.push_back(item);
        break;
    }
    ++emitted;
  }
  if (format == Format::Json) {
    json doc;
    doc["kind"] = kind_name;
    doc["params"] = params;
    doc["count"] = emitted;
    doc["items"] = std::move(items);
    out << doc.dump(2) << "\n";
  }
  return 0;
}

// verify ----------------------------------------------------------------------

int run_verify(unsigned n_max, unsigned fixed_point_limit, const std::string& corrupt,
               Format format, std::ostream& out) {
  gv_verify_options options{};
  options.fixed_point_limit = fixed_point_limit;
  if (!corrupt.empty()) {
    unsigned long d = 0, i = 0, j = 0;
    char tail = 0;
    if (std::sscanf(corrupt.c_str(), "%lu:%lu:%lu%c", &d, &i, &j, &tail) != 3)
      throw UsageError("--corrupt-basis expects D:I:J");
    options.corrupt_basis = 1;
    options.corrupt_degree = d;
    options.corrupt_i = i;
    options.corrupt_j = j;
    options.corrupt_delta = 1;
  }

  gv_report* raw = nullptr;
  check(gv_verify(n_max, &options, &raw));
  ReportPtr report(raw);
  const size_t count = gv_report_count(report.get());
  const bool passed = gv_report_all_passed(report.get()) != 0;

  auto params_of = [&](size_t idx, const char* kv_sep, const char* sep) {
    std::vector<std::string> parts;
    for (size_t p = 0; p < gv_report_param_count(report.get(), idx); ++p)
      parts.push_back(std::string(gv_report_param_key(report.get(), idx, p)) + kv_sep +
                      gv_report_param_value(report.get(), idx, p));
    return join(parts, sep);
  };

  size_t pass_count = 0;
  for (size_t idx = 0; idx < count; ++idx) pass_count += gv_report_passed(report.get(), idx) ? 1 : 0;

  switch (format) {
    case Format::Plain:
      for (size_t idx = 0; idx < count; ++idx) {
        const bool ok = gv_report_passed(report.get(), idx) != 0;
        out << (ok ? "PASS " : "FAIL ") << gv_report_name(report.get(), idx);
        const std::string params = params_of(idx, "=", " ");
        if (!params.empty()) out << " " << params;
        if (const char* w = gv_report_witness(report.get(), idx)) out << " -- " << w;
        out << "\n";
      }
      out << count << " checks, " << pass_count << " passed\n";
      break;
    case Format::Csv:
      out << "check,status,params,witness\n";
      for (size_t idx = 0; idx < count; ++idx) {
        const char* w = gv_report_witness(report.get(), idx);
        out << gv_report_name(report.get(), idx) << ","
                  << (gv_report_passed(report.get(), idx) ? "PASS" : "FAIL") << ","
                  << csv_field(params_of(idx, "=", ";")) << "," << csv_field(w ? w : "") << "\n";
      }
      break;
    case Format::Json: {
      json doc;
      doc["n_max"] = n_max;
      doc["passed"] = passed;
      doc["checks"] = json::array();
      for (size_t idx = 0; idx < count; ++idx) {
        json entry;
        entry["name"] = gv_report_name(report.get(), idx);
        entry["status"] = gv_report_passed(report.get(), idx) ? "PASS" : "FAIL";
        json params = json::object();
        for (size_t p = 0; p < gv_report_param_count(report.get(), idx); ++p)
          params[gv_report_param_key(report.get(), idx, p)] = gv_report_param_value(report.get(), idx, p);
        entry["params"] = std::move(params);
        const char* w = gv_report_witness(report.get(), idx);
        entry["witness"] = w ? json(w) : json(nullptr);
        doc["checks"].push_back(std::move(entry));
      }
      out << doc.dump(2) << "\n";
      break;
    }
  }
  if (!passed) {
    for (size_t idx = 0; idx < count; ++idx)
      if (const char* w = gv_report_witness(report.get(), idx))
        std::cerr << "check " << gv_report_name(report.get(), idx) << " failed: " << w << "\n";
  }
  return passed ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"g-vectors and gamma-vectors of q-analogues, with matching and ballot-path models"};
  app.require_subcommand(1);

  std::string format_name = "plain";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();

  GvecArgs gvec;
  auto* gvec_cmd = app.add_subcommand("gvec", "Coefficients, g-vector and gamma-vector of a family member");
  gvec_cmd->fallthrough();
  gvec_cmd->add_option("family", gvec.family, "qfact N | qbinom N K | distinct N")->required();
  gvec_cmd->add_option("params", gvec.params, "Family parameters")->required();

  unsigned table_n = 8;
  std::string provenance = "poly";
  auto* table_cmd = app.add_subcommand("table", "g-vectors of [n]! for n = 1..N");
  table_cmd->fallthrough();
  table_cmd->add_option("n_max", table_n, "Largest n")->required();
  table_cmd->add_option("--provenance", provenance, "Computation route")
      ->check(CLI::IsMember({"poly", "recurrence", "fixedpoint", "altsum"}))
      ->capture_default_str();

  std::string enum_kind;
  std::vector<unsigned> enum_params;
  std::optional<long long> limit;
  auto* enum_cmd = app.add_subcommand("enumerate", "Stream combinatorial objects in canonical text form");
  enum_cmd->fallthrough();
  enum_cmd->add_option("kind", enum_kind,
                       "ballot LEN NORTHS | path-matchings N | cycle-matchings N | lucanomial N K | "
                       "fixed-points N I | decorated N I")
      ->required();
  enum_cmd->add_option("params", enum_params, "Kind parameters");
  enum_cmd->add_option("--limit", limit, "Emit at most K objects");

  unsigned verify_n = 8;
  unsigned fixed_point_limit = 8;
  std::string corrupt;
  auto* verify_cmd = app.add_subcommand("verify", "Run every cross-check; exit status 0 iff all pass");
  verify_cmd->fallthrough();
  verify_cmd->add_option("n_max", verify_n, "Largest family parameter")->capture_default_str();
  verify_cmd->add_option("--fixed-point-limit", fixed_point_limit,
                         "Skip fixed-point enumeration above this n")
      ->capture_default_str();
  verify_cmd->add_option("--corrupt-basis", corrupt,
                         "Test fixture: perturb B_D(I,J) by one, given as D:I:J")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const Format format = format_name == "csv" ? Format::Csv
                        : format_name == "json" ? Format::Json
                                                : Format::Plain;
  // The payload is buffered so that a failing command emits nothing on stdout.
  std::ostringstream out;
  try {
    int code = kExitUsage;
    if (*gvec_cmd) code = run_gvec(gvec, format, out);
    else if (*table_cmd) code = run_table(table_n, provenance, format, out);
    else if (*enum_cmd) code = run_enumerate(enum_kind, enum_params, limit, format, out);
    else if (*verify_cmd) code = run_verify(verify_n, fixed_point_limit, corrupt, format, out);
    std::cout << out.str() << std::flush;
    return code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
