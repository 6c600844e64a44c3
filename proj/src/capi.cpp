#include "gammavec/gammavec.h"

#include <cstring>
#include <functional>
#include <memory>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammavec/ballot.hpp"
#include "gammavec/harness.hpp"
#include "gammavec/matchgen.hpp"
#include "gammavec/polyring.hpp"

using namespace gammavec;

struct gv_poly {
  IntPolynomial poly;
  std::vector<std::string> text;
};

struct gv_symvec {
  SymVector vec;
  std::vector<std::string> text;
  std::string eval;
};

struct gv_table {
  std::vector<std::vector<std::string>> rows;
};

struct gv_report {
  std::vector<CheckReport> reports;
};

struct gv_stream {
  std::function<std::optional<std::string>()> next;
  std::string current;
};

namespace {

thread_local std::string g_last_error;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
gv_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return GV_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return GV_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return GV_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return GV_ERR_OUT_OF_RANGE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GV_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GV_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return GV_ERR_INTERNAL;
  }
}

template <class T>
void require(const T* ptr, const char* what) {
  if (ptr == nullptr) throw std::invalid_argument(std::string(what) + " must not be NULL");
}

Integer parse_decimal(const char* text) {
  if (text == nullptr) throw ParseError("NULL decimal string");
  Integer value;
  if (value.set_str(text, 10) != 0) throw ParseError(std::string("not a decimal integer: ") + text);
  return value;
}

std::vector<std::string> render(const std::vector<Integer>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

gv_poly* make_poly(IntPolynomial p) {
  auto* handle = new gv_poly{std::move(p), {}};
  handle->text = render(handle->poly.coeffs());
  return handle;
}

gv_symvec* make_symvec(SymVector v) {
  auto* handle = new gv_symvec{std::move(v), {}, {}};
  handle->text = render(handle->vec.entries);
  return handle;
}

Family to_family(gv_family f) {
  switch (f) {
    case GV_FAMILY_QFACT:
      return Family::QFactorial;
    case GV_FAMILY_DISTINCT:
      return Family::DistinctParts;
    case GV_FAMILY_QBINOM:
      return Family::QBinomial;
  }
  throw std::invalid_argument("unknown family");
}

Provenance to_provenance(gv_provenance p) {
  switch (p) {
    case GV_PROVENANCE_POLY:
      return Provenance::Poly;
    case GV_PROVENANCE_RECURRENCE:
      return Provenance::Recurrence;
    case GV_PROVENANCE_FIXEDPOINT:
      return Provenance::FixedPoint;
    case GV_PROVENANCE_ALTSUM:
      return Provenance::AltSum;
  }
  throw std::invalid_argument("unknown provenance");
}

const char* at(const std::vector<std::string>& v, std::size_t i) {
  if (i >= v.size()) throw std::out_of_range("index " + std::to_string(i) + " out of range");
  return v[i].c_str();
}

DecoratedBallotPath parse_path(const char* text) {
  if (text == nullptr) throw std::invalid_argument("path must not be NULL");
  try {
    return DecoratedBallotPath::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

template <class Stream, class Render>
std::function<std::optional<std::string>()> wrap(Stream stream, Render render_item) {
  auto shared = std::make_shared<Stream>(std::move(stream));
  return [shared, render_item]() -> std::optional<std::string> {
    auto item = shared->next();
    if (!item) return std::nullopt;
    return render_item(*item);
  };
}

void expect_params(std::size_t got, std::size_t want, const char* kind) {
  if (got != want)
    throw std::invalid_argument(std::string(kind) + " takes " + std::to_string(want) +
                                " parameter(s), got " + std::to_string(got));
}

}  // namespace

extern "C" {

const char* gv_version(void) { return "1.0.0"; }

const char* gv_status_string(gv_status status) {
  switch (status) {
    case GV_OK:
      return "ok";
    case GV_END:
      return "end of stream";
    case GV_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case GV_ERR_PARSE:
      return "parse error";
    case GV_ERR_OUT_OF_RANGE:
      return "out of range";
    case GV_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case GV_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* gv_last_error(void) { return g_last_error.c_str(); }

// Polynomials -----------------------------------------------------------------

gv_status gv_poly_family(gv_family family, unsigned n, unsigned k, gv_poly** out) {
  return guarded([&] {
    require(out, "out");
    *out = make_poly(family_polynomial(FamilyParams{to_family(family), n, k}));
  });
}

gv_status gv_poly_from_decimal(const char* const* coeffs, size_t count, gv_poly** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(coeffs, "coeffs");
    std::vector<Integer> values;
    values.reserve(count);
    for (size_t i = 0; i < count; ++i) values.push_back(parse_decimal(coeffs[i]));
    *out = make_poly(IntPolynomial(std::move(values)));
  });
}

void gv_poly_free(gv_poly* poly) { delete poly; }

size_t gv_poly_length(const gv_poly* poly) { return poly ? poly->text.size() : 0; }

gv_status gv_poly_coeff(const gv_poly* poly, size_t i, const char** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = at(poly->text, i);
  });
}

gv_status gv_poly_palindromic_degree(const gv_poly* poly, int* is_palindromic, size_t* degree) {
  return guarded([&] {
    require(poly, "poly");
    require(is_palindromic, "is_palindromic");
    require(degree, "degree");
    const auto d = palindromic_degree(poly->poly);
    *is_palindromic = d.has_value() ? 1 : 0;
    if (d) *degree = *d;
  });
}

gv_status gv_poly_is_unimodal(const gv_poly* poly, int* out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = is_unimodal(poly->poly) ? 1 : 0;
  });
}

gv_status gv_poly_g_vector(const gv_poly* poly, gv_symvec** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = make_symvec(g_vector(poly->poly));
  });
}

gv_status gv_poly_gamma_vector(const gv_poly* poly, gv_symvec** out) {
  return guarded([&] {
    require(poly, "poly");
    require(out, "out");
    *out = make_symvec(gamma_vector(poly->poly));
  });
}

// Vectors ---------------------------------------------------------------------

gv_status gv_symvec_create(gv_kind kind, size_t degree, size_t shift, const char* const* entries,
                           size_t count, gv_symvec** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(entries, "entries");
    if (kind != GV_KIND_G && kind != GV_KIND_GAMMA) throw std::invalid_argument("unknown kind");
    std::vector<Integer> values;
    for (size_t i = 0; i < count; ++i) values.push_back(parse_decimal(entries[i]));
    *out = make_symvec(SymVector::make(kind == GV_KIND_G ? VectorKind::G : VectorKind::Gamma,
                                       degree, std::move(values), shift));
  });
}

void gv_symvec_free(gv_symvec* vec) { delete vec; }

gv_kind gv_symvec_kind(const gv_symvec* vec) {
  return vec && vec->vec.kind == VectorKind::Gamma ? GV_KIND_GAMMA : GV_KIND_G;
}

size_t gv_symvec_degree(const gv_symvec* vec) { return vec ? vec->vec.degree : 0; }
size_t gv_symvec_shift(const gv_symvec* vec) { return vec ? vec->vec.shift : 0; }
size_t gv_symvec_size(const gv_symvec* vec) { return vec ? vec->text.size() : 0; }

gv_status gv_symvec_entry(const gv_symvec* vec, size_t i, const char** out) {
  return guarded([&] {
    require(vec, "vec");
    require(out, "out");
    *out = at(vec->text, i);
  });
}

gv_status gv_symvec_to_poly(const gv_symvec* vec, gv_poly** out) {
  return guarded([&] {
    require(vec, "vec");
    require(out, "out");
    *out = make_poly(vec->vec.kind == VectorKind::G ? from_g(vec->vec) : from_gamma(vec->vec));
  });
}

gv_status gv_symvec_g_from_gamma(const gv_symvec* gamma, gv_symvec** out) {
  return guarded([&] {
    require(gamma, "gamma");
    require(out, "out");
    *out = make_symvec(g_from_gamma(gamma->vec));
  });
}

gv_status gv_symvec_gamma_eval(gv_symvec* gamma, long z, const char** out) {
  return guarded([&] {
    require(gamma, "gamma");
    require(out, "out");
    gamma->eval = to_decimal(gamma_poly_eval(gamma->vec, Integer(z)));
    *out = gamma->eval.c_str();
  });
}

// Tables ----------------------------------------------------------------------

gv_status gv_table_compute(unsigned n_max, gv_provenance provenance, gv_table** out) {
  return guarded([&] {
    require(out, "out");
    const GTable table = gtable(n_max, to_provenance(provenance));
    auto handle = std::make_unique<gv_table>();
    for (const auto& [n, row] : table.rows) handle->rows.push_back(render(row));
    *out = handle.release();
  });
}

void gv_table_free(gv_table* table) { delete table; }

size_t gv_table_rows(const gv_table* table) { return table ? table->rows.size() : 0; }

size_t gv_table_row_length(const gv_table* table, size_t row) {
  return table && row < table->rows.size() ? table->rows[row].size() : 0;
}

gv_status gv_table_entry(const gv_table* table, size_t row, size_t i, const char** out) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    if (row >= table->rows.size()) throw std::out_of_range("row out of range");
    *out = at(table->rows[row], i);
  });
}

// Verification ----------------------------------------------------------------

gv_status gv_verify(unsigned n_max, const gv_verify_options* options, gv_report** out) {
  return guarded([&] {
    require(out, "out");
    CheckOptions opts;
    if (options) {
      if (options->fixed_point_limit != 0) opts.fixed_point_limit = options->fixed_point_limit;
      if (options->corrupt_basis)
        opts.basis_fault = BasisFault{options->corrupt_degree, options->corrupt_i,
                                      options->corrupt_j, options->corrupt_delta};
    }
    *out = new gv_report{check_all(n_max, opts)};
  });
}

void gv_report_free(gv_report* report) { delete report; }

size_t gv_report_count(const gv_report* report) { return report ? report->reports.size() : 0; }

int gv_report_all_passed(const gv_report* report) {
  return report && all_passed(report->reports) ? 1 : 0;
}

const char* gv_report_name(const gv_report* report, size_t idx) {
  if (!report || idx >= report->reports.size()) return nullptr;
  return report->reports[idx].name.c_str();
}

int gv_report_passed(const gv_report* report, size_t idx) {
  return report && idx < report->reports.size() && report->reports[idx].passed() ? 1 : 0;
}

const char* gv_report_witness(const gv_report* report, size_t idx) {
  if (!report || idx >= report->reports.size() || !report->reports[idx].witness) return nullptr;
  return report->reports[idx].witness->c_str();
}

size_t gv_report_param_count(const gv_report* report, size_t idx) {
  if (!report || idx >= report->reports.size()) return 0;
  return report->reports[idx].params.size();
}

const char* gv_report_param_key(const gv_report* report, size_t idx, size_t p) {
  if (p >= gv_report_param_count(report, idx)) return nullptr;
  return report->reports[idx].params[p].first.c_str();
}

const char* gv_report_param_value(const gv_report* report, size_t idx, size_t p) {
  if (p >= gv_report_param_count(report, idx)) return nullptr;
  return report->reports[idx].params[p].second.c_str();
}

// Streams ---------------------------------------------------------------------

gv_status gv_stream_open(gv_enum_kind kind, const unsigned* params, size_t param_count,
                         gv_stream** out) {
  return guarded([&] {
    require(out, "out");
    if (param_count > 0) require(params, "params");
    auto handle = std::make_unique<gv_stream>();
    switch (kind) {
      case GV_ENUM_BALLOT:
        expect_params(param_count, 2, "ballot");
        handle->next = wrap(ballot_enumerate(params[0], params[1]),
                            [](const BallotPath& p) { return p.word(); });
        break;
      case GV_ENUM_PATH_MATCHINGS:
        expect_params(param_count, 1, "path-matchings");
        handle->next = wrap(path_matchings(params[0]), [](const Matching& m) { return m.to_string(); });
        break;
      case GV_ENUM_CYCLE_MATCHINGS:
        expect_params(param_count, 1, "cycle-matchings");
        handle->next = wrap(cycle_matchings(params[0]), [](const Matching& m) { return m.to_string(); });
        break;
      case GV_ENUM_LUCANOMIAL:
        expect_params(param_count, 2, "lucanomial");
        handle->next = wrap(lucanomial_enumerate(params[0], params[1]),
                            [](const LucanomialMatching& m) { return m.to_string(); });
        break;
      case GV_ENUM_FIXED_POINTS:
        expect_params(param_count, 2, "fixed-points");
        handle->next = wrap(fixed_points(params[0], params[1]),
                            [](const DecoratedBallotPath& p) { return p.to_string(); });
        break;
      case GV_ENUM_DECORATED:
        expect_params(param_count, 2, "decorated");
        handle->next = wrap(decorated_paths(params[0], params[1]),
                            [](const DecoratedBallotPath& p) { return p.to_string(); });
        break;
      default:
        throw std::invalid_argument("unknown enumeration kind");
    }
    *out = handle.release();
  });
}

gv_status gv_stream_next(gv_stream* stream, const char** item) {
  bool exhausted = false;
  const gv_status status = guarded([&] {
    require(stream, "stream");
    require(item, "item");
    auto next = stream->next();
    if (!next) {
      exhausted = true;
      return;
    }
    stream->current = std::move(*next);
    *item = stream->current.c_str();
  });
  return status == GV_OK && exhausted ? GV_END : status;
}

void gv_stream_free(gv_stream* stream) { delete stream; }

// Decorated paths -------------------------------------------------------------

gv_status gv_decorated_involution(const char* path, char* buf, size_t buflen, size_t* needed) {
  std::string image;
  gv_status status = guarded([&] { image = involution(parse_path(path)).to_string(); });
  if (status != GV_OK) return status;
  if (needed) *needed = image.size() + 1;
  if (buf == nullptr || buflen < image.size() + 1) {
    g_last_error = "buffer needs " + std::to_string(image.size() + 1) + " bytes";
    return GV_ERR_BUFFER_TOO_SMALL;
  }
  std::memcpy(buf, image.c_str(), image.size() + 1);
  return GV_OK;
}

gv_status gv_decorated_active_valleys(const char* path, size_t* count) {
  return guarded([&] {
    require(count, "count");
    *count = parse_path(path).active_valleys().size();
  });
}

gv_status gv_decorated_decorated_count(const char* path, size_t* count) {
  return guarded([&] {
    require(count, "count");
    *count = parse_path(path).decorated_count();
  });
}

}  // extern "C"
