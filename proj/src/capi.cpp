// C boundary: translates the C++ core to the flat API in stirling.h.
// All exceptions are caught here and mapped to status codes; the message
// lands in a thread-local buffer for stirling_last_error().

#include "stirling.h"

#include "asymptotics.hpp"
#include "coefficients.hpp"
#include "errors.hpp"
#include "lagrange.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

namespace {

thread_local std::string t_last_error;

template <typename Fn> stirling_status guarded(Fn&& fn) {
  try {
    fn();
    return STIRLING_OK;
  } catch (const stirling::UsageError& e) {
    t_last_error = e.what();
    return STIRLING_ERR_USAGE;
  } catch (const stirling::InsufficientOrderError& e) {
    t_last_error = e.what();
    return STIRLING_ERR_USAGE;
  } catch (const stirling::DomainError& e) {
    t_last_error = e.what();
    return STIRLING_ERR_DOMAIN;
  } catch (const stirling::AccuracyError& e) {
    t_last_error = e.what();
    return STIRLING_ERR_ACCURACY;
  } catch (const stirling::ContourError& e) {
    t_last_error = e.what();
    return STIRLING_ERR_CONTOUR;
  } catch (const stirling::IntegrityError& e) {
    t_last_error = e.what();
    return STIRLING_ERR_INTEGRITY;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return STIRLING_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return STIRLING_ERR_INTERNAL;
  }
}

stirling_status usage_failure(const char* message) {
  t_last_error = message;
  return STIRLING_ERR_USAGE;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr)
    std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Methods selected by the mask, in bit (= enum) order.
std::vector<stirling::coeffs::Method> methods_from_mask(unsigned mask) {
  if (mask == 0u)
    throw stirling::UsageError("methods mask selects no methods");
  if ((mask & ~STIRLING_METHODS_ALL) != 0u)
    throw stirling::UsageError("methods mask has unknown bits set");
  std::vector<stirling::coeffs::Method> methods;
  for (int bit = 0; bit < stirling::coeffs::kMethodCount; ++bit)
    if ((mask & (1u << bit)) != 0u)
      methods.push_back(static_cast<stirling::coeffs::Method>(bit));
  return methods;
}

} // namespace

struct stirling_coeff_table {
  struct Row {
    int n;
    std::string method;
    std::string value;
  };
  std::vector<Row> rows;
};

struct stirling_verify_report {
  std::vector<stirling::asym::EquivalenceRow> rows;
};

extern "C" {

const char* stirling_last_error(void) { return t_last_error.c_str(); }

const char* stirling_version(void) { return "0.1.0"; }

void stirling_string_free(char* s) { std::free(s); }

stirling_status stirling_gamma_coefficient(int n, const char* method,
                                           char** value_out) {
  if (method == nullptr || value_out == nullptr)
    return usage_failure("stirling_gamma_coefficient: NULL pointer argument");
  return guarded([&] {
    const auto m = stirling::coeffs::method_from_name(method);
    if (!m)
      throw stirling::UsageError(std::string("unknown method name: ") +
                                 method);
    *value_out = dup_string(stirling::coeffs::gamma_coefficient(n, *m).str());
    if (*value_out == nullptr)
      throw std::bad_alloc();
  });
}

stirling_status stirling_coeff_table_create(int n_max, unsigned methods_mask,
                                            stirling_coeff_table** out) {
  if (out == nullptr)
    return usage_failure("stirling_coeff_table_create: NULL output pointer");
  return guarded([&] {
    const auto methods = methods_from_mask(methods_mask);
    const auto records = stirling::coeffs::coefficient_table(n_max, methods);
    auto table = std::make_unique<stirling_coeff_table>();
    table->rows.reserve(records.size());
    for (const auto& r : records)
      table->rows.push_back({r.n,
                             std::string(stirling::coeffs::method_name(
                                 r.method)),
                             r.value.str()});
    *out = table.release();
  });
}

size_t stirling_coeff_table_rows(const stirling_coeff_table* table) {
  return table == nullptr ? 0 : table->rows.size();
}

stirling_status stirling_coeff_table_row(const stirling_coeff_table* table,
                                         size_t row, int* n_out,
                                         const char** method_out,
                                         const char** value_out) {
  if (table == nullptr)
    return usage_failure("stirling_coeff_table_row: NULL table");
  if (row >= table->rows.size())
    return usage_failure("stirling_coeff_table_row: row out of range");
  const auto& r = table->rows[row];
  if (n_out != nullptr)
    *n_out = r.n;
  if (method_out != nullptr)
    *method_out = r.method.c_str();
  if (value_out != nullptr)
    *value_out = r.value.c_str();
  return STIRLING_OK;
}

void stirling_coeff_table_free(stirling_coeff_table* table) { delete table; }

stirling_status stirling_gamma(double x, double* out) {
  if (out == nullptr)
    return usage_failure("stirling_gamma: NULL output pointer");
  return guarded([&] { *out = stirling::asym::gamma_reference(x); });
}

stirling_status stirling_gamma_star(double x, double* out) {
  if (out == nullptr)
    return usage_failure("stirling_gamma_star: NULL output pointer");
  return guarded([&] { *out = stirling::asym::gamma_star_reference(x); });
}

stirling_status stirling_eval(double x, int m, stirling_eval_result* out) {
  if (out == nullptr)
    return usage_failure("stirling_eval: NULL output pointer");
  return guarded([&] {
    const double gs = stirling::asym::gamma_star_reference(x);
    const double ps = stirling::asym::partial_sum(m, x);
    out->gamma_star = gs;
    out->partial_sum = ps;
    out->remainder = gs - ps;
  });
}

stirling_status stirling_remainder_difference(int m, double x, double* out) {
  if (out == nullptr)
    return usage_failure("stirling_remainder_difference: NULL output pointer");
  return guarded([&] { *out = stirling::asym::remainder_by_difference(m, x); });
}

stirling_status stirling_remainder_integral(int m, double x, int boyd,
                                            stirling_quad_result* out) {
  if (out == nullptr)
    return usage_failure("stirling_remainder_integral: NULL output pointer");
  return guarded([&] {
    const auto r = boyd != 0 ? stirling::asym::remainder_boyd_integral(m, x)
                             : stirling::asym::remainder_new_integral(m, x);
    out->value_re = r.value;
    out->value_im = 0.0;
    out->error_estimate = r.error_estimate;
    out->evaluations = r.evaluations;
  });
}

stirling_status stirling_verify(const stirling_pair* pairs, size_t n_pairs,
                                double tol, stirling_verify_report** out) {
  if (out == nullptr)
    return usage_failure("stirling_verify: NULL output pointer");
  if (pairs == nullptr && n_pairs > 0)
    return usage_failure("stirling_verify: NULL pairs with n_pairs > 0");
  return guarded([&] {
    std::vector<stirling::asym::EquivalencePair> ps;
    ps.reserve(n_pairs);
    for (size_t i = 0; i < n_pairs; ++i)
      ps.push_back({pairs[i].m, pairs[i].x});
    auto report = std::make_unique<stirling_verify_report>();
    report->rows = stirling::asym::equivalence_report(ps, tol);
    *out = report.release();
  });
}

size_t stirling_verify_report_rows(const stirling_verify_report* report) {
  return report == nullptr ? 0 : report->rows.size();
}

stirling_status stirling_verify_report_row(const stirling_verify_report* rep,
                                           size_t row,
                                           stirling_verify_row* out) {
  if (rep == nullptr || out == nullptr)
    return usage_failure("stirling_verify_report_row: NULL pointer argument");
  if (row >= rep->rows.size())
    return usage_failure("stirling_verify_report_row: row out of range");
  const auto& r = rep->rows[row];
  out->m = r.m;
  out->x = r.x;
  out->r_difference = r.r_difference;
  out->r_new = r.r_new;
  out->r_boyd = r.r_boyd;
  out->max_pairwise_delta = r.max_pairwise_delta;
  out->passed = r.passed ? 1 : 0;
  return STIRLING_OK;
}

const char* stirling_verify_report_message(const stirling_verify_report* rep,
                                           size_t row) {
  if (rep == nullptr || row >= rep->rows.size())
    return "";
  return rep->rows[row].message.c_str();
}

int stirling_verify_report_all_passed(const stirling_verify_report* report) {
  if (report == nullptr)
    return 0;
  return std::all_of(report->rows.begin(), report->rows.end(),
                     [](const auto& r) { return r.passed; })
             ? 1
             : 0;
}

void stirling_verify_report_free(stirling_verify_report* report) {
  delete report;
}

stirling_status stirling_inversion_coefficient(int m, int n,
                                               char** value_out) {
  if (value_out == nullptr)
    return usage_failure("stirling_inversion_coefficient: NULL output");
  return guarded([&] {
    if (n < 1 || n > m)
      throw stirling::UsageError(
          "stirling_inversion_coefficient: need 1 <= n <= m");
    const auto phi = stirling::lagrange::phi_series(m);
    const auto a = stirling::lagrange::inversion_series_coeffs(phi, m);
    *value_out = dup_string(a[static_cast<size_t>(n - 1)].str());
    if (*value_out == nullptr)
      throw std::bad_alloc();
  });
}

stirling_status stirling_correction_coefficient(int m, char** value_out) {
  if (value_out == nullptr)
    return usage_failure("stirling_correction_coefficient: NULL output");
  return guarded([&] {
    const auto phi = stirling::lagrange::phi_series(std::max(m, 0));
    *value_out =
        dup_string(stirling::lagrange::correction_coefficient(phi, m).str());
    if (*value_out == nullptr)
      throw std::bad_alloc();
  });
}

stirling_status stirling_invert(double u, int m,
                                stirling_inversion_result* out) {
  if (out == nullptr)
    return usage_failure("stirling_invert: NULL output pointer");
  return guarded([&] {
    const auto r = stirling::lagrange::invert_with_remainder(u, m);
    out->series_value = r.series_value;
    out->correction = r.correction;
    out->remainder_re = r.remainder.value.real();
    out->remainder_im = r.remainder.value.imag();
    out->remainder_error = r.remainder.error_estimate;
    out->remainder_evaluations = r.remainder.evaluations;
    out->newton_t = r.newton_t;
    out->defect = r.defect;
  });
}

} // extern "C"
