// stirling -- command-line front end over the C API (stirling.h only; no
// C++ core headers).
//
// Subcommands:
//   coeffs     exact Stirling coefficients, cross-checked across methods
//   eval       Gamma*(x), the m-term partial sum, and their difference
//   remainder  R_m(x) by one route or all three
//   verify     three-route agreement over a batch of (m, x) pairs
//   invert     Lagrange inversion of the saddle map with remainder Q_m
//
// Exit codes: 0 success; 2 usage/domain/integrity; 3 accuracy/contour
// failures (and verify batches with failing rows).

#include "stirling.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace {

using ordered_json = nlohmann::ordered_json;

int exit_code_for(stirling_status status) {
  switch (status) {
  case STIRLING_OK:
    return 0;
  case STIRLING_ERR_USAGE:
  case STIRLING_ERR_DOMAIN:
  case STIRLING_ERR_INTEGRITY:
    return 2;
  case STIRLING_ERR_ACCURACY:
  case STIRLING_ERR_CONTOUR:
  case STIRLING_ERR_INTERNAL:
  default:
    return 3;
  }
}

[[nodiscard]] int fail(stirling_status status) {
  std::fprintf(stderr, "error: %s\n", stirling_last_error());
  return exit_code_for(status);
}

std::string fmt(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

void warn_small_x(double x) {
  if (x > 0.0 && x < 2.0)
    std::fprintf(stderr,
                 "warning: x = %g is small; the asymptotic expansion is "
                 "poorly conditioned for x < 2\n",
                 x);
}

const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names = {
      "series",  "recurrence", "partition", "partition_alt",
      "assoc3",  "first_kind", "lambda"};
  return names;
}

// Comma-split method list ("all" allowed) -> API bitmask.
bool mask_from_names(const std::vector<std::string>& names, unsigned* mask,
                     std::string* bad) {
  unsigned out = 0;
  for (const auto& name : names) {
    if (name == "all") {
      out |= STIRLING_METHODS_ALL;
      continue;
    }
    bool found = false;
    for (size_t bit = 0; bit < method_names().size(); ++bit)
      if (name == method_names()[bit]) {
        out |= 1u << bit;
        found = true;
        break;
      }
    if (!found) {
      *bad = name;
      return false;
    }
  }
  *mask = out;
  return true;
}

// "m:x[,m:x...]" -> pairs; returns false on malformed input.
bool parse_pairs(const std::string& text, std::vector<stirling_pair>* out,
                 std::string* bad) {
  out->clear();
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string token = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t colon = token.find(':');
    bool ok = colon != std::string::npos && colon > 0 &&
              colon + 1 < token.size();
    if (ok) {
      try {
        size_t used = 0;
        int m = std::stoi(token.substr(0, colon), &used);
        ok = used == colon;
        size_t used_x = 0;
        std::string xs = token.substr(colon + 1);
        double x = std::stod(xs, &used_x);
        ok = ok && used_x == xs.size();
        if (ok)
          out->push_back({m, x});
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok) {
      *bad = token;
      return false;
    }
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  return !out->empty();
}

// ---------------------------------------------------------------- coeffs --

int cmd_coeffs(int n_max, const std::vector<std::string>& method_args,
               const std::string& format) {
  unsigned mask = 0;
  std::string bad;
  if (!mask_from_names(method_args, &mask, &bad)) {
    std::fprintf(stderr, "error: unknown method '%s'\n", bad.c_str());
    return 2;
  }

  stirling_coeff_table* table = nullptr;
  if (auto st = stirling_coeff_table_create(n_max, mask, &table);
      st != STIRLING_OK)
    return fail(st);

  const size_t rows = stirling_coeff_table_rows(table);
  if (format == "json") {
    ordered_json doc;
    doc["n_max"] = n_max;
    ordered_json methods = ordered_json::array();
    for (size_t bit = 0; bit < method_names().size(); ++bit)
      if ((mask & (1u << bit)) != 0u)
        methods.push_back(method_names()[bit]);
    doc["methods"] = methods;
    // One record per (n, method); the table is already cross-checked, so
    // records sharing n carry identical values.
    ordered_json records = ordered_json::array();
    for (size_t i = 0; i < rows; ++i) {
      int n = 0;
      const char* method = nullptr;
      const char* value = nullptr;
      stirling_coeff_table_row(table, i, &n, &method, &value);
      records.push_back({{"n", n}, {"method", method}, {"value", value}});
    }
    doc["records"] = records;
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    std::printf("# n  gamma_n  methods\n");
    int current_n = -1;
    const char* current_value = nullptr;
    size_t count = 0;
    auto flush = [&] {
      if (current_n >= 0)
        std::printf("%d  %s  %zu\n", current_n, current_value, count);
    };
    for (size_t i = 0; i < rows; ++i) {
      int n = 0;
      const char* value = nullptr;
      stirling_coeff_table_row(table, i, &n, nullptr, &value);
      if (n != current_n) {
        flush();
        current_n = n;
        current_value = value;
        count = 1;
      } else {
        ++count;
      }
    }
    flush();
  }
  stirling_coeff_table_free(table);
  return 0;
}

// ------------------------------------------------------------------ eval --

int cmd_eval(double x, int m, const std::string& format, int precision) {
  warn_small_x(x);
  stirling_eval_result r{};
  if (auto st = stirling_eval(x, m, &r); st != STIRLING_OK)
    return fail(st);
  if (format == "json") {
    ordered_json doc;
    doc["x"] = x;
    doc["m"] = m;
    doc["gamma_star"] = r.gamma_star;
    doc["partial_sum"] = r.partial_sum;
    doc["remainder"] = r.remainder;
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    std::printf("gamma_star   %s\n", fmt(r.gamma_star, precision).c_str());
    std::printf("partial_sum  %s\n", fmt(r.partial_sum, precision).c_str());
    std::printf("remainder    %s\n", fmt(r.remainder, precision).c_str());
  }
  return 0;
}

// ------------------------------------------------------------- remainder --

int cmd_remainder(int m, double x, const std::string& route,
                  const std::string& format, int precision) {
  warn_small_x(x);
  struct Row {
    std::string route;
    double value = 0.0;
    bool has_quad = false;
    double error = 0.0;
    uint64_t evaluations = 0;
  };
  std::vector<Row> out;

  auto add_difference = [&]() -> stirling_status {
    double v = 0.0;
    auto st = stirling_remainder_difference(m, x, &v);
    if (st == STIRLING_OK)
      out.push_back({"difference", v, false, 0.0, 0});
    return st;
  };
  auto add_integral = [&](bool boyd) -> stirling_status {
    stirling_quad_result q{};
    auto st = stirling_remainder_integral(m, x, boyd ? 1 : 0, &q);
    if (st == STIRLING_OK)
      out.push_back({boyd ? "boyd" : "new", q.value_re, true,
                     q.error_estimate, q.evaluations});
    return st;
  };

  stirling_status st = STIRLING_OK;
  if (route == "difference")
    st = add_difference();
  else if (route == "new")
    st = add_integral(false);
  else if (route == "boyd")
    st = add_integral(true);
  else { // all
    st = add_difference();
    if (st == STIRLING_OK)
      st = add_integral(false);
    if (st == STIRLING_OK)
      st = add_integral(true);
  }
  if (st != STIRLING_OK)
    return fail(st);

  if (format == "json") {
    ordered_json doc;
    doc["m"] = m;
    doc["x"] = x;
    ordered_json routes = ordered_json::array();
    for (const auto& r : out) {
      ordered_json row;
      row["route"] = r.route;
      row["value"] = r.value;
      if (r.has_quad) {
        row["error_estimate"] = r.error;
        row["evaluations"] = r.evaluations;
      }
      routes.push_back(row);
    }
    doc["routes"] = routes;
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    std::printf("# route  value  error_estimate  evaluations\n");
    for (const auto& r : out) {
      if (r.has_quad)
        std::printf("%s  %s  %s  %" PRIu64 "\n", r.route.c_str(),
                    fmt(r.value, precision).c_str(),
                    fmt(r.error, 3).c_str(), r.evaluations);
      else
        std::printf("%s  %s  -  -\n", r.route.c_str(),
                    fmt(r.value, precision).c_str());
    }
  }
  return 0;
}

// ---------------------------------------------------------------- verify --

int cmd_verify(const std::string& pairs_text, double tol,
               const std::string& format, int precision) {
  std::vector<stirling_pair> pairs;
  std::string bad;
  if (!parse_pairs(pairs_text, &pairs, &bad)) {
    std::fprintf(stderr,
                 "error: bad --pairs token '%s' (expected m:x[,m:x...])\n",
                 bad.c_str());
    return 2;
  }

  stirling_verify_report* report = nullptr;
  if (auto st = stirling_verify(pairs.data(), pairs.size(), tol, &report);
      st != STIRLING_OK)
    return fail(st);

  const size_t rows = stirling_verify_report_rows(report);
  const bool all_passed = stirling_verify_report_all_passed(report) != 0;

  if (format == "json") {
    ordered_json doc;
    doc["tol"] = tol;
    ordered_json jrows = ordered_json::array();
    for (size_t i = 0; i < rows; ++i) {
      stirling_verify_row r{};
      stirling_verify_report_row(report, i, &r);
      ordered_json row;
      row["m"] = r.m;
      row["x"] = r.x;
      row["r_difference"] = r.r_difference;
      row["r_new"] = r.r_new;
      row["r_boyd"] = r.r_boyd;
      row["max_pairwise_delta"] = r.max_pairwise_delta;
      row["passed"] = r.passed != 0;
      row["message"] = stirling_verify_report_message(report, i);
      jrows.push_back(row);
    }
    doc["rows"] = jrows;
    doc["all_passed"] = all_passed;
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    std::printf(
        "# m  x  r_difference  r_new  r_boyd  max_delta  status\n");
    for (size_t i = 0; i < rows; ++i) {
      stirling_verify_row r{};
      stirling_verify_report_row(report, i, &r);
      std::printf("%d  %s  %s  %s  %s  %s  %s\n", r.m,
                  fmt(r.x, precision).c_str(),
                  fmt(r.r_difference, precision).c_str(),
                  fmt(r.r_new, precision).c_str(),
                  fmt(r.r_boyd, precision).c_str(),
                  fmt(r.max_pairwise_delta, 3).c_str(),
                  r.passed != 0 ? "pass"
                                : stirling_verify_report_message(report, i));
    }
    std::printf("%s\n", all_passed ? "all routes agree" : "DISAGREEMENT");
  }
  stirling_verify_report_free(report);
  return all_passed ? 0 : 3;
}

// ---------------------------------------------------------------- invert --

int cmd_invert(double u, int m, bool show_coeffs, const std::string& format,
               int precision) {
  stirling_inversion_result r{};
  if (auto st = stirling_invert(u, m, &r); st != STIRLING_OK)
    return fail(st);

  std::vector<std::string> coeff_strings;
  std::string correction_string;
  if (show_coeffs) {
    for (int n = 1; n <= m; ++n) {
      char* value = nullptr;
      if (auto st = stirling_inversion_coefficient(m, n, &value);
          st != STIRLING_OK)
        return fail(st);
      coeff_strings.emplace_back(value);
      stirling_string_free(value);
    }
    char* cval = nullptr;
    if (auto st = stirling_correction_coefficient(m, &cval);
        st != STIRLING_OK)
      return fail(st);
    correction_string = cval;
    stirling_string_free(cval);
  }

  if (format == "json") {
    ordered_json doc;
    doc["u"] = u;
    doc["m"] = m;
    if (show_coeffs) {
      ordered_json arr = ordered_json::array();
      for (const auto& s : coeff_strings)
        arr.push_back(s);
      doc["series_coefficients"] = arr;
      doc["correction_coefficient"] = correction_string;
    }
    doc["series_value"] = r.series_value;
    doc["correction"] = r.correction;
    doc["remainder"] = {{"value_re", r.remainder_re},
                        {"value_im", r.remainder_im},
                        {"error_estimate", r.remainder_error},
                        {"evaluations", r.remainder_evaluations}};
    doc["newton_t"] = r.newton_t;
    doc["defect"] = r.defect;
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    if (show_coeffs) {
      for (int n = 1; n <= m; ++n)
        std::printf("a_%d  %s\n", n, coeff_strings[(size_t)(n - 1)].c_str());
      std::printf("c_%d  %s\n", m, correction_string.c_str());
    }
    std::printf("series      %s\n", fmt(r.series_value, precision).c_str());
    std::printf("correction  %s\n", fmt(r.correction, precision).c_str());
    std::printf("Q_m         %s (err %s, %" PRIu64 " evals)\n",
                fmt(r.remainder_re, precision).c_str(),
                fmt(r.remainder_error, 3).c_str(), r.remainder_evaluations);
    std::printf("newton_t    %s\n", fmt(r.newton_t, precision).c_str());
    std::printf("defect      %s\n", fmt(r.defect, 3).c_str());
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stirling coefficients, gamma asymptotics, and remainder "
               "cross-validation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(stirling_version()));

  std::string format = "text";
  int precision = 15;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--precision", precision,
                    "Significant digits in text output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
  };

  // coeffs
  auto* coeffs = app.add_subcommand(
      "coeffs", "Exact Stirling coefficients gamma_0..gamma_n");
  int n_max = 4;
  std::vector<std::string> methods{"all"};
  coeffs->add_option("--n-max", n_max, "Highest coefficient index")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  coeffs
      ->add_option("--methods", methods,
                   "Comma-separated methods (series, recurrence, partition, "
                   "partition_alt, assoc3, first_kind, lambda) or 'all'")
      ->delimiter(',')
      ->capture_default_str();
  add_common(coeffs);

  // eval
  auto* eval = app.add_subcommand(
      "eval", "Gamma*(x), m-term partial sum, and remainder");
  double eval_x = 0.0;
  int eval_m = 2;
  eval->add_option("--x", eval_x, "Argument x > 0")->required();
  eval->add_option("--m", eval_m, "Terms in the partial sum")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  add_common(eval);

  // remainder
  auto* rem = app.add_subcommand(
      "remainder", "Expansion remainder R_m(x) by integral or difference");
  int rem_m = 2;
  double rem_x = 0.0;
  std::string rem_route = "all";
  rem->add_option("--m", rem_m, "Number of expansion terms")
      ->check(CLI::Range(1, 32))
      ->capture_default_str();
  rem->add_option("--x", rem_x, "Argument x > 0")->required();
  rem->add_option("--route", rem_route, "Evaluation route")
      ->check(CLI::IsMember({"new", "boyd", "difference", "all"}))
      ->capture_default_str();
  add_common(rem);

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Cross-validate the three remainder routes");
  std::string pairs = "1:8,2:8,3:12,2:20";
  double tol = 1e-6;
  verify->add_option("--pairs", pairs, "Batch as m:x[,m:x...]")
      ->capture_default_str();
  verify->add_option("--tol", tol, "Relative agreement tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(verify);

  // invert
  auto* invert = app.add_subcommand(
      "invert", "Lagrange inversion of the saddle map with remainder Q_m");
  double inv_u = 0.0;
  int inv_m = 2;
  bool inv_coeffs = false;
  invert->add_option("--u", inv_u, "Inversion argument u")->required();
  invert->add_option("--m", inv_m, "Series terms before the remainder")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  invert->add_flag("--coeffs", inv_coeffs,
                   "Also print the exact a_n and c_m coefficients");
  add_common(invert);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help/--version exit 0; every other parse problem is a usage error.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (coeffs->parsed())
    return cmd_coeffs(n_max, methods, format);
  if (eval->parsed())
    return cmd_eval(eval_x, eval_m, format, precision);
  if (rem->parsed())
    return cmd_remainder(rem_m, rem_x, rem_route, format, precision);
  if (verify->parsed())
    return cmd_verify(pairs, tol, format, precision);
  if (invert->parsed())
    return cmd_invert(inv_u, inv_m, inv_coeffs, format, precision);
  return 2; // unreachable with require_subcommand(1)
}
