#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

#include "json.hpp"
#include "zdg/analysis.hpp"
#include "zdg/join_spectrum.hpp"

namespace zdg {

enum class Method { Auto, Reduced, Brute, ClosedForm };

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::Reduced: return "reduced";
    case Method::Brute: return "brute";
    case Method::ClosedForm: return "closed_form";
    case Method::Auto: break;
  }
  return "auto";
}

// Method actually used for n: auto picks the closed form for prime powers.
inline Method resolve_method(Method m, const Factorization& f) {
  if (m != Method::Auto) return m;
  return f.is_prime_power() ? Method::ClosedForm : Method::Reduced;
}

inline SpectrumMultiset spectrum_by_method(integer n, Method m, std::size_t cap = kDefaultOracleCap) {
  const auto f = factorize(n);
  if (!has_zero_divisors(f)) throw empty_graph_error("Z_" + std::to_string(n) + " has no zero divisors");
  switch (resolve_method(m, f)) {
    case Method::Brute: return brute_spectrum(n, cap);
    case Method::ClosedForm:
      if (!f.is_prime_power()) throw std::invalid_argument("closed-form spectrum needs a prime power");
      return prime_power_spectrum(f.factors[0].prime, f.factors[0].exponent);
    default: return reduced_spectrum(n).total;
  }
}

// Up to 12 significant digits; integral values print without a decimal point.
inline std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

using ordered_json = nlohmann::ordered_json;

inline ordered_json spectrum_json(const SpectrumMultiset& s) {
  ordered_json out = ordered_json::array();
  for (const auto& e : s.entries()) {
    ordered_json entry;
    if (e.exact)
      entry["value"] = static_cast<std::int64_t>(e.value);
    else
      entry["value"] = e.value;
    entry["multiplicity"] = e.multiplicity;
    entry["exact"] = e.exact;
    out.push_back(std::move(entry));
  }
  return out;
}

// One output record; keys in a fixed order.
inline ordered_json make_record(integer n, Method method, std::size_t cap = kDefaultOracleCap) {
  const auto g = build_divisor_graph(n);
  const auto& f = g.factorization();
  const auto spectrum = spectrum_by_method(n, method, cap);
  const auto degs = zero_divisor_degrees_by_class(g);
  const auto mu = algebraic_connectivity(spectrum);

  ordered_json r;
  r["n"] = n;
  r["vertex_count"] = zero_divisor_count(f);
  r["spectrum"] = spectrum_json(spectrum);
  r["mu"] = mu ? ordered_json(*mu) : ordered_json(nullptr);
  r["lambda"] = spectral_radius(spectrum);
  r["kappa"] = vertex_connectivity(f);
  r["delta"] = *std::min_element(degs.begin(), degs.end());
  r["Delta"] = *std::max_element(degs.begin(), degs.end());
  r["laplacian_integral"] = is_laplacian_integral(g);
  r["complement_disconnected"] = complement_disconnected(f);
  r["lambda_equals_order"] = lambda_equals_order(f);
  r["mu_equals_kappa"] = mu_equals_kappa(f);
  r["method"] = method_name(resolve_method(method, f));
  return r;
}

inline ordered_json make_record(const AnalysisReport& a) {
  ordered_json r;
  r["n"] = a.n;
  r["vertex_count"] = a.vertex_count;
  r["spectrum"] = spectrum_json(a.spectrum);
  r["mu"] = a.mu ? ordered_json(*a.mu) : ordered_json(nullptr);
  r["lambda"] = a.lambda;
  r["kappa"] = a.kappa;
  r["delta"] = a.delta_min;
  r["Delta"] = a.delta_max;
  r["laplacian_integral"] = a.laplacian_integral;
  r["complement_disconnected"] = a.complement_disconnected;
  r["lambda_equals_order"] = a.lambda_equals_order;
  r["mu_equals_kappa"] = a.mu_equals_kappa;
  r["mu_from_quotient"] = a.mu_from_quotient;
  r["lambda_from_quotient"] = a.lambda_from_quotient;
  r["method"] = "reduced";
  return r;
}

// Compact JSON with keys in stored order and floats via format_number, so that
// parsing the output and writing it again gives the same bytes.
inline void write_canonical(std::string& out, const ordered_json& j) {
  switch (j.type()) {
    case ordered_json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += ordered_json(key).dump();
        out += ':';
        write_canonical(out, value);
      }
      out += '}';
      break;
    }
    case ordered_json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += ',';
        write_canonical(out, j[i]);
      }
      out += ']';
      break;
    }
    case ordered_json::value_t::number_float: out += format_number(j.get<double>()); break;
    default: out += j.dump(); break;
  }
}

inline std::string canonical_json(const ordered_json& j) {
  std::string out;
  write_canonical(out, j);
  return out;
}

inline constexpr std::string_view kCsvHeader =
    "n,vertex_count,mu,lambda,kappa,delta,Delta,integral,comp_disconn,lam_eq_order,mu_eq_kappa,spectrum";

inline std::string csv_row(const ordered_json& r) {
  auto num = [](const ordered_json& v) -> std::string {
    if (v.is_null()) return "";
    if (v.is_number_float()) return format_number(v.get<double>());
    return v.dump();
  };
  auto flag = [](const ordered_json& v) { return v.get<bool>() ? std::string("true") : std::string("false"); };
  std::string spectrum;
  for (const auto& e : r["spectrum"]) {
    if (!spectrum.empty()) spectrum += ';';
    spectrum += num(e["value"]) + ":" + e["multiplicity"].dump();
  }
  return num(r["n"]) + "," + num(r["vertex_count"]) + "," + num(r["mu"]) + "," + num(r["lambda"]) + "," +
         num(r["kappa"]) + "," + num(r["delta"]) + "," + num(r["Delta"]) + "," + flag(r["laplacian_integral"]) +
         "," + flag(r["complement_disconnected"]) + "," + flag(r["lambda_equals_order"]) + "," +
         flag(r["mu_equals_kappa"]) + "," + spectrum;
}

inline std::string text_report(const ordered_json& r) {
  std::string out;
  for (const auto& [key, value] : r.items()) {
    out += key;
    out += ": ";
    if (key == "spectrum") {
      std::string s;
      for (const auto& e : value) {
        if (!s.empty()) s += ", ";
        s += (e["value"].is_number_float() ? format_number(e["value"].get<double>()) : e["value"].dump()) + "^" +
             e["multiplicity"].dump();
      }
      out += "{" + s + "}";
    } else if (value.is_number_float()) {
      out += format_number(value.get<double>());
    } else if (value.is_string()) {
      out += value.get<std::string>();
    } else {
      out += value.dump();
    }
    out += '\n';
  }
  return out;
}

}  // namespace zdg
