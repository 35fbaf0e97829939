// zdg: Laplacian spectra of zero-divisor graphs of Z_n.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "zdg/zdg.hpp"

namespace {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInvalidN = 2, kCapExceeded = 3, kIoError = 4 };

enum class Format { Json, Csv, Text };

const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
const std::map<std::string, zdg::Method> kMethods{{"auto", zdg::Method::Auto},
                                                  {"reduced", zdg::Method::Reduced},
                                                  {"brute", zdg::Method::Brute},
                                                  {"closed-form", zdg::Method::ClosedForm}};

bool check_composite(zdg::integer n) {
  if (n >= 1 && zdg::has_zero_divisors(zdg::factorize(n))) return true;
  std::cerr << "Z_" << n << " has no zero divisors\n";
  return false;
}

std::string render(const zdg::ordered_json& record, Format format) {
  switch (format) {
    case Format::Csv: return std::string(zdg::kCsvHeader) + "\n" + zdg::csv_row(record) + "\n";
    case Format::Text: return zdg::text_report(record);
    case Format::Json: break;
  }
  return zdg::canonical_json(record) + "\n";
}

// Runs fn(n) for every composite n in [lo, hi] on `jobs` threads; results in n order.
template <class Fn>
auto for_composites(zdg::integer lo, zdg::integer hi, unsigned jobs, Fn fn) {
  using Result = decltype(fn(zdg::integer{}));
  std::vector<zdg::integer> ns;
  for (zdg::integer n = std::max<zdg::integer>(lo, 4); n <= hi; ++n)
    if (zdg::has_zero_divisors(zdg::factorize(n))) ns.push_back(n);
  std::vector<std::optional<Result>> results(ns.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ns.size(); i = next++) results[i] = fn(ns[i]);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  std::vector<std::pair<zdg::integer, Result>> out;
  out.reserve(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) out.emplace_back(ns[i], std::move(*results[i]));
  return out;
}

int cmd_spectrum(zdg::integer n, zdg::Method method, Format format) {
  if (!check_composite(n)) return kInvalidN;
  try {
    std::cout << render(zdg::make_record(n, method, zdg::oracle_cap_from_env()), format);
  } catch (const zdg::oracle_cap_error& e) {
    std::cerr << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kInvalidN;
  }
  return kOk;
}

int cmd_analyze(zdg::integer n, Format format) {
  if (!check_composite(n)) return kInvalidN;
  std::cout << render(zdg::make_record(zdg::analyze(n)), format);
  return kOk;
}

int cmd_divisor_graph(zdg::integer n) {
  if (!check_composite(n)) return kInvalidN;
  const auto g = zdg::build_divisor_graph(n);
  auto join = [](const auto& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  };
  std::cout << "vertices: " << join(g.vertices()) << "\n";
  std::cout << "weights: " << join(g.weights()) << "\n";
  std::cout << "edges:\n";
  for (const auto& [a, b] : g.edges()) std::cout << a << " " << b << "\n";
  std::cout << "laplacian:\n";
  const auto l = zdg::weighted_laplacian(g);
  for (std::size_t i = 0; i < l.order(); ++i) {
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < l.order(); ++j) row.push_back(l(i, j));
    std::cout << join(row) << "\n";
  }
  return kOk;
}

int cmd_graph(zdg::integer n, bool edges) {
  if (!check_composite(n)) return kInvalidN;
  const std::size_t cap = zdg::oracle_cap_from_env();
  if (const auto z = zdg::zero_divisor_count(n); z > cap) {
    std::cerr << zdg::oracle_cap_error(z, cap).what() << "\n";
    return kCapExceeded;
  }
  const auto g = zdg::build_zero_divisor_graph(n);
  if (edges) {
    for (const auto& [x, y] : g.edges()) std::cout << x << " " << y << "\n";
    return kOk;
  }
  const auto deg = zdg::degrees(g);
  std::cout << "vertices: " << g.order() << "\n";
  std::cout << "edges: " << g.edge_count() << "\n";
  std::cout << "min_degree: " << *std::min_element(deg.begin(), deg.end()) << "\n";
  std::cout << "max_degree: " << *std::max_element(deg.begin(), deg.end()) << "\n";
  return kOk;
}

struct VerifyOutcome {
  enum Status { Pass, Fail, Skip } status = Pass;
  double deviation = 0.0;
  std::string detail;
};

int cmd_verify(zdg::integer lo, zdg::integer hi, std::size_t cap, unsigned jobs) {
  if (lo < 4 || lo > hi) {
    std::cerr << "verify: need 4 <= n_min <= n_max\n";
    return kInvalidN;
  }
  const auto results = for_composites(lo, hi, jobs, [cap](zdg::integer n) {
    VerifyOutcome o;
    try {
      const auto reduced = zdg::reduced_spectrum(n).total;
      const auto brute = zdg::brute_spectrum(n, cap);
      const auto cmp = zdg::compare_spectra(reduced, brute);
      o.status = cmp.match ? VerifyOutcome::Pass : VerifyOutcome::Fail;
      o.deviation = cmp.max_deviation;
    } catch (const zdg::oracle_cap_error& e) {
      o.status = VerifyOutcome::Skip;
      o.detail = e.what();
    }
    return o;
  });
  std::size_t checked = 0, passed = 0, failed = 0, skipped = 0;
  for (const auto& [n, o] : results) {
    char dev[32];
    std::snprintf(dev, sizeof dev, "%.3g", o.deviation);
    switch (o.status) {
      case VerifyOutcome::Pass:
        ++checked;
        ++passed;
        std::cout << n << " PASS max_dev=" << dev << "\n";
        break;
      case VerifyOutcome::Fail:
        ++checked;
        ++failed;
        std::cout << n << " FAIL max_dev=" << dev << "\n";
        break;
      case VerifyOutcome::Skip:
        ++skipped;
        std::cout << n << " SKIP " << o.detail << "\n";
        break;
    }
  }
  std::cout << "checked " << checked << ", passed " << passed << ", failed " << failed << "\n";
  if (skipped > 0) std::cout << "skipped " << skipped << " (oracle cap)\n";
  return failed == 0 ? kOk : kVerifyFailed;
}

int cmd_survey(zdg::integer lo, zdg::integer hi, const std::string& out_path, Format format, unsigned jobs) {
  if (lo > hi) {
    std::cerr << "survey: need n_min <= n_max\n";
    return kInvalidN;
  }
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot write " << out_path << "\n";
      return kIoError;
    }
  }
  std::ostream& os = out_path.empty() ? std::cout : file;
  const auto rows =
      for_composites(lo, hi, jobs, [](zdg::integer n) { return zdg::make_record(zdg::analyze(n)); });
  if (format == Format::Csv) os << zdg::kCsvHeader << "\n";
  for (const auto& [n, record] : rows) {
    if (format == Format::Csv)
      os << zdg::csv_row(record) << "\n";
    else if (format == Format::Text)
      os << zdg::text_report(record) << "\n";
    else
      os << zdg::canonical_json(record) << "\n";
  }
  os.flush();
  if (!os) {
    std::cerr << "write failed\n";
    return kIoError;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian spectra of zero-divisor graphs of Z_n"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 1 verification failure, 2 invalid n, 3 oracle cap exceeded, 4 I/O error.\n"
      "ZDG_ORACLE_CAP overrides the brute-force vertex cap (default 1200).\n"
      "CSV columns: " +
      std::string(zdg::kCsvHeader) +
      "\n  (spectrum is a semicolon-joined list of value:multiplicity pairs; mu is empty when undefined)");

  zdg::integer n = 0;
  zdg::integer lo = 0, hi = 0;
  auto format = Format::Json;
  auto method = zdg::Method::Auto;
  unsigned jobs = 1;

  auto* spectrum = app.add_subcommand("spectrum", "Laplacian spectrum and invariants of Gamma(Z_n)");
  spectrum->add_option("n", n)->required();
  spectrum->add_option("--method", method)->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  spectrum->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* analyze = app.add_subcommand("analyze", "Full analysis report, including quotient extremes");
  analyze->add_option("n", n)->required();
  analyze->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* divisor_graph = app.add_subcommand("divisor-graph", "Divisor graph, weights and weighted Laplacian");
  divisor_graph->add_option("n", n)->required();

  bool edges = false;
  auto* graph = app.add_subcommand("graph", "Explicit zero-divisor graph");
  graph->add_option("n", n)->required();
  graph->add_flag("--edges", edges, "Dump the edge list, one 'x y' pair per line");

  std::size_t cap = zdg::oracle_cap_from_env();
  auto* verify = app.add_subcommand("verify", "Compare reduced and brute-force spectra over a range");
  verify->add_option("n_min", lo)->required();
  verify->add_option("n_max", hi)->required();
  verify->add_option("--cap", cap, "Oracle vertex cap");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string out_path;
  auto* survey = app.add_subcommand("survey", "One record per composite n in a range");
  survey->add_option("n_min", lo)->required();
  survey->add_option("n_max", hi)->required();
  survey->add_option("--out", out_path, "Output file (default stdout)");
  survey->add_option("--format", format)->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  survey->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  if (*spectrum) return cmd_spectrum(n, method, format);
  if (*analyze) return cmd_analyze(n, format);
  if (*divisor_graph) return cmd_divisor_graph(n);
  if (*graph) return cmd_graph(n, edges);
  if (*verify) return cmd_verify(lo, hi, cap, jobs);
  if (*survey) return cmd_survey(lo, hi, out_path, survey->count("--format") ? format : Format::Csv, jobs);
  return kOk;
}
