#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rocbounds/bounds.hpp"
#include "rocbounds/gaussian.hpp"
#include "rocbounds/json_io.hpp"
#include "rocbounds/roc.hpp"
#include "rocbounds/suites.hpp"
#include "rocbounds/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParsedLine {
  double value = 0.0;
  std::optional<int> label;
};

std::optional<ParsedLine> parse_line(const std::string& raw, const std::string& path,
                                     std::size_t lineno) {
  std::string line = raw;
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return std::nullopt;
  const auto last = line.find_last_not_of(" \t\r\n");
  line = line.substr(first, last - first + 1);

  ParsedLine out;
  std::string value_part = line;
  if (auto comma = line.find(','); comma != std::string::npos) {
    value_part = line.substr(0, comma);
    const std::string label_part = line.substr(comma + 1);
    if (label_part == "0")
      out.label = 0;
    else if (label_part == "1")
      out.label = 1;
    else
      throw InputError(path + ":" + std::to_string(lineno) +
                       ": label must be 0 or 1, got '" + label_part + "'");
  }
  try {
    std::size_t consumed = 0;
    out.value = std::stod(value_part, &consumed);
    while (consumed < value_part.size() &&
           std::isspace(static_cast<unsigned char>(value_part[consumed])))
      ++consumed;
    if (consumed != value_part.size()) throw std::invalid_argument("trailing data");
  } catch (const std::exception&) {
    throw InputError(path + ":" + std::to_string(lineno) +
                     ": cannot parse value '" + value_part + "'");
  }
  if (!std::isfinite(out.value))
    throw InputError(path + ":" + std::to_string(lineno) + ": non-finite value");
  return out;
}

std::vector<ParsedLine> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  std::vector<ParsedLine> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto parsed = parse_line(line, path, lineno)) rows.push_back(*parsed);
  }
  if (rows.empty()) throw InputError("input file has no data rows: " + path);
  return rows;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ROCBOUNDS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError(std::string("ROCBOUNDS_SEED is not an integer: ") + env);
    }
  }
  return 20090467;
}

void emit_text_kv(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows)
    os << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

struct CommonOpts {
  std::string format = "json";
  std::string tail_convention = "gt";
};

rocbounds::TailConvention parse_convention(const std::string& s) {
  return s == "ge" ? rocbounds::TailConvention::Ge : rocbounds::TailConvention::Gt;
}

void emit_bound(const json& doc, const CommonOpts& opts) {
  if (opts.format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  const auto& res = doc.at("results");
  rows.push_back({"inequality", doc.at("params").at("inequality").get<std::string>()});
  rows.push_back({"value", fmt(res.at("value").get<double>())});
  rows.push_back({"branch", res.at("branch").get<std::string>()});
  rows.push_back({"direction", res.at("direction").get<std::string>()});
  for (const auto& [k, v] : res.at("params").items())
    rows.push_back({"params." + k, fmt(v.get<double>())});
  if (opts.format == "csv") {
    for (const auto& [k, v] : rows) std::cout << k << "," << v << "\n";
  } else {
    emit_text_kv(std::cout, rows);
  }
}

int cmd_bound(const std::string& ineq, const std::optional<double>& t,
              const std::optional<double>& s, const std::optional<double>& tau,
              const std::optional<double>& mu, const std::optional<double>& b,
              const CommonOpts& opts) {
  const auto need = [&](const std::optional<double>& v, const char* flag) {
    if (!v)
      throw InputError("inequality '" + ineq + "' requires " + flag);
    return *v;
  };

  rocbounds::BoundResult result;
  json diagnostics = json::object();
  json params = {{"inequality", ineq}};
  if (ineq == "lemma2") {
    result = rocbounds::symmetric_unimodal_tail_bound(need(t, "--t"));
    params["t"] = *t;
  } else if (ineq == "cor3") {
    result = rocbounds::unimodal_absolute_tail_bound(need(t, "--t"), 0.0);
    params["t"] = *t;
  } else if (ineq == "thm4") {
    const double tv = need(t, "--t");
    result = rocbounds::one_sided_tail_bound(tv);
    params["t"] = tv;
    if (result.branch == rocbounds::Branch::Quadratic)
      diagnostics["root_solve"] = rocbounds::solve_extremal_u(tv);
  } else if (ineq == "cor6") {
    result = rocbounds::shift_lower_bound(need(mu, "--mu"));
    params["mu"] = *mu;
  } else if (ineq == "thm9") {
    result = rocbounds::bounded_density_upper_bound(need(b, "--b"), need(mu, "--mu"));
    params["b"] = *b;
    params["mu"] = *mu;
  } else if (ineq == "gauss") {
    result = rocbounds::gauss_tail_bound(need(s, "--s"), need(tau, "--tau"));
    params["s"] = *s;
    params["tau"] = *tau;
  } else {
    throw InputError("unknown inequality: " + ineq);
  }
  params["tail_convention"] = opts.tail_convention;

  json doc = {{"command", "bound"},
              {"params", params},
              {"results", result},
              {"diagnostics", diagnostics}};
  emit_bound(doc, opts);
  return kExitOk;
}

int cmd_roc(const std::vector<std::string>& inputs, const CommonOpts& opts) {
  using rocbounds::EmpiricalSample;
  using rocbounds::SampleLabel;
  std::vector<double> class0, class1;
  if (inputs.size() == 2) {
    for (const auto& row : read_csv(inputs[0])) class0.push_back(row.value);
    for (const auto& row : read_csv(inputs[1])) class1.push_back(row.value);
  } else if (inputs.size() == 1) {
    for (const auto& row : read_csv(inputs[0])) {
      if (!row.label)
        throw InputError(inputs[0] + ": single-file mode needs value,label rows");
      (*row.label == 0 ? class0 : class1).push_back(row.value);
    }
  } else {
    throw InputError("roc needs --in once (value,label file) or twice (class files)");
  }
  if (class0.empty() || class1.empty())
    throw InputError("both classes need at least one observation");

  EmpiricalSample s0(std::move(class0), SampleLabel::Class0);
  EmpiricalSample s1(std::move(class1), SampleLabel::Class1);
  const rocbounds::RocCurve curve = rocbounds::roc_curve(s0, s1);
  const double mw = rocbounds::auc_mann_whitney(s0, s1);

  json results = curve;
  results["auc_mann_whitney"] = mw;
  results["difference"] = curve.auc_trapezoid - mw;
  json doc = {{"command", "roc"},
              {"params", {{"inputs", inputs}, {"n0", s0.values.size()}, {"n1", s1.values.size()}}},
              {"results", results},
              {"diagnostics", json::object()}};

  if (opts.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (opts.format == "csv") {
    std::cout << "alpha,power\n";
    for (const auto& p : curve.points)
      std::cout << fmt(p.alpha) << "," << fmt(p.power) << "\n";
  } else {
    emit_text_kv(std::cout, {{"points", std::to_string(curve.points.size())},
                             {"auc_trapezoid", fmt(curve.auc_trapezoid)},
                             {"auc_mann_whitney", fmt(mw)},
                             {"difference", fmt(curve.auc_trapezoid - mw)}});
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::size_t cases, std::size_t n,
               std::size_t grid, std::uint64_t seed, double t_focus,
               const CommonOpts& opts) {
  rocbounds::SuiteOptions so;
  so.cases = cases;
  so.mc_n = n;
  so.grid = grid;
  so.seed = seed;
  so.t_focus = t_focus;
  so.conv = parse_convention(opts.tail_convention);

  const auto results = rocbounds::run_suites({suite}, so);
  bool all_pass = true;
  json suites = json::array();
  for (const auto& sr : results) {
    all_pass = all_pass && sr.pass;
    json cases_json = json::array();
    for (const auto& c : sr.cases)
      cases_json.push_back({{"name", c.name},
                            {"pass", c.pass},
                            {"observed", c.observed},
                            {"limit", c.limit},
                            {"detail", c.detail}});
    suites.push_back({{"name", sr.name}, {"pass", sr.pass}, {"cases", cases_json}});
  }
  json doc = {{"command", "verify"},
              {"params",
               {{"suite", suite},
                {"cases", cases},
                {"n", n},
                {"grid", grid},
                {"seed", seed},
                {"t", t_focus},
                {"tail_convention", opts.tail_convention}}},
              {"results", {{"suites", suites}, {"pass", all_pass}}},
              {"diagnostics", json::object()}};

  if (opts.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (opts.format == "csv") {
    std::cout << "suite,case,pass,observed,limit\n";
    for (const auto& sr : results)
      for (const auto& c : sr.cases)
        std::cout << sr.name << "," << c.name << "," << (c.pass ? "1" : "0") << ","
                  << fmt(c.observed) << "," << fmt(c.limit) << "\n";
  } else {
    for (const auto& sr : results)
      for (const auto& c : sr.cases)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << sr.name << ": " << c.name
                  << "  (observed " << c.observed << ", limit " << c.limit << ")\n";
    std::cout << (all_pass ? "all properties PASS\n" : "PROPERTY FAILURE\n");
  }
  return all_pass ? kExitOk : kExitPropertyFailure;
}

int cmd_compare_gaussian(double mu, const CommonOpts& opts) {
  if (!(std::isfinite(mu) && mu > 0.0))
    throw InputError("compare-gaussian requires --mu > 0");
  const rocbounds::BoundResult lower = rocbounds::shift_lower_bound(mu);
  const double gaussian = rocbounds::normal_cdf(mu / std::sqrt(2.0));
  json doc = {{"command", "compare-gaussian"},
              {"params", {{"mu", mu}}},
              {"results",
               {{"distribution_free", lower.value},
                {"distribution_free_branch", rocbounds::to_string(lower.branch)},
                {"gaussian", gaussian},
                {"difference", gaussian - lower.value}}},
              {"diagnostics", json::object()}};
  if (opts.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (opts.format == "csv") {
    std::cout << "key,value\n"
              << "distribution_free," << fmt(lower.value) << "\n"
              << "gaussian," << fmt(gaussian) << "\n"
              << "difference," << fmt(gaussian - lower.value) << "\n";
  } else {
    emit_text_kv(std::cout, {{"distribution_free", fmt(lower.value)},
                             {"gaussian", fmt(gaussian)},
                             {"difference", fmt(gaussian - lower.value)}});
  }
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Sharp distribution-free bounds on P(X <= Y + mu) and ROC/AUC tools"};
  app.require_subcommand(1);
  CommonOpts opts;

  const auto add_common = [&opts](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();
    cmd->add_option("--tail-convention", opts.tail_convention,
                    "Tail convention at atoms: gt = P(X>t), ge = P(X>=t)")
        ->check(CLI::IsMember({"gt", "ge"}));
  };

  // bound
  std::string ineq;
  std::optional<double> opt_t, opt_s, opt_tau, opt_mu, opt_b;
  auto* bound = app.add_subcommand("bound", "Evaluate one closed-form bound");
  bound->add_option("inequality", ineq, "One of lemma2|cor3|thm4|cor6|thm9|gauss")
      ->required()
      ->check(CLI::IsMember({"lemma2", "cor3", "thm4", "cor6", "thm9", "gauss"}));
  bound->add_option("--t", opt_t, "Tail threshold");
  bound->add_option("--s", opt_s, "Deviation from the mode (gauss)");
  bound->add_option("--tau", opt_tau, "Root mean square about the mode (gauss)");
  bound->add_option("--mu", opt_mu, "Shift in P(X <= Y + mu)");
  bound->add_option("--b", opt_b, "Density bound (thm9)");
  add_common(bound);

  // roc
  std::vector<std::string> inputs;
  auto* roc = app.add_subcommand("roc", "Empirical ROC curve and AUC from CSV samples");
  roc->add_option("--in", inputs, "Input file (twice: class0 then class1; once: value,label)");
  add_common(roc);

  // verify
  std::string suite = "all";
  std::size_t cases = 1000, mc_n = 1000000, grid = 1000;
  std::uint64_t seed = default_seed();
  double t_focus = 0.0;
  auto* verify = app.add_subcommand("verify", "Run numerical property suites");
  verify->add_option("--suite", suite, "Suite name or 'all'")
      ->check(CLI::IsMember({"all", "continuity", "sharpness", "riesz", "reflection",
                             "sweeps", "montecarlo", "bamber"}))
      ->capture_default_str();
  verify->add_option("--cases", cases, "Random instances per suite")->capture_default_str();
  verify->add_option("--n", mc_n, "Monte Carlo draws per config")->capture_default_str();
  verify->add_option("--grid", grid, "Sweep grid resolution")->capture_default_str();
  verify->add_option("--seed", seed, "Random seed (default: ROCBOUNDS_SEED or builtin)");
  verify->add_option("--t", t_focus, "Focus the sharpness suite on one threshold");
  add_common(verify);

  // compare-gaussian
  double cg_mu = 0.0;
  auto* compare = app.add_subcommand(
      "compare-gaussian", "Distribution-free lower bound vs the Gaussian value");
  compare->add_option("--mu", cg_mu, "Shift in P(X <= Y + mu)")->required();
  add_common(compare);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the diagnostic
    return kExitUsage;
  }

  if (bound->parsed()) return cmd_bound(ineq, opt_t, opt_s, opt_tau, opt_mu, opt_b, opts);
  if (roc->parsed()) return cmd_roc(inputs, opts);
  if (verify->parsed())
    return cmd_verify(suite, cases, mc_n, grid, seed, t_focus, opts);
  if (compare->parsed()) return cmd_compare_gaussian(cg_mu, opts);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
