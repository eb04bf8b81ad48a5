#include "renyi/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "renyi/dirichlet.hpp"
#include "renyi/entropy.hpp"
#include "renyi/error.hpp"
#include "renyi/histogram.hpp"
#include "renyi/monte_carlo.hpp"
#include "renyi/random.hpp"
#include "renyi/source_model.hpp"

namespace renyi::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  // input
  std::string counts;
  std::string raw;
  int symbol_bits = 8;
  std::string emit_counts;
  std::string joint;
  // estimator
  std::string estimator = "bayes";
  double alpha = 0.0;
  std::string base = "uniform";
  std::string prior = "add-one";
  std::uint64_t seed = 0;
  std::size_t samples = 10'000;
  std::size_t chunks = 1;
  std::vector<std::string> orders;
  // source model
  std::size_t order_l = 1;
  std::string window = "overlap";
  std::vector<std::size_t> checkpoints;
  std::string curve_csv;
  std::uint64_t key_symbols = 0;
  bool verbose = false;

  bool alpha_given = false;
  bool seed_given = false;
};

struct Loaded {
  Histogram histogram;
  std::optional<std::vector<Symbol>> stream;
  std::size_t base_alphabet = 0;
  Json echo;
};

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::ifstream open_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

RenyiOrder parse_order(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (text == "shannon") return RenyiOrder::shannon();
  if (text == "min" || text == "inf" || text == "infinity") return RenyiOrder::min_entropy();
  double gamma = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), gamma);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("order must be 'shannon', 'min' or a number, got '" + text + "'");
  }
  return RenyiOrder::finite(gamma);
}

std::string quantity_name(RenyiOrder order) {
  switch (order.kind()) {
    case RenyiOrder::Kind::Shannon:
      return "H";
    case RenyiOrder::Kind::Min:
      return "H_min";
    case RenyiOrder::Kind::Finite:
      break;
  }
  return "H_" + order.to_string();
}

Json estimate_json(const EntropyEstimate& e, const std::string& quantity) {
  Json j;
  j["quantity"] = quantity;
  j["value_bits"] = e.value_bits;
  j["order"] = e.order.to_string();
  j["estimator"] = to_string(e.estimator);
  j["n"] = e.n;
  if (e.stderr_bits) j["stderr_bits"] = *e.stderr_bits;
  return j;
}

Json mc_json(const McResult& r, const std::string& statistic) {
  Json j;
  j["statistic"] = statistic;
  j["mean"] = r.mean;
  j["stderr"] = r.std_error;
  j["samples"] = r.samples;
  if (r.quantiles) {
    j["quantiles"] = {{"p2.5", r.quantiles->lower},
                      {"p50", r.quantiles->median},
                      {"p97.5", r.quantiles->upper}};
  }
  return j;
}

Loaded load_input(const Options& opt) {
  if (!opt.counts.empty() && !opt.raw.empty()) {
    throw UsageError("--counts and --raw are mutually exclusive");
  }
  if (opt.counts.empty() && opt.raw.empty()) throw UsageError("an input is required: --counts FILE or --raw FILE");
  if (!opt.counts.empty()) {
    auto in = open_text(opt.counts);
    auto h = from_counts_csv(in);
    Json echo{{"kind", "counts"}, {"path", opt.counts}};
    auto s = h.alphabet_size();
    return {std::move(h), std::nullopt, s, std::move(echo)};
  }
  auto bytes = read_bytes(opt.raw);
  auto stream = unpack_symbols(bytes, opt.symbol_bits);
  const std::size_t alphabet = std::size_t{1} << opt.symbol_bits;
  auto h = from_samples(std::span<const Symbol>(stream), alphabet);
  Json echo{{"kind", "raw"}, {"path", opt.raw}, {"symbol_bits", opt.symbol_bits},
            {"bytes", bytes.size()}};
  return {std::move(h), std::move(stream), alphabet, std::move(echo)};
}

void maybe_emit_counts(const Options& opt, const Histogram& h) {
  if (opt.emit_counts.empty()) return;
  std::ofstream out(opt.emit_counts);
  if (!out) throw UsageError("cannot write '" + opt.emit_counts + "'");
  write_counts_csv(out, h);
}

// `symbol,weight` records with positive real weights, one per alphabet symbol.
std::vector<double> read_base_measure(const std::string& path, std::size_t size,
                                      const std::function<std::string(std::size_t)>& label) {
  auto in = open_text(path);
  std::map<std::string, double> weights;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos || comma == 0 || line.find(',', comma + 1) != std::string::npos) {
      throw ParseError(line_no, "expected 'symbol,weight'");
    }
    auto symbol = line.substr(0, comma);
    auto field = std::string_view(line).substr(comma + 1);
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), w);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw ParseError(line_no, "weight is not a number: '" + std::string(field) + "'");
    }
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw DomainError("base measure weight for '" + symbol + "' must be positive");
    }
    if (!weights.emplace(symbol, w).second) {
      throw DuplicateSymbol("line " + std::to_string(line_no) + ": symbol '" + symbol +
                            "' listed twice in base measure");
    }
  }
  if (weights.size() != size) {
    throw AlphabetMismatch("base measure lists " + std::to_string(weights.size()) +
                           " symbols, alphabet has " + std::to_string(size));
  }
  std::vector<double> out(size);
  for (std::size_t i = 0; i < size; ++i) {
    auto it = weights.find(label(i));
    if (it == weights.end()) {
      throw AlphabetMismatch("base measure has no weight for symbol '" + label(i) + "'");
    }
    out[i] = it->second;
  }
  return out;
}

DirichletPrior resolve_prior(const Options& opt, std::size_t size,
                             const std::function<std::string(std::size_t)>& label, Json& echo) {
  double alpha = opt.prior == "jeffreys" ? 0.5 * static_cast<double>(size)
                                         : static_cast<double>(size);
  std::string name = opt.prior;
  if (opt.alpha_given) {
    alpha = opt.alpha;
    name = "custom";
  }
  std::optional<Distribution> base;
  if (opt.base == "uniform") {
    base = Distribution::uniform(size);
  } else {
    base = Distribution::normalized(read_base_measure(opt.base, size, label));
    name = "custom";
  }
  DirichletPrior prior(alpha, *base);
  echo = Json{{"name", name}, {"concentration", alpha}, {"base", opt.base}};
  return prior;
}

std::optional<McConfig> resolve_mc(const Options& opt, Json& command) {
  if (opt.estimator != "mc") return std::nullopt;
  if (!opt.seed_given) throw UsageError("--estimator mc requires --seed");
  McConfig cfg{opt.seed, opt.samples, opt.chunks};
  validate(cfg);
  command["monte_carlo"] = Json{{"seed", cfg.seed},
                                {"samples", cfg.samples},
                                {"chunks", cfg.chunks},
                                {"generator", random::kGeneratorName}};
  return cfg;
}

void small_sample_warning(std::uint64_t n, std::size_t s, Json& warnings) {
  if (static_cast<double>(n) < 10.0 * static_cast<double>(s)) {
    warnings.push_back("plug-in estimate with n = " + std::to_string(n) + " < 10*s = " +
                       std::to_string(10 * static_cast<std::uint64_t>(s)) +
                       "; plug-in entropy is strongly biased downward in this regime");
  }
}

// Appends one estimate (plug-in, closed-form Bayes or Monte Carlo) to results.
void estimate_into(const Options& opt, const Histogram& h, RenyiOrder order,
                   const std::optional<DirichletPrior>& prior, const std::optional<McConfig>& mc,
                   Json& results, Json& warnings) {
  if (opt.estimator == "plugin") {
    results.push_back(estimate_json(plugin_entropy(h, order), quantity_name(order)));
    return;
  }
  if (opt.estimator == "bayes") {
    if (order.kind() == RenyiOrder::Kind::Min) {
      throw UsageError(
          "no closed-form Bayesian min-entropy; use --estimator mc, or a large finite --order "
          "as an approximation");
    }
    results.push_back(estimate_json(bayes_entropy(*prior, h, order), quantity_name(order)));
    return;
  }
  auto post = posterior(*prior, h);
  auto [est, raw] = monte_carlo_entropy(post, order, *mc);
  auto entry = estimate_json(est, quantity_name(order));
  entry["monte_carlo"] = mc_json(raw, order.is_finite() ? "sum_p_pow_gamma" : "entropy_bits");
  results.push_back(std::move(entry));
  (void)warnings;
}

Json base_command(const std::string& name, const Options& opt) {
  Json c;
  c["name"] = name;
  c["estimator"] = opt.estimator;
  return c;
}

struct Outcome {
  Json command;
  Json results = Json::array();
  Json warnings = Json::array();
};

Outcome run_estimate(const Options& opt) {
  Outcome o{base_command("estimate", opt)};
  auto in = load_input(opt);
  maybe_emit_counts(opt, in.histogram);
  const auto& h = in.histogram;
  if (opt.orders.size() > 1) throw UsageError("estimate takes a single --order; use profile");
  const auto order = parse_order(opt.orders.empty() ? "2" : opt.orders.front());

  o.command["input"] = in.echo;
  o.command["alphabet_size"] = h.alphabet_size();
  o.command["n"] = h.total();
  o.command["order"] = order.to_string();
  std::optional<DirichletPrior> prior;
  Json prior_echo = nullptr;
  if (opt.estimator != "plugin") {
    prior = resolve_prior(opt, h.alphabet_size(), [&](std::size_t i) { return h.label(i); },
                          prior_echo);
  } else {
    small_sample_warning(h.total(), h.alphabet_size(), o.warnings);
  }
  o.command["prior"] = prior_echo;
  auto mc = resolve_mc(opt, o.command);
  estimate_into(opt, h, order, prior, mc, o.results, o.warnings);
  return o;
}

Outcome run_profile(const Options& opt) {
  Outcome o{base_command("profile", opt)};
  auto in = load_input(opt);
  maybe_emit_counts(opt, in.histogram);
  const auto& h = in.histogram;
  std::vector<RenyiOrder> orders{RenyiOrder::shannon(), RenyiOrder::finite(2.0),
                                 RenyiOrder::min_entropy()};
  for (const auto& text : opt.orders) orders.push_back(parse_order(text));

  o.command["input"] = in.echo;
  o.command["alphabet_size"] = h.alphabet_size();
  o.command["n"] = h.total();
  Json order_echo = Json::array();
  for (const auto& order : orders) order_echo.push_back(order.to_string());
  o.command["orders"] = order_echo;
  o.command["log2_alphabet_size"] = std::log2(static_cast<double>(h.alphabet_size()));

  std::optional<DirichletPrior> prior;
  Json prior_echo = nullptr;
  if (opt.estimator == "plugin") {
    small_sample_warning(h.total(), h.alphabet_size(), o.warnings);
    auto profile = order_profile(Distribution::empirical(h), orders);
    for (auto& e : profile) {
      e.n = h.total();
      o.results.push_back(estimate_json(e, quantity_name(e.order)));
    }
    o.command["prior"] = prior_echo;
    return o;
  }
  prior = resolve_prior(opt, h.alphabet_size(), [&](std::size_t i) { return h.label(i); },
                        prior_echo);
  o.command["prior"] = prior_echo;
  auto mc = resolve_mc(opt, o.command);
  for (const auto& order : orders) {
    if (opt.estimator == "bayes" && order.kind() == RenyiOrder::Kind::Min) {
      o.warnings.push_back(
          "min-entropy omitted: no closed-form Bayesian min-entropy (use --estimator mc or a "
          "large finite order)");
      continue;
    }
    estimate_into(opt, h, order, prior, mc, o.results, o.warnings);
  }
  return o;
}

Outcome run_conditional(const Options& opt) {
  Outcome o{base_command("conditional", opt)};
  if (opt.joint.empty()) throw UsageError("conditional requires --joint FILE");
  if (opt.estimator == "mc") throw UsageError("conditional supports --estimator plugin or bayes");
  auto in = open_text(opt.joint);
  const auto joint = from_joint_csv(in);
  const auto [px, py] = marginals(joint);

  o.command["input"] = Json{{"kind", "joint"}, {"path", opt.joint}};
  o.command["alphabet_size_x"] = joint.size_x();
  o.command["alphabet_size_y"] = joint.size_y();
  o.command["n"] = joint.total();
  o.command["order"] = "2";

  if (opt.estimator == "plugin") {
    small_sample_warning(joint.total(), joint.size_x() * joint.size_y(), o.warnings);
    o.command["prior"] = nullptr;
    o.results.push_back(estimate_json(conditional_collision_entropy(joint), "H_2(X|Y)"));
    o.results.push_back(estimate_json(plugin_entropy(px, RenyiOrder::finite(2.0)), "H_2(X)"));
    return o;
  }

  if (joint.total() == 0) throw EmptyJoint("conditional entropy needs at least one joint observation");
  Json prior_echo;
  const auto prior = resolve_prior(opt, joint.size_x(), [&](std::size_t i) { return px.label(i); },
                                   prior_echo);
  o.command["prior"] = prior_echo;

  // Per-column posteriors over X, weighted by the empirical P(Y = y).
  double bits = 0.0;
  const auto n = static_cast<double>(joint.total());
  for (std::size_t y = 0; y < joint.size_y(); ++y) {
    if (py[y] == 0) continue;
    std::vector<std::uint64_t> column(joint.size_x());
    for (std::size_t x = 0; x < joint.size_x(); ++x) column[x] = joint.at(x, y);
    bits += static_cast<double>(py[y]) / n *
            collision_bayes(prior, Histogram(std::move(column))).value_bits;
  }
  EntropyEstimate conditional{bits, RenyiOrder::finite(2.0), EstimatorKind::BayesClosedForm,
                              joint.total(), std::nullopt};
  o.results.push_back(estimate_json(conditional, "H_2(X|Y)"));
  o.results.push_back(estimate_json(collision_bayes(prior, px), "H_2(X)"));
  return o;
}

std::vector<std::size_t> default_checkpoints(std::size_t length, std::size_t order) {
  std::vector<std::size_t> points;
  for (std::size_t p = 10; p < length; p *= 10) {
    if (p >= order) points.push_back(p);
  }
  points.push_back(length);
  return points;
}

void write_curve_csv(const std::string& path, const std::vector<CurvePoint>& curve) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << "n,rate_bits_per_symbol\n";
  for (const auto& p : curve) out << p.prefix_length << ',' << format_double(p.rate_bits_per_symbol) << '\n';
}

struct RateOutcome {
  Outcome outcome;
  RateReport report;
};

RateOutcome run_rate_common(const std::string& name, const Options& opt) {
  Outcome o{base_command(name, opt)};
  if (opt.estimator == "mc") throw UsageError(name + " supports --estimator plugin or bayes");
  auto in = load_input(opt);
  maybe_emit_counts(opt, in.histogram);
  if (opt.orders.size() > 1) throw UsageError(name + " takes a single --order");
  const auto order = parse_order(opt.orders.empty() ? "2" : opt.orders.front());

  SourceConfig cfg{opt.order_l, in.base_alphabet,
                   opt.window == "disjoint" ? Windowing::Disjoint : Windowing::Overlapping};
  const auto gram_size = gram_alphabet_size(cfg);
  const auto estimator = opt.estimator == "plugin" ? RateEstimator::Plugin : RateEstimator::Bayes;

  o.command["input"] = in.echo;
  o.command["base_alphabet"] = cfg.base_alphabet;
  o.command["order_l"] = cfg.order;
  o.command["window"] = to_string(cfg.windowing);
  o.command["gram_alphabet_size"] = gram_size;
  o.command["order"] = order.to_string();

  std::optional<DirichletPrior> prior;
  Json prior_echo = nullptr;
  if (estimator == RateEstimator::Bayes) {
    std::function<std::string(std::size_t)> label = [](std::size_t i) { return std::to_string(i); };
    if (!in.stream) label = [&](std::size_t i) { return in.histogram.label(i); };
    prior = resolve_prior(opt, gram_size, label, prior_echo);
  }
  o.command["prior"] = prior_echo;

  RateReport report;
  std::vector<CurvePoint> curve;
  if (in.stream) {
    report = entropy_rate(*in.stream, cfg, estimator, prior, order);
    if (!opt.curve_csv.empty() || !opt.checkpoints.empty()) {
      auto points = opt.checkpoints.empty() ? default_checkpoints(in.stream->size(), cfg.order)
                                            : opt.checkpoints;
      curve = convergence_curve(*in.stream, cfg, estimator, prior, order, points);
    }
  } else {
    if (cfg.order != 1) throw UsageError("--counts input is a single-symbol histogram; use --order-l 1");
    if (!opt.curve_csv.empty() || !opt.checkpoints.empty()) {
      throw UsageError("convergence curves need a symbol stream (--raw)");
    }
    report = rate_from_grams(in.histogram, cfg, estimator, prior, order);
  }
  o.command["n"] = report.grams;
  if (estimator == RateEstimator::Plugin) small_sample_warning(report.grams, gram_size, o.warnings);
  if (cfg.windowing == Windowing::Overlapping && cfg.order > 1) {
    o.warnings.push_back("overlapping windows: consecutive L-gram counts are dependent");
  }

  Json entry;
  entry["quantity"] = "entropy_rate";
  entry["order_l"] = report.order;
  entry["base_alphabet"] = report.base_alphabet;
  entry["grams"] = report.grams;
  entry["entropy_per_gram_bits"] = report.entropy_per_gram_bits;
  entry["rate_bits_per_symbol"] = report.rate_bits_per_symbol;
  entry["estimate"] = estimate_json(report.estimate, quantity_name(order));
  if (!curve.empty()) {
    Json points = Json::array();
    for (const auto& p : curve) {
      points.push_back(Json{{"n", p.prefix_length}, {"rate_bits_per_symbol", p.rate_bits_per_symbol}});
    }
    entry["curve"] = points;
    if (!opt.curve_csv.empty()) write_curve_csv(opt.curve_csv, curve);
  }
  o.results.push_back(std::move(entry));
  return {std::move(o), report};
}

Outcome run_rate(const Options& opt) { return run_rate_common("rate", opt).outcome; }

Outcome run_keysize(const Options& opt) {
  if (opt.key_symbols < 1) throw UsageError("keysize requires --key-symbols B with B >= 1");
  auto [o, report] = run_rate_common("keysize", opt);
  o.command["key_symbols"] = opt.key_symbols;
  const auto key = effective_key_size(report, opt.key_symbols);
  Json entry;
  entry["quantity"] = "effective_key_size";
  entry["definition"] = "key_length_symbols * rate_bits_per_symbol";
  entry["key_length_symbols"] = key.key_length_symbols;
  entry["rate_bits_per_symbol"] = key.rate_bits_per_symbol;
  entry["effective_bits"] = key.effective_bits;
  entry["nominal_bits"] = key.nominal_bits;
  o.results.push_back(std::move(entry));
  return o;
}

void add_input_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--counts", opt.counts, "counts CSV (symbol,count per line)");
  cmd->add_option("--raw", opt.raw, "raw binary file");
  cmd->add_option("--symbol-bits", opt.symbol_bits, "bits per raw symbol")
      ->check(CLI::IsMember({1, 2, 4, 8}));
  cmd->add_option("--emit-counts", opt.emit_counts, "write the ingested histogram as counts CSV");
}

void add_estimator_flags(CLI::App* cmd, Options& opt, bool allow_mc) {
  std::vector<std::string> kinds{"plugin", "bayes"};
  if (allow_mc) kinds.push_back("mc");
  cmd->add_option("--estimator", opt.estimator, "estimator")->check(CLI::IsMember(kinds));
  cmd->add_option_function<double>(
      "--alpha",
      [&opt](double v) {
        opt.alpha = v;
        opt.alpha_given = true;
      },
      "prior concentration (default: s)");
  cmd->add_option("--base", opt.base, "prior base measure: uniform or a symbol,weight CSV");
  cmd->add_option("--prior", opt.prior, "prior preset")
      ->check(CLI::IsMember({"add-one", "jeffreys"}));
  cmd->add_option_function<std::uint64_t>(
      "--seed",
      [&opt](std::uint64_t v) {
        opt.seed = v;
        opt.seed_given = true;
      },
      "Monte Carlo seed (required for mc)");
  cmd->add_option("--samples", opt.samples, "Monte Carlo samples");
  cmd->add_option("--chunks", opt.chunks, "Monte Carlo chunks");
}

void add_rate_flags(CLI::App* cmd, Options& opt) {
  add_input_flags(cmd, opt);
  add_estimator_flags(cmd, opt, false);
  cmd->add_option("--order", opt.orders, "entropy order: shannon, min or a number (default 2)")
      ->expected(1);
  cmd->add_option("--order-l", opt.order_l, "block order L");
  cmd->add_option("--window", opt.window, "gram windowing")
      ->check(CLI::IsMember({"overlap", "disjoint"}));
  cmd->add_option("--checkpoints", opt.checkpoints, "prefix lengths for the convergence curve")
      ->delimiter(',');
  cmd->add_option("--curve-csv", opt.curve_csv, "write the convergence curve as CSV");
}

void print_summary(const Outcome& o, std::ostream& err) {
  err << o.command.value("name", std::string()) << ":\n";
  for (const auto& r : o.results) {
    err << "  " << r.value("quantity", std::string());
    if (r.contains("value_bits")) {
      err << " [" << r.value("estimator", std::string()) << "] = "
          << format_double(r["value_bits"].get<double>()) << " bits";
      if (r.contains("stderr_bits")) {
        err << " (stderr " << format_double(r["stderr_bits"].get<double>()) << ")";
      }
    } else if (r.contains("rate_bits_per_symbol") && r.contains("grams")) {
      err << " = " << format_double(r["rate_bits_per_symbol"].get<double>()) << " bits/symbol";
    } else if (r.contains("effective_bits")) {
      err << " = " << format_double(r["effective_bits"].get<double>()) << " of "
          << format_double(r["nominal_bits"].get<double>()) << " bits";
    }
    err << '\n';
  }
  for (const auto& w : o.warnings) err << "  warning: " << w.get<std::string>() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Renyi entropy estimation from symbol counts", "renyi"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Options opt;
  app.add_flag("-v,--verbose", opt.verbose, "human-readable summary on stderr");

  auto* estimate = app.add_subcommand("estimate", "entropy estimate of one order");
  add_input_flags(estimate, opt);
  add_estimator_flags(estimate, opt, true);
  estimate->add_option("--order", opt.orders, "shannon, min or a number (default 2)")->expected(1);
  estimate->add_flag("-v,--verbose", opt.verbose, "human-readable summary on stderr");

  auto* profile = app.add_subcommand("profile", "Shannon, collision and min-entropy side by side");
  add_input_flags(profile, opt);
  add_estimator_flags(profile, opt, true);
  profile->add_option("--order", opt.orders, "additional orders");
  profile->add_flag("-v,--verbose", opt.verbose, "human-readable summary on stderr");

  auto* conditional = app.add_subcommand("conditional", "collision entropy of X given Y");
  conditional->add_option("--joint", opt.joint, "joint counts CSV (x,y,count per line)");
  add_estimator_flags(conditional, opt, false);
  conditional->add_flag("-v,--verbose", opt.verbose, "human-readable summary on stderr");

  auto* rate = app.add_subcommand("rate", "entropy rate from L-gram counts");
  add_rate_flags(rate, opt);
  rate->add_flag("-v,--verbose", opt.verbose, "human-readable summary on stderr");

  auto* keysize = app.add_subcommand("keysize", "effective key size from the entropy rate");
  add_rate_flags(keysize, opt);
  keysize->add_option("--key-symbols", opt.key_symbols, "key length in base symbols")->required();
  keysize->add_flag("-v,--verbose", opt.verbose, "human-readable summary on stderr");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    Outcome outcome;
    if (estimate->parsed()) {
      outcome = run_estimate(opt);
    } else if (profile->parsed()) {
      outcome = run_profile(opt);
    } else if (conditional->parsed()) {
      outcome = run_conditional(opt);
    } else if (rate->parsed()) {
      outcome = run_rate(opt);
    } else {
      outcome = run_keysize(opt);
    }
    Json report;
    report["version"] = kVersion;
    report["command"] = outcome.command;
    report["results"] = outcome.results;
    report["warnings"] = outcome.warnings;
    out << report.dump(2) << '\n';
    if (opt.verbose) print_summary(outcome, err);
    return kSuccess;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace renyi::cli
