// Command-line surface for the hard-core toolkit: graph generation,
// induced-pattern detection, exact solving, chain sampling, cluster
// coupling and the stretched-expander bottleneck experiments.
//
// Outputs are deterministic: identical config and seed give identical bytes.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hardcore/coupling.hpp"
#include "hardcore/exact.hpp"
#include "hardcore/families.hpp"
#include "hardcore/glauber.hpp"
#include "hardcore/pattern.hpp"
#include "hardcore/rng.hpp"
#include "hardcore/torpid.hpp"
#include "hardcore/transport.hpp"

namespace {

constexpr const char* kToolVersion = "hardcore-tools 0.1.0";

using hardcore::Rational;

// ---- serialization helpers -------------------------------------------------

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

// Ordered flat key/value record; values are pre-rendered JSON fragments.
struct Record {
  std::vector<std::pair<std::string, std::string>> kv;

  void str(const std::string& k, const std::string& v) { kv.emplace_back(k, json_escape(v)); }
  void num(const std::string& k, double v) { kv.emplace_back(k, fmt_double(v)); }
  void integer(const std::string& k, long long v) { kv.emplace_back(k, std::to_string(v)); }
  void boolean(const std::string& k, bool v) { kv.emplace_back(k, v ? "true" : "false"); }
  void raw(const std::string& k, const std::string& fragment) { kv.emplace_back(k, fragment); }

  std::string to_json() const {
    std::string out = "{";
    for (std::size_t i = 0; i < kv.size(); ++i) {
      if (i) out += ", ";
      out += json_escape(kv[i].first) + ": " + kv[i].second;
    }
    return out + "}";
  }
};

std::string json_array_numbers(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += fmt_double(xs[i]);
  }
  return out + "]";
}

std::string json_array_ints(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i]);
  }
  return out + "]";
}

std::string json_array_strings(const std::vector<std::string>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += json_escape(xs[i]);
  }
  return out + "]";
}

// "d.ddddddddddddddddEsxx" from a base-10 logarithm; handles magnitudes far
// outside the double range.
std::string scientific_from_log10(double l10, int digits = 17) {
  if (!std::isfinite(l10)) return "0";
  double ip;
  double frac = std::modf(l10, &ip);
  if (frac < 0) {
    frac += 1.0;
    ip -= 1.0;
  }
  double mant = std::pow(10.0, frac);
  if (mant >= 10.0) {
    mant /= 10.0;
    ip += 1.0;
  }
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.*fe%+" PRId64, digits - 1, mant,
                static_cast<std::int64_t>(ip));
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << content;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_text_file(out_path, content);
  }
}

// ---- shared option plumbing ------------------------------------------------

hardcore::Pins parse_pins(const std::vector<std::string>& specs) {
  hardcore::Pins pins;
  for (const auto& s : specs) {
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("pin must look like VERTEX=VALUE: " + s);
    const int v = std::stoi(s.substr(0, eq));
    const int value = std::stoi(s.substr(eq + 1));
    if (pins.count(v) && pins[v] != value)
      throw std::invalid_argument("vertex pinned to both values");
    pins[v] = value;
  }
  return pins;
}

std::string pins_to_string(const hardcore::Pins& pins) {
  std::string out;
  for (auto [v, b] : pins) {
    if (!out.empty()) out += ",";
    out += std::to_string(v) + "=" + std::to_string(b);
  }
  return out;
}

struct GenOptions {
  std::string family, out;
  int n = 0, i = 1, j = 1, k = 1, rows = 1, cols = 1, len = 2, stretch_by = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

struct DetectOptions {
  std::string graph, pattern = "claw", out;
};

struct ExactOptions {
  std::string graph, lambda = "1", out;
  std::vector<std::string> pins;
  bool rational = false, skip_mixing = false, skip_w1 = false;
  std::size_t state_cap = hardcore::kDefaultStateCap;
  std::size_t support_cap = hardcore::kDefaultSupportCap;
};

struct SampleOptions {
  std::string graph, lambda = "1", out, histogram;
  std::vector<std::string> pins;
  long long steps = 0, replicas = 1;
  std::uint64_t seed = 0;
};

struct CouplingOptions {
  std::string graph, lambda = "1", mode = "exact", out;
  int vertex = 0;
  long long replicas = 1000, burn_in = -1;
  std::uint64_t seed = 0;
};

struct TorpidOptions {
  std::vector<std::string> lambdas;
  std::string out;
  int n = 3, ell = 1, trials = 40;
  std::uint64_t seed = 0;
};

// ---- subcommands -------------------------------------------------------

int run_gen(const GenOptions& o) {
  using namespace hardcore;
  Graph g;
  if (o.family == "path") g = gen_path(o.n);
  else if (o.family == "cycle") g = gen_cycle(o.n);
  else if (o.family == "complete") g = gen_complete(o.n);
  else if (o.family == "star") g = gen_star(o.n);
  else if (o.family == "subdivided-claw") g = gen_subdivided_claw({o.i, o.j, o.k});
  else if (o.family == "efree-block") g = gen_efree_block(o.rows, o.cols);
  else if (o.family == "skewstar-witness") g = gen_skewstar_witness(o.len);
  else if (o.family == "cubic-bipartite") {
    if (!o.seed_set)
      throw std::invalid_argument("--seed is required for cubic-bipartite");
    g = gen_random_cubic_bipartite(o.n, o.seed);
  } else {
    throw std::invalid_argument("unknown family: " + o.family);
  }
  if (o.stretch_by > 0) g = stretch(g, o.stretch_by).graph;
  save_edge_list(g, o.out);
  std::cerr << "wrote " << o.out << " (" << g.n() << " vertices, " << g.m()
            << " edges)\n";
  return 0;
}

int run_detect(const DetectOptions& o) {
  using namespace hardcore;
  const Graph host = load_edge_list(o.graph);
  Graph pattern;
  if (o.pattern == "claw") pattern = gen_subdivided_claw({1, 1, 1});
  else if (o.pattern == "fork") pattern = gen_subdivided_claw({1, 1, 2});
  else if (o.pattern == "e") pattern = gen_subdivided_claw({1, 2, 2});
  else if (o.pattern == "skew-star") pattern = gen_subdivided_claw({1, 2, 3});
  else {
    int i, j, k;
    if (std::sscanf(o.pattern.c_str(), "%d,%d,%d", &i, &j, &k) != 3)
      throw std::invalid_argument("pattern must be a name or i,j,k: " + o.pattern);
    pattern = gen_subdivided_claw({i, j, k});
  }
  const auto hit = find_induced(host, pattern,
                                std::max(kDefaultPatternCap, pattern.n()));

  Record config;
  config.str("tool_version", kToolVersion);
  config.str("command", "detect");
  config.str("graph", o.graph);
  config.str("pattern", o.pattern);

  Record result;
  result.raw("config", config.to_json());
  result.boolean("found", hit.has_value());
  result.raw("embedding", hit ? json_array_ints(hit->map) : "null");
  emit(o.out, result.to_json() + "\n");
  return 0;
}

int run_exact(const ExactOptions& o) {
  using namespace hardcore;
  const Graph g = load_edge_list(o.graph);
  const Rational lambda = parse_rational(o.lambda);
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  const Pins pins = parse_pins(o.pins);

  Record config;
  config.str("tool_version", kToolVersion);
  config.str("command", "exact");
  config.str("graph", o.graph);
  config.str("lambda", o.lambda);
  config.str("pins", pins_to_string(pins));
  config.boolean("rational", o.rational);
  config.integer("state_cap", static_cast<long long>(o.state_cap));

  Record result;
  result.raw("config", config.to_json());
  result.integer("n", g.n());
  result.integer("m", g.m());
  result.integer("num_independent_sets",
                 static_cast<long long>(count_independent_sets(g)));

  if (o.rational) {
    HardCoreQ m{g, lambda};
    result.str("Z", rational_to_string(partition_function(m)));
    const auto& law = pins.empty()
                          ? hardcore_distribution(m)
                          : pinned_distribution(m, pins);
    std::vector<std::string> marg(g.n());
    for (int v = 0; v < g.n(); ++v) {
      Rational p(0);
      for (const auto& [s, pr] : law.atoms)
        if (s.test(v)) p += pr;
      marg[v] = rational_to_string(p);
    }
    result.raw("marginals", json_array_strings(marg));
  } else {
    HardCoreD m{g, static_cast<double>(lambda)};
    result.num("Z", partition_function(m));
    const auto& law = pins.empty()
                          ? hardcore_distribution(m)
                          : pinned_distribution(m, pins);
    std::vector<double> marg(g.n(), 0.0);
    for (const auto& [s, pr] : law.atoms)
      s.for_each_member([&](int v) { marg[v] += pr; });
    result.raw("marginals", json_array_numbers(marg));
  }

  if (!o.skip_mixing &&
      count_independent_sets(g, o.state_cap) <= o.state_cap) {
    result.integer("t_mix",
                   exact_mixing_time(HardCoreD{g, static_cast<double>(lambda)},
                                     o.state_cap));
  } else {
    result.raw("t_mix", "null");
  }

  if (!o.skip_w1) {
    // W1 between the two pinnings of each vertex, under Hamming cost
    if (o.rational) {
      HardCoreQ m{g, lambda};
      std::vector<std::string> w1(g.n());
      for (int v = 0; v < g.n(); ++v)
        w1[v] = rational_to_string(
            exact_w1_hamming(pinned_distribution(m, Pins{{v, 0}}),
                             pinned_distribution(m, Pins{{v, 1}}), o.support_cap));
      result.raw("w1_pinned", json_array_strings(w1));
    } else {
      HardCoreD m{g, static_cast<double>(lambda)};
      std::vector<double> w1(g.n());
      for (int v = 0; v < g.n(); ++v)
        w1[v] = exact_w1_hamming(pinned_distribution(m, Pins{{v, 0}}),
                                 pinned_distribution(m, Pins{{v, 1}}), o.support_cap);
      result.raw("w1_pinned", json_array_numbers(w1));
    }
  } else {
    result.raw("w1_pinned", "null");
  }

  emit(o.out, result.to_json() + "\n");
  return 0;
}

int run_sample(const SampleOptions& o) {
  using namespace hardcore;
  const Graph g = load_edge_list(o.graph);
  const double lambda = static_cast<double>(parse_rational(o.lambda));
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  const Pins pins = parse_pins(o.pins);
  HardCoreD m{g, lambda};

  Record config;
  config.str("tool_version", kToolVersion);
  config.str("command", "sample");
  config.str("graph", o.graph);
  config.str("lambda", o.lambda);
  config.str("pins", pins_to_string(pins));
  config.integer("steps", o.steps);
  config.integer("replicas", o.replicas);
  config.integer("seed", static_cast<long long>(o.seed));

  std::ostringstream csv;
  csv << "# " << config.to_json() << "\n";
  csv << "replica,seed,final_size\n";
  RngStream root(o.seed);
  std::vector<long long> occupancy(g.n(), 0);
  for (long long r = 0; r < o.replicas; ++r) {
    RngStream rng = root.split(static_cast<std::uint64_t>(r));
    const auto final_state = sample_stationary(m, pins, o.steps, rng);
    final_state.for_each_member([&](int v) { ++occupancy[v]; });
    csv << r << ',' << rng.seed() << ',' << final_state.count() << "\n";
  }
  emit(o.out, csv.str());

  if (!o.histogram.empty()) {
    std::ostringstream h;
    h << "# " << config.to_json() << "\n";
    h << "vertex,occupied_replicas,frequency\n";
    for (int v = 0; v < g.n(); ++v)
      h << v << ',' << occupancy[v] << ','
        << fmt_double(static_cast<double>(occupancy[v]) /
                      static_cast<double>(o.replicas))
        << "\n";
    write_text_file(o.histogram, h.str());
  }
  return 0;
}

int run_coupling(const CouplingOptions& o) {
  using namespace hardcore;
  const Graph g = load_edge_list(o.graph);
  const double lambda = static_cast<double>(parse_rational(o.lambda));
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  if (o.vertex < 0 || o.vertex >= g.n())
    throw std::invalid_argument("vertex out of range");
  const SamplerKind kind =
      o.mode == "exact" ? SamplerKind::exact
      : o.mode == "chain" ? SamplerKind::chain
                          : throw std::invalid_argument("mode must be exact or chain");
  const long long burn = o.burn_in >= 0 ? o.burn_in : default_burn_in(g.n());
  HardCoreD m{g, lambda};

  Record config;
  config.str("tool_version", kToolVersion);
  config.str("command", "coupling");
  config.str("graph", o.graph);
  config.str("lambda", o.lambda);
  config.integer("vertex", o.vertex);
  config.integer("replicas", o.replicas);
  config.str("mode", o.mode);
  config.integer("burn_in", burn);
  config.integer("seed", static_cast<long long>(o.seed));

  RngStream rng(o.seed);
  const auto stats = cluster_statistics(m, o.vertex, o.replicas, kind, burn, rng);
  RngStream rng2 = RngStream(o.seed).split(1);
  const auto w1 = w1_upper_bound(m, o.vertex, o.replicas, kind, burn, rng2);

  Record result;
  result.raw("config", config.to_json());
  result.num("mean_cluster", stats.mean_cluster_size);
  result.integer("max_cluster", stats.max_cluster_size);
  result.integer("max_layer", stats.max_layer_width);
  result.num("w1_upper_mean", w1.mean);
  result.num("w1_upper_stderr", w1.stderror);
  if (kind == SamplerKind::exact) {
    const auto push = exact_coupling_pushforward(HardCoreD{g, lambda}, o.vertex);
    const auto ref = pinned_distribution(HardCoreD{g, lambda}, Pins{{o.vertex, 0}});
    result.num("pushforward_tv", tv_distance(push, ref));
  } else {
    result.raw("pushforward_tv", "null");
  }
  emit(o.out, result.to_json() + "\n");
  return 0;
}

int run_torpid(const TorpidOptions& o) {
  using namespace hardcore;
  if (o.lambdas.empty()) throw std::invalid_argument("at least one --lambda required");

  // deterministic search for the best verified expander among `trials` seeds
  RngStream root(o.seed);
  Graph best;
  Rational best_alpha(-1);
  for (int t = 0; t < o.trials; ++t) {
    RngStream rng = root.split(static_cast<std::uint64_t>(t));
    Graph g;
    try {
      g = gen_random_cubic_bipartite(o.n, rng);
    } catch (const std::runtime_error&) {
      continue;
    }
    if (auto a = measured_expansion_alpha(g); a && *a > best_alpha) {
      best_alpha = *a;
      best = g;
    }
  }
  if (best_alpha <= 0)
    throw std::runtime_error("no verified expander found; try more --trials");
  const auto inst = make_torpid_instance(best, o.ell);

  Record config;
  config.str("tool_version", kToolVersion);
  config.str("command", "torpid");
  config.integer("n", o.n);
  config.integer("ell", o.ell);
  config.integer("seed", static_cast<long long>(o.seed));
  config.integer("trials", o.trials);
  config.raw("lambdas", json_array_strings(o.lambdas));

  std::ostringstream csv;
  csv << "# " << config.to_json() << "\n";
  csv << "n,ell,alpha,lambda,w_less,w_eq,w_greater,ratio,paper_bound\n";
  const auto sweep = sweep_branch_patterns(inst);
  for (const auto& ls : o.lambdas) {
    const Rational lambda = parse_rational(ls);
    if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
    const auto w = balance_weights_from_sweep(sweep, inst, lambda);
    const auto rep = conductance_ratio(inst, lambda);
    csv << o.n << ',' << o.ell << ',' << rational_to_string(inst.alpha) << ','
        << ls << ',' << rational_to_scientific(w.less) << ','
        << rational_to_scientific(w.eq) << ','
        << rational_to_scientific(w.greater) << ','
        << scientific_from_log10(rep.log10_ratio) << ','
        << scientific_from_log10(rep.log10_paper_bound) << "\n";
  }
  emit(o.out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolVersion) +
               " - hard-core model toolkit for H-free graphs"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* c_gen = app.add_subcommand("gen", "generate a graph and write its edge list");
  c_gen->add_option("--family", gen.family,
                    "path|cycle|complete|star|subdivided-claw|efree-block|"
                    "skewstar-witness|cubic-bipartite")
      ->required();
  c_gen->add_option("--n", gen.n, "size parameter (vertices / part size / leaves)");
  c_gen->add_option("--i", gen.i, "first leg length");
  c_gen->add_option("--j", gen.j, "second leg length");
  c_gen->add_option("--k", gen.k, "third leg length");
  c_gen->add_option("--rows", gen.rows, "block rows");
  c_gen->add_option("--cols", gen.cols, "block columns");
  c_gen->add_option("--len", gen.len, "witness path length");
  c_gen->add_option("--stretch", gen.stretch_by, "subdivide each edge by this many vertices");
  c_gen->add_option("--seed", gen.seed, "rng seed (required for random families)")
      ->trigger_on_parse()
      ->each([&gen](const std::string&) { gen.seed_set = true; });
  c_gen->add_option("--out", gen.out, "output edge-list path")->required();

  DetectOptions det;
  auto* c_det = app.add_subcommand("detect", "induced-pattern detection");
  c_det->add_option("--graph", det.graph, "host edge-list path")->required();
  c_det->add_option("--pattern", det.pattern, "claw|fork|e|skew-star|i,j,k");
  c_det->add_option("--out", det.out, "output JSON path (default stdout)");

  ExactOptions ex;
  auto* c_ex = app.add_subcommand("exact", "exact Z, marginals, mixing time, W1");
  c_ex->add_option("--graph", ex.graph)->required();
  c_ex->add_option("--lambda", ex.lambda, "fugacity (rational, e.g. 1/2)");
  c_ex->add_option("--pin", ex.pins, "pin VERTEX=VALUE (repeatable)");
  c_ex->add_flag("--rational", ex.rational, "exact rational arithmetic");
  c_ex->add_flag("--skip-mixing", ex.skip_mixing);
  c_ex->add_flag("--skip-w1", ex.skip_w1);
  c_ex->add_option("--state-cap", ex.state_cap);
  c_ex->add_option("--out", ex.out, "output JSON path (default stdout)");

  SampleOptions sam;
  auto* c_sam = app.add_subcommand("sample", "Glauber dynamics sampling");
  c_sam->add_option("--graph", sam.graph)->required();
  c_sam->add_option("--lambda", sam.lambda);
  c_sam->add_option("--pin", sam.pins, "pin VERTEX=VALUE (repeatable)");
  c_sam->add_option("--steps", sam.steps, "chain steps per replica")->required();
  c_sam->add_option("--replicas", sam.replicas);
  c_sam->add_option("--seed", sam.seed)->required();
  c_sam->add_option("--out", sam.out, "output CSV path (default stdout)");
  c_sam->add_option("--histogram", sam.histogram, "per-vertex occupancy CSV path");

  CouplingOptions cop;
  auto* c_cop = app.add_subcommand("coupling", "red-blue cluster coupling runs");
  c_cop->add_option("--graph", cop.graph)->required();
  c_cop->add_option("--lambda", cop.lambda);
  c_cop->add_option("--vertex", cop.vertex, "pinned vertex")->required();
  c_cop->add_option("--replicas", cop.replicas);
  c_cop->add_option("--mode", cop.mode, "exact|chain");
  c_cop->add_option("--burn-in", cop.burn_in, "chain-mode burn-in (default 50 n ln(n+1))");
  c_cop->add_option("--seed", cop.seed)->required();
  c_cop->add_option("--out", cop.out, "output JSON path (default stdout)");

  TorpidOptions tor;
  auto* c_tor = app.add_subcommand("torpid",
                                   "stretched-expander bottleneck experiment");
  c_tor->add_option("--n", tor.n, "part size of the cubic bipartite base")->required();
  c_tor->add_option("--ell", tor.ell, "stretch parameter")->required();
  c_tor->add_option("--lambda", tor.lambdas, "fugacity (repeatable)")->required();
  c_tor->add_option("--seed", tor.seed)->required();
  c_tor->add_option("--trials", tor.trials, "expander search attempts");
  c_tor->add_option("--out", tor.out, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_gen) return run_gen(gen);
    if (*c_det) return run_detect(det);
    if (*c_ex) return run_exact(ex);
    if (*c_sam) return run_sample(sam);
    if (*c_cop) return run_coupling(cop);
    if (*c_tor) return run_torpid(tor);
  } catch (const hardcore::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
