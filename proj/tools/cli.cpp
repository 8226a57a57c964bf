#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "membranekit/conv.hpp"
#include "membranekit/cosine.hpp"
#include "membranekit/extensions.hpp"
#include "membranekit/io.hpp"
#include "membranekit/limits.hpp"
#include "membranekit/montecarlo.hpp"
#include "membranekit/probes.hpp"
#include "membranekit/projections.hpp"
#include "membranekit/semigroup.hpp"

namespace membranekit::cli {

namespace {

using nlohmann::json;

struct AssertFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out_dir = ".";
  std::string format = "csv";
  std::string grid = "12,1200";
  int threads = 1;
  bool assert_mode = false;
  double alpha = 0.2;
  double beta = 0.1;

  MembraneParams params() const { return {alpha, beta}; }

  Grid make_grid() const {
    const auto comma = grid.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("--grid expects X,n_half");
    const double x = std::stod(grid.substr(0, comma));
    const int n = std::stoi(grid.substr(comma + 1));
    return {x, n};
  }

  json config() const {
    return {{"alpha", alpha}, {"beta", beta}, {"grid", grid}, {"threads", threads}};
  }
};

void add_common(CLI::App* sc, Common& c) {
  sc->add_option("--out-dir", c.out_dir, "Directory for output files")->capture_default_str();
  sc->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sc->add_option("--grid", c.grid, "Grid as X,n_half (nodes -X..X, step X/n_half)")
      ->capture_default_str();
  sc->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber)
      ->capture_default_str();
  sc->add_option("--alpha", c.alpha, "Permeability alpha (left to right)")->capture_default_str();
  sc->add_option("--beta", c.beta, "Permeability beta (right to left)")->capture_default_str();
  sc->add_flag("--assert", c.assert_mode, "Check results against their envelopes; exit 2 on failure");
  // --config is expanded before parsing; see expand_config.
  sc->add_option("--config", "Flat key=value file; command-line options take precedence");
}

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    std::size_t used = 0;
    out.push_back(std::stod(cell, &used));
    if (used != cell.size()) throw std::invalid_argument("bad number '" + cell + "'");
  }
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (double v : parse_reals(s)) {
    if (v != std::floor(v)) throw std::invalid_argument("expected integers in list");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

class Output {
 public:
  explicit Output(const Common& c) : dir_(c.out_dir), json_(c.format == "json") {
    std::filesystem::create_directories(dir_);
  }
  bool json_mode() const { return json_; }

  void write(const std::string& name, const std::function<void(std::ostream&)>& body) {
    const auto path = dir_ / name;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path.string());
    body(os);
    written_.push_back(path.string());
  }

  void write_json(const std::string& stem, const json& j) {
    write(stem + ".json", [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  }

  const std::vector<std::string>& written() const { return written_; }

 private:
  std::filesystem::path dir_;
  bool json_;
  std::vector<std::string> written_;
};

std::string tag(double v) { return io::format_double(v); }

void check(bool ok, const std::string& what) {
  if (!ok) throw AssertFailure(what);
}

void write_pair_csv(std::ostream& os, const FnPair& e) {
  os << "x,f_l,f_r\n";
  const int n = e.grid().n_half();
  for (int k = -n; k <= n; ++k) {
    os << tag(e.grid().node(k)) << ',' << tag(e.f1.at(k)) << ',' << tag(e.f2.at(k)) << '\n';
  }
}

json pair_json(const FnPair& e) { return {{"f_l", io::to_json(e.f1)}, {"f_r", io::to_json(e.f2)}}; }

// ------------------------------------------------------------------ extend
struct ExtendArgs {
  Common c;
  std::string probe = "gauss";
  std::string n = "1,2,5,15";
  std::string target = "auto";
};

void cmd_extend(const ExtendArgs& a, Output& out) {
  const MembraneParams p = a.c.params();
  const Probe& pr = probe(a.probe);
  const SharpFn f = sample_sharp(pr, a.c.make_grid());
  std::string target = a.target;
  if (target == "auto") target = pr.opposite ? "weks" : "skew";
  const bool weks = target == "weks";
  const FnPair limit = weks ? extend_weks(p, f) : extend_skew(p, to_line(f));
  json sweeps = json::array();
  for (int n : parse_ints(a.n)) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const FnPair e = weks ? extend_os(p.scaled(n), f) : extend_so(p.scaled(n), f);
    if (out.json_mode()) {
      sweeps.push_back({{"n", n}, {"extension", pair_json(e)}});
    } else {
      out.write("extend_n" + std::to_string(n) + ".csv", [&](std::ostream& os) { write_pair_csv(os, e); });
    }
  }
  if (out.json_mode()) {
    json cfg = a.c.config();
    cfg["probe"] = a.probe;
    cfg["target"] = target;
    out.write_json("extend", {{"schema", io::kSchema},
                              {"config", cfg},
                              {"sweeps", sweeps},
                              {"limit", pair_json(limit)}});
  } else {
    out.write("extend_limit.csv", [&](std::ostream& os) { write_pair_csv(os, limit); });
  }
}

// ---------------------------------------------------------------- converge
struct ConvergeArgs {
  Common c;
  std::string probe = "tanh";
  std::string n = "1,2,5,10,20,50";
  std::string kind = "extension";
  std::string t = "-3,-2,-1,0,1,2,3";
  std::optional<double> lipschitz;
  double budget = 1e-4;
  std::uint64_t seed = 1;
};

void cmd_converge(const ConvergeArgs& a, Output& out) {
  const MembraneParams p = a.c.params();
  const Grid grid = a.c.make_grid();
  const Probe& pr = probe(a.probe);
  const auto ns = parse_ints(a.n);
  const auto ts = parse_reals(a.t);
  SweepOptions opt;
  opt.threads = a.c.threads;
  // closed-form constant of the probe unless overridden
  opt.lipschitz = a.lipschitz;
  if (!opt.lipschitz && pr.lipschitz > 0.0) opt.lipschitz = pr.lipschitz;
  ConvergenceReport r;
  if (a.kind == "extension") {
    r = sweep_extension(p, sample_line(pr, grid), ns, opt);
  } else if (a.kind == "cosine") {
    r = sweep_cosine(p, sample_line(pr, grid), ns, ts, opt);
  } else if (a.kind == "semigroup") {
    r = sweep_semigroup(p, sample_sharp(pr, grid), ns, ts, opt);
  } else if (a.kind == "divergence") {
    r = sweep_divergence(p, sample_sharp(pr, grid), ns, ts.empty() ? 1.0 : ts.front(), opt);
  } else if (a.kind == "weks") {
    r = sweep_weks(p, sample_sharp(pr, grid), ns, ts, opt);
  } else if (a.kind == "projection") {
    std::mt19937_64 rng(a.seed);
    r = sweep_projection(p, random_pair(grid, rng), ns, opt);
  } else {
    throw std::invalid_argument("unknown sweep kind '" + a.kind + "'");
  }
  if (out.json_mode()) {
    json j = io::to_json(r);
    json cfg = a.c.config();
    cfg["probe"] = a.probe;
    cfg["kind"] = a.kind;
    j["config"] = cfg;
    out.write_json("converge", j);
  } else {
    out.write("converge.csv", [&](std::ostream& os) { io::write_csv(os, r); });
  }
  if (!a.c.assert_mode) return;
  if (a.kind == "divergence") {
    const double jmp = std::abs(jump(sample_sharp(pr, grid)));
    check(r.errors.back() > 0.1 * jmp, "divergence: error at largest n does not exceed 0.1 |jump|");
    return;
  }
  if (!r.cauchy.empty()) {
    for (std::size_t i = 1; i < r.cauchy.size(); ++i) {
      check(r.cauchy[i] <= 1.1 * r.cauchy[i - 1], "Cauchy differences are not decreasing");
    }
    return;
  }
  if (r.k_theory) {
    check(r.within_envelope(a.budget), "errors exceed K/n + budget (K = " + tag(*r.k_theory) + ")");
  }
  check(r.fitted_order >= 0.8 && r.fitted_order <= 1.2,
        "fitted order " + tag(r.fitted_order) + " outside [0.8, 1.2]");
}

// ------------------------------------------------------------------ evolve
struct EvolveArgs {
  Common c;
  std::string family = "s-o";
  std::string probe = "step";
  std::string t = "0.5,1,2";
  std::string scheme = "lattice";
  int gh_nodes = 40;
};

void cmd_evolve(const EvolveArgs& a, Output& out) {
  const MembraneParams p = a.c.params();
  const Family fam = family_from_string(a.family);
  const SharpFn f = sample_sharp(probe(a.probe), a.c.make_grid());
  WeierstrassOptions wo;
  wo.scheme = a.scheme == "gauss-hermite" ? WeierstrassScheme::gauss_hermite : WeierstrassScheme::lattice;
  wo.hermite_nodes = a.gh_nodes;
  const FnPair e = extend(fam, p, f);
  json results = json::array();
  for (double t : parse_reals(a.t)) {
    if (t < 0.0) throw std::invalid_argument("evolve needs t >= 0");
    const SharpFn u = restricted_heat(t, e, wo);
    if (out.json_mode()) {
      results.push_back({{"t", t}, {"value", io::to_json(u)}});
    } else {
      out.write("evolve_t" + tag(t) + ".csv", [&](std::ostream& os) { io::write_csv(os, u); });
    }
    if (a.c.assert_mode) {
      check(u.sup_norm() <= f.sup_norm() + 1e-9, "semigroup is not a contraction at t = " + tag(t));
    }
  }
  if (out.json_mode()) {
    json cfg = a.c.config();
    cfg["family"] = std::string(to_string(fam));
    cfg["probe"] = a.probe;
    cfg["scheme"] = a.scheme;
    out.write_json("evolve", {{"schema", io::kSchema}, {"config", cfg}, {"results", results}});
  }
}

// ----------------------------------------------------------------- project
struct ProjectArgs {
  Common c;
  std::string kind = "skew";
  std::string probe1;
  std::string probe2;
  std::uint64_t seed = 1;
};

void cmd_project(const ProjectArgs& a, Output& out) {
  const MembraneParams p = a.c.params();
  const Grid grid = a.c.make_grid();
  std::mt19937_64 rng(a.seed);
  const FnPair input = (!a.probe1.empty() && !a.probe2.empty())
                           ? FnPair(sample_line(probe(a.probe1), grid), sample_line(probe(a.probe2), grid))
                           : random_pair(grid, rng);
  std::function<FnPair(const FnPair&)> op;
  if (a.kind == "so") {
    op = [&](const FnPair& f) { return project_so(p, f); };
  } else if (a.kind == "skew") {
    op = [&](const FnPair& f) { return project_skew(p, f); };
  } else if (a.kind == "weks") {
    op = [&](const FnPair& f) { return project_weks(p, f); };
  } else if (a.kind == "complement") {
    op = [&](const FnPair& f) { return complement_os(p, f); };
  } else {
    throw std::invalid_argument("unknown projection '" + a.kind + "'");
  }
  const FnPair g = op(input);
  const double idem = (op(g) - g).sup_norm();
  const double res_skew = range_residual_skew(p, g);
  const double res_weks = range_residual_weks(p, g);
  if (out.json_mode()) {
    json cfg = a.c.config();
    cfg["kind"] = a.kind;
    cfg["seed"] = a.seed;
    out.write_json("project", {{"schema", io::kSchema},
                               {"config", cfg},
                               {"input", pair_json(input)},
                               {"output", pair_json(g)},
                               {"idempotency_gap", idem},
                               {"range_residual_skew", res_skew},
                               {"range_residual_weks", res_weks}});
  } else {
    out.write("project.csv", [&](std::ostream& os) {
      os << "# idempotency_gap=" << tag(idem) << '\n';
      os << "x,f1,f2,g1,g2\n";
      const int n = grid.n_half();
      for (int k = -n; k <= n; ++k) {
        os << tag(grid.node(k)) << ',' << tag(input.f1.at(k)) << ',' << tag(input.f2.at(k)) << ','
           << tag(g.f1.at(k)) << ',' << tag(g.f2.at(k)) << '\n';
      }
    });
  }
  if (a.c.assert_mode) {
    check(idem <= 1e-6, "idempotency gap " + tag(idem) + " > 1e-6");
    if (a.kind == "skew") check(res_skew <= 1e-9, "skew range residual too large");
    if (a.kind == "weks") check(res_weks <= 1e-9, "weks range residual too large");
  }
}

// ---------------------------------------------------------------------- mc
struct McArgs {
  Common c;
  std::string process = "skew";
  std::string probe = "tanh";
  double x0 = 0.0;
  std::string side;
  double t = 1.0;
  long n_paths = 100000;
  double dt = 1e-3;
  std::uint64_t seed = 1;
  bool antithetic = false;
  double bias = 0.01;
};

void cmd_mc(const McArgs& a, Output& out) {
  const MembraneParams p = a.c.params();
  const Grid grid = a.c.make_grid();
  const Probe& pr = probe(a.probe);
  PathConfig cfg;
  cfg.n_paths = a.n_paths;
  cfg.dt = a.dt;
  cfg.seed = a.seed;
  cfg.x0 = a.x0;
  cfg.antithetic = a.antithetic;
  cfg.threads = a.c.threads;
  if (a.side == "left") cfg.side = Side::left;
  if (a.side == "right") cfg.side = Side::right;
  if (!a.side.empty() && !cfg.side) throw std::invalid_argument("--side must be left or right");

  McEstimate est{};
  double reference = 0.0;
  const double x_walk = std::sqrt(2.0 * a.dt) * std::round(a.x0 / std::sqrt(2.0 * a.dt));
  if (a.process == "skew") {
    const LineFn f = sample_line(pr, grid);
    est = simulate_skew(p, cfg, a.t, f);
    reference = weierstrass_skew(p, a.t, f)(x_walk);
  } else if (a.process == "snapping") {
    const SharpFn f = sample_sharp(pr, grid);
    est = simulate_snapping(p, cfg, a.t, f);
    const SharpFn u = weierstrass(Family::snapping_out, p, a.t, f);
    const bool left = x_walk < 0.0 || (x_walk == 0.0 && cfg.side == Side::left);
    reference = u.evaluate(x_walk, left ? Side::left : Side::right);
  } else {
    throw std::invalid_argument("unknown process '" + a.process + "'");
  }
  json j = io::to_json(est);
  json c = a.c.config();
  c.update({{"process", a.process}, {"probe", a.probe}, {"x0", a.x0}, {"t", a.t},
            {"n_paths", a.n_paths}, {"dt", a.dt}, {"seed", a.seed}, {"antithetic", a.antithetic}});
  if (!a.side.empty()) c["side"] = a.side;
  j["config"] = c;
  j["semigroup_value"] = reference;
  if (out.json_mode()) {
    out.write_json("mc", j);
  } else {
    out.write("mc.csv", [&](std::ostream& os) {
      os << "mean,std_error,n_paths,semigroup_value\n"
         << tag(est.mean) << ',' << tag(est.std_error) << ',' << est.n_paths << ',' << tag(reference)
         << '\n';
    });
  }
  if (a.c.assert_mode) {
    check(std::abs(est.mean - reference) <= 3.0 * est.std_error + a.bias,
          "Monte-Carlo mean differs from the semigroup value by more than 3 se + bias");
  }
}

// ------------------------------------------------------------------- means
struct MeansArgs {
  Common c;
  std::string family = "s-o";
  std::string probe = "tanh";
  double t = 200.0;
  double tol = 0.05;
};

void cmd_means(const MeansArgs& a, Output& out) {
  const MembraneParams p = a.c.params();
  const Family fam = family_from_string(a.family);
  const Probe& pr = probe(a.probe);
  const SharpFn f = sample_sharp(pr, a.c.make_grid());
  const SharpFn m = cesaro_mean(fam, p, f, a.t);
  double left_target = 0.0;
  double right_target = 0.0;
  if (fam == Family::snapping_out || fam == Family::skew) {
    left_target = right_target = mean_m(p, pr.lim_minus, pr.lim_plus);
  } else {
    const TwoSided nm = mean_n(p, pr.lim_minus, pr.lim_plus);
    left_target = nm.left;
    right_target = nm.right;
  }
  double gap = 0.0;
  for (double v : m.left()) gap = std::max(gap, std::abs(v - left_target));
  for (double v : m.right()) gap = std::max(gap, std::abs(v - right_target));
  if (out.json_mode()) {
    json cfg = a.c.config();
    cfg.update({{"family", std::string(to_string(fam))}, {"probe", a.probe}, {"T", a.t}});
    out.write_json("means", {{"schema", io::kSchema},
                             {"config", cfg},
                             {"mean", io::to_json(m)},
                             {"target_left", left_target},
                             {"target_right", right_target},
                             {"max_gap", gap}});
  } else {
    out.write("means.csv", [&](std::ostream& os) {
      os << "# target_left=" << tag(left_target) << '\n';
      os << "# target_right=" << tag(right_target) << '\n';
      os << "# max_gap=" << tag(gap) << '\n';
      io::write_csv(os, m);
    });
  }
  if (a.c.assert_mode) check(gap <= a.tol, "Cesaro mean misses its limit by " + tag(gap));
}

// ------------------------------------------------------------------ mirror
struct MirrorArgs {
  Common c;
  std::string probe = "ov-gauss";
  std::string t = "0.5,1,2";
  double tol = 1e-6;
};

void cmd_mirror(const MirrorArgs& a, Output& out) {
  const MembraneParams p = a.c.params();
  const SharpFn f = sample_sharp(probe(a.probe), a.c.make_grid());
  const auto ts = parse_reals(a.t);
  std::vector<double> gaps;
  for (double t : ts) gaps.push_back(mirror_check(p, f, {t}));
  if (out.json_mode()) {
    json cfg = a.c.config();
    cfg["probe"] = a.probe;
    out.write_json("mirror", {{"schema", io::kSchema}, {"config", cfg}, {"t", ts}, {"gap", gaps}});
  } else {
    out.write("mirror.csv", [&](std::ostream& os) {
      os << "t,gap\n";
      for (std::size_t i = 0; i < ts.size(); ++i) os << tag(ts[i]) << ',' << tag(gaps[i]) << '\n';
    });
  }
  if (a.c.assert_mode) {
    for (double g : gaps) check(g <= a.tol, "mirror gap " + tag(g) + " exceeds tolerance");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Replaces "--config FILE" by one "--key value" pair per line of FILE, skipping
// keys already present on the command line. Blank lines and lines starting
// with '#' or ';' are ignored; "key" alone (or key=true) sets a flag.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> kept;
  std::string file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      file = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      file = args[i].substr(9);
    } else {
      kept.push_back(args[i]);
    }
  }
  if (file.empty()) return kept;
  std::ifstream is(file);
  if (!is) throw CLI::ConversionError("cannot read config file '" + file + "'");
  auto given = [&](const std::string& key) {
    return std::any_of(kept.begin(), kept.end(), [&](const std::string& a) {
      return a == "--" + key || a.rfind("--" + key + "=", 0) == 0;
    });
  };
  std::vector<std::string> extra;
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';' || line[0] == '[') continue;
    const auto eq = line.find('=');
    const std::string key = trim(line.substr(0, eq));
    const std::string value = eq == std::string::npos ? "true" : trim(line.substr(eq + 1));
    if (key.empty()) throw CLI::ConversionError("bad config line '" + line + "'");
    if (given(key)) continue;
    if (value == "true") {
      extra.push_back("--" + key);
    } else if (value != "false") {
      extra.push_back("--" + key);
      extra.push_back(value);
    }
  }
  kept.insert(kept.end(), extra.begin(), extra.end());
  return kept;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"membranekit: skew and snapping-out Brownian motion operator calculus"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<CLI::ConfigINI>());

  ExtendArgs ext;
  auto* s_ext = app.add_subcommand("extend", "Extensions for an n-sweep and their limit.\n"
                                   "CSV: extend_n<n>.csv and extend_limit.csv with columns x,f_l,f_r");
  add_common(s_ext, ext.c);
  s_ext->add_option("--probe", ext.probe, "Probe name")->capture_default_str();
  s_ext->add_option("--n", ext.n, "Comma-separated scaling factors")->capture_default_str();
  s_ext->add_option("--target", ext.target, "Limit extension")
      ->check(CLI::IsMember({"auto", "skew", "weks"}))
      ->capture_default_str();

  ConvergeArgs conv;
  auto* s_conv = app.add_subcommand("converge", "n-sweep of a convergence statement.\n"
                                    "CSV: converge.csv with columns n,error,bound[,cauchy]");
  add_common(s_conv, conv.c);
  s_conv->add_option("--probe", conv.probe, "Probe name")->capture_default_str();
  s_conv->add_option("--n", conv.n, "Comma-separated increasing n values")->capture_default_str();
  s_conv->add_option("--kind", conv.kind, "What converges")
      ->check(CLI::IsMember({"extension", "cosine", "semigroup", "divergence", "weks", "projection"}))
      ->capture_default_str();
  s_conv->add_option("--t", conv.t, "Comma-separated times (cosine, semigroup, weks, divergence)")
      ->capture_default_str();
  s_conv->add_option("--lipschitz", conv.lipschitz, "Lipschitz constant of the probe (default: the probe's own)");
  s_conv->add_option("--budget", conv.budget, "Numerical budget added to K/n")->capture_default_str();
  s_conv->add_option("--seed", conv.seed, "Seed for the random pair (projection)")->capture_default_str();

  EvolveArgs evo;
  auto* s_evo = app.add_subcommand("evolve", "Semigroup values via the Weierstrass formula.\n"
                                   "CSV: evolve_t<t>.csv with columns x,branch,value");
  add_common(s_evo, evo.c);
  s_evo->add_option("--family", evo.family, "s-o, skew, o-s or weks")->capture_default_str();
  s_evo->add_option("--probe", evo.probe, "Probe name")->capture_default_str();
  s_evo->add_option("--t", evo.t, "Comma-separated times")->capture_default_str();
  s_evo->add_option("--scheme", evo.scheme, "Quadrature")
      ->check(CLI::IsMember({"lattice", "gauss-hermite"}))
      ->capture_default_str();
  s_evo->add_option("--gh-nodes", evo.gh_nodes, "Gauss-Hermite nodes")->capture_default_str();

  ProjectArgs proj;
  auto* s_proj = app.add_subcommand("project", "Apply a projection to a pair.\n"
                                    "CSV: project.csv with columns x,f1,f2,g1,g2");
  add_common(s_proj, proj.c);
  s_proj->add_option("--kind", proj.kind, "so, skew, weks or complement")
      ->check(CLI::IsMember({"so", "skew", "weks", "complement"}))
      ->capture_default_str();
  s_proj->add_option("--probe1", proj.probe1, "First component (default: random)");
  s_proj->add_option("--probe2", proj.probe2, "Second component (default: random)");
  s_proj->add_option("--seed", proj.seed, "Seed for the random pair")->capture_default_str();

  McArgs mc;
  auto* s_mc = app.add_subcommand("mc", "Monte-Carlo estimate of E f(X_t).\n"
                                  "CSV: mc.csv with columns mean,std_error,n_paths,semigroup_value");
  add_common(s_mc, mc.c);
  s_mc->add_option("--process", mc.process, "skew or snapping")
      ->check(CLI::IsMember({"skew", "snapping"}))
      ->capture_default_str();
  s_mc->add_option("--probe", mc.probe, "Probe name")->capture_default_str();
  s_mc->add_option("--x0", mc.x0, "Start point")->capture_default_str();
  s_mc->add_option("--side", mc.side, "Membrane side when x0 = 0 (left or right)");
  s_mc->add_option("--t", mc.t, "Time")->capture_default_str();
  s_mc->add_option("--n-paths", mc.n_paths, "Number of paths")->capture_default_str();
  s_mc->add_option("--dt", mc.dt, "Time step")->capture_default_str();
  s_mc->add_option("--seed", mc.seed, "Master seed")->capture_default_str();
  s_mc->add_flag("--antithetic", mc.antithetic, "Antithetic path pairs");
  s_mc->add_option("--bias", mc.bias, "Bias budget for --assert")->capture_default_str();

  MeansArgs means;
  auto* s_means = app.add_subcommand("means", "Cesaro mean at time T and its limit.\n"
                                     "CSV: means.csv with columns x,branch,value");
  add_common(s_means, means.c);
  s_means->add_option("--family", means.family, "s-o, skew, o-s or weks")->capture_default_str();
  s_means->add_option("--probe", means.probe, "Probe name")->capture_default_str();
  s_means->add_option("--T", means.t, "Averaging time")->capture_default_str();
  s_means->add_option("--tol", means.tol, "Tolerance for --assert")->capture_default_str();

  MirrorArgs mir;
  auto* s_mir = app.add_subcommand("mirror", "Gap in J C_weks(t) J^-1 = C_skew(t) with swapped parameters.\n"
                                   "CSV: mirror.csv with columns t,gap");
  add_common(s_mir, mir.c);
  s_mir->add_option("--probe", mir.probe, "Opposite-valued probe")->capture_default_str();
  s_mir->add_option("--t", mir.t, "Comma-separated times")->capture_default_str();
  s_mir->add_option("--tol", mir.tol, "Tolerance for --assert")->capture_default_str();

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(args);
    std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    // help requests exit 0 and print to `out`; everything else is a config error
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    const auto run_with = [&](const Common& c, const auto& body) {
      Output o(c);
      body(o);
      for (const auto& path : o.written()) out << path << '\n';
    };
    if (*s_ext) run_with(ext.c, [&](Output& o) { cmd_extend(ext, o); });
    if (*s_conv) run_with(conv.c, [&](Output& o) { cmd_converge(conv, o); });
    if (*s_evo) run_with(evo.c, [&](Output& o) { cmd_evolve(evo, o); });
    if (*s_proj) run_with(proj.c, [&](Output& o) { cmd_project(proj, o); });
    if (*s_mc) run_with(mc.c, [&](Output& o) { cmd_mc(mc, o); });
    if (*s_means) run_with(means.c, [&](Output& o) { cmd_means(means, o); });
    if (*s_mir) run_with(mir.c, [&](Output& o) { cmd_mirror(mir, o); });
  } catch (const AssertFailure& e) {
    err << "assertion failed: " << e.what() << '\n';
    return kExitAssert;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace membranekit::cli
