#include "latrec/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "latrec/approx.hpp"
#include "latrec/errors.hpp"
#include "latrec/io.hpp"

namespace latrec::cli {

namespace {

using nlohmann::json;

class ConfigError : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return f;
}

/// Writes to `path`, or to `out` when path is empty or "-".
template <class F>
void emit(const std::string& path, std::ostream& out, F&& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  write(f);
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> v;
  std::istringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stod(part, &pos));
      if (pos != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InvalidArgument("not a number list: '" + s + "'");
    }
  }
  return v;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

json report_json(const SetReport& r) {
  return {{"cardinality", r.cardinality},
          {"max", r.max_abs},
          {"downward_closed", r.downward_closed},
          {"centrally_symmetric", r.centrally_symmetric},
          {"fully_sign_symmetric", r.fully_sign_symmetric},
          {"tensor_product", r.tensor_product},
          {"sign_change_sum", r.sign_change_sum},
          {"max_sign_changes", r.max_sign_changes},
          {"mirrored_size", r.mirrored_size},
          {"log3_bound", r.log3_bound},
          {"violations", r.violations}};
}

struct Global {
  bool json = false;
  std::uint64_t seed = 0;
  int threads = 1;
  std::ostream* err = nullptr;
};

// ---------------------------------------------------------------------------

struct IndexSetOpts {
  std::string rule, betas, out, mirror, difference;
  std::vector<std::string> sum;
  int degree = 0;
  std::size_t dim = 0;
  std::size_t cap = kDefaultEnumerationCap;
  bool report = false;
};

int cmd_indexset(const IndexSetOpts& o, const Global& g, std::ostream& out) {
  const int sources = (!o.rule.empty()) + (!o.mirror.empty()) + (!o.difference.empty()) + (!o.sum.empty());
  if (sources != 1) throw InvalidArgument("give exactly one of --rule, --mirror, --difference, --sum");
  IndexSet L;
  if (!o.rule.empty()) {
    if (o.dim == 0) throw InvalidArgument("--rule needs --dim");
    if (o.degree < 1) throw InvalidArgument("--rule needs --degree >= 1");
    WeightedSetRule r;
    r.kind = rule_kind_from_string(o.rule);
    r.degree = o.degree;
    r.betas = o.betas.empty() ? std::vector<double>(o.dim, 1.0) : parse_doubles(o.betas);
    L = make_weighted_set(r, o.dim, o.cap);
  } else if (!o.mirror.empty()) {
    L = mirrored(load_index_set(o.mirror));
  } else if (!o.difference.empty()) {
    L = difference_set(load_index_set(o.difference));
  } else {
    L = sum_set(load_index_set(o.sum.at(0)), load_index_set(o.sum.at(1)));
  }
  emit(o.out, out, [&](std::ostream& os) { write_index_set(os, L); });
  const bool wrote_stdout = o.out.empty() || o.out == "-";
  if (o.report) {
    const SetReport r = properties(L);
    (wrote_stdout ? *g.err : out) << report_json(r).dump(g.json ? -1 : 2) << '\n';
    if (!r.violations.empty()) return kInternal;
  } else if (g.json && !wrote_stdout) {
    out << json{{"command", "indexset"}, {"size", L.size()}, {"dim", L.dim()}}.dump() << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct TaskOpts {
  std::string input, space = "fourier", goal = "reconstruction", plan = "none", strategy = "mixed",
                     projection = "full", n = "auto";
  double switch_factor = 1.0;
  int retry_limit = 64;
  bool reduce_n = false;
};

CbcTask make_task(const TaskOpts& o) {
  CbcTask t;
  t.base_set = load_index_set(o.input);
  t.space = space_from_string(o.space);
  t.goal = goal_from_string(o.goal);
  t.plan = plan_from_string(o.plan);
  t.strategy = strategy_from_string(o.strategy);
  t.projection = projection_from_string(o.projection);
  t.mixed_switch_factor = o.switch_factor;
  t.retry_limit = o.retry_limit;
  t.reduce_n = o.reduce_n;
  if (o.n != "auto") {
    try {
      std::size_t pos = 0;
      t.n = std::stoll(o.n, &pos);
      if (pos != o.n.size()) throw std::invalid_argument(o.n);
    } catch (const std::exception&) {
      throw InvalidArgument("--n must be 'auto' or an integer");
    }
  }
  t.validate();
  return t;
}

int cmd_cbc(const TaskOpts& o, const std::string& out_path, std::string stats_path, const Global& g,
            std::ostream& out) {
  const CbcTask task = make_task(o);
  const CbcResult r = cbc_construct(task);
  emit(out_path, out, [&](std::ostream& os) { write_cbc_result(os, r.lattice, r.c_table); });
  const json stats = stats_to_json(r.stats);
  if (stats_path.empty() && !out_path.empty() && out_path != "-") stats_path = out_path + ".json";
  if (!stats_path.empty()) {
    std::ofstream f(stats_path);
    if (!f) throw Error("cannot write " + stats_path);
    f << stats.dump(2) << '\n';
  }
  if (g.json && !out_path.empty() && out_path != "-") {
    json j{{"command", "cbc"}, {"n", r.lattice.n()}, {"z", std::vector<Index>(r.lattice.z().begin(), r.lattice.z().end())},
           {"stats", stats}};
    out << j.dump() << '\n';
  }
  return kOk;
}

int cmd_verify(const TaskOpts& o, const std::string& lattice_path, const Global& g, std::ostream& out) {
  TaskOpts t = o;
  t.strategy = "brute_force";
  const CbcTask task = make_task(t);
  auto f = open_in(lattice_path);
  CTable stored;
  const Rank1Lattice L = read_cbc_result(f, &stored);
  CTable c;
  bool ok = condition_holds(task, L, &c);
  std::string reason = ok ? "" : "exactness condition fails";
  if (ok && task.uses_plan_c() && !stored.empty() && stored != c) {
    ok = false;
    reason = "stored c-table differs from the computed one";
  }
  if (g.json) {
    out << json{{"command", "verify"}, {"ok", ok}, {"n", L.n()}, {"reason", reason}}.dump() << '\n';
  } else {
    out << (ok ? "ok" : "FAIL: " + reason) << '\n';
  }
  return ok ? kOk : kConditionFails;
}

// ---------------------------------------------------------------------------

struct ReconstructOpts {
  std::string lattice, input, space = "fourier", plan = "none", values, function, out;
  double beta = 0.5;
  double tol = 1e-11;
  bool roundtrip = false, unsafe = false, fft_only = false;
};

int cmd_reconstruct(const ReconstructOpts& o, const Global& g, std::ostream& out) {
  const IndexSet Lambda = load_index_set(o.input);
  auto lf = open_in(o.lattice);
  CTable c;
  const Rank1Lattice L = read_cbc_result(lf, &c);
  const Space space = space_from_string(o.space);
  const Plan plan = space == Space::fourier ? Plan::none : plan_from_string(o.plan);
  if (space != Space::fourier && plan == Plan::none) throw InvalidArgument("--plan is required for this space");
  if (o.values.empty() == o.function.empty()) throw InvalidArgument("give exactly one of --values, --function");

  std::vector<cplx> values;
  if (!o.values.empty()) {
    auto vf = open_in(o.values);
    values = read_values(vf);
    if (static_cast<std::int64_t>(values.size()) != L.n())
      throw InvalidArgument("value file has " + std::to_string(values.size()) + " entries, lattice has n=" +
                            std::to_string(L.n()));
  } else if (o.function == "random") {
    const auto coeffs = random_coefficients(space, Lambda, g.seed);
    values = values_from_coeffs(L, Lambda, space, coeffs);
  } else if (o.function == "smooth") {
    values = sample_values(L, space, smooth_function(space, Lambda.dim(), o.beta).evaluator);
  } else {
    throw InvalidArgument("unknown test function '" + o.function + "' (random, smooth)");
  }

  TransformOptions topt;
  topt.unsafe = o.unsafe;
  topt.use_dct = !o.fft_only;
  const CoefficientTable coeffs =
      coeffs_from_values(L, Lambda, space, plan, values, plan == Plan::C ? &c : nullptr, topt);
  emit(o.out, out, [&](std::ostream& os) { write_coefficients(os, space, Lambda.dim(), coeffs); });

  if (!o.roundtrip) return kOk;
  const auto back = values_from_coeffs(L, Lambda, space, coeffs);
  double dev = 0.0;
  for (std::size_t i = 0; i < back.size(); ++i) dev = std::max(dev, std::abs(back[i] - values[i]));
  const bool ok = dev < o.tol;
  if (g.json) {
    out << json{{"command", "reconstruct"}, {"roundtrip_deviation", dev}, {"ok", ok}}.dump() << '\n';
  } else {
    (o.out.empty() || o.out == "-" ? *g.err : out) << "roundtrip deviation " << fmt(dev) << '\n';
  }
  return ok ? kOk : kConditionFails;
}

// ---------------------------------------------------------------------------

template <class T>
T cfg_get(const json& j, const char* key, const T& fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config field '") + key + "' has the wrong type");
  }
}

template <class T>
T cfg_require(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("config lacks '") + key + "'");
  return cfg_get<T>(j, key, T{});
}

int cmd_experiment(const std::string& config_path, const std::string& out_path, bool seed_given, const Global& g,
                   std::ostream& out) {
  auto f = open_in(config_path);
  json cfg;
  try {
    cfg = json::parse(f);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!cfg.is_object()) throw ConfigError("config must be a JSON object");

  const Space space = space_from_string(cfg_require<std::string>(cfg, "space"));
  const Plan plan = space == Space::fourier ? Plan::none : plan_from_string(cfg_require<std::string>(cfg, "plan"));
  if (space != Space::fourier && plan == Plan::none) throw ConfigError("config needs a plan for this space");
  const std::uint64_t seed = seed_given ? g.seed : cfg_get<std::uint64_t>(cfg, "seed", 0);
  const Strategy strategy = strategy_from_string(cfg_get<std::string>(cfg, "strategy", "mixed"));

  if (!cfg.contains("rule") || !cfg["rule"].is_object()) throw ConfigError("config lacks object 'rule'");
  const json& rj = cfg["rule"];
  WeightedSetRule rule;
  rule.kind = rule_kind_from_string(cfg_require<std::string>(rj, "kind"));
  const auto betas = cfg_get<std::vector<double>>(rj, "betas", {});
  const auto degrees = cfg_require<std::vector<int>>(rj, "degrees");
  const auto dims = cfg_require<std::vector<int>>(cfg, "dims");
  if (degrees.empty() || dims.empty()) throw ConfigError("'degrees' and 'dims' must be nonempty");

  const std::string n_policy = cfg_get<std::string>(cfg, "n_policy", "auto");
  if (n_policy != "auto" && n_policy != "reduced") throw ConfigError("n_policy must be 'auto' or 'reduced'");

  const json fj = cfg.contains("function") ? cfg["function"] : json{{"name", "smooth"}};
  if (!fj.is_object()) throw ConfigError("'function' must be an object");
  const std::string fname = cfg_require<std::string>(fj, "name");
  if (fname != "smooth" && fname != "series") throw ConfigError("unknown test function '" + fname + "'");
  const double beta = cfg_get<double>(fj, "beta", 0.5);
  const double decay = cfg_get<double>(fj, "decay", 2.0);
  const int ref_scale = cfg_get<int>(fj, "reference_scale", 3);

  std::ostringstream csv;
  csv << "d,|Λ|,n,plan,truncation_err,approx_err,rho,bound_slack\n";
  int row = 0;
  for (int d : dims) {
    if (d < 1) throw ConfigError("dimensions must be >= 1");
    rule.betas = betas.empty() ? std::vector<double>(static_cast<std::size_t>(d), 1.0) : betas;
    for (int m : degrees) {
      rule.degree = m;
      const IndexSet Lambda = make_weighted_set(rule, static_cast<std::size_t>(d));
      CbcTask task;
      task.space = space;
      task.goal = Goal::reconstruction;
      task.plan = plan;
      task.base_set = Lambda;
      task.strategy = strategy;
      task.reduce_n = n_policy == "reduced";
      const CbcResult res = cbc_construct(task);

      TestFunction fn;
      if (fname == "smooth") {
        fn = smooth_function(space, static_cast<std::size_t>(d), beta);
      } else {
        WeightedSetRule big = rule;
        big.degree = m * ref_scale;
        fn = series_function(space, static_cast<std::size_t>(d),
                             random_coefficients(space, make_weighted_set(big, static_cast<std::size_t>(d)),
                                                 seed + static_cast<std::uint64_t>(row), decay));
      }
      const CTable* c = plan == Plan::C ? &res.c_table : nullptr;
      const ErrorReport er = error_decomposition(fn, res.lattice, Lambda, space, plan, c);
      csv << d << ',' << Lambda.size() << ',' << res.lattice.n() << ',' << to_string(plan) << ','
          << fmt(er.truncation_err) << ',' << fmt(er.approximation_err) << ',' << fmt(er.rho) << ','
          << fmt(er.bound_slack) << '\n';
      ++row;
    }
  }
  emit(out_path, out, [&](std::ostream& os) { os << csv.str(); });
  if (g.json && !out_path.empty() && out_path != "-")
    out << json{{"command", "experiment"}, {"rows", row}}.dump() << '\n';
  return kOk;
}

void add_task_options(CLI::App* sc, TaskOpts& o) {
  sc->add_option("-i,--input", o.input, "index set file")->required();
  sc->add_option("--space", o.space, "fourier | cosine | chebyshev");
  sc->add_option("--goal", o.goal, "integration | reconstruction");
  sc->add_option("--plan", o.plan, "A | B | C (cosine/Chebyshev reconstruction)");
  sc->add_option("--projection", o.projection, "zero | full");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-1 lattice construction and reconstruction"};
  app.require_subcommand(1);
  Global g;
  g.err = &err;
  app.add_flag("--json", g.json, "print JSON lines on stdout");
  auto* seed_opt = app.add_option("--seed", g.seed, "random seed");
  app.add_option("--threads", g.threads, "parallelism cap")->envname("LATTICE_RECON_THREADS")->check(CLI::PositiveNumber);

  IndexSetOpts io;
  auto* sc_idx = app.add_subcommand("indexset", "build or transform an index set");
  sc_idx->add_option("--rule", io.rule, "max | sum | product");
  sc_idx->add_option("--betas", io.betas, "comma separated weights, first = 1");
  sc_idx->add_option("--degree", io.degree, "degree m");
  sc_idx->add_option("--dim", io.dim, "dimension d");
  sc_idx->add_option("--cap", io.cap, "enumeration cap");
  sc_idx->add_option("--mirror", io.mirror, "mirror an index set file");
  sc_idx->add_option("--difference", io.difference, "difference set of a file");
  sc_idx->add_option("--sum", io.sum, "sum set of two files")->expected(2);
  sc_idx->add_flag("--report", io.report, "print properties as JSON");
  sc_idx->add_option("-o,--output", io.out, "output file (default stdout)");

  TaskOpts cbc_o;
  std::string cbc_out, cbc_stats;
  auto* sc_cbc = app.add_subcommand("cbc", "construct a generating vector");
  add_task_options(sc_cbc, cbc_o);
  sc_cbc->add_option("--strategy", cbc_o.strategy, "brute_force | elimination | mixed");
  sc_cbc->add_option("--n", cbc_o.n, "auto or a point count");
  sc_cbc->add_option("--switch-factor", cbc_o.switch_factor, "mixed strategy switch factor");
  sc_cbc->add_option("--retry-limit", cbc_o.retry_limit, "number of n escalations");
  sc_cbc->add_flag("--reduce-n", cbc_o.reduce_n, "try smaller primes afterwards");
  sc_cbc->add_option("-o,--output", cbc_out, "lattice file (default stdout)");
  sc_cbc->add_option("--stats", cbc_stats, "statistics JSON (default <output>.json)");

  TaskOpts ver_o;
  std::string ver_lattice;
  auto* sc_ver = app.add_subcommand("verify", "check a lattice against the exactness condition");
  add_task_options(sc_ver, ver_o);
  sc_ver->add_option("-l,--lattice", ver_lattice, "lattice file")->required();

  ReconstructOpts rec;
  auto* sc_rec = app.add_subcommand("reconstruct", "coefficients from lattice samples");
  sc_rec->add_option("-l,--lattice", rec.lattice, "lattice file")->required();
  sc_rec->add_option("-i,--input", rec.input, "index set file")->required();
  sc_rec->add_option("--space", rec.space, "fourier | cosine | chebyshev");
  sc_rec->add_option("--plan", rec.plan, "A | B | C");
  sc_rec->add_option("--values", rec.values, "value file");
  sc_rec->add_option("--function", rec.function, "built-in test function: random | smooth");
  sc_rec->add_option("--beta", rec.beta, "parameter of the smooth function");
  sc_rec->add_option("--tol", rec.tol, "round trip tolerance");
  sc_rec->add_flag("--roundtrip", rec.roundtrip, "re-synthesize values and report the deviation");
  sc_rec->add_flag("--unsafe", rec.unsafe, "skip the aliasing check");
  sc_rec->add_flag("--fft-only", rec.fft_only, "use the complex FFT instead of DCT-I/V");
  sc_rec->add_option("-o,--output", rec.out, "coefficient file (default stdout)");

  std::string exp_cfg, exp_out;
  auto* sc_exp = app.add_subcommand("experiment", "error experiment from a JSON config");
  sc_exp->add_option("-c,--config", exp_cfg, "config file")->required();
  sc_exp->add_option("-o,--output", exp_out, "CSV file (default stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadArgs;
  }

  try {
    if (sc_idx->parsed()) return cmd_indexset(io, g, out);
    if (sc_cbc->parsed()) return cmd_cbc(cbc_o, cbc_out, cbc_stats, g, out);
    if (sc_ver->parsed()) return cmd_verify(ver_o, ver_lattice, g, out);
    if (sc_rec->parsed()) return cmd_reconstruct(rec, g, out);
    if (sc_exp->parsed()) return cmd_experiment(exp_cfg, exp_out, seed_opt->count() > 0, g, out);
  } catch (const RetryLimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kRetryLimit;
  } catch (const AliasingDetected& e) {
    err << "error: " << e.what() << '\n';
    return kConditionFails;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n' << app.help() ;
    return kBadArgs;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kBadArgs;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace latrec::cli
