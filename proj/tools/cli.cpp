#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "scenery/condition.hpp"
#include "scenery/explorer.hpp"
#include "scenery/fourier.hpp"
#include "scenery/io.hpp"
#include "scenery/scenery.hpp"
#include "scenery/walk.hpp"

namespace scenery::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string out_path;
  std::string format = "json";
  std::uint64_t seed = 1;
  double tol = kDefaultRankTol;
  std::size_t max_entries = kDefaultMaxEntries;
  std::string irreps_path;
  bool timing = false;

  std::string group;
  std::string gamma = "uniform";
  std::string scenery;
  std::string f1, f2;
  std::string function;
  std::string lags = "1";
  std::string tensor_path;
  int n = 1;
  int lmax = 0;
  int trials = 25;
  int horizon = 8;
  int order_bound = 3;
  int lag_bound = 0;
  int irrep = -1;
};

bool is_file(const std::string& s) {
  std::error_code ec;
  return std::filesystem::is_regular_file(s, ec);
}

FiniteGroup resolve_group(const std::string& spec) {
  if (spec.empty()) throw UsageError("--group is required");
  if (is_file(spec)) return load_group_file(spec);
  try {
    return build_builtin(spec);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

IrrepSet resolve_irreps(const FiniteGroup& g, const Options& o) {
  if (!o.irreps_path.empty()) {
    IrrepSet set = load_irreps_file(o.irreps_path);
    require_valid_irreps(set, g);
    return set;
  }
  return irreducible_representations(g);
}

std::vector<double> parse_real_list(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw ValidationError("expected a JSON array of numbers: " + text);
  }
  if (!j.is_array()) throw ValidationError("expected a JSON array of numbers: " + text);
  std::vector<double> v;
  for (const auto& e : j) {
    if (!e.is_number()) throw ValidationError("expected a JSON array of numbers: " + text);
    v.push_back(e.get<double>());
  }
  return v;
}

StepDistribution resolve_gamma(const FiniteGroup& g, const std::string& spec) {
  if (spec == "uniform") return StepDistribution::uniform(g);
  if (spec.rfind("point:", 0) == 0) {
    try {
      return StepDistribution::point_mass(g, std::stoi(spec.substr(6)));
    } catch (const std::logic_error&) {
      throw ValidationError("bad point mass spec: " + spec);
    }
  }
  if (spec.rfind("random:", 0) == 0) {
    try {
      return StepDistribution::random(g, std::stoull(spec.substr(7)));
    } catch (const std::logic_error&) {
      throw ValidationError("bad random spec: " + spec);
    }
  }
  if (is_file(spec)) {
    const Json j = read_json_file(spec);
    return StepDistribution(g, parse_real_list(j.dump()));
  }
  return StepDistribution(g, parse_real_list(spec));
}

Scenery resolve_scenery(const FiniteGroup& g, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  return Scenery::parse(text, g.order());
}

std::vector<unsigned> parse_lags(const std::string& text) {
  std::vector<unsigned> lags;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const long v = std::stol(item);
      if (v < 1) throw ValidationError("lags must be positive integers");
      lags.push_back(static_cast<unsigned>(v));
    } catch (const std::logic_error&) {
      throw ValidationError("bad lag list: " + text);
    }
  }
  if (lags.empty()) throw ValidationError("empty lag list");
  return lags;
}

Json envelope(const std::string& command, Json params, Json result) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["tool"] = "scenery";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["parameters"] = std::move(params);
  j["result"] = std::move(result);
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) {
    if (c == '"') o += '"';
    o += c;
  }
  return o + "\"";
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string condition_csv(const ConditionReport& r) {
  std::ostringstream os;
  os << "group,n,lag_bound,tol,unknowns,rank,nullity,theoretical_rank_bound,verdict,"
        "witness_residual\n";
  os << csv_escape(r.group) << ',' << r.n << ',' << r.lag_bound << ',' << fmt_double(r.tol)
     << ',' << r.unknowns << ',' << r.rank << ',' << r.nullity << ',' << r.rank_bound << ','
     << (r.condition_holds ? "condition_holds" : "condition_fails") << ','
     << (r.witness_residual ? fmt_double(*r.witness_residual) : "") << '\n';
  return os.str();
}

std::string theorem2_csv(const RankDeficitSummary& s) {
  std::ostringstream os;
  os << "group,label,rank,nullity,theoretical_rank_bound,witness_residual,ok\n";
  for (const auto& t : s.trials)
    os << csv_escape(s.group) << ',' << t.label << ',' << t.rank << ',' << t.nullity << ','
       << s.rank_bound << ',' << fmt_double(t.witness_residual) << ','
       << (t.ok ? "true" : "false") << '\n';
  return os.str();
}

std::string explore_csv(const ExplorationReport& r) {
  std::ostringstream os;
  os << "f1,f2,shift_equivalent,verdict,horizon,moments_equal,null_space_orders,"
        "indistinguishable_non_shift,nonzero_null_difference,consistent\n";
  for (const auto& p : r.pairs) {
    std::string orders;
    for (const auto& o : p.orders)
      if (o.in_null_space) orders += (orders.empty() ? "" : ";") + std::to_string(o.n);
    os << p.f1.str() << ',' << p.f2.str() << ',' << (p.shift_equivalent ? "true" : "false")
       << ',' << (p.verdict.distinguished ? "distinguished" : "indistinguishable_up_to") << ','
       << p.verdict.horizon << ',' << (p.verdict.moments_equal ? "true" : "false") << ','
       << orders << ',' << (!p.shift_equivalent && p.indistinguishable() ? "true" : "false")
       << ',' << (p.nonzero_null_difference() ? "true" : "false") << ','
       << (p.consistent ? "true" : "false") << '\n';
  }
  return os.str();
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw ValidationError("cannot write " + o.out_path);
  f << text;
}

void emit_json(const Options& o, const Json& j, std::ostream& out) {
  emit(o, j.dump(2) + "\n", out);
}

void require_json(const Options& o, const std::string& command) {
  if (o.format != "json") throw UsageError("--format csv is not available for " + command);
}

Json gamma_json(const StepDistribution& gamma) {
  return Json(std::vector<double>(gamma.probs().begin(), gamma.probs().end()));
}

int cmd_group_list(const Options& o, std::ostream& out) {
  require_json(o, "group list");
  Json list = Json::array();
  for (const auto& name : builtin_names()) {
    const FiniteGroup g = build_builtin(name);
    Json e;
    e["name"] = g.name();
    e["order"] = g.order();
    e["abelian"] = g.is_abelian();
    list.push_back(std::move(e));
  }
  emit_json(o, envelope("group list", Json::object(), std::move(list)), out);
  return kExitOk;
}

int cmd_group_verify(const Options& o, std::ostream& out) {
  require_json(o, "group verify");
  std::string name;
  std::vector<std::vector<int>> table;
  if (is_file(o.group)) {
    const Json j = read_json_file(o.group);
    try {
      name = j.at("name").get<std::string>();
      table = j.at("table").get<std::vector<std::vector<int>>>();
    } catch (const Json::exception& e) {
      throw ValidationError(std::string("malformed group file: ") + e.what());
    }
  } else {
    const FiniteGroup g = resolve_group(o.group);
    name = g.name();
    table = g.table();
  }
  const AxiomReport rep = verify_group_axioms(name, table);
  Json r;
  r["name"] = name;
  r["order"] = table.size();
  r["ok"] = rep.ok();
  r["violations"] = rep.violations;
  if (rep.ok()) r["abelian"] = FiniteGroup::from_table(name, table).is_abelian();
  Json params;
  params["group"] = o.group;
  emit_json(o, envelope("group verify", params, r), out);
  return rep.ok() ? kExitOk : kExitValidation;
}

int cmd_irreps(const Options& o, std::ostream& out) {
  require_json(o, "irreps");
  const FiniteGroup g = resolve_group(o.group);
  const IrrepSet set = resolve_irreps(g, o);
  double hom = 0.0;
  for (const auto& rho : set.reps) hom = std::max(hom, verify_representation(g, rho).max());
  const CompletenessReport c = verify_completeness(set, g);
  Json r;
  r["group"] = g.name();
  r["degrees"] = set.degrees();
  r["homomorphism_residual"] = hom;
  r["orthogonality_residual"] = c.orthogonality;
  r["sum_degree_squares"] = c.sum_degree_squares;
  r["representations"] = irreps_to_json(set);
  Json params;
  params["group"] = o.group;
  params["irreps"] = o.irreps_path;
  emit_json(o, envelope("irreps", params, r), out);
  return kExitOk;
}

int cmd_ft(const Options& o, std::ostream& out) {
  require_json(o, "ft");
  const FiniteGroup g = resolve_group(o.group);
  const IrrepSet set = resolve_irreps(g, o);
  std::vector<double> u;
  if (!o.scenery.empty())
    u = Scenery::parse(o.scenery, g.order()).as_real();
  else if (!o.function.empty())
    u = parse_real_list(o.function);
  else
    throw UsageError("ft needs --function or --scenery");
  if (static_cast<int>(u.size()) != g.order())
    throw ValidationError("function length does not match group order");
  Json coeffs = Json::array();
  for (std::size_t r = 0; r < set.size(); ++r) {
    if (o.irrep >= 0 && static_cast<std::size_t>(o.irrep) != r) continue;
    Json c;
    c["irrep"] = r;
    c["degree"] = set[r].degree;
    c["matrix"] = matrix_to_json(fourier_transform(u, set[r]));
    coeffs.push_back(std::move(c));
  }
  if (o.irrep >= 0 && coeffs.empty()) throw ValidationError("no irrep with that index");
  Json params;
  params["group"] = o.group;
  params["function"] = u;
  params["irrep"] = o.irrep;
  emit_json(o, envelope("ft", params, coeffs), out);
  return kExitOk;
}

int cmd_autocorr(const Options& o, std::ostream& out) {
  require_json(o, "autocorr");
  const FiniteGroup g = resolve_group(o.group);
  const Scenery f = resolve_scenery(g, o.scenery, "--scenery");
  Json params;
  params["group"] = o.group;
  params["scenery"] = f.str();
  emit_json(o, envelope("autocorr", params, tensor_to_json(g.name(), spatial_autocorrelation(g, f))),
            out);
  return kExitOk;
}

int cmd_multispectrum(const Options& o, std::ostream& out) {
  require_json(o, "multispectrum");
  const FiniteGroup g = resolve_group(o.group);
  const Scenery f = resolve_scenery(g, o.scenery, "--scenery");
  Json params;
  params["group"] = o.group;
  params["scenery"] = f.str();
  params["n"] = o.n;
  emit_json(o,
            envelope("multispectrum", params,
                     tensor_to_json(g.name(), multispectrum(g, f, o.n, o.max_entries))),
            out);
  return kExitOk;
}

int cmd_bstats(const Options& o, std::ostream& out) {
  require_json(o, "bstats");
  const FiniteGroup g = resolve_group(o.group);
  const IrrepSet set = resolve_irreps(g, o);
  const Scenery f = resolve_scenery(g, o.scenery, "--scenery");
  const StepDistribution gamma = resolve_gamma(g, o.gamma);
  const std::vector<unsigned> lags = parse_lags(o.lags);
  double direct = 0.0, spectral = 0.0;
  if (lags.size() == 1) {
    direct = temporal_autocorrelation_direct(g, f, gamma, lags[0]);
    spectral = temporal_autocorrelation_spectral(g, set, f, gamma, lags[0]);
  } else {
    direct = temporal_multispectrum_direct(g, f, gamma, lags, o.max_entries);
    spectral = temporal_multispectrum_spectral(g, set, f, gamma, lags, o.max_entries);
  }
  Json r;
  r["statistic"] = lags.size() == 1 ? "temporal_autocorrelation" : "temporal_multispectrum";
  r["direct"] = direct;
  r["spectral"] = spectral;
  r["abs_difference"] = std::abs(direct - spectral);
  Json params;
  params["group"] = o.group;
  params["scenery"] = f.str();
  params["gamma"] = gamma_json(gamma);
  params["lags"] = lags;
  emit_json(o, envelope("bstats", params, r), out);
  return kExitOk;
}

Json condition_params(const Options& o, const StepDistribution& gamma, int lmax) {
  Json p;
  p["group"] = o.group;
  p["gamma_spec"] = o.gamma;
  p["gamma"] = gamma_json(gamma);
  p["n"] = o.n;
  p["lmax"] = lmax;
  p["tol"] = o.tol;
  return p;
}

int cmd_condition(const Options& o, std::ostream& out) {
  const FiniteGroup g = resolve_group(o.group);
  const IrrepSet set = resolve_irreps(g, o);
  const StepDistribution gamma = resolve_gamma(g, o.gamma);
  const ConditionReport rep = condition_report(g, set, gamma, o.n, o.lmax, o.tol, o.max_entries);
  if (o.format == "csv") {
    emit(o, condition_csv(rep), out);
  } else {
    emit_json(o, envelope("condition", condition_params(o, gamma, rep.lag_bound), to_json(rep)),
              out);
  }
  return kExitOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  require_json(o, "witness");
  const FiniteGroup g = resolve_group(o.group);
  const IrrepSet set = resolve_irreps(g, o);
  const StepDistribution gamma = resolve_gamma(g, o.gamma);
  const ConditionReport rep = condition_report(g, set, gamma, o.n, o.lmax, o.tol, o.max_entries);
  Json r;
  r["verdict"] = rep.condition_holds ? "condition_holds" : "condition_fails";
  r["nullity"] = rep.nullity;
  if (rep.witness) {
    r["witness"] = tensor_to_json(g.name(), *rep.witness);
    r["residual"] = *rep.witness_residual;
    r["residual_lag_bound"] = 2 * rep.lag_bound;
  } else {
    r["witness"] = nullptr;
  }
  emit_json(o, envelope("witness", condition_params(o, gamma, rep.lag_bound), r), out);
  return kExitOk;
}

int cmd_theorem2(const Options& o, std::ostream& out) {
  const FiniteGroup g = resolve_group(o.group);
  const IrrepSet set = resolve_irreps(g, o);
  const RankDeficitSummary s = verify_theorem2(g, set, o.trials, o.seed, o.tol);
  if (o.format == "csv") {
    emit(o, theorem2_csv(s), out);
  } else {
    Json params;
    params["group"] = o.group;
    params["trials"] = o.trials;
    params["seed"] = o.seed;
    params["tol"] = o.tol;
    emit_json(o, envelope("theorem2", params, to_json(s)), out);
  }
  return s.all_ok ? kExitOk : kExitValidation;
}

int cmd_distinguish(const Options& o, std::ostream& out) {
  require_json(o, "distinguish");
  const FiniteGroup g = resolve_group(o.group);
  const Scenery f1 = resolve_scenery(g, o.f1, "--f1");
  const Scenery f2 = resolve_scenery(g, o.f2, "--f2");
  const StepDistribution gamma = resolve_gamma(g, o.gamma);
  const DistinguishVerdict v = distinguishability_oracle(g, f1, f2, gamma, o.horizon,
                                                         o.order_bound, o.lag_bound, o.max_entries);
  Json r = to_json(v);
  r["shift_equivalent"] = shift_equivalent(g, f1, f2).has_value();
  Json params;
  params["group"] = o.group;
  params["f1"] = f1.str();
  params["f2"] = f2.str();
  params["gamma"] = gamma_json(gamma);
  params["horizon"] = o.horizon;
  params["order_bound"] = o.order_bound;
  params["lag_bound"] = v.lag_bound;
  emit_json(o, envelope("distinguish", params, r), out);
  return kExitOk;
}

int cmd_reconstruct(const Options& o, std::ostream& out) {
  require_json(o, "reconstruct");
  const FiniteGroup g = resolve_group(o.group);
  std::optional<Scenery> source;
  IntTensor a;
  if (!o.scenery.empty()) {
    source = Scenery::parse(o.scenery, g.order());
    a = multispectrum(g, *source, g.order(), o.max_entries);
  } else if (!o.tensor_path.empty()) {
    a = int_tensor_from_json(read_json_file(o.tensor_path));
  } else {
    throw UsageError("reconstruct needs --from-scenery or --tensor");
  }
  const Reconstruction rec = reconstruct_from_multispectrum(g, a, o.max_entries);
  Json r;
  r["scenery"] = rec.scenery.str();
  r["minimal_tuple"] = rec.minimal_tuple;
  r["assigned_tuple"] = rec.assigned;
  r["last_index"] = rec.last_index;
  if (source) {
    const auto w = shift_equivalent(g, rec.scenery, *source);
    r["shift_equivalent_to_input"] = w.has_value();
    if (w) r["shift"] = *w;
  }
  Json params;
  params["group"] = o.group;
  if (source) params["from_scenery"] = source->str();
  if (!o.tensor_path.empty()) params["tensor"] = o.tensor_path;
  emit_json(o, envelope("reconstruct", params, r), out);
  return kExitOk;
}

int cmd_explore(const Options& o, std::ostream& out) {
  const FiniteGroup g = resolve_group(o.group);
  const IrrepSet set = resolve_irreps(g, o);
  const StepDistribution gamma = resolve_gamma(g, o.gamma);
  ExploreOptions eo;
  eo.order_bound = o.order_bound;
  eo.horizon = o.horizon;
  eo.lag_bound = o.lag_bound;
  eo.max_entries = o.max_entries;
  const auto t0 = std::chrono::steady_clock::now();
  const ExplorationReport rep = explore_open_question(g, set, gamma, eo);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.format == "csv") {
    emit(o, explore_csv(rep), out);
  } else {
    Json params;
    params["group"] = o.group;
    params["gamma_spec"] = o.gamma;
    params["gamma"] = gamma_json(gamma);
    params["order_bound"] = o.order_bound;
    params["horizon"] = o.horizon;
    params["lag_bound"] = rep.lag_bound;
    params["seed"] = o.seed;
    Json r = to_json(rep);
    if (o.timing) r["elapsed_seconds"] = elapsed;
    emit_json(o, envelope("explore", params, r), out);
  }
  return rep.all_consistent ? kExitOk : kExitValidation;
}

int cmd_sample(const Options& o, std::ostream& out) {
  require_json(o, "sample");
  const FiniteGroup g = resolve_group(o.group);
  const Scenery f = resolve_scenery(g, o.scenery, "--scenery");
  const StepDistribution gamma = resolve_gamma(g, o.gamma);
  const auto bits = sample_trajectory(g, f, gamma, o.horizon, o.seed);
  std::string s;
  for (auto b : bits) s += static_cast<char>('0' + b);
  Json params;
  params["group"] = o.group;
  params["scenery"] = f.str();
  params["gamma"] = gamma_json(gamma);
  params["horizon"] = o.horizon;
  params["seed"] = o.seed;
  Json r;
  r["observations"] = s;
  emit_json(o, envelope("sample", params, r), out);
  return kExitOk;
}

std::size_t default_max_entries() {
  if (const char* env = std::getenv("SCENERY_MAX_ENTRIES")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::logic_error&) {
    }
  }
  return kDefaultMaxEntries;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.max_entries = default_max_entries();

  CLI::App app{"Scenery analysis on finite groups via non-commutative Fourier analysis",
               "scenery"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto add_common = [&](CLI::App* c) {
    c->add_option("--out", o.out_path, "Write output to this file instead of stdout");
    c->add_option("--irreps", o.irreps_path,
                  "Representation file (required for custom groups)");
    c->add_option("--max-entries", o.max_entries,
                  "Cap on dense tensor/matrix entries (env SCENERY_MAX_ENTRIES)");
  };
  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", o.group, "Built-in name (Z4, D3, Q8, Z2xZ2, ...) or JSON file")
        ->required();
  };

  auto* group_cmd = app.add_subcommand("group", "List or verify groups");
  group_cmd->require_subcommand(1);
  auto* group_list = group_cmd->add_subcommand("list", "List built-in groups");
  add_common(group_list);
  auto* group_verify = group_cmd->add_subcommand("verify", "Check group axioms");
  add_common(group_verify);
  add_group(group_verify);

  auto* irreps = app.add_subcommand("irreps", "Emit and verify irreducible representations");
  add_common(irreps);
  add_group(irreps);

  auto* ft = app.add_subcommand("ft", "Fourier transform of a function");
  add_common(ft);
  add_group(ft);
  ft->add_option("--function", o.function, "JSON array of |G| reals");
  ft->add_option("--scenery", o.scenery, "Scenery bitstring");
  ft->add_option("--irrep", o.irrep, "Only this irrep index");

  auto* autocorr = app.add_subcommand("autocorr", "Spatial autocorrelation a_f");
  add_common(autocorr);
  add_group(autocorr);
  autocorr->add_option("--scenery", o.scenery)->required();

  auto* ms = app.add_subcommand("multispectrum", "Multispectrum A_f of order n");
  add_common(ms);
  add_group(ms);
  ms->add_option("--scenery", o.scenery)->required();
  ms->add_option("--n", o.n, "Order")->check(CLI::PositiveNumber);

  auto* bstats = app.add_subcommand("bstats", "Temporal b_f / B_f, direct and spectral");
  add_common(bstats);
  add_group(bstats);
  bstats->add_option("--scenery", o.scenery)->required();
  bstats->add_option("--gamma", o.gamma, "uniform | point:<idx> | random:<seed> | file | JSON");
  bstats->add_option("--lags", o.lags, "Comma-separated positive lags");

  auto* condition = app.add_subcommand("condition", "Rank test of the reconstruction condition");
  add_common(condition);
  add_group(condition);
  condition->add_option("--gamma", o.gamma);
  condition->add_option("--n", o.n)->check(CLI::PositiveNumber);
  condition->add_option("--lmax", o.lmax, "Lag bound (default |G|)");
  condition->add_option("--tol", o.tol, "Relative pivot threshold")->check(CLI::PositiveNumber);
  condition->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* witness = app.add_subcommand("witness", "Null-space witness of the condition system");
  add_common(witness);
  add_group(witness);
  witness->add_option("--gamma", o.gamma);
  witness->add_option("--n", o.n)->check(CLI::PositiveNumber);
  witness->add_option("--lmax", o.lmax);
  witness->add_option("--tol", o.tol)->check(CLI::PositiveNumber);

  auto* theorem2 = app.add_subcommand("theorem2", "Rank-bound check on a non-abelian group");
  add_common(theorem2);
  add_group(theorem2);
  theorem2->add_option("--trials", o.trials)->check(CLI::NonNegativeNumber);
  theorem2->add_option("--seed", o.seed);
  theorem2->add_option("--tol", o.tol)->check(CLI::PositiveNumber);
  theorem2->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* distinguish = app.add_subcommand("distinguish", "Compare observation laws of two sceneries");
  add_common(distinguish);
  add_group(distinguish);
  distinguish->add_option("--f1", o.f1)->required();
  distinguish->add_option("--f2", o.f2)->required();
  distinguish->add_option("--gamma", o.gamma);
  distinguish->add_option("--horizon", o.horizon)->check(CLI::PositiveNumber);
  distinguish->add_option("--order-bound", o.order_bound)->check(CLI::NonNegativeNumber);
  distinguish->add_option("--lag-bound", o.lag_bound);

  auto* reconstruct = app.add_subcommand("reconstruct", "Scenery from its order-|G| multispectrum");
  add_common(reconstruct);
  add_group(reconstruct);
  reconstruct->add_option("--from-scenery", o.scenery);
  reconstruct->add_option("--tensor", o.tensor_path, "Tensor JSON as written by multispectrum");

  auto* explore = app.add_subcommand("explore", "Scan scenery pairs for null-space differences");
  add_common(explore);
  add_group(explore);
  explore->add_option("--gamma", o.gamma);
  explore->add_option("--order-bound", o.order_bound)->check(CLI::PositiveNumber);
  explore->add_option("--horizon", o.horizon)->check(CLI::PositiveNumber);
  explore->add_option("--lag-bound", o.lag_bound);
  explore->add_option("--seed", o.seed, "Echoed in the report");
  explore->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  explore->add_flag("--timing", o.timing, "Include elapsed time (output no longer reproducible)");

  auto* sample = app.add_subcommand("sample", "Sample one observation sequence");
  add_common(sample);
  add_group(sample);
  sample->add_option("--scenery", o.scenery)->required();
  sample->add_option("--gamma", o.gamma);
  sample->add_option("--horizon", o.horizon)->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (group_list->parsed()) return cmd_group_list(o, out);
    if (group_verify->parsed()) return cmd_group_verify(o, out);
    if (irreps->parsed()) return cmd_irreps(o, out);
    if (ft->parsed()) return cmd_ft(o, out);
    if (autocorr->parsed()) return cmd_autocorr(o, out);
    if (ms->parsed()) return cmd_multispectrum(o, out);
    if (bstats->parsed()) return cmd_bstats(o, out);
    if (condition->parsed()) return cmd_condition(o, out);
    if (witness->parsed()) return cmd_witness(o, out);
    if (theorem2->parsed()) return cmd_theorem2(o, out);
    if (distinguish->parsed()) return cmd_distinguish(o, out);
    if (reconstruct->parsed()) return cmd_reconstruct(o, out);
    if (explore->parsed()) return cmd_explore(o, out);
    if (sample->parsed()) return cmd_sample(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitValidation;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace scenery::cli
