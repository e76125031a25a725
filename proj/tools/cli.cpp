#include "cli.hpp"

#include "session.hpp"
#include "wpr/torsion.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

namespace wpr::cli {
namespace {

using json = nlohmann::json;

const std::vector<std::string> kCommands = {"koszul",           "wpr",           "gamma",     "lc-tower",
                                            "completion-tower", "profinite-tower", "mgm-check", "stability",
                                            "idempotence",      "thm45"};

class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command, session;
  std::size_t depth = 4, window = 1, max_stabilization = 32;
  std::string model = "ext";
  int degree = 1;
  std::string format = "json";
  std::string out;
  std::string ideal, module;
  std::vector<std::string> zmods;
  long prime = 0;
  std::string chain;
  bool timing = false;
};

json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return to_string(n);
}

// Standard monomials of degree < d in M / m^d M, m the ideal of variables.
long truncated_dimension(const FpModule& m, unsigned d) {
  const RingPtr& ring = m.ring();
  const auto& vars = ring->context()->variables();
  std::vector<Elem> var_elems;
  for (const auto& v : vars) var_elems.push_back(ring->parse(v));
  const std::size_t g = m.generators();
  RMatrix extra;
  if (!var_elems.empty()) {
    std::vector<Elem> md = ideal_power(ring, var_elems, d);
    extra = RMatrix(g, md.size() * g);
    for (std::size_t k = 0; k < md.size(); ++k)
      for (std::size_t j = 0; j < g; ++j) extra(j, k * g + j) = md[k];
  }
  FpModule q(ring, g, extra.cols() ? hcat(m.relations(), extra) : m.relations());
  // monomials of degree < d, as exponent vectors
  std::vector<std::vector<unsigned>> monos{std::vector<unsigned>(vars.size(), 0)};
  for (std::size_t idx = 0; idx < monos.size(); ++idx) {
    unsigned deg = 0;
    for (unsigned e : monos[idx]) deg += e;
    if (deg + 1 >= d) continue;
    std::size_t last = vars.size();
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (monos[idx][v]) last = v;
    for (std::size_t v = (last == vars.size() ? 0 : last); v < vars.size(); ++v) {
      auto next = monos[idx];
      ++next[v];
      monos.push_back(next);
    }
  }
  long count = 0;
  for (const auto& e : monos) {
    Elem mono(1);
    for (std::size_t v = 0; v < vars.size(); ++v) mono = mono * power(ring, var_elems[v], e[v]);
    for (std::size_t c = 0; c < g; ++c) {
      RVector vec(g, Elem(0));
      vec[c] = ring->normalize(mono);
      if (q.reduce(vec) == vec) ++count;
    }
  }
  return count;
}

json describe(const FpModule& m) {
  json j;
  j["zero"] = is_zero(m);
  if (m.ring()->is_integers()) {
    json f = json::array();
    for (const auto& x : invariant_factors(m)) f.push_back(integer_json(x));
    j["invariant_factors"] = f;
    return j;
  }
  Minimized mm = minimize(m);
  j["generators"] = mm.module.generators();
  j["relations"] = mm.module.relation_count();
  json dims = json::array();
  for (unsigned d = 1; d <= 3; ++d) dims.push_back(truncated_dimension(mm.module, d));
  j["hilbert_samples"] = dims;
  return j;
}

json elements_json(const RingPtr& ring, const RMatrix& m) {
  json cols = json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    json col = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(ring->format(m(i, j)));
    cols.push_back(col);
  }
  return cols;
}

json sequence_json(const RingPtr& ring, const Sequence& s) {
  json a = json::array();
  for (const auto& x : s) a.push_back(ring->format(x));
  return a;
}

json levels_json(const Tower& t) {
  json a = json::array();
  for (std::size_t i = 1; i <= t.depth(); ++i) a.push_back(describe(t.at(i)));
  return a;
}

json flags(const Tower& t, bool injective) {
  json a = json::array();
  for (std::size_t i = 1; i < t.depth(); ++i) {
    Morphism m = t.transition(i, i + 1);
    a.push_back(injective ? is_zero(kernel(m).module) : is_zero(cokernel(m).module));
  }
  return a;
}

const char* verdict(bool pass) { return pass ? "pass" : "undetermined"; }

json pro_zero_json(const ProZeroVerdict& v) {
  json j;
  j["verdict"] = verdict(v.pass);
  json certs = json::array();
  for (std::size_t i = 0; i < v.certificates.size(); ++i)
    certs.push_back(json{{"level", i + 1},
                         {"zero_at", v.certificates[i] ? json(v.certificates[i]) : json(nullptr)}});
  j["certificates"] = certs;
  if (!v.pass) {
    j["witness_level"] = v.witness;
    j["nonzero_composites"] = v.nonzero;
  }
  return j;
}

json equivalence_json(const EquivalenceVerdict& v) {
  json j;
  j["verdict"] = verdict(v.pass);
  json certs = json::array();
  for (std::size_t c : v.certificates) certs.push_back(c ? json(c) : json(nullptr));
  j["certificates"] = certs;
  j["bijective"] = v.bijective;
  if (!v.pass) j["witness_level"] = v.witness;
  return j;
}

template <class T>
const T& pick(const std::map<std::string, T>& decls, const std::string& chosen, const std::string& kind,
              std::string* name_out = nullptr) {
  if (!chosen.empty()) {
    auto it = decls.find(chosen);
    if (it == decls.end()) throw BadInput("unknown " + kind + " '" + chosen + "'");
    if (name_out) *name_out = it->first;
    return it->second;
  }
  if (decls.size() != 1)
    throw BadInput(decls.empty() ? "session declares no " + kind
                                   : "several " + kind + "s declared; choose one with --" + kind);
  if (name_out) *name_out = decls.begin()->first;
  return decls.begin()->second;
}

struct Context {
  const Options& opt;
  const Session& s;
  json result;
  bool pass = true;
};

Sequence ideal_of(Context& c) {
  std::string name;
  const IdealDecl& d = pick(c.s.ideals, c.opt.ideal, "ideal", &name);
  c.result["ideal"] = json{{"name", name}, {"generators", sequence_json(c.s.ring, d.generators)}};
  return d.generators;
}

const FpModule& module_of(Context& c) {
  std::string name;
  const FpModule& m = pick(c.s.modules, c.opt.module, "module", &name);
  c.result["module"] = json{{"name", name}, {"structure", describe(m)}};
  return m;
}

long prime_of(Context& c) {
  long p = c.opt.prime;
  if (p == 0 && c.s.ring->is_integers() && c.s.ideals.size() == 1 &&
      c.s.ideals.begin()->second.generators.size() == 1) {
    const Elem& g = c.s.ideals.begin()->second.generators.front();
    if (g.holds_integer() && g.integer().fits_slong_p()) p = std::abs(g.integer().get_si());
  }
  if (p == 0) throw BadInput("no prime given; use --prime or declare a principal ideal over ZZ");
  if (!is_prime(static_cast<std::int64_t>(p))) throw BadInput(std::to_string(p) + " is not prime");
  c.result["prime"] = p;
  return p;
}

void require_depth(const Options& o, std::size_t min_depth) {
  if (o.depth < min_depth) throw BadInput("--depth must be at least " + std::to_string(min_depth));
  if (min_depth >= 2 && (o.window < 1 || o.window >= o.depth))
    throw BadInput("--window must satisfy 1 <= w < depth");
}

void cmd_koszul(Context& c) {
  require_depth(c.opt, 1);
  Sequence a = ideal_of(c);
  const int n = static_cast<int>(a.size());
  json levels = json::array();
  for (unsigned i = 1; i <= c.opt.depth; ++i) {
    Sequence p;
    for (const auto& x : a) p.push_back(power(c.s.ring, x, i));
    Complex k = koszul_complex(c.s.ring, p);
    json ranks = json::array(), coh = json::array();
    for (int q = -n; q <= 0; ++q) {
      ranks.push_back(k.at(q).generators());
      coh.push_back(json{{"degree", q}, {"module", describe(cohomology(k, q).module)}});
    }
    levels.push_back(json{{"level", i}, {"ranks", ranks}, {"cohomology", coh}});
  }
  c.result["levels"] = levels;
}

void cmd_wpr(Context& c) {
  require_depth(c.opt, 2);
  Sequence a = ideal_of(c);
  WprVerdict v = weak_proregularity_check(c.s.ring, a, c.opt.depth, c.opt.window);
  json degrees = json::array();
  for (const auto& [p, z] : v.degrees) {
    json d = pro_zero_json(z);
    d["degree"] = p;
    d["levels"] = levels_json(koszul_cohomology_prosystem(c.s.ring, a, p, c.opt.depth).tower);
    degrees.push_back(d);
  }
  c.result["degrees"] = degrees;
  c.pass = v.pass;
}

void cmd_gamma(Context& c) {
  Sequence a = ideal_of(c);
  const FpModule& m = module_of(c);
  GammaResult g = gamma(m, a, c.opt.max_stabilization);
  c.result["torsion"] = describe(g.submodule.module);
  c.result["torsion_generators"] = elements_json(c.s.ring, g.submodule.representatives);
  c.result["stabilization"] = g.stabilization;
  c.result["idempotent"] = gamma_idempotence(m, a, c.opt.max_stabilization);
}

void cmd_lc_tower(Context& c) {
  require_depth(c.opt, 1);
  if (c.opt.model != "ext" && c.opt.model != "koszul") throw BadInput("--model must be ext or koszul");
  Sequence a = ideal_of(c);
  const FpModule& m = module_of(c);
  CohomologyTower t = c.opt.model == "ext" ? ext_torsion_tower(m, a, c.opt.degree, c.opt.depth)
                                           : koszul_torsion_tower(m, a, c.opt.degree, c.opt.depth);
  c.result["model"] = c.opt.model;
  c.result["degree"] = c.opt.degree;
  c.result["levels"] = levels_json(t.tower);
  c.result["transitions_injective"] = flags(t.tower, true);
}

void report_quotients(Context& c, const QuotientTower& t) {
  c.result["levels"] = levels_json(t.tower);
  c.result["transitions_surjective"] = flags(t.tower, false);
}

void cmd_completion(Context& c) {
  require_depth(c.opt, 1);
  Sequence a = ideal_of(c);
  report_quotients(c, completion_tower(module_of(c), a, c.opt.depth));
}

void cmd_profinite(Context& c) {
  if (!c.s.ring->is_integers()) throw BadInput("profinite-tower needs ring ZZ");
  if (c.opt.chain.empty()) throw BadInput("profinite-tower needs --chain k1,k2,...");
  std::vector<Integer> chain;
  std::stringstream ss(c.opt.chain);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      chain.emplace_back(item);
    } catch (const std::exception&) {
      throw BadInput("bad --chain entry '" + item + "'");
    }
  }
  json ch = json::array();
  for (const auto& k : chain) ch.push_back(integer_json(k));
  c.result["chain"] = ch;
  try {
    report_quotients(c, profinite_tower(module_of(c), chain));
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
}

void cmd_mgm(Context& c) {
  require_depth(c.opt, 2);
  Sequence a = ideal_of(c);
  const FpModule& m = module_of(c);
  if (!weak_proregularity_check(c.s.ring, a, c.opt.depth, c.opt.window).pass)
    throw BadInput("weak proregularity of the ideal is not established at this depth and window");
  MgmVerdict v = mgm_check(m, a, c.opt.depth, c.opt.window);
  auto side = [](const std::vector<MgmEntry>& es, bool pass, const char* index) {
    json entries = json::array();
    for (const auto& e : es) {
      json j = equivalence_json(e.verdict);
      j[index] = e.level;
      j["degree"] = e.degree;
      entries.push_back(j);
    }
    return json{{"verdict", verdict(pass)}, {"entries", entries}};
  };
  c.result["tau"] = side(v.tau, v.tau_pass, "k");
  c.result["sigma"] = side(v.sigma, v.sigma_pass, "i");
  c.pass = v.tau_pass && v.sigma_pass;
}

std::vector<std::pair<std::string, ZModClass>> zmods_of(const Context& c) {
  std::vector<std::pair<std::string, ZModClass>> out;
  if (c.opt.zmods.empty()) {
    for (const auto& kv : c.s.zmods) out.push_back(kv);
  } else {
    for (const auto& name : c.opt.zmods) out.emplace_back(name, pick(c.s.zmods, name, "zmod"));
  }
  if (out.empty()) throw BadInput("session declares no zmod");
  for (const auto& [name, d] : out)
    if (!d.is_injective()) throw BadInput("zmod " + name + " = " + d.to_string() + " is not injective");
  return out;
}

json strings(const std::vector<ZModClass>& v) {
  json a = json::array();
  for (const auto& d : v) a.push_back(d.to_string());
  return a;
}

void cmd_stability(Context& c) {
  require_depth(c.opt, 1);
  long p = prime_of(c);
  auto mods = zmods_of(c);
  std::vector<ZModClass> list;
  for (const auto& kv : mods) list.push_back(kv.second);
  StabilityVerdict v = weak_stability_check(p, c.opt.depth, list);
  json entries = json::array();
  for (std::size_t k = 0; k < mods.size(); ++k) {
    const StabilityEntry& e = v.entries[k];
    entries.push_back(json{{"name", mods[k].first},
                           {"module", e.module.to_string()},
                           {"torsion", e.torsion.to_string()},
                           {"ext1_levels", strings(e.ext_levels)},
                           {"verdict", verdict(e.pass)}});
  }
  c.result["modules"] = entries;
  c.pass = v.pass;
}

void cmd_idempotence(Context& c) {
  require_depth(c.opt, 2);
  Sequence a = ideal_of(c);
  IdempotenceVerdict v = copointed_idempotence_check(c.s.ring, a, c.opt.depth, c.opt.window);
  auto side = [](const std::vector<IdempotenceDegree>& ds) {
    json arr = json::array();
    for (const auto& d : ds) {
      json j = equivalence_json(d.verdict);
      j["degree"] = d.degree;
      arr.push_back(j);
    }
    return arr;
  };
  c.result["rho_tensor_id"] = side(v.left);
  c.result["id_tensor_rho"] = side(v.right);
  c.pass = v.pass;
}

void cmd_thm45(Context& c) {
  require_depth(c.opt, 1);
  long p = prime_of(c);
  json entries = json::array();
  for (const auto& [name, d] : zmods_of(c)) {
    Thm45Verdict v = thm45_injective_test(p, d, c.opt.depth);
    entries.push_back(json{{"name", name},
                           {"module", d.to_string()},
                           {"h0_levels", strings(v.h0_levels)},
                           {"h1_levels", strings(v.h1_levels)},
                           {"h0_limit", v.h0_limit.to_string()},
                           {"h1_limit", v.h1_limit.to_string()},
                           {"verdict", verdict(v.pass)}});
    c.pass = c.pass && v.pass;
  }
  c.result["modules"] = entries;
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out << prefix << "\t[]\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else {
    out << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const json& report, const Options& opt, std::ostream& out) {
  std::ostringstream text;
  if (opt.format == "tsv")
    flatten(report, "", text);
  else
    text << report.dump(2) << "\n";
  if (opt.out.empty()) {
    out << text.str();
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw BadInput("cannot write " + opt.out);
  f << text.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact tools for weakly proregular ideals", "wprtool"};
  app.add_option("command", opt.command, "Command to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("session", opt.session, "Session file")->required();
  app.add_option("--depth", opt.depth, "Tower depth N")->capture_default_str();
  app.add_option("--window", opt.window, "Window w")->capture_default_str();
  app.add_option("--model", opt.model, "Local cohomology model: ext or koszul")->capture_default_str();
  app.add_option("--degree", opt.degree, "Cohomological degree p")->capture_default_str();
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
  app.add_option("--max-stabilization", opt.max_stabilization, "Stabilization budget")->capture_default_str();
  app.add_option("--out", opt.out, "Write the report to PATH");
  app.add_option("--ideal", opt.ideal, "Ideal to use when several are declared");
  app.add_option("--module", opt.module, "Module to use when several are declared");
  app.add_option("--zmod", opt.zmods, "Z-module classes to test (default: all declared)");
  app.add_option("--prime", opt.prime, "Prime p for stability and thm45");
  app.add_option("--chain", opt.chain, "Divisibility chain k1,k2,... for profinite-tower");
  app.add_flag("--timing", opt.timing, "Add wall-clock time to the report (not reproducible)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  }

  json report;
  report["schema"] = 1;
  report["command"] = opt.command;
  report["arguments"] = json{{"depth", opt.depth},
                             {"window", opt.window},
                             {"model", opt.model},
                             {"degree", opt.degree},
                             {"max_stabilization", opt.max_stabilization}};
  int code = Success;
  const auto start = std::chrono::steady_clock::now();
  try {
    Session s = load_session(opt.session);
    report["session"] = s.file;
    report["ring"] = s.ring->name();
    if (!s.warnings.empty()) report["warnings"] = s.warnings;
    Context c{opt, s, json::object(), true};
    using Handler = void (*)(Context&);
    const std::map<std::string, Handler> handlers = {
        {"koszul", cmd_koszul},         {"wpr", cmd_wpr},
        {"gamma", cmd_gamma},           {"lc-tower", cmd_lc_tower},
        {"completion-tower", cmd_completion}, {"profinite-tower", cmd_profinite},
        {"mgm-check", cmd_mgm},         {"stability", cmd_stability},
        {"idempotence", cmd_idempotence}, {"thm45", cmd_thm45}};
    handlers.at(opt.command)(c);
    report["result"] = c.result;
    report["status"] = verdict(c.pass);
    code = c.pass ? Success : Undetermined;
  } catch (const BudgetExceeded& e) {
    report["status"] = "budget-exceeded";
    report["error"] = e.what();
    err << "error: " << e.what() << "\n";
    code = BudgetExceededCode;
  } catch (const std::exception& e) {
    report["status"] = "input-error";
    report["error"] = e.what();
    err << "error: " << e.what() << "\n";
    code = InputError;
  }
  if (opt.timing)
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  try {
    emit(report, opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  }
  return code;
}

}  // namespace wpr::cli
