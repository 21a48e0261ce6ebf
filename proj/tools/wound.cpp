// Command-line front end: loads an input file and prints a `key: value`
// report. Exit codes: 0 verified, 1 refuted, 2 unknown or incomplete,
// 3 input error.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

#include "wound/corpus.hpp"
#include "wound/parse.hpp"
#include "wound/session.hpp"

namespace {

using namespace wound;

enum Exit { kVerified = 0, kRefuted = 1, kUnknown = 2, kInputError = 3 };

struct Options {
  std::uint32_t search_bound = 3;
  std::uint32_t trials = 100;
  std::uint64_t seed = 0;
  std::uint64_t max_enum = 10'000'000;
  bool timing = false;

  DecisionOptions decision() const {
    DecisionOptions d;
    d.search_bound = search_bound;
    d.search_budget = max_enum;
    return d;
  }
  OracleOptions oracle() const { return {seed, trials, 3}; }
};

class Report {
 public:
  void add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }
  void print(std::ostream& os) const {
    for (const auto& [k, v] : lines_) os << k << ": " << v << "\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

std::string tf(bool b) { return b ? "true" : "false"; }

std::string field_line(const FieldPtr& f) { return f->header().substr(6); }

std::string tuple(const std::vector<FieldElem>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ",") + x.to_string();
  return "(" + s + ")";
}

std::string wound_text(const ZeroDecision& d) {
  switch (d.verdict) {
    case Verdict::NoZero:
      if (d.stage == DecisionStage::Relaxation) return "certified (relaxation)";
      if (d.stage == DecisionStage::Expansion) return "certified (expansion)";
      return "certified";
    case Verdict::Zero:
      return "refuted, witness=" + tuple(d.witness);
    case Verdict::Unknown:
      return "unknown (no zero found with degree <= " + std::to_string(d.search_bound) + ")";
  }
  return "unknown";
}

int wound_exit(const ZeroDecision& d) {
  return d.verdict == Verdict::NoZero ? kVerified : d.verdict == Verdict::Zero ? kRefuted : kUnknown;
}

// Re-checks symbolic verdicts with the randomized oracle.
std::string oracle_line(const std::vector<const IdentityCheck*>& checks, const Options& o) {
  std::size_t disagreements = 0;
  try {
    for (const auto* c : checks) {
      const bool sampled = random_point_oracle(c->poly, c->relations, o.oracle());
      if (sampled != c->vanishes) ++disagreements;
    }
  } catch (const UnsupportedRelation& e) {
    return std::string("unsupported (") + e.what() + ")";
  }
  const std::string run = std::to_string(checks.size()) + (checks.size() == 1 ? " identity, " : " identities, ") +
                          std::to_string(o.trials) + " trials, seed " + std::to_string(o.seed);
  return disagreements ? "disagrees on " + std::to_string(disagreements) + " of " + run : "agrees (" + run + ")";
}

void describe_classification(Report& r, const HypersurfaceGroup& g, const ClassificationReport& c) {
  r.add("smooth", tf(c.smooth));
  r.add("connected", c.connected == Connected::Yes ? "yes (" + g.var_names[*c.connected_via] + " occurs in one term)"
                                                   : "unknown");
  r.add("dimension", std::to_string(c.dimension));
  r.add("principal_part", g.equation.principal_part().to_string(g.var_names));
  r.add("wound", wound_text(c.wound));
  r.add("stage", to_string(c.wound.stage));
  if (c.wound.certificate) {
    r.add("certificate", "rank " + std::to_string(c.wound.certificate->rank) + " of " +
                             std::to_string(c.wound.certificate->rows.size()) + " unknowns, exponent p^" +
                             std::to_string(c.wound.certificate->exponent));
  }
  if (c.wound.verdict != Verdict::Unknown)
    r.add("certificate_check", check_decision(g.equation.principal_part(), c.wound) ? "passed" : "failed");
}

int cmd_classify(Report& r, const Session& s, const std::string& name, const Options& o) {
  r.add("field", field_line(s.field));
  const auto& g = s.group(name);
  r.add("input", g.to_string());
  const auto c = classify(g, o.decision());
  describe_classification(r, g, c);
  return wound_exit(c.wound);
}

int cmd_reduce(Report& r, const Session& s, const std::string& name, const std::string& h_text,
               const std::string& pivot_name, const Options&) {
  r.add("field", field_line(s.field));
  const auto& g = s.group(name);
  r.add("input", g.to_string());
  std::size_t pivot = g.pivot;
  if (!pivot_name.empty()) {
    auto it = std::find(g.var_names.begin(), g.var_names.end(), pivot_name);
    if (it == g.var_names.end()) throw InputError("pivot " + pivot_name + " is not a variable of " + g.name);
    pivot = static_cast<std::size_t>(it - g.var_names.begin());
  }
  const Poly h = parse_poly(h_text, s.field, g.var_names);
  r.add("h", h.is_zero() ? "0" : h.to_string(g.var_names));
  r.add("pivot", g.var_names[pivot]);
  bool zero = false;
  if (auto hp = ppoly_from_poly(h)) {
    const auto red = reduce_mod(*hp, g.equation, pivot);
    r.add("kind", "p-polynomial");
    r.add("steps", std::to_string(red.steps.size()));
    r.add("remainder", red.remainder.is_zero() ? "0" : red.remainder.to_string(g.var_names));
    r.add("replay", red.replay(g.equation) == *hp ? "ok" : "mismatch");
    zero = red.remainder.is_zero();
  } else {
    const auto red = reduce_mod(h, g.equation, pivot);
    r.add("kind", "polynomial");
    r.add("remainder", red.remainder.is_zero() ? "0" : red.remainder.to_string(g.var_names));
    r.add("replay", red.replay(g.equation) == h ? "ok" : "mismatch");
    zero = red.remainder.is_zero();
  }
  r.add("zero", tf(zero));
  return zero ? kVerified : kRefuted;
}

std::string relations_text(const Session& s) {
  std::string out;
  for (const auto& [eq, piv] : s.params.relations)
    out += (out.empty() ? "" : "; ") + eq.to_string(s.params.names) + " [pivot " + s.params.names[piv] + "]";
  return out.empty() ? "none" : out;
}

int cmd_verify_hom(Report& r, const Session& s, const std::string& name, const Options& o) {
  r.add("field", field_line(s.field));
  const auto& m = s.map(name);
  r.add("input", m.to_string(s.params.names));
  r.add("parameter_relations", relations_text(s));
  const auto check = hom_check(m, s.params);
  r.add("canonical", canonical_form(m, &s.params).to_string(s.params.names));
  r.add("homomorphism", tf(check.vanishes));
  r.add("oracle", oracle_line({&check}, o));
  return check.vanishes ? kVerified : kRefuted;
}

AnsatzBounds parse_bounds(const std::string& text, const Endpoint& src) {
  AnsatzBounds b;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty() || item.size() > 3 || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw InputError("--bounds expects comma-separated exponent caps");
    b.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  if (b.size() != src.nvars())
    throw InputError("--bounds needs " + std::to_string(src.nvars()) + " caps, one per variable of " + src.name());
  return b;
}

std::string bounds_text(const AnsatzBounds& b, const Endpoint& src) {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i)
    s += (s.empty() ? "" : ",") + src.var_names()[i] + "<=p^" + std::to_string(b[i]);
  return s;
}

ConstraintSystem derive_for(Report& r, const Session& s, const std::string& src_name, const std::string& dst_name,
                            const std::string& bounds) {
  r.add("field", field_line(s.field));
  const Endpoint src = s.endpoint(src_name), dst = s.endpoint(dst_name);
  const AnsatzBounds b = bounds.empty() ? default_bounds(src, dst) : parse_bounds(bounds, src);
  r.add("source", src.is_line() ? "Ga" : src.group().to_string());
  r.add("target", dst.is_line() ? "Ga" : dst.group().to_string());
  r.add("bounds", bounds_text(b, src));
  auto cs = derive_hom_constraints(src, dst, b);
  r.add("ansatz", cs.ansatz.to_string(cs.names()));
  r.add("unknowns", std::to_string(cs.unknowns.size()));
  r.add("constraints", std::to_string(cs.constraints.size()));
  const auto names = cs.names();
  for (std::size_t i = 0; i < cs.constraints.size(); ++i)
    r.add("constraint", src.var_names()[cs.positions[i].var] + "^(p^" + std::to_string(cs.positions[i].e) +
                            "): " + cs.constraints[i].to_string(names) + " = 0");
  return cs;
}

int cmd_derive(Report& r, const Session& s, const std::string& src, const std::string& dst, const std::string& bounds,
               const Options&) {
  derive_for(r, s, src, dst, bounds);
  return kVerified;
}

std::vector<FieldElem> parse_domain(const std::string& text, const FieldPtr& f) {
  if (text == "Fq") return polynomial_domain(f, 0);
  const std::string prefix = "deg<=";
  if (text.rfind(prefix, 0) == 0) {
    const std::string k = text.substr(prefix.size());
    if (!k.empty() && k.size() <= 2 && std::all_of(k.begin(), k.end(), ::isdigit))
      return polynomial_domain(f, static_cast<std::uint32_t>(std::stoul(k)));
  }
  throw InputError("--domain expects Fq or deg<=k");
}

int cmd_solve(Report& r, const Session& s, const std::string& src, const std::string& dst, const std::string& bounds,
              const std::string& domain, const Options& o) {
  const auto cs = derive_for(r, s, src, dst, bounds);
  const auto dom = parse_domain(domain, s.field);
  r.add("domain", domain + " (" + std::to_string(dom.size()) + " values)");
  SolveOptions so;
  so.max_nodes = o.max_enum;
  const auto res = solve_homs_bounded(cs, dom, so);
  r.add("solutions", std::to_string(res.maps.size()));
  for (const auto& m : res.maps) r.add("map", m.to_string());
  r.add("visited", std::to_string(res.visited));
  r.add("search", res.complete ? "complete within bound"
                               : "incomplete (budget of " + std::to_string(o.max_enum) + " nodes exhausted)");
  return res.complete ? kVerified : kUnknown;
}

int cmd_check_extension(Report& r, const Session& s, const std::string& name, const Options& o) {
  r.add("field", field_line(s.field));
  const auto& e = s.extension(name);
  r.add("input", e.to_string());
  r.add("center", e.center.to_string());
  r.add("base", e.base.to_string());
  const auto ax = check_group_axioms(e);
  std::vector<const IdentityCheck*> all;
  for (const auto& a : ax.axioms) {
    r.add(a.name, a.holds() ? "pass" : "fail");
    for (const auto& c : a.components) all.push_back(&c);
  }
  const bool ok = ax.group_axioms_hold();
  r.add("group_axioms", ok ? "pass" : "fail");
  const auto comm = commutativity_checks(e);
  bool commutative = true;
  for (const auto& c : comm) {
    commutative = commutative && c.vanishes;
    all.push_back(&c);
  }
  r.add("commutative", tf(commutative));
  r.add("oracle", oracle_line(all, o));
  return ok ? kVerified : kRefuted;
}

int cmd_twist(Report& r, const Session& s, const std::string& name, std::uint32_t n, const Options& o) {
  r.add("field", field_line(s.field));
  const auto& g = s.group(name);
  r.add("input", g.to_string());
  const auto tw = twist_group(g, n);
  r.add("twisted", tw.to_string());
  describe_classification(r, tw, classify(tw, o.decision()));
  const auto frob = relative_frobenius_map(g, n);
  const auto check = hom_check(frob, ParamRing::none(s.field));
  r.add("relative_frobenius", frob.to_string());
  r.add("relative_frobenius_hom", tf(check.vanishes));
  r.add("oracle", oracle_line({&check}, o));
  return check.vanishes ? kVerified : kRefuted;
}

int cmd_verify_iso(Report& r, const Session& s, const std::string& f_name, const std::string& g_name,
                   const Options& o) {
  r.add("field", field_line(s.field));
  const auto& f = s.map(f_name);
  const auto& g = s.map(g_name);
  r.add("input", f.to_string(s.params.names));
  r.add("input", g.to_string(s.params.names));
  const auto rep = verify_mutual_inverse(f, g, s.params);
  auto all_vanish = [](const std::vector<IdentityCheck>& cs) {
    return std::all_of(cs.begin(), cs.end(), [](const IdentityCheck& c) { return c.vanishes; });
  };
  r.add(f.name + "_hom", tf(rep.f_hom.vanishes));
  r.add(g.name + "_hom", tf(rep.g_hom.vanishes));
  r.add(g.name + "_after_" + f.name, all_vanish(rep.g_after_f) ? "identity" : "not identity");
  r.add(f.name + "_after_" + g.name, all_vanish(rep.f_after_g) ? "identity" : "not identity");
  r.add("isomorphism", rep.holds() ? "verified" : "refuted");
  r.add("oracle", oracle_line(rep.all(), o));
  return rep.holds() ? kVerified : kRefuted;
}

int cmd_selftest(Report& r, std::uint32_t p, const Options& o) {
  const auto run = corpus::run(p, o.decision());
  for (const auto& item : run.items) r.add(item.passed ? "pass" : "fail", item.name + " (" + item.detail + ")");
  std::vector<const IdentityCheck*> all;
  for (const auto& c : run.identities) all.push_back(&c);
  const std::string oracle = oracle_line(all, o);
  r.add("oracle", oracle);
  const bool ok = run.passed() && oracle.rfind("agrees", 0) == 0;
  r.add("result", ok ? "pass" : "fail");
  return ok ? kVerified : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Woundness certificates and homomorphism computations for unipotent groups over F_q(a)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--search-bound", o.search_bound, "Degree bound for the witness search")->capture_default_str();
  app.add_option("--trials", o.trials, "Randomized oracle trials")->capture_default_str();
  app.add_option("--seed", o.seed, "Randomized oracle seed")->capture_default_str();
  app.add_option("--max-enum", o.max_enum, "Enumeration budget for searches")->capture_default_str();
  app.add_flag("--timing", o.timing, "Append the elapsed time to the report");

  std::string file, a1, a2, h_text, pivot, bounds, domain = "Fq";
  std::uint32_t n = 1, p = 3;
  std::function<int(Report&)> run;
  auto load = [&] { return load_session(file); };

  auto* classify_cmd = app.add_subcommand("classify", "Classify a group: smooth, connected, wound, dimension");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("group", a1)->required();
  classify_cmd->callback([&] { run = [&](Report& r) { return cmd_classify(r, load(), a1, o); }; });

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a polynomial modulo a group's equation");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("group", a1)->required();
  reduce_cmd->add_option("polynomial", h_text, "Polynomial in the group's variables")->required();
  reduce_cmd->add_option("--pivot", pivot, "Pivot variable (default: the group's)");
  reduce_cmd->callback([&] { run = [&](Report& r) { return cmd_reduce(r, load(), a1, h_text, pivot, o); }; });

  auto* hom_cmd = app.add_subcommand("verify-hom", "Check that a map is a homomorphism");
  hom_cmd->add_option("file", file)->required();
  hom_cmd->add_option("map", a1)->required();
  hom_cmd->callback([&] { run = [&](Report& r) { return cmd_verify_hom(r, load(), a1, o); }; });

  auto* derive_cmd = app.add_subcommand("derive", "Derive the constraint system for Hom(source, target)");
  derive_cmd->add_option("file", file)->required();
  derive_cmd->add_option("source", a1)->required();
  derive_cmd->add_option("target", a2)->required();
  derive_cmd->add_option("--bounds", bounds, "Exponent caps per source variable, e.g. 1,3");
  derive_cmd->callback([&] { run = [&](Report& r) { return cmd_derive(r, load(), a1, a2, bounds, o); }; });

  auto* solve_cmd = app.add_subcommand("solve", "Enumerate homomorphisms with coefficients in a finite domain");
  solve_cmd->add_option("file", file)->required();
  solve_cmd->add_option("source", a1)->required();
  solve_cmd->add_option("target", a2)->required();
  solve_cmd->add_option("--bounds", bounds, "Exponent caps per source variable, e.g. 1,3");
  solve_cmd->add_option("--domain", domain, "Fq or deg<=k")->capture_default_str();
  solve_cmd->callback([&] { run = [&](Report& r) { return cmd_solve(r, load(), a1, a2, bounds, domain, o); }; });

  auto* ext_cmd = app.add_subcommand("check-extension", "Check the group axioms of a cocycle extension");
  ext_cmd->add_option("file", file)->required();
  ext_cmd->add_option("extension", a1)->required();
  ext_cmd->callback([&] { run = [&](Report& r) { return cmd_check_extension(r, load(), a1, o); }; });

  auto* twist_cmd = app.add_subcommand("twist", "Frobenius twist of a group and the relative Frobenius");
  twist_cmd->add_option("file", file)->required();
  twist_cmd->add_option("group", a1)->required();
  twist_cmd->add_option("n", n)->required()->check(CLI::Range(0, 16));
  twist_cmd->callback([&] { run = [&](Report& r) { return cmd_twist(r, load(), a1, n, o); }; });

  auto* iso_cmd = app.add_subcommand("verify-iso", "Check that two maps are mutually inverse isomorphisms");
  iso_cmd->add_option("file", file)->required();
  iso_cmd->add_option("f", a1)->required();
  iso_cmd->add_option("g", a2)->required();
  iso_cmd->callback([&] { run = [&](Report& r) { return cmd_verify_iso(r, load(), a1, a2, o); }; });

  auto* self_cmd = app.add_subcommand("selftest-paper", "Run the built-in worked examples for p = 2, 3 or 5");
  self_cmd->add_option("p", p)->required()->check(CLI::IsMember({2, 3, 5}));
  self_cmd->callback([&] { run = [&](Report& r) { return cmd_selftest(r, p, o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  Report report;
  std::ostringstream echo;
  for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];
  report.add("command", echo.str());
  const auto t0 = std::chrono::steady_clock::now();
  int code = kInputError;
  try {
    code = run(report);
  } catch (const InputError& e) {
    report.print(std::cout);
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    report.print(std::cout);
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (o.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << ms;
    report.add("time_ms", t.str());
  }
  report.print(std::cout);
  return code;
}
