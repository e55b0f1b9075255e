#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "symcone/chain.hpp"
#include "symcone/cone.hpp"
#include "symcone/hilbert.hpp"
#include "symcone/json_io.hpp"
#include "symcone/oracle.hpp"
#include "symcone/orbit.hpp"
#include "symcone/simplex_lp.hpp"
#include "symcone/verify.hpp"

namespace symcone::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitPrecondition = 4;

struct CommonOpts {
  std::string format = "json";
  bool timing = false;
  std::uint64_t budget = kDefaultBudget;
};

std::uint64_t env_default_budget() {
  if (const char* e = std::getenv("SYMCONE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(e, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open spec file", path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json report_to_json(const StabilizationReport& rep) {
  json j;
  j["empirical_index"] =
      rep.empirical_index ? json(*rep.empirical_index) : json(nullptr);
  j["cap"] = rep.cap;
  j["window"] = rep.window;
  j["certified"] = rep.certified;
  j["certificate_details"] = rep.certificate_details;
  return j;
}

// Human-readable fallback for --format table.
void print_table(std::ostream& out, const json& doc, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (doc.is_object()) {
    for (const auto& [k, v] : doc.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && v[0].is_array())) {
        out << pad << k << ":\n";
        print_table(out, v, indent + 2);
      } else {
        out << pad << k << ": " << v.dump() << "\n";
      }
    }
  } else if (doc.is_array()) {
    for (const auto& v : doc) {
      if (v.is_object()) {
        print_table(out, v, indent);
        out << pad << "-\n";
      } else {
        out << pad << v.dump() << "\n";
      }
    }
  } else {
    out << pad << doc.dump() << "\n";
  }
}

class Emitter {
 public:
  Emitter(std::string command, const CommonOpts& opts, std::string input_bytes)
      : command_(std::move(command)),
        opts_(opts),
        digest_(input_digest(input_bytes)),
        start_(std::chrono::steady_clock::now()) {}

  void emit(std::ostream& out, json result, json diagnostics) const {
    json doc;
    doc["command"] = command_;
    doc["input_digest"] = digest_;
    doc["result"] = std::move(result);
    doc["diagnostics"] = std::move(diagnostics);
    if (opts_.timing) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start_)
                    .count();
      doc["timing"] = json{{"milliseconds", ms}};
    } else {
      doc["timing"] = nullptr;  // omitted for byte-identical determinism
    }
    if (opts_.format == "table")
      print_table(out, doc);
    else
      out << doc.dump(2) << "\n";
  }

 private:
  std::string command_;
  const CommonOpts& opts_;
  std::string digest_;
  std::chrono::steady_clock::time_point start_;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format: json or table")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_flag("--timing", opts.timing,
                "Include wall-clock timing in the output");
  cmd->add_option("--budget", opts.budget,
                  "Ceiling on enumerated nodes/lattice points");
}

std::vector<QVector> sym_closure(const std::vector<QVector>& vs,
                                 std::size_t n) {
  std::set<QVector> out;
  for (const QVector& v : vs)
    for (QVector& w : orbit(v, n)) out.insert(std::move(w));
  return {out.begin(), out.end()};
}

int run_inner(int argc, const char* const* argv, std::ostream& out,
              std::ostream& err) {
  CLI::App app{"Exact computations with Sym(n)-invariant rational cones and "
               "their monoids"};
  app.require_subcommand(1);

  std::string spec_path;
  std::size_t level = 0;
  CommonOpts opts;
  opts.budget = env_default_budget();

  // dual
  auto* cmd_dual = app.add_subcommand(
      "dual", "Extreme rays of the dual cone C_n^* by double description");
  cmd_dual->add_option("spec", spec_path, "Chain spec JSON file")->required();
  cmd_dual->add_option("--level", level, "Level n")->required();
  add_common(cmd_dual, opts);

  // equidual
  bool refined = false;
  auto* cmd_equidual = app.add_subcommand(
      "equidual", "Equivariant dual generating set F_n via generator transfer");
  cmd_equidual->add_option("spec", spec_path)->required();
  cmd_equidual->add_option("--level", level, "Level n")->required();
  cmd_equidual->add_flag("--refined", refined,
                         "Use the sharpened base level p = max{s+t, r+1}");
  add_common(cmd_equidual, opts);

  // hilbert
  auto* cmd_hilbert = app.add_subcommand(
      "hilbert", "Hilbert basis of the level-n monoid C_n ∩ Z^n");
  cmd_hilbert->add_option("spec", spec_path)->required();
  cmd_hilbert->add_option("--level", level, "Level n")->required();
  add_common(cmd_hilbert, opts);

  // equihilbert
  bool certified = false;
  std::size_t cap = 8;
  auto* cmd_equihilbert = app.add_subcommand(
      "equihilbert", "Equivariant Hilbert basis and stabilization report");
  cmd_equihilbert->add_option("spec", spec_path)->required();
  cmd_equihilbert->add_flag("--certified", certified,
                            "Certified construction q = max{3r^2, ||H_{3r^2}||}");
  cmd_equihilbert->add_option("--cap", cap, "Empirical search cap");
  add_common(cmd_equihilbert, opts);

  // stabilize
  bool monoid = false;
  auto* cmd_stabilize =
      app.add_subcommand("stabilize", "Stability index of the chain");
  cmd_stabilize->add_option("spec", spec_path)->required();
  cmd_stabilize->add_option("--cap", cap, "Search cap")->required();
  cmd_stabilize->add_flag("--monoid", monoid,
                          "Stabilize the monoid chain instead of the cones");
  add_common(cmd_stabilize, opts);

  // classify
  bool restricted_dual = false;
  bool have_level = false;
  auto* cmd_classify = app.add_subcommand("classify", "Classification tag");
  cmd_classify->add_option("spec", spec_path)->required();
  auto* level_opt = cmd_classify->add_option("--level", level,
                                             "Classify the level-n object");
  cmd_classify->add_flag("--monoid", monoid, "Classify the monoid");
  cmd_classify->add_flag("--restricted-dual", restricted_dual,
                         "Classify the restricted dual C^* ∩ R^(N)");
  add_common(cmd_classify, opts);

  // member
  std::string vector_arg, prefix_arg, tail_arg;
  bool global_dual = false;
  auto* cmd_member = app.add_subcommand("member", "Membership verdicts");
  cmd_member->add_option("spec", spec_path)->required();
  cmd_member->add_option("--level", level, "Level n for cone membership");
  cmd_member->add_option("--vector", vector_arg,
                         "JSON array, e.g. [1,\"1/2\",-3]");
  cmd_member->add_flag("--global-dual", global_dual,
                       "Test an eventually-constant sequence against C^*");
  cmd_member->add_option("--prefix", prefix_arg, "JSON array prefix");
  cmd_member->add_option("--tail", tail_arg, "Constant tail (integer or p/q)");
  add_common(cmd_member, opts);

  // verify
  std::string suite_name;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  auto* cmd_verify =
      app.add_subcommand("verify", "Run seeded property suites");
  cmd_verify->add_option("--suite", suite_name,
                         "Single suite name (default: all)");
  cmd_verify->add_option("--seed", seed, "Random seed");
  cmd_verify->add_option("--trials", trials,
                         "Trial count override (0 = suite default)");
  add_common(cmd_verify, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  have_level = level_opt->count() > 0 || cmd_member->count("--level") > 0;

  std::string input_bytes;
  ChainSpec spec;
  const bool needs_spec = !cmd_verify->parsed();
  if (needs_spec) {
    input_bytes = read_file(spec_path);
    spec = parse_chain_spec(input_bytes);
  }

  if (cmd_dual->parsed()) {
    Emitter em("dual", opts, input_bytes);
    MinimalGenerators mg = minimal_generators(dual(local_cone(spec, level)));
    json result;
    result["level"] = level;
    result["pointed"] = mg.pointed;
    result["extreme_rays"] = vectors_to_json(mg.extreme_rays);
    result["lineality"] = vectors_to_json(mg.lineality);
    em.emit(out, result, json::object());
    return kExitOk;
  }

  if (cmd_equidual->parsed()) {
    Emitter em("equidual", opts, input_bytes);
    std::vector<QVector> fn = equivariant_dual_generators(spec, level, refined);
    // Oracle cross-check: F_n ⊆ C_n^* by exhaustive/seeded pairing, and every
    // directly computed dual extreme ray is a nonnegative combination of the
    // Sym(n)-closure of F_n.
    Cone cn = local_cone(spec, level);
    bool sound = pairing_audit(cn.rays(), fn, level);
    std::vector<QVector> closure = sym_closure(fn, level);
    MinimalGenerators direct = minimal_generators(dual(cn));
    std::vector<QVector> targets = direct.extreme_rays;
    for (const QVector& l : direct.lineality) {
      targets.push_back(l);
      targets.push_back(normalize_primitive(-l));
    }
    for (const QVector& ray : targets)
      if (sound && !nonnegative_solve(closure, ray)) sound = false;
    json result;
    result["level"] = level;
    result["refined"] = refined;
    result["generators"] = vectors_to_json(fn);
    result["sound"] = sound;
    json diag;
    diag["direct_dual_rays"] = direct.extreme_rays.size();
    em.emit(out, result, diag);
    return sound ? kExitOk : kExitVerifyFailure;
  }

  if (cmd_hilbert->parsed()) {
    Emitter em("hilbert", opts, input_bytes);
    HilbertBasis hb = hilbert_basis(local_cone(spec, level), opts.budget);
    json result;
    result["level"] = level;
    result["elements"] = vectors_to_json(hb.elements);
    result["max_norm"] = rational_to_json(hb.max_norm());
    em.emit(out, result, json::object());
    return kExitOk;
  }

  if (cmd_equihilbert->parsed()) {
    Emitter em("equihilbert", opts, input_bytes);
    auto mode =
        certified ? EquiHilbertMode::Certified : EquiHilbertMode::Empirical;
    EquivariantHilbertResult r =
        equivariant_hilbert_basis(spec, mode, cap, 2, opts.budget);
    json result;
    result["pointed"] = r.pointed;
    if (!r.pointed) {
      result["monoid_class"] = to_string(r.monoid_class);
    } else {
      result["level"] = r.level;
      result["basis"] = vectors_to_json(r.basis.elements);
      result["representatives"] = vectors_to_json(r.representatives);
    }
    result["report"] = report_to_json(r.report);
    em.emit(out, result, json::object());
    return kExitOk;
  }

  if (cmd_stabilize->parsed()) {
    Emitter em("stabilize", opts, input_bytes);
    StabilizationReport rep = monoid
                                  ? monoid_stability_index(spec, cap, 2,
                                                           opts.budget)
                                  : stability_index(spec, cap);
    json result;
    result["target"] = monoid ? "monoid" : "cone";
    result["report"] = report_to_json(rep);
    em.emit(out, result, json::object());
    return kExitOk;
  }

  if (cmd_classify->parsed()) {
    Emitter em("classify", opts, input_bytes);
    json result;
    if (restricted_dual) {
      result["kind"] = "restricted_dual";
      result["tag"] = to_string(classify_restricted_dual(spec));
    } else if (have_level) {
      result["kind"] = monoid ? "local_monoid" : "local_cone";
      result["level"] = level;
      Cone cn = local_cone(spec, level);
      if (monoid) {
        MonoidSpec ms{level, cn.rays()};
        result["tag"] = to_string(classify_local_monoid(ms));
      } else {
        result["tag"] = to_string(classify_local_cone(cn));
      }
    } else {
      result["kind"] = monoid ? "global_monoid" : "global_cone";
      result["tag"] = monoid ? to_string(classify_global_monoid(spec))
                             : to_string(classify_global_cone(spec));
    }
    em.emit(out, result, json::object());
    return kExitOk;
  }

  if (cmd_member->parsed()) {
    Emitter em("member", opts, input_bytes);
    json result;
    if (global_dual) {
      if (prefix_arg.empty() || tail_arg.empty())
        throw CLI::ValidationError(
            "--global-dual requires --prefix and --tail");
      EventuallyConstantSeq seq;
      seq.prefix = vector_from_json(json::parse(prefix_arg, nullptr, true));
      seq.tail = rational_from_json(
          tail_arg.find_first_not_of("-0123456789") == std::string::npos
              ? json(std::stoll(tail_arg))
              : json(tail_arg));
      GlobalDualVerdict v = global_dual_member(spec, seq);
      result["member"] = v.member;
      if (!v.member) {
        result["violating_generator"] = vector_to_json(*v.violating_generator);
        result["violating_placement"] = vector_to_json(*v.violating_placement);
        result["violating_value"] = rational_to_json(*v.violating_value);
      }
    } else {
      if (!have_level || vector_arg.empty())
        throw CLI::ValidationError("member requires --level and --vector");
      QVector u = vector_from_json(json::parse(vector_arg, nullptr, true));
      Cone cn = local_cone(spec, level);
      bool inside = cn.contains(u);
      result["level"] = level;
      result["vector"] = vector_to_json(u);
      result["member"] = inside;
      if (inside) {
        if (auto w = cn.witness(u)) {
          json terms = json::array();
          for (const auto& [ray, lambda] : w->coefficients)
            terms.push_back(json{{"ray", vector_to_json(ray)},
                                 {"coefficient", rational_to_json(lambda)}});
          result["witness"] = terms;
        }
      }
    }
    em.emit(out, result, json::object());
    return kExitOk;
  }

  if (cmd_verify->parsed()) {
    Emitter em("verify", opts, suite_name + ":" + std::to_string(seed));
    std::vector<SuiteResult> results;
    if (suite_name.empty())
      results = run_all_suites(seed);
    else
      results.push_back(run_suite(suite_name, seed, trials));
    bool all_pass = true;
    json suites = json::array();
    for (const SuiteResult& r : results) {
      all_pass = all_pass && r.passed();
      json js;
      js["name"] = r.name;
      js["trials"] = r.trials;
      js["skipped"] = r.skipped;
      js["passed"] = r.passed();
      js["failures"] = r.failures;
      suites.push_back(std::move(js));
    }
    json result;
    result["suites"] = std::move(suites);
    result["passed"] = all_pass;
    em.emit(out, result, json{{"seed", seed}});
    return all_pass ? kExitOk : kExitVerifyFailure;
  }

  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  try {
    return run_inner(argc, argv, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExhaustedError& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NonPointedError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
}

}  // namespace symcone::cli
