// hookvert: construct the p-subgroups and hook simple modules of symmetric
// groups, run the named verification suites, and compute Brauer quotients
// and vertices at desk scale.
//
// Exit codes: 0 = success / all checks passed, 1 = a mathematical check
// failed (witness printed), 2 = usage or budget error.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookvert/brauer.hpp"
#include "hookvert/constructions.hpp"
#include "hookvert/hook_module.hpp"
#include "hookvert/module.hpp"
#include "hookvert/suites.hpp"
#include "hookvert/vertex.hpp"

namespace {

using namespace hookvert;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::string format_support(const std::vector<int>& pts) {
  if (pts.empty()) return "{}";
  std::ostringstream os;
  os << '{';
  std::size_t i = 0;
  bool first = true;
  while (i < pts.size()) {
    std::size_t j = i;
    while (j + 1 < pts.size() && pts[j + 1] == pts[j] + 1) ++j;
    if (!first) os << ',';
    first = false;
    if (j > i + 1)
      os << pts[i] << ".." << pts[j];
    else if (j == i + 1)
      os << pts[i] << ',' << pts[j];
    else
      os << pts[i];
    i = j + 1;
  }
  os << '}';
  return os.str();
}

std::string format_order(long p, std::uint64_t exponent) {
  std::ostringstream os;
  os << p << '^' << exponent;
  if (auto value = checked_pow(p, exponent)) os << " = " << *value;
  return os.str();
}

// ---------------------------------------------------------------------------
// group
// ---------------------------------------------------------------------------

int cmd_group(const std::string& kind, long p, int n, int d,
              const std::string& m_text, bool json_output) {
  GroupDecomposition dec;
  std::vector<Permutation> generators;
  std::uint64_t order_exponent = 0;
  int degree = 0;
  bool has_shape = false;

  if (kind == "sylow-tower") {
    const PermGroup g = sylow_tower(p, d);
    generators = g.generators();
    degree = g.degree();
    // (p^d - 1)/(p - 1) = 1 + p + … + p^{d-1}
    std::uint64_t pw = 1;
    for (int i = 0; i < d; ++i) {
      order_exponent += pw;
      pw *= static_cast<std::uint64_t>(p);
    }
  } else if (kind == "sylow-n") {
    dec = sylow_subgroup_sn(n, p);
    generators = dec.generators();
    degree = n;
    order_exponent = dec.order_exponent();
    has_shape = true;
  } else if (kind == "elem-tower") {
    const PermGroup g = elem_abelian_tower(p, d);
    generators = g.generators();
    degree = g.degree();
    order_exponent = static_cast<std::uint64_t>(d);
  } else if (kind == "elem-n") {
    const std::vector<int> m = parse_int_list(m_text);
    if (m.empty())
      throw CLI::ValidationError("--m", "elem-n needs --m m1,m2,…");
    dec = elem_abelian_subgroup_sn(n, p, m);
    generators = dec.generators();
    degree = n;
    order_exponent = dec.order_exponent();
    has_shape = true;
  } else {
    throw CLI::ValidationError(
        "kind", "expected sylow-tower | sylow-n | elem-tower | elem-n");
  }

  PermGroup group(degree, generators);
  if (auto order = checked_pow(p, order_exponent)) group.set_known_order(*order);

  if (json_output) {
    nlohmann::json j{{"kind", kind},
                     {"p", p},
                     {"group", group.to_json()},
                     {"order_factored",
                      std::to_string(p) + "^" + std::to_string(order_exponent)},
                     {"support", group.support()}};
    if (auto order = checked_pow(p, order_exponent)) j["order"] = *order;
    if (has_shape) {
      j["shape"] = dec.shape();
      nlohmann::json factors = nlohmann::json::array();
      for (const auto& f : dec.factors) {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : f.generators) gens.push_back(g.cycle_string());
        factors.push_back({{"label", f.label},
                           {"offset", f.offset},
                           {"generators", std::move(gens)}});
      }
      j["factors"] = std::move(factors);
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }

  std::cout << "kind: " << kind << "  (p = " << p;
  if (kind == "sylow-tower" || kind == "elem-tower")
    std::cout << ", d = " << d;
  else
    std::cout << ", n = " << n;
  std::cout << ")\n";
  if (has_shape) std::cout << "shape: " << dec.shape() << '\n';
  std::cout << "order: " << format_order(p, order_exponent) << '\n';
  std::cout << "support: " << format_support(group.support()) << '\n';
  std::cout << "generators:\n";
  for (const auto& g : generators) std::cout << "  " << g.cycle_string() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// brauer
// ---------------------------------------------------------------------------

PermGroup parse_group_spec(const std::string& spec, long p, int n,
                           const Budget& budget) {
  if (spec.rfind("P:", 0) == 0) {
    const int n_spec = std::stoi(spec.substr(2));
    if (n_spec != n)
      throw CLI::ValidationError("--group",
                                 "P:<n> must match --n (" + spec + ")");
    return sylow_subgroup_sn(n_spec, p).group();
  }
  if (spec.rfind("E:", 0) == 0) {
    const std::vector<int> m = parse_int_list(spec.substr(2));
    return elem_abelian_subgroup_sn(n, p, m).group();
  }
  // explicit generators, ';'-separated cycle strings
  std::vector<Permutation> gens;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) gens.push_back(Permutation::parse(item, n));
  (void)budget;
  return PermGroup(n, std::move(gens));
}

int cmd_brauer(long p, int n, int r, const std::string& group_spec,
               const std::string& module_name, const std::string& certificate,
               bool expect_theorem, bool json_output, const Budget& budget) {
  if (expect_theorem) {
    if (n % (p * p) != p)
      throw CLI::ValidationError(
          "--expect-theorem", "requires n ≡ p (mod p^2); got n = " +
                                  std::to_string(n));
    if (r != static_cast<int>(p) - 1)
      throw CLI::ValidationError("--expect-theorem", "requires r = p-1");
  }

  std::unique_ptr<FpModule> module;
  const HookModule* hook = nullptr;
  if (module_name == "hook") {
    auto h = std::make_unique<HookModule>(p, n, r);
    hook = h.get();
    module = std::move(h);
  } else if (module_name == "natural-perm") {
    module = std::make_unique<NaturalPermModule>(p, n);
  } else if (module_name == "trivial") {
    module = std::make_unique<TrivialModule>(p, n);
  } else {
    throw CLI::ValidationError("--module",
                               "expected hook | natural-perm | trivial");
  }

  const PermGroup P = parse_group_spec(group_spec, p, n, budget);
  const BrauerAnalysis analysis = brauer_quotient(*module, P, budget);

  std::optional<std::pair<std::vector<int>, bool>> cert;
  if (!certificate.empty()) {
    std::size_t b0_pos = 0;
    std::vector<int> b0_label;
    if (certificate == "e") {
      if (!hook)
        throw CLI::ValidationError("--certificate",
                                   "'e' needs --module hook");
      b0_pos = hook->special_e_position();
      b0_label = hook->basis()[b0_pos].indices;
    } else if (hook) {
      const std::vector<int> raw = parse_int_list(certificate);
      const auto norm = wedge_normalize(raw);
      if (!norm)
        throw CLI::ValidationError("--certificate", "repeated wedge index");
      b0_pos = hook->position(norm->second);
      b0_label = norm->second.indices;
    } else {
      const int letter = std::stoi(certificate);
      if (letter < 1 || letter > n)
        throw CLI::ValidationError("--certificate", "letter out of range");
      b0_pos = static_cast<std::size_t>(letter - 1);
      b0_label = {letter};
    }
    cert = {b0_label, prop22_certificate(*module, b0_pos, analysis)};
  }

  const BrauerReport report = make_brauer_report(*module, P, analysis, cert);

  if (json_output) {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    std::cout << "module: " << report.module << "  (p = " << p
              << ", dim " << module->dim() << ")\n";
    std::cout << "group: " << group_spec << "  order "
              << P.order(budget.max_group_order) << ", "
              << P.generators().size() << " generators\n";
    std::cout << "dim fixed points: " << report.dim_fixed << '\n';
    std::cout << "trace images from " << report.trace_image_dims.size()
              << " maximal subgroups, dims:";
    for (auto dim : report.trace_image_dims) std::cout << ' ' << dim;
    std::cout << '\n';
    std::cout << "dim trace sum: " << report.dim_sum << '\n';
    std::cout << "dim Brauer quotient: " << report.dim_quotient << '\n';
    if (report.certificate) {
      std::cout << "certificate b0 = (";
      const auto& label = report.certificate->first;
      for (std::size_t i = 0; i < label.size(); ++i)
        std::cout << label[i] << (i + 1 < label.size() ? "," : "");
      std::cout << "): verdict "
                << (report.certificate->second ? "true" : "false") << '\n';
    }
  }

  if (expect_theorem) {
    const bool good = report.dim_quotient >= 1 &&
                      (!report.certificate || report.certificate->second);
    return good ? kExitOk : kExitCheckFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const std::string& suite, const SuiteParams& params,
               bool json_output, const Budget& budget) {
  const VerifySuiteResult result = run_suite(suite, params, budget);
  if (json_output) {
    std::cout << result.to_json().dump(2) << '\n';
  } else {
    std::cout << "suite " << result.suite << ": "
              << suite_statement(result.suite) << '\n';
    std::cout << "parameters: p = " << params.p << ", n = " << params.n
              << ", d = " << params.d << ", samples = " << params.samples
              << ", seed = " << params.seed << '\n';
    std::cout << "checks run: " << result.checks_run << '\n';
    if (result.ok()) {
      std::cout << "all checks passed ("
                << result.elapsed_seconds << " s)\n";
    } else {
      std::cout << result.failures.size() << " FAILURES:\n";
      for (const auto& f : result.failures)
        std::cout << "  " << f.check << "  witness " << f.witness.dump()
                  << '\n';
    }
  }
  return result.ok() ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// vertex
// ---------------------------------------------------------------------------

int cmd_vertex(long p, int n, int r, bool json_output, const Budget& budget) {
  std::unique_ptr<FpModule> module;
  if (n % p == 0)
    module = std::make_unique<HookModule>(p, n, r);
  else
    module = std::make_unique<SpechtHookModule>(p, n, r);

  const PermGroup G = PermGroup::symmetric(n);
  if (G.order() > budget.max_higman_order)
    throw BudgetExceeded(
        "S_" + std::to_string(n) +
        " exceeds the vertex-search budget; use `brauer` for "
        "Brauer-quotient lower bounds at larger n");
  const PermGroup P = sylow_subgroup_sn(n, p).group();
  const VertexReport report = vertex_search(*module, G, P, budget);

  if (json_output) {
    std::cout << report.to_json().dump(2) << '\n';
  } else {
    std::cout << "G = " << report.group_name << ", p = " << p
              << ", module " << report.module << " (dim " << module->dim()
              << ")\n";
    std::cout << "conjugacy classes of subgroups of the Sylow p-subgroup:\n";
    for (const auto& c : report.classes) {
      std::cout << "  order " << c.order << "  ["
                << (c.projective ? "projective    " : "not projective")
                << "]  gens:";
      if (c.representative.generators().empty()) std::cout << " ()";
      for (const auto& g : c.representative.generators())
        std::cout << ' ' << g.cycle_string();
      std::cout << '\n';
    }
    const auto& v = report.vertex();
    std::cout << "vertex: order " << v.order << ", gens:";
    if (v.representative.generators().empty()) std::cout << " ()";
    for (const auto& g : v.representative.generators())
      std::cout << ' ' << g.cycle_string();
    std::cout << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hookvert: p-subgroups, hook simple modules, Brauer quotients and "
      "vertices of symmetric groups"};
  app.require_subcommand(1);

  std::string config_path;
  bool json_output = false;
  app.add_option("--config", config_path,
                 "key=value budget overrides (or HOOKVERT_CONFIG)");
  app.add_flag("--json", json_output, "emit JSON instead of tables");

  long p = 3;
  int n = 0, d = 1, r = -1;
  std::string kind, m_text, group_spec = "P:0", module_name = "hook";
  std::string certificate, suite;
  SuiteParams params;

  auto* group_cmd =
      app.add_subcommand("group", "construct and print a named p-subgroup");
  group_cmd->fallthrough();
  group_cmd->add_option("kind", kind, "sylow-tower | sylow-n | elem-tower | elem-n")
      ->required();
  group_cmd->add_option("--p", p, "prime")->required();
  group_cmd->add_option("--n", n, "degree (sylow-n, elem-n)");
  group_cmd->add_option("--d", d, "tower height (sylow-tower, elem-tower)");
  group_cmd->add_option("--m", m_text, "m1,m2,… for elem-n");

  auto* brauer_cmd = app.add_subcommand(
      "brauer", "fixed points, trace images and the Brauer quotient M(P)");
  brauer_cmd->fallthrough();
  brauer_cmd->add_option("--p", p, "prime")->required();
  brauer_cmd->add_option("--n", n, "degree")->required();
  brauer_cmd->add_option("--r", r, "exterior power (hook module)");
  brauer_cmd->add_option("--group", group_spec,
                         "P:<n> | E:m1,m2,… | cycle-strings ';'-separated")
      ->required();
  brauer_cmd->add_option("--module", module_name,
                         "hook | natural-perm | trivial");
  brauer_cmd->add_option("--certificate", certificate,
                         "'e', wedge indices i1,i2,…, or a letter index");
  bool expect_theorem = false;
  brauer_cmd->add_flag("--expect-theorem", expect_theorem,
                       "require the n ≡ p (mod p^2) regime and a "
                       "nonvanishing certificate");

  auto* verify_cmd =
      app.add_subcommand("verify", "run a named verification suite");
  verify_cmd->fallthrough();
  verify_cmd->add_option("suite", suite, "lemma-4.2 … lemma-3.9")->required();
  verify_cmd->add_option("--p", params.p, "prime");
  verify_cmd->add_option("--n", params.n, "degree");
  verify_cmd->add_option("--d", params.d, "tower height");
  verify_cmd->add_option("--m", m_text, "m1,m2,…");
  verify_cmd->add_option("--samples", params.samples, "random samples");
  verify_cmd->add_option("--seed", params.seed, "random seed");

  auto* vertex_cmd = app.add_subcommand(
      "vertex", "vertex of D^{(n-r,1^r)} by relative projectivity (n ≤ 6)");
  vertex_cmd->fallthrough();
  vertex_cmd->add_option("--p", p, "prime")->required();
  vertex_cmd->add_option("--n", n, "degree")->required();
  vertex_cmd->add_option("--r", r, "exterior power")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Budget budget = resolve_budget(config_path);
    if (group_cmd->parsed()) return cmd_group(kind, p, n, d, m_text, json_output);
    if (brauer_cmd->parsed()) {
      if (r < 0) r = static_cast<int>(p) - 1;
      return cmd_brauer(p, n, r, group_spec, module_name, certificate,
                        expect_theorem, json_output, budget);
    }
    if (verify_cmd->parsed()) {
      params.m = parse_int_list(m_text);
      return cmd_verify(suite, params, json_output, budget);
    }
    if (vertex_cmd->parsed())
      return cmd_vertex(p, n, r, json_output, budget);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
