// Copyright 2026 The taf Authors.
// SPDX-License-Identifier: Apache-2.0

// taf: command-line front end.
//
// Exit codes: 0 success, 1 a check failed, 2 invalid input,
// 3 the ideal could not be triangularized or an internal error occurred.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "taf/curves.hpp"
#include "taf/genus.hpp"
#include "taf/kernels.hpp"
#include "taf/landweber.hpp"
#include "taf/modform.hpp"
#include "taf/suite.hpp"

namespace {

using namespace taf;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

struct RunConfig {
  std::string family = "picard";
  std::uint32_t prime = 7;
  unsigned height = 0;  // 0: family default
  std::string inverted;
  unsigned order = 0;
  unsigned n = 1;
  std::string out;
  bool timings = false;
  int threads = 0;
  std::string form;
  std::string id;
  std::string poly;
  bool all = false;
  std::vector<std::string> only;
  std::string json_out;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

void require_genus_prime(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (p % 3 != 1) throw InvalidInput("the prime must be 1 mod 3, got " + std::to_string(p));
}

void apply_threads(int flag) {
  int n = flag;
  if (n <= 0) {
    if (const char* env = std::getenv("TAF_THREADS")) n = std::atoi(env);
  }
  if (n > 0) kernels::set_threads(n);
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text << '\n';
}

int cmd_certify(const RunConfig& cfg) {
  const Family f = parse_family(cfg.family);
  require_genus_prime(cfg.prime);
  const unsigned height = cfg.height ? cfg.height : default_height(f);
  const std::string inverted = cfg.inverted.empty() ? default_inverted(f) : cfg.inverted;
  const LandweberCertificate cert = certify(f, cfg.prime, height, inverted);

  std::ostream& summary = cfg.out == "-" ? std::cerr : std::cout;
  summary << family_id(f) << " at p = " << cfg.prime << ", height " << height << ", inverting " << inverted << '\n';
  for (std::size_t i = 0; i < cert.v.size(); ++i) summary << "  v" << i + 1 << " = " << cert.v[i] << '\n';
  for (const auto& c : cert.checks) {
    summary << "  " << (c.pass ? "PASS" : "FAIL") << (c.printed ? " [printed]    " : " [structural] ") << c.name << '\n';
  }
  summary << (cert.passed() ? "certificate passes" : "certificate FAILS")
          << (cert.printed_agree() ? "" : "; some printed congruences disagree") << '\n';
  if (!cfg.out.empty()) write_text(cfg.out, cert.to_json(cfg.timings));
  return cert.passed() ? kExitOk : kExitFailed;
}

int cmd_reproduce(const RunConfig& cfg) {
  if (!cfg.all && cfg.only.empty()) throw InvalidInput("reproduce needs --all or --only");
  const std::vector<GroupResult> groups = run_suite(cfg.all ? std::vector<std::string>{} : cfg.only);
  std::size_t width = 0;
  for (const auto& g : groups) {
    for (const auto& r : g.rows) width = std::max(width, r.name.size());
  }
  bool ok = true;
  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  for (const auto& g : groups) {
    std::cout << g.group << " (" << std::fixed << std::setprecision(0) << g.ms << " ms)\n";
    for (const auto& r : g.rows) {
      ok = ok && r.pass;
      std::cout << "  " << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << (r.pass ? "PASS" : "FAIL")
                << "  " << r.statement << '\n';
      if (!r.pass) std::cout << "      " << r.detail << '\n';
      report.push_back({{"group", g.group}, {"name", r.name}, {"criterion", r.criterion}, {"statement", r.statement},
                        {"status", r.pass ? "PASS" : "FAIL"}, {"detail", r.detail}});
    }
  }
  if (!cfg.json_out.empty()) write_text(cfg.json_out, report.dump(2));
  std::cout << (ok ? "all checks pass" : "some checks FAIL") << '\n';
  return ok ? kExitOk : kExitFailed;
}

int cmd_qexp(const RunConfig& cfg) {
  const unsigned order = cfg.order ? cfg.order : kDefaultQOrder;
  if (order < 2) throw InvalidInput("--order must be at least 2");
  std::cout << form_by_name(cfg.form, order).to_text() << '\n';
  return kExitOk;
}

int cmd_genus(const RunConfig& cfg) {
  const Family f = parse_family(cfg.family);
  require_genus_prime(cfg.prime);
  if (cfg.n < 1 || cfg.n > 3) throw InvalidInput("--n must be 1, 2 or 3");
  const HazewinkelImages images = genus_v(genus_spec(f), cfg.prime, cfg.n);
  std::cout << to_string(images.v.back()) << '\n';
  return kExitOk;
}

int cmd_identity(const RunConfig& cfg) {
  const auto& curve_ids = curve_identity_ids();
  const auto& form_ids = modform_identity_ids();
  IdentityVerdict v;
  if (std::find(curve_ids.begin(), curve_ids.end(), cfg.id) != curve_ids.end()) {
    v = check_curve_identity(cfg.id);
  } else if (std::find(form_ids.begin(), form_ids.end(), cfg.id) != form_ids.end()) {
    v = check_modform_identity(cfg.id, cfg.order ? cfg.order : kDefaultQOrder);
  } else {
    throw InvalidInput("unknown identity '" + cfg.id + "'");
  }
  std::cout << (v.pass ? "PASS" : "FAIL") << '\n';
  if (!v.pass) std::cout << "residual: " << v.witness << '\n';
  return v.pass ? kExitOk : kExitFailed;
}

int cmd_restrict(const RunConfig& cfg) {
  std::cout << to_string(restrict(parse_poly<Rational>(cfg.poly, registries::picard()))) << '\n';
  return kExitOk;
}

int cmd_iso(const RunConfig& cfg) {
  if (!is_prime(cfg.prime)) throw InvalidInput(std::to_string(cfg.prime) + " is not prime");
  const unsigned order = cfg.order ? cfg.order : kDefaultIsoOrder;
  const IsoReport r = fgl_iso_integrality(cfg.prime, order);
  auto word = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "p = " << r.p << ", order " << r.order << (r.asserted ? "" : " (informational: p is not 1 mod 3)") << '\n'
            << "  p-local coefficients: " << word(r.p_local) << '\n'
            << "  log identity: " << word(r.log_identity) << '\n'
            << "  law identity below order " << r.bivariate_order << ": " << word(r.bivariate_identity) << '\n'
            << "  matches the parameter change: " << word(r.matches_parameter_change) << '\n';
  std::cout << "  valuations:";
  for (const auto& v : r.valuations) std::cout << ' ' << v.to_string();
  std::cout << '\n';
  return r.pass() || !r.asserted ? kExitOk : kExitFailed;
}

int cmd_supersingular(const RunConfig& cfg) {
  const SupersingularReport s = supersingular_height(cfg.prime);
  std::cout << "p = " << s.p << "\n  v1 = 0: " << (s.v1_zero ? "yes" : "no") << "\n  v2 = 0: " << (s.v2_zero ? "yes" : "no")
            << "\n  coefficient of u^" << s.exponent << ": " << s.coefficient.to_string() << "\n  valuation: " << s.valuation
            << "\n  product formula agrees: " << (s.oracle_agrees ? "yes" : "no") << "\n  verdict: " << s.verdict << '\n';
  return s.oracle_agrees ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Formal group laws of Picard and hyperelliptic genera"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", cfg.threads, "Worker threads for the sparse kernels (fallback: TAF_THREADS)")
      ->check(CLI::NonNegativeNumber);

  const auto families = CLI::IsMember({"legendre", "picard", "shiga", "supersingular"});

  auto* certify_cmd = app.add_subcommand("certify", "Build and check a Landweber certificate");
  certify_cmd->add_option("--family", cfg.family)->required()->check(families);
  certify_cmd->add_option("--prime", cfg.prime)->required();
  certify_cmd->add_option("--height", cfg.height, "Default: 2 for legendre, 3 otherwise");
  certify_cmd->add_option("--invert", cfg.inverted, "Default: Delta6 for legendre, Delta_C otherwise");
  certify_cmd->add_option("--out", cfg.out, "Write the JSON certificate here ('-' for standard output)");
  certify_cmd->add_flag("--timings", cfg.timings, "Include stage timings in the JSON");

  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run the reproduction suite");
  reproduce_cmd->add_flag("--all", cfg.all);
  reproduce_cmd->add_option("--only", cfg.only, "Group or check name (repeatable)");
  reproduce_cmd->add_option("--json", cfg.json_out, "Write the report as JSON");

  auto* qexp_cmd = app.add_subcommand("qexp", "Print a q-expansion");
  qexp_cmd->add_option("--form", cfg.form)->required();
  qexp_cmd->add_option("--order", cfg.order, "Number of coefficients (default 200)");

  auto* genus_cmd = app.add_subcommand("genus", "Print the image of v_n");
  genus_cmd->add_option("--family", cfg.family)->required()->check(families);
  genus_cmd->add_option("--prime", cfg.prime)->required();
  genus_cmd->add_option("--n", cfg.n)->required();

  auto* identity_cmd = app.add_subcommand("identity", "Check a named identity");
  identity_cmd->add_option("--id", cfg.id)->required();
  identity_cmd->add_option("--order", cfg.order, "q-order for modular form identities");

  auto* restrict_cmd = app.add_subcommand("restrict", "Apply r to a polynomial in G2, G3, G4");
  restrict_cmd->add_option("--poly", cfg.poly)->required();

  auto* iso_cmd = app.add_subcommand("iso", "Integrality of the strict isomorphism");
  iso_cmd->add_option("--prime", cfg.prime)->required();
  iso_cmd->add_option("--order", cfg.order, "Truncation order (default 40)");

  auto* supersingular_cmd = app.add_subcommand("supersingular", "Height probe for the supersingular family");
  supersingular_cmd->add_option("--prime", cfg.prime)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    apply_threads(cfg.threads);
    if (*certify_cmd) return cmd_certify(cfg);
    if (*reproduce_cmd) return cmd_reproduce(cfg);
    if (*qexp_cmd) return cmd_qexp(cfg);
    if (*genus_cmd) return cmd_genus(cfg);
    if (*identity_cmd) return cmd_identity(cfg);
    if (*restrict_cmd) return cmd_restrict(cfg);
    if (*iso_cmd) return cmd_iso(cfg);
    if (*supersingular_cmd) return cmd_supersingular(cfg);
  } catch (const InvalidInput& e) {
    std::cerr << "taf: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DomainError& e) {
    std::cerr << "taf: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ParseError& e) {
    std::cerr << "taf: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const RegistryMismatch& e) {
    std::cerr << "taf: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "taf: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
