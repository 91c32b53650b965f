// Command-line front end: exact computations on simplicial complexes and
// their (real) moment-angle complexes, with text or JSON output.
//
// Exit status: 0 when every asserted identity/inequality holds, 2 on input
// errors, 3 on an internal assertion failure (a violated identity is one).

#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "macx/cell_oracle.hpp"
#include "macx/compress.hpp"
#include "macx/freeness.hpp"
#include "macx/hochster.hpp"
#include "macx/io.hpp"
#include "macx/parallel.hpp"
#include "macx/poincare.hpp"

namespace {

using nlohmann::json;
using namespace macx;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string input;
  std::string subgroup_path;
  std::string field = "gf2";
  std::string policy = "smallest";
  std::string format = "text";
  std::vector<unsigned> kappa;
  int m = 4;
  bool exhaustive = false;
  int random_count = 0;
  std::optional<unsigned long> seed;
};

bool json_mode(const Options& opt) { return opt.format == "json"; }

void emit(const Options& opt, const json& doc, const std::string& text) {
  if (json_mode(opt))
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

std::string polynomial_line(const char* name, const PoincarePolynomial& p) {
  return std::string(name) + " = " + p.to_string() +
         "   (total " + std::to_string(p.total()) + ")\n";
}

int cmd_mobius(const Options& opt) {
  const auto K = load_complex(opt.input);
  const auto f = K.indicator();
  const auto g = mobius(f);
  json doc = {{"command", "mobius"},
              {"m", K.m()},
              {"support_size", f.support_size()},
              {"mobius_support_size", g.support_size()}};
  json supp = json::array();
  std::string text = "m = " + std::to_string(K.m()) + "\n|supp(f)| = " +
                     std::to_string(f.support_size()) + "\n|supp(M(f))| = " +
                     std::to_string(g.support_size()) + "\nsupp(M(f)) =";
  for (const Subset& a : support(g)) {
    supp.push_back(subset_to_json(a));
    text += " " + a.to_string();
  }
  doc["mobius_support"] = supp;
  emit(opt, doc, text + "\n");
  return kExitOk;
}

int cmd_betti(const Options& opt) {
  const auto K = load_complex(opt.input);
  const auto field = field_from_string(opt.field);
  const auto table = betti_table(K, field);
  std::string text = "field = " + to_string(field) + "\n";
  for (const auto& [key, beta] : table.entries())
    text += "beta(" + std::to_string(key.first) + ", " +
            Subset::from_bits(K.m(), key.second).to_string() +
            ") = " + std::to_string(beta) + "\n";
  text += "total = " + std::to_string(table.total()) + "\n";
  json doc = betti_to_json(table);
  doc["command"] = "betti";
  emit(opt, doc, text);
  return kExitOk;
}

int cmd_poincare(const Options& opt) {
  const auto K = load_complex(opt.input);
  const auto field = field_from_string(opt.field);
  const auto table = betti_table(K, field);
  json doc = {{"command", "poincare"}, {"field", to_string(field)}, {"m", K.m()}};
  std::string text = "field = " + to_string(field) + "\n";
  if (!opt.kappa.empty()) {
    const auto p = poincare_generalized(table, DegreeVector{opt.kappa});
    doc["kappa"] = opt.kappa;
    doc["poincare"] = poincare_to_json(p);
    text += polynomial_line("poincare", p);
  } else {
    const auto zk = poincare_generalized(table, DegreeVector::uniform(K.m(), 1));
    const auto rzk = poincare_generalized(table, DegreeVector::uniform(K.m(), 0));
    doc["zk"] = poincare_to_json(zk);
    doc["rzk"] = poincare_to_json(rzk);
    text += polynomial_line("Z_K ", zk) + polynomial_line("RZ_K", rzk);
  }
  emit(opt, doc, text);
  return kExitOk;
}

int cmd_compress(const Options& opt) {
  const auto K = load_complex(opt.input);
  const auto cert = compress(K.indicator(), policy_from_string(opt.policy));
  json doc = certificate_to_json(cert);
  doc["command"] = "compress";
  doc["policy"] = opt.policy;
  std::string text = "policy = " + opt.policy + "\nsteps =";
  for (int k : cert.steps) text += " " + std::to_string(k);
  text += "\na0 = " + cert.final_face.to_string() +
          "\nbound = " + std::to_string(cert.bound) +
          "\n|supp(M(f))| = " + std::to_string(cert.mobius_support_size) +
          "\nholds = " + (cert.holds() ? "true" : "false") + "\n";
  emit(opt, doc, text);
  return cert.holds() ? kExitOk : kExitInternal;
}

int cmd_oracle_check(const Options& opt) {
  const auto K = load_complex(opt.input);
  const auto field = field_from_string(opt.field);
  const auto report = cross_validate(K, field);
  json doc = cross_validation_to_json(report);
  doc["command"] = "oracle-check";
  std::string text = "field = " + to_string(field) + "\n";
  text += polynomial_line("oracle  Z_K ", report.disk2.oracle_poly);
  text += polynomial_line("hochster Z_K ", report.disk2.hochster_poly);
  text += polynomial_line("oracle  RZ_K", report.interval.oracle_poly);
  text += polynomial_line("hochster RZ_K", report.interval.hochster_poly);
  text += std::string("match = ") + (report.ok() ? "true" : "false") + "\n";
  emit(opt, doc, text);
  return report.ok() ? kExitOk : kExitInternal;
}

int cmd_freeness(const Options& opt) {
  const auto K = load_complex(opt.input);
  const auto H = load_subgroup(opt.subgroup_path);
  const bool free = is_free(H, K);
  json doc = {{"command", "freeness"},
              {"kind", H.kind() == SubgroupSpec::Kind::real ? "real" : "torus"},
              {"r", H.r()},
              {"free", free},
              {"rank_bound", rank_bound(K)}};
  std::string text = std::string("free = ") + (free ? "true" : "false") +
                     "\nrank_bound = " + std::to_string(rank_bound(K)) + "\n";
  emit(opt, doc, text);
  return kExitOk;
}

int cmd_hc_verify(const Options& opt) {
  const auto K = load_complex(opt.input);
  const auto H = load_subgroup(opt.subgroup_path);
  const auto field = field_from_string(opt.field);
  const auto report = hc_verify(K, H, field);
  json doc = hc_report_to_json(report);
  doc["command"] = "hc-verify";
  std::string text = "field = " + to_string(field) + "\nfree = " +
                     (report.free ? "true" : "false") + "\n";
  if (report.free) {
    text += "total dim H(Z_K)  = " + std::to_string(report.total_dim_zk) + "\n";
    text += "total dim H(RZ_K) = " + std::to_string(report.total_dim_rzk) + "\n";
    text += "2^r = " + std::to_string(report.lower_bound) + "\n";
    text += std::string("bound holds = ") + (report.bound_holds ? "true" : "false") + "\n";
    text += "rank bound = " + std::to_string(report.rank_bound) + "\n";
  } else {
    text += "bound skipped (action is not free)\n";
  }
  emit(opt, doc, text);
  return report.ok() ? kExitOk : kExitInternal;
}

struct SweepOutcome {
  json doc;
  std::string text;
  int violations = 0;
};

SweepOutcome sweep_one(const SimplicialComplex& K, CompressionPolicy alt_policy) {
  SweepOutcome out;
  int violations = 0;
  json checks = json::object();

  for (FieldTag field : {FieldTag::GF2, FieldTag::Rational}) {
    const auto identity = check_mobius_betti_identity(K, field);
    const auto bound = check_mobius_support_bound(K, field);
    checks["parity_identity_" + to_string(field)] = identity.holds;
    checks["support_bound_" + to_string(field)] = bound.holds;
    if (!identity.holds) ++violations;
    if (!bound.holds) ++violations;
  }

  for (auto policy : {CompressionPolicy::smallest_k, alt_policy}) {
    const auto cert = compress(K.indicator(), policy);
    const bool sound = cert.holds() && K.contains(cert.final_face);
    checks["certificate_" + to_string(policy)] = sound;
    if (!sound) ++violations;
  }

  if (K.m() <= 7) {
    for (FieldTag field : {FieldTag::GF2, FieldTag::Rational}) {
      const auto report = cross_validate(K, field);
      checks["oracle_" + to_string(field)] = report.ok();
      if (!report.ok()) ++violations;
    }
  }

  if (K.m() <= 6) {
    const auto best = max_free_rank_real(K);
    bool hc_ok = static_cast<int>(best.r) <= rank_bound(K);
    for (FieldTag field : {FieldTag::GF2, FieldTag::Rational})
      hc_ok = hc_ok && (std::uint64_t{1} << best.r) <=
                           total_dim(poincare_rzk(K, field));
    checks["halperin_carlsson"] = hc_ok;
    checks["max_free_rank"] = best.r;
    if (!hc_ok) ++violations;
  }

  out.doc = json::object();
  json faces = json::array();
  for (const Subset& a : K.maximal_faces()) faces.push_back(subset_to_json(a));
  out.doc["maximal_faces"] = faces;
  out.doc["checks"] = checks;
  out.doc["violations"] = violations;
  out.violations = violations;
  if (violations > 0) {
    out.text = "VIOLATION on complex " + format_complex_file(K);
  }
  return out;
}

int cmd_sweep(const Options& opt) {
  if (opt.exhaustive == (opt.random_count > 0))
    throw InputError("sweep needs exactly one of --exhaustive or --random N");
  if (json_mode(opt) && opt.random_count > 0 && !opt.seed)
    throw InputError("--seed is required for randomized sweeps with --format json");

  std::vector<SimplicialComplex> complexes;
  if (opt.exhaustive) {
    complexes = enumerate_complexes(opt.m);
  } else {
    std::mt19937_64 rng(opt.seed.value_or(12345));
    for (int t = 0; t < opt.random_count; ++t)
      complexes.push_back(random_complex(opt.m, rng));
  }

  const auto alt_policy = policy_from_string(opt.policy) == CompressionPolicy::smallest_k
                              ? CompressionPolicy::greedy_support
                              : policy_from_string(opt.policy);

  std::vector<SweepOutcome> outcomes(complexes.size());
  parallel_for(complexes.size(), [&](std::size_t i) {
    outcomes[i] = sweep_one(complexes[i], alt_policy);
  });

  int violations = 0;
  json per_complex = json::array();
  std::string text;
  for (const auto& outcome : outcomes) {
    violations += outcome.violations;
    per_complex.push_back(outcome.doc);
    text += outcome.text;
  }

  json doc = {{"command", "sweep"},
              {"m", opt.m},
              {"mode", opt.exhaustive ? "exhaustive" : "random"},
              {"complexes", complexes.size()},
              {"violations", violations},
              {"results", per_complex}};
  if (!opt.exhaustive) doc["seed"] = opt.seed.value_or(12345);
  text += "complexes checked = " + std::to_string(complexes.size()) + "\n" +
          "violations = " + std::to_string(violations) + "\n";
  emit(opt, doc, text);
  return violations == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Moebius / Stanley-Reisner / moment-angle computations"};
  app.require_subcommand(1);
  Options opt;

  const auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--field", opt.field, "Coefficient field: gf2 or rational");
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "Complex file")->required();
  };

  auto* mob = app.add_subcommand("mobius", "Moebius transform of the indicator");
  add_input(mob);
  add_format(mob);

  auto* betti = app.add_subcommand("betti", "Bigraded Betti numbers");
  add_input(betti);
  add_field(betti);
  add_format(betti);

  auto* poinc = app.add_subcommand("poincare", "Poincare polynomials of (R)Z_K");
  add_input(poinc);
  add_field(poinc);
  add_format(poinc);
  poinc->add_option("--kappa", opt.kappa,
                    "Per-vertex degrees for the generalized complex")
      ->delimiter(',');

  auto* comp = app.add_subcommand("compress", "Compression certificate");
  add_input(comp);
  add_format(comp);
  comp->add_option("--policy", opt.policy, "Tie-break: smallest or greedy");

  auto* oracle = app.add_subcommand("oracle-check",
                                    "Cross-validate against the cell oracle");
  add_input(oracle);
  add_field(oracle);
  add_format(oracle);

  auto* freeness = app.add_subcommand("freeness", "Subgroup freeness check");
  add_input(freeness);
  add_format(freeness);
  freeness->add_option("--subgroup", opt.subgroup_path, "Subgroup file")->required();

  auto* hc = app.add_subcommand("hc-verify", "Halperin-Carlsson verification");
  add_input(hc);
  add_field(hc);
  add_format(hc);
  hc->add_option("--subgroup", opt.subgroup_path, "Subgroup file")->required();

  auto* sweep = app.add_subcommand("sweep", "Batch verification sweeps");
  add_format(sweep);
  sweep->add_option("--m", opt.m, "Ground-set size")->required();
  sweep->add_flag("--exhaustive", opt.exhaustive, "Every complex on [m] (m <= 4)");
  sweep->add_option("--random", opt.random_count, "Number of random complexes");
  sweep->add_option("--seed", opt.seed, "Seed for randomized sweeps");
  sweep->add_option("--policy", opt.policy, "Primary compression policy");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(mob)) return cmd_mobius(opt);
    if (app.got_subcommand(betti)) return cmd_betti(opt);
    if (app.got_subcommand(poinc)) return cmd_poincare(opt);
    if (app.got_subcommand(comp)) return cmd_compress(opt);
    if (app.got_subcommand(oracle)) return cmd_oracle_check(opt);
    if (app.got_subcommand(freeness)) return cmd_freeness(opt);
    if (app.got_subcommand(hc)) return cmd_hc_verify(opt);
    if (app.got_subcommand(sweep)) return cmd_sweep(opt);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const SizeError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NicenessError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
