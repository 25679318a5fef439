#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qmds/oracle.hpp"
#include "qmds/report.hpp"

using namespace qmds;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidArguments = 2;
constexpr std::uint64_t kMatrixCheckLimit = 2000;

struct CommonOpts {
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", opts.out, "write output to a file instead of stdout");
}

int emit(const std::string& content, const CommonOpts& opts) {
  if (opts.out.empty()) {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream f(opts.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << opts.out << " for writing\n";
    return kExitInvalidArguments;
  }
  f << content;
  return kExitOk;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

// Flat key,value rows keep the csv format available on scalar reports.
std::string json_to_kv_csv(const Json& j) {
  std::string out = "key,value\n";
  for (const auto& [key, value] : j.items()) out += key + "," + value.dump() + "\n";
  return out;
}

std::optional<FamilySpec> find_family(std::uint64_t q, std::uint64_t a) {
  for (const FamilySpec& fs : classify_q(q)) {
    if (fs.a == a) return fs;
  }
  return std::nullopt;
}

int cmd_tables(const CommonOpts& opts) {
  const TablesReport report = run_tables(builtin_family_tables());
  int rc;
  if (opts.format == "json") {
    rc = emit(json_text(render_tables_json(report)), opts);
  } else if (opts.format == "csv") {
    rc = emit(render_tables_csv(report), opts);
  } else {
    rc = emit(render_tables_text(report), opts);
  }
  if (rc != kExitOk) return rc;
  if (!report.all_ok()) {
    for (const TableRowCheck& row : report.rows) {
      for (const std::string& d : row.diffs) {
        std::cerr << "mismatch: q=" << row.q << " a=" << row.a << ": " << d << "\n";
      }
    }
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_coset(std::uint64_t q, std::uint64_t a, std::optional<std::uint64_t> r_opt, const CommonOpts& opts) {
  if (a == 0 || (q * q + 1) % a != 0) {
    std::cerr << "error: a = " << a << " does not divide q^2 + 1\n";
    return kExitInvalidArguments;
  }
  const std::uint64_t r = r_opt.value_or(q + 1);
  const CosetSpec spec = CosetSpec::make(q, r, (q * q + 1) / a);
  const CosetStructureReport report = verify_coset_structure(spec);

  Json j;
  j["q"] = q;
  j["a"] = a;
  j["r"] = r;
  j["n"] = spec.n;
  j["rn"] = spec.rn;
  if (spec.s) j["s"] = *spec.s;
  j["pass"] = report.pass;
  j["singletons"] = report.singletons;
  j["pair_count"] = report.pair_count;
  if (!report.pass) j["counterexample"] = report.counterexample;

  int rc;
  if (opts.format == "json") {
    rc = emit(json_text(j), opts);
  } else if (opts.format == "csv") {
    rc = emit(json_to_kv_csv(j), opts);
  } else {
    std::string text = "coset structure for q=" + std::to_string(q) + " r=" + std::to_string(r) +
                       " n=" + std::to_string(spec.n) + ": " + (report.pass ? "pass" : "FAIL") + "\n";
    text += "  singletons:";
    for (std::uint64_t s : report.singletons) text += " " + std::to_string(s);
    text += "\n  reflection pairs: " + std::to_string(report.pair_count) + "\n";
    if (!report.pass) text += "  counterexample: " + report.counterexample + "\n";
    rc = emit(text, opts);
  }
  if (rc != kExitOk) return rc;
  return report.pass ? kExitOk : kExitVerificationFailed;
}

int cmd_check(std::uint64_t q, std::uint64_t a, std::uint64_t delta, const CommonOpts& opts) {
  const CosetSpec spec = family_coset_spec(q, a);
  const DefiningSet T = centered_defining_set(spec, delta);
  const DualContainmentVerdict set_verdict = dual_containing(T);
  const DualContainmentVerdict class_verdict = dual_containing_by_classification(T);

  Json j;
  j["q"] = q;
  j["a"] = a;
  j["delta"] = delta;
  j["defining_set"] = T.elements;
  j["dual_containing"] = set_verdict.ok;
  j["dual_containing_by_classification"] = class_verdict.ok;
  if (set_verdict.witness) j["witness"] = *set_verdict.witness;

  int rc;
  if (opts.format == "json") {
    rc = emit(json_text(j), opts);
  } else if (opts.format == "csv") {
    rc = emit(json_to_kv_csv(j), opts);
  } else {
    std::string text = "q=" + std::to_string(q) + " a=" + std::to_string(a) + " delta=" + std::to_string(delta) +
                       ": dual containment " + (set_verdict.ok ? "holds" : "fails");
    if (set_verdict.witness) text += " (witness " + std::to_string(*set_verdict.witness) + ")";
    text += "\n";
    rc = emit(text, opts);
  }
  if (rc != kExitOk) return rc;
  return set_verdict.ok == class_verdict.ok ? kExitOk : kExitVerificationFailed;
}

int cmd_construct(std::uint64_t q, std::uint64_t a, std::uint64_t d, const CommonOpts& opts) {
  if (d < 2 || d % 2 != 0) {
    std::cerr << "error: d must be even and at least 2\n";
    return kExitInvalidArguments;
  }
  const std::optional<FamilySpec> fs = find_family(q, a);
  if (!fs) {
    std::cerr << "error: q=" << q << " does not classify into the a=" << a << " family\n";
    return kExitInvalidArguments;
  }
  const std::uint64_t delta = (d - 2) / 2;
  const CosetSpec spec = family_coset_spec(q, a);
  if (delta > spec.n / 2 - 1) {
    std::cerr << "error: d=" << d << " needs delta=" << delta << " past the length bound n/2-1\n";
    return kExitInvalidArguments;
  }

  const DefiningSet T = centered_defining_set(spec, delta);
  const DualContainmentVerdict verdict = dual_containing(T);
  if (d > fs->d_max) {
    if (!verdict.ok) {
      std::cerr << "refused: d=" << d << " is past the family bound d_max=" << fs->d_max
                << " and the defining set is not dual-containing (witness "
                << std::to_string(verdict.witness.value_or(0)) << ")\n";
      return kExitVerificationFailed;
    }
    std::cerr << "warning: d=" << d << " is past the family bound d_max=" << fs->d_max
              << " but the defining set is still dual-containing; constructing anyway\n";
  }

  const FieldTower tower = build_tower(PrimePower::from_q(q));
  const ConstacyclicCode code = build_code_from_set(spec, tower, T);
  QuantumCodeParams params = hermitian_construct(q, spec.n, code.k, d, verdict.ok);
  params.family = fs;
  params.delta = delta;
  params.defining_set = code.T.elements;

  Json j;
  j["q"] = q;
  j["a"] = a;
  j["t"] = fs->t;
  j["m"] = fs->m;
  j["delta"] = delta;
  j["d"] = d;
  j["code"] = code_to_json(code);
  j["d_bch"] = code.d_bch;
  j["dual_containing_cosets"] = verdict.ok;
  if (spec.n <= kMatrixCheckLimit) {
    j["dual_containing_matrix"] = dual_containment_matrix_check(code);
  } else {
    j["dual_containing_matrix"] = nullptr;
  }
  j["quantum"] = quantum_params_to_json(params);

  int rc;
  if (opts.format == "json") {
    rc = emit(json_text(j), opts);
  } else if (opts.format == "csv") {
    rc = emit(json_to_kv_csv(j), opts);
  } else {
    std::string text = "[[" + std::to_string(params.n) + "," + std::to_string(params.k) + "," +
                       std::to_string(params.d) + "]]_" + std::to_string(q) +
                       (params.mds ? "  MDS" : "") + "\n";
    text += "  classical [" + std::to_string(spec.n) + "," + std::to_string(code.k) + ",>=" +
            std::to_string(code.d_bch) + "] over GF(" + std::to_string(q * q) + "), delta=" +
            std::to_string(delta) + ", |T|=" + std::to_string(code.T.size()) + "\n";
    rc = emit(text, opts);
  }
  if (rc != kExitOk) return rc;
  if (j["dual_containing_matrix"].is_boolean() && j["dual_containing_matrix"].get<bool>() != verdict.ok) {
    std::cerr << "mismatch: matrix-level and coset-level dual containment disagree\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_family(std::uint64_t q, std::uint64_t a, const CommonOpts& opts) {
  const std::optional<FamilySpec> fs = find_family(q, a);
  if (!fs) {
    std::cerr << "error: q=" << q << " does not classify into the a=" << a << " family\n";
    return kExitInvalidArguments;
  }
  const FamilyEnumeration fam = enumerate_family(*fs);
  if (opts.format == "json") return emit(json_text(render_family_json(fam)), opts);
  if (opts.format == "csv") return emit(render_family_csv(fam), opts);
  return emit(render_family_text(fam), opts);
}

int cmd_search(std::uint64_t q, std::uint64_t a, const CommonOpts& opts) {
  if (a == 0 || (q * q + 1) % a != 0) {
    std::cerr << "error: " << a << " does not divide " << q * q + 1 << "\n";
    return kExitInvalidArguments;
  }
  const CosetSpec spec = family_coset_spec(q, a);
  const std::optional<std::uint64_t> found = max_delta_search(spec);
  std::optional<FamilySpec> fs;
  if (is_odd_prime_power(q)) fs = find_family(q, a);

  Json j;
  j["q"] = q;
  j["a"] = a;
  j["n"] = spec.n;
  j["delta_star"] = found ? Json(*found) : Json(nullptr);
  j["lemma_bound"] = fs ? Json(fs->delta_max) : Json(nullptr);
  j["meets_bound"] = (found && fs) ? Json(*found >= fs->delta_max) : Json(nullptr);

  int rc;
  if (opts.format == "json") {
    rc = emit(json_text(j), opts);
  } else if (opts.format == "csv") {
    rc = emit(json_to_kv_csv(j), opts);
  } else {
    std::string text = "q=" + std::to_string(q) + " a=" + std::to_string(a) + ": ";
    text += found ? "delta* = " + std::to_string(*found) : "no dual-containing centered set";
    if (fs) {
      text += ", family bound " + std::to_string(fs->delta_max);
      if (found && *found > fs->delta_max) {
        text += " (search exceeds the bound by " + std::to_string(*found - fs->delta_max) + ")";
      }
    }
    text += "\n";
    rc = emit(text, opts);
  }
  if (rc != kExitOk) return rc;
  if (fs && (!found || *found < fs->delta_max)) return kExitVerificationFailed;
  return kExitOk;
}

int cmd_verify(std::uint64_t q, std::uint64_t a, std::uint64_t delta, std::uint64_t budget,
               const CommonOpts& opts) {
  const CosetSpec spec = family_coset_spec(q, a);
  const DefiningSet T = centered_defining_set(spec, delta);
  const DualContainmentVerdict set_verdict = dual_containing(T);
  const DualContainmentVerdict class_verdict = dual_containing_by_classification(T);

  const FieldTower tower = build_tower(PrimePower::from_q(q));
  const ConstacyclicCode code = build_code_from_set(spec, tower, T);

  Json j;
  j["q"] = q;
  j["a"] = a;
  j["delta"] = delta;
  j["n"] = spec.n;
  j["k"] = code.k;
  j["d_bch"] = code.d_bch;
  j["dual_containing_cosets"] = set_verdict.ok;
  j["dual_containing_by_classification"] = class_verdict.ok;

  bool agree = set_verdict.ok == class_verdict.ok;
  if (spec.n <= kMatrixCheckLimit) {
    const bool matrix_ok = dual_containment_matrix_check(code);
    j["dual_containing_matrix"] = matrix_ok;
    agree = agree && matrix_ok == set_verdict.ok;
  } else {
    j["dual_containing_matrix"] = nullptr;
  }

  bool distance_ok = true;
  try {
    const std::uint64_t d_exact = brute_force_min_distance(code, budget);
    j["d_exact"] = d_exact;
    distance_ok = d_exact >= code.d_bch;
  } catch (const std::domain_error&) {
    j["d_exact"] = nullptr;  // outside the enumeration budget
  }
  j["criteria_agree"] = agree;
  j["distance_ok"] = distance_ok;

  int rc;
  if (opts.format == "json") {
    rc = emit(json_text(j), opts);
  } else if (opts.format == "csv") {
    rc = emit(json_to_kv_csv(j), opts);
  } else {
    std::string text = "q=" + std::to_string(q) + " a=" + std::to_string(a) + " delta=" + std::to_string(delta) +
                       ": criteria " + (agree ? "agree" : "DISAGREE") + ", dual containment " +
                       (set_verdict.ok ? "holds" : "fails") + ", d_bch=" + std::to_string(code.d_bch);
    if (j["d_exact"].is_number()) {
      text += ", d_exact=" + j["d_exact"].dump() + (distance_ok ? "" : " BELOW BOUND");
    }
    text += "\n";
    rc = emit(text, opts);
  }
  if (rc != kExitOk) return rc;
  return agree && distance_ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constacyclic quantum MDS code construction and verification"};
  app.require_subcommand(1);

  std::uint64_t q = 0, a = 0, delta = 0, d = 0;
  std::uint64_t budget = 10'000'000;
  std::optional<std::uint64_t> r_opt;

  CLI::App* coset = app.add_subcommand("coset", "verify the coset structure of a frame");
  coset->add_option("--q", q, "field size q")->required();
  coset->add_option("--a", a, "length divisor a of q^2+1")->required();
  coset->add_option("--r", r_opt, "shift order r (default q+1)");
  CommonOpts coset_opts;
  add_common(coset, coset_opts);

  CLI::App* check = app.add_subcommand("check", "dual-containment check for a centered defining set");
  check->add_option("--q", q)->required();
  check->add_option("--a", a)->required();
  check->add_option("--delta", delta, "half-width of the centered set")->required();
  CommonOpts check_opts;
  add_common(check, check_opts);

  CLI::App* construct = app.add_subcommand("construct", "build a code certificate for a given distance");
  construct->add_option("--q", q)->required();
  construct->add_option("--a", a)->required();
  construct->add_option("--d", d, "even quantum distance")->required();
  CommonOpts construct_opts;
  add_common(construct, construct_opts);

  CLI::App* family = app.add_subcommand("family", "enumerate all codes of a family member");
  family->add_option("--q", q)->required();
  family->add_option("--a", a)->required();
  CommonOpts family_opts;
  add_common(family, family_opts);

  CLI::App* tables = app.add_subcommand("tables", "reproduce and verify the reference tables");
  CommonOpts tables_opts;
  add_common(tables, tables_opts);

  CLI::App* search = app.add_subcommand("search", "find the maximal dual-containing delta");
  search->add_option("--q", q)->required();
  search->add_option("--a", a)->required();
  CommonOpts search_opts;
  add_common(search, search_opts);

  CLI::App* verify = app.add_subcommand("verify", "independent matrix and distance verification");
  verify->add_option("--q", q)->required();
  verify->add_option("--a", a)->required();
  verify->add_option("--delta", delta)->required();
  verify->add_option("--budget", budget, "codeword cap for distance enumeration");
  CommonOpts verify_opts;
  add_common(verify, verify_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalidArguments;
  }

  try {
    if (coset->parsed()) return cmd_coset(q, a, r_opt, coset_opts);
    if (check->parsed()) return cmd_check(q, a, delta, check_opts);
    if (construct->parsed()) return cmd_construct(q, a, d, construct_opts);
    if (family->parsed()) return cmd_family(q, a, family_opts);
    if (tables->parsed()) return cmd_tables(tables_opts);
    if (search->parsed()) return cmd_search(q, a, search_opts);
    if (verify->parsed()) return cmd_verify(q, a, delta, budget, verify_opts);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidArguments;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidArguments;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}
