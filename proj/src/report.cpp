#include "qmds/report.hpp"

#include <sstream>
#include <stdexcept>

namespace qmds {

namespace detail {
extern const char* const kFamilyTablesJson;
}

const Json& builtin_family_tables() {
  static const Json parsed = Json::parse(detail::kFamilyTablesJson);
  return parsed;
}

Json code_to_json(const ConstacyclicCode& code) {
  Json j;
  j["q"] = code.spec.q;
  j["r"] = code.spec.r;
  j["n"] = code.spec.n;
  if (code.spec.s) j["s"] = *code.spec.s;
  j["defining_set"] = code.T.elements;
  j["eta"] = code.eta.coeffs();
  j["omega"] = code.omega.coeffs();
  Json gen = Json::array();
  for (std::size_t i = 0; i < code.gen.coeff_count(); ++i) gen.push_back(code.gen.coeff(i).coeffs());
  j["generator"] = std::move(gen);
  j["k"] = code.k;
  j["d_bch"] = code.d_bch;
  return j;
}

Json quantum_params_to_json(const QuantumCodeParams& p) {
  Json j;
  j["q"] = p.q;
  if (p.family) {
    j["a"] = p.family->a;
    j["t"] = p.family->t;
    j["m"] = p.family->m;
  } else {
    j["a"] = nullptr;
    j["t"] = nullptr;
    j["m"] = nullptr;
  }
  j["n"] = p.n;
  j["k"] = p.k;
  j["d"] = p.d;
  j["mds"] = p.mds;
  j["delta"] = p.delta;
  j["defining_set"] = p.defining_set;
  return j;
}

std::string code_pattern(std::uint64_t n, std::uint64_t q) {
  std::ostringstream os;
  os << "[[" << n << "," << n + 2 << "-2d,d]]_" << q;
  return os.str();
}

bool TablesReport::all_ok() const {
  for (const TableRowCheck& row : rows) {
    if (!row.matches_reference || !row.pipeline_ok) return false;
  }
  for (const SummaryRowCheck& row : summary) {
    if (!row.matches_reference) return false;
  }
  return !rows.empty();
}

namespace {

struct RowTask {
  int table = 0;
  std::uint64_t a = 0;
  Json golden_row;
};

TableRowCheck check_row(const RowTask& task) {
  TableRowCheck row;
  row.table = task.table;
  row.a = task.a;
  row.q = task.golden_row.at("q").get<std::uint64_t>();

  std::vector<FamilySpec> families;
  try {
    families = classify_q(row.q);
  } catch (const std::exception& e) {
    row.diffs.push_back(std::string("classification failed: ") + e.what());
    return row;
  }
  const FamilySpec* fs = nullptr;
  for (const FamilySpec& f : families) {
    if (f.a == task.a) fs = &f;
  }
  if (fs == nullptr) {
    row.diffs.push_back("q=" + std::to_string(row.q) + " does not fall in the a=" + std::to_string(task.a) +
                        " family");
    return row;
  }

  row.t = fs->t;
  row.m = fs->m;
  row.n = fs->n;
  row.r = row.q + 1;
  row.d_max = fs->d_max;
  row.delta_max = fs->delta_max;
  row.q_form = std::to_string(2 * fs->a) + "m+" + std::to_string(fs->t);
  row.pattern = code_pattern(fs->n, row.q);

  row.matches_reference = true;
  const auto expect = [&](const char* field, std::uint64_t computed) {
    const std::uint64_t want = task.golden_row.at(field).get<std::uint64_t>();
    if (computed != want) {
      row.matches_reference = false;
      row.diffs.push_back(std::string(field) + ": computed " + std::to_string(computed) + ", reference " +
                          std::to_string(want));
    }
  };
  expect("t", row.t);
  expect("m", row.m);
  expect("n", row.n);
  expect("r", row.r);
  expect("d_max", row.d_max);

  // Back the row by a full construction run at the maximal delta.
  try {
    const CosetSpec spec = family_coset_spec(row.q, task.a);
    const FieldTower tower = build_tower(PrimePower::from_q(row.q));
    const DefiningSet T = centered_defining_set(spec, fs->delta_max);
    const DualContainmentVerdict verdict = dual_containing(T);
    if (!verdict.ok) throw std::runtime_error("dual containment failed at delta_max");
    const ConstacyclicCode code = build_code_from_set(spec, tower, T);
    if (code.d_bch < fs->d_max) throw std::runtime_error("distance bound below the family maximum");
    const QuantumCodeParams params = hermitian_construct(row.q, spec.n, code.k, fs->d_max, verdict.ok);
    if (!params.mds) throw std::runtime_error("parameters miss the Singleton equality");
    if (params.k != static_cast<std::int64_t>(spec.n) - static_cast<std::int64_t>(2 * fs->d_max) + 2) {
      throw std::runtime_error("logical dimension differs from n - 2d + 2");
    }
    row.pipeline_ok = true;
  } catch (const std::exception& e) {
    row.pipeline_ok = false;
    row.diffs.push_back(std::string("pipeline: ") + e.what());
  }
  return row;
}

}  // namespace

TablesReport run_tables(const Json& reference, unsigned worker_count) {
  std::vector<RowTask> tasks;
  for (const Json& family : reference.at("families")) {
    const int table = family.at("table").get<int>();
    const std::uint64_t a = family.at("a").get<std::uint64_t>();
    for (const Json& row : family.at("rows")) {
      tasks.push_back(RowTask{table, a, row});
    }
  }

  TablesReport report;
  report.rows.resize(tasks.size());
  parallel_for(tasks.size(), worker_count, [&](std::size_t i) { report.rows[i] = check_row(tasks[i]); });

  for (const Json& row : reference.at("summary")) {
    SummaryRowCheck s;
    s.cls = row.at("class").get<int>();
    s.a = row.at("a").get<std::uint64_t>();
    s.t = row.at("t").get<std::uint64_t>();
    for (const FamilyPattern& pat : family_patterns()) {
      if (pat.a != s.a || pat.t != s.t) continue;
      s.q_form = std::to_string(2 * pat.a) + "m+" + std::to_string(pat.t);
      s.d_max_form = std::to_string(2 * pat.delta_slope) + "m+" + std::to_string(2 * pat.delta_offset + 2);
      s.matches_reference = s.q_form == row.at("q_form").get<std::string>() &&
                            s.d_max_form == row.at("d_max_form").get<std::string>();
    }
    report.summary.push_back(std::move(s));
  }
  return report;
}

namespace {

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string d_range(std::uint64_t d_max) { return "2 <= d <= " + std::to_string(d_max) + " even"; }

}  // namespace

std::string render_tables_text(const TablesReport& report) {
  std::ostringstream os;
  int current_table = 0;
  for (const TableRowCheck& row : report.rows) {
    if (row.table != current_table) {
      current_table = row.table;
      os << "Family table " << row.table << "  (n = (q^2+1)/" << row.a << ")\n";
      os << "  " << pad("code", 26) << pad("form of q", 12) << pad("m", 4) << pad("q", 6) << pad("r", 6)
         << "d\n";
    }
    os << "  " << pad(row.pattern, 26) << pad(row.q_form, 12) << pad(std::to_string(row.m), 4)
       << pad(std::to_string(row.q), 6) << pad(std::to_string(row.r), 6) << d_range(row.d_max);
    if (!row.matches_reference || !row.pipeline_ok) {
      os << "   MISMATCH:";
      for (const std::string& d : row.diffs) os << " [" << d << "]";
    }
    os << "\n";
  }
  os << "Class summary\n";
  os << "  " << pad("class", 7) << pad("form of q", 12) << pad("length", 14) << "distance\n";
  for (const SummaryRowCheck& s : report.summary) {
    os << "  " << pad(std::to_string(s.cls), 7) << pad(s.q_form, 12)
       << pad("(q^2+1)/" + std::to_string(s.a), 14) << "2 <= d <= " << s.d_max_form << " even";
    if (!s.matches_reference) os << "   MISMATCH";
    os << "\n";
  }
  os << (report.all_ok() ? "all rows verified\n" : "verification FAILED\n");
  return os.str();
}

std::string render_tables_csv(const TablesReport& report) {
  std::ostringstream os;
  os << "code,q_form,m,q,r,d_range\n";
  for (const TableRowCheck& row : report.rows) {
    os << "\"" << row.pattern << "\"," << row.q_form << "," << row.m << "," << row.q << "," << row.r << ",\""
       << d_range(row.d_max) << "\"\n";
  }
  return os.str();
}

Json render_tables_json(const TablesReport& report) {
  Json j;
  Json rows = Json::array();
  for (const TableRowCheck& row : report.rows) {
    Json r;
    r["table"] = row.table;
    r["code"] = row.pattern;
    r["q_form"] = row.q_form;
    r["a"] = row.a;
    r["t"] = row.t;
    r["m"] = row.m;
    r["q"] = row.q;
    r["n"] = row.n;
    r["r"] = row.r;
    r["delta_max"] = row.delta_max;
    r["d_max"] = row.d_max;
    r["matches_reference"] = row.matches_reference;
    r["pipeline_ok"] = row.pipeline_ok;
    if (!row.diffs.empty()) r["diffs"] = row.diffs;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  Json summary = Json::array();
  for (const SummaryRowCheck& s : report.summary) {
    Json r;
    r["class"] = s.cls;
    r["a"] = s.a;
    r["t"] = s.t;
    r["q_form"] = s.q_form;
    r["d_max_form"] = s.d_max_form;
    r["matches_reference"] = s.matches_reference;
    summary.push_back(std::move(r));
  }
  j["summary"] = std::move(summary);
  j["all_ok"] = report.all_ok();
  return j;
}

std::string render_family_text(const FamilyEnumeration& fam) {
  std::ostringstream os;
  os << "family a=" << fam.fs.a << " t=" << fam.fs.t << " m=" << fam.fs.m << ": q=" << fam.fs.q
     << " n=" << fam.fs.n << " r=" << fam.fs.q + 1 << " delta_max=" << fam.fs.delta_max << "\n";
  if (fam.truncated) os << "  note: family bound exceeded n/2-1; entries truncated\n";
  for (const QuantumCodeParams& p : fam.codes) {
    os << "  [[" << p.n << "," << p.k << "," << p.d << "]]_" << p.q << (p.mds ? "  MDS" : "")
       << "  delta=" << p.delta << "\n";
  }
  return os.str();
}

std::string render_family_csv(const FamilyEnumeration& fam) {
  std::ostringstream os;
  os << "n,k,d,q,mds,delta\n";
  for (const QuantumCodeParams& p : fam.codes) {
    os << p.n << "," << p.k << "," << p.d << "," << p.q << "," << (p.mds ? "true" : "false") << "," << p.delta
       << "\n";
  }
  return os.str();
}

Json render_family_json(const FamilyEnumeration& fam) {
  Json j;
  j["a"] = fam.fs.a;
  j["t"] = fam.fs.t;
  j["m"] = fam.fs.m;
  j["q"] = fam.fs.q;
  j["n"] = fam.fs.n;
  j["delta_max"] = fam.fs.delta_max;
  j["d_max"] = fam.fs.d_max;
  j["truncated"] = fam.truncated;
  Json codes = Json::array();
  for (const QuantumCodeParams& p : fam.codes) codes.push_back(quantum_params_to_json(p));
  j["codes"] = std::move(codes);
  return j;
}

}  // namespace qmds
