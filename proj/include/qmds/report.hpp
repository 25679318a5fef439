#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmds/code.hpp"
#include "qmds/parallel.hpp"
#include "qmds/quantum.hpp"

namespace qmds {

using Json = nlohmann::ordered_json;

// The reference dataset shipped with the library (see data/family_tables.json).
const Json& builtin_family_tables();

// Canonical JSON form of a built code: q, r, n, the sorted defining set, and
// the generator coefficients as little-endian GF(p) residue vectors.
Json code_to_json(const ConstacyclicCode& code);

Json quantum_params_to_json(const QuantumCodeParams& p);

// "[[n,n+2-2d,d]]_q"
std::string code_pattern(std::uint64_t n, std::uint64_t q);

struct TableRowCheck {
  int table = 0;
  std::uint64_t a = 0;
  std::uint64_t q = 0, t = 0, m = 0, n = 0, r = 0, d_max = 0, delta_max = 0;
  std::string q_form;   // e.g. "26m+5"
  std::string pattern;  // e.g. "[[74,76-2d,d]]_31"
  bool matches_reference = false;
  bool pipeline_ok = false;
  std::vector<std::string> diffs;
};

struct SummaryRowCheck {
  int cls = 0;
  std::uint64_t a = 0, t = 0;
  std::string q_form, d_max_form;
  bool matches_reference = false;
};

struct TablesReport {
  std::vector<TableRowCheck> rows;
  std::vector<SummaryRowCheck> summary;
  bool all_ok() const;
};

// Recomputes every reference row with a full construction run at the family's
// maximal delta and compares against the dataset. worker_count 0 picks the
// hardware concurrency; output order is independent of scheduling.
TablesReport run_tables(const Json& reference, unsigned worker_count = 0);

std::string render_tables_text(const TablesReport& report);
std::string render_tables_csv(const TablesReport& report);
Json render_tables_json(const TablesReport& report);

std::string render_family_text(const FamilyEnumeration& fam);
std::string render_family_csv(const FamilyEnumeration& fam);
Json render_family_json(const FamilyEnumeration& fam);

}  // namespace qmds
