#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "agcodes/semigroup.hpp"

namespace agcodes {

enum class PropagationRule {
  ReduceDistance,   // (i): [n, k, d] -> [n, k, d-s], s < d
  ReduceDimension,  // (ii): [n, k, d] -> [n, k-s, d], s < k
  Shorten,          // (iii): [n, k, d] -> [n-s, k-s, d], s < k
};
std::string rule_to_string(PropagationRule rule);  // "i", "ii", "iii"
PropagationRule rule_from_string(const std::string&);

struct PropagationStep {
  PropagationRule rule;
  long long s;
};

/// A q-ary [n, k, d] parameter claim with its provenance.
struct CodeRecord {
  int q = 0;
  long long n = 0, k = 0, d = 0;
  std::string label;
  std::vector<PropagationStep> derivation;

  std::string params_string() const;  // "[91, 80, 9]"
};

/// k = n - r_d(S); throws std::domain_error when that leaves k < 1.
CodeRecord improved_params(const NumericalSemigroup& S, long long n, long long d,
                           int q, const std::string& label = "");

CodeRecord propagate(const CodeRecord& rec, PropagationRule rule, long long s);

/// Replays rec.derivation on top of `root` and checks the result equals rec.
bool derivation_replays(const CodeRecord& root, const CodeRecord& rec);

enum class TableFormat { Csv, Markdown, Json };
TableFormat parse_format(const std::string& text);

struct TableInstance {
  std::string label;
  NumericalSemigroup semigroup;
  long long n;
  int q;
};

/// Largest d >= 2 with n - r_d >= 1.
long long max_feasible_distance(const NumericalSemigroup& S, long long n);

/// One row per (instance, d), d in [d_lo, d_hi] (default: 2 up to the largest
/// feasible d per instance), sorted by (q, n, descending k); byte-for-byte
/// deterministic in every format.
std::string emit_table(const std::vector<TableInstance>& instances,
                       std::optional<long long> d_lo, std::optional<long long> d_hi,
                       TableFormat format);

/// Map (q, n, k) -> best known minimum distance. Cells absent from the map
/// are reported as unknown, never defaulted.
class BaselineTable {
 public:
  static BaselineTable load_csv(std::istream& in);
  static BaselineTable load_csv_file(const std::string& path);

  void set(int q, long long n, long long k, long long d_best);
  std::optional<long long> best_distance(int q, long long n, long long k) const;
  std::size_t size() const { return cells_.size(); }

 private:
  std::map<std::tuple<int, long long, long long>, long long> cells_;
};

enum class ImprovementStatus {
  Improves,           // better than the baseline at i = 0..s_max; scan complete
  ImprovesTruncated,  // better at i = 0..s_max; scan stopped at an unknown cell
  NonImproving,       // baseline at i = 0 already matches or beats d
  Unknown,            // baseline cell missing at i = 0
};
std::string status_to_string(ImprovementStatus status);

struct ImprovementEntry {
  CodeRecord record;
  ImprovementStatus status;
  long long s_max;  // meaningful for Improves / ImprovesTruncated
};

/// For each record, the largest s with baseline(q, n-i, k-i) < d for all
/// 0 <= i <= s, shortening along propagation rule (iii).
std::vector<ImprovementEntry> compare_baseline(const std::vector<CodeRecord>& records,
                                               const BaselineTable& baseline);

std::string render_improvement_report(const std::vector<ImprovementEntry>& entries);

/// Parses records from the JSON emitted by the table renderer.
std::vector<CodeRecord> records_from_json(const std::string& json_text);

}  // namespace agcodes
