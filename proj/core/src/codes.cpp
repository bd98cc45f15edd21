#include "agcodes/codes.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace agcodes {

namespace {
using nlohmann::ordered_json;
}

std::string rule_to_string(PropagationRule rule) {
  switch (rule) {
    case PropagationRule::ReduceDistance: return "i";
    case PropagationRule::ReduceDimension: return "ii";
    case PropagationRule::Shorten: return "iii";
  }
  throw std::logic_error("bad rule");
}

PropagationRule rule_from_string(const std::string& text) {
  if (text == "i") return PropagationRule::ReduceDistance;
  if (text == "ii") return PropagationRule::ReduceDimension;
  if (text == "iii") return PropagationRule::Shorten;
  throw std::invalid_argument("unknown propagation rule '" + text + "'");
}

std::string CodeRecord::params_string() const {
  std::ostringstream os;
  os << '[' << n << ", " << k << ", " << d << ']';
  return os.str();
}

CodeRecord improved_params(const NumericalSemigroup& S, long long n, long long d,
                           int q, const std::string& label) {
  if (n < 1) throw std::invalid_argument("length must be positive");
  const long long k = n - S.r(d);  // r checks d >= 2
  if (k < 1)
    throw std::domain_error("design distance too large for this length: n=" +
                            std::to_string(n) + ", r_d=" + std::to_string(n - k));
  CodeRecord rec;
  rec.q = q;
  rec.n = n;
  rec.k = k;
  rec.d = d;
  rec.label = label;
  return rec;
}

CodeRecord propagate(const CodeRecord& rec, PropagationRule rule, long long s) {
  if (s < 0) throw std::domain_error("propagation step must be nonnegative");
  CodeRecord out = rec;
  switch (rule) {
    case PropagationRule::ReduceDistance:
      if (s >= rec.d) throw std::domain_error("rule i requires s < d");
      out.d -= s;
      break;
    case PropagationRule::ReduceDimension:
      if (s >= rec.k) throw std::domain_error("rule ii requires s < k");
      out.k -= s;
      break;
    case PropagationRule::Shorten:
      if (s >= rec.k) throw std::domain_error("rule iii requires s < k");
      out.n -= s;
      out.k -= s;
      break;
  }
  out.derivation.push_back({rule, s});
  return out;
}

bool derivation_replays(const CodeRecord& root, const CodeRecord& rec) {
  CodeRecord cur = root;
  for (const auto& step : rec.derivation) cur = propagate(cur, step.rule, step.s);
  return cur.n == rec.n && cur.k == rec.k && cur.d == rec.d;
}

long long max_feasible_distance(const NumericalSemigroup& S, long long n) {
  // r is nondecreasing in d; find the largest d with n - r_d >= 1.
  if (n - S.r(2) < 1) throw std::domain_error("length too small for any design distance");
  long long lo = 2, hi = n + 2 * S.genus() + 2;
  while (S.r(hi) <= n - 1) hi *= 2;
  while (lo < hi) {
    const long long mid = (lo + hi + 1) / 2;
    if (n - S.r(mid) >= 1)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

namespace {

struct TableRow {
  int q;
  long long n, k, d;
  std::string labels;
  // optional shortening data (reference tables carry it, generic rows do not)
  bool has_s = false;
  long long s = 0;
};

std::string render_rows_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "q,n,k,d,labels,s_max\n";
  for (const auto& r : rows) {
    os << r.q << ',' << r.n << ',' << r.k << ',' << r.d << ',' << r.labels << ',';
    if (r.has_s) os << r.s;
    os << '\n';
  }
  return os.str();
}

std::string render_rows_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "| n | k | d | s | n-s | k-s | d | code |\n";
  os << "|---|---|---|---|-----|-----|---|------|\n";
  for (const auto& r : rows) {
    os << "| " << r.n << " | " << r.k << " | " << r.d << " | ";
    if (r.has_s)
      os << r.s << " | " << (r.n - r.s) << " | " << (r.k - r.s) << " | " << r.d;
    else
      os << "- | - | - | " << r.d;
    os << " | " << r.labels << " |\n";
  }
  return os.str();
}

std::vector<std::string> split_labels(const std::string& labels) {
  // "(D2a)(D2b)" -> {"D2a", "D2b"}; a bare label passes through
  std::vector<std::string> out;
  std::string cur;
  bool inside = false;
  for (char c : labels) {
    if (c == '(') {
      inside = true;
      cur.clear();
    } else if (c == ')') {
      if (inside && !cur.empty()) out.push_back(cur);
      inside = false;
    } else if (inside) {
      cur += c;
    }
  }
  if (out.empty() && !labels.empty()) out.push_back(labels);
  return out;
}

std::string render_rows_json(const std::vector<TableRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json obj;
    obj["q"] = r.q;
    obj["n"] = r.n;
    obj["k"] = r.k;
    obj["d"] = r.d;
    obj["labels"] = split_labels(r.labels);
    obj["derivation"] = ordered_json::array();  // a root record
    if (r.has_s) {
      obj["s"] = r.s;
      obj["shortened"] = {{"n", r.n - r.s},
                          {"k", r.k - r.s},
                          {"d", r.d},
                          {"derivation", ordered_json::array(
                                             {{{"rule", "iii"}, {"s", r.s}}})}};
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string render_rows(std::vector<TableRow> rows, TableFormat format) {
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return std::tie(a.q, a.n, b.k, a.d, a.labels) < std::tie(b.q, b.n, a.k, b.d, b.labels);
  });
  switch (format) {
    case TableFormat::Csv: return render_rows_csv(rows);
    case TableFormat::Markdown: return render_rows_markdown(rows);
    case TableFormat::Json: return render_rows_json(rows);
  }
  throw std::logic_error("bad format");
}

}  // namespace

TableFormat parse_format(const std::string& text) {
  if (text == "csv") return TableFormat::Csv;
  if (text == "md") return TableFormat::Markdown;
  if (text == "json") return TableFormat::Json;
  throw std::invalid_argument("unknown format '" + text + "' (expected csv|md|json)");
}

std::string emit_table(const std::vector<TableInstance>& instances,
                       std::optional<long long> d_lo, std::optional<long long> d_hi,
                       TableFormat format) {
  std::vector<TableRow> rows;
  for (const auto& inst : instances) {
    const long long lo = d_lo.value_or(2);
    const long long hi = d_hi.value_or(max_feasible_distance(inst.semigroup, inst.n));
    for (long long d = lo; d <= hi; ++d) {
      const CodeRecord rec = improved_params(inst.semigroup, inst.n, d, inst.q, inst.label);
      rows.push_back({rec.q, rec.n, rec.k, rec.d, inst.label, false, 0});
    }
  }
  return render_rows(std::move(rows), format);
}

// Shared with tables.cpp: render records that carry a shortening depth.
std::string table_from_rows(const std::vector<std::tuple<CodeRecord, long long>>& rows,
                            TableFormat format) {
  std::vector<TableRow> out;
  for (const auto& [rec, s] : rows) {
    out.push_back({rec.q, rec.n, rec.k, rec.d, rec.label, true, s});
  }
  return render_rows(std::move(out), format);
}

BaselineTable BaselineTable::load_csv(std::istream& in) {
  BaselineTable table;
  std::string line;
  long long line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != "q,n,k,d_best")
        throw std::invalid_argument("baseline line 1: expected header 'q,n,k,d_best'");
      saw_header = true;
      continue;
    }
    std::istringstream ls(line);
    std::string cell;
    long long vals[4];
    for (int c = 0; c < 4; ++c) {
      if (!std::getline(ls, cell, ','))
        throw std::invalid_argument("baseline line " + std::to_string(line_no) +
                                    ": expected 4 fields");
      try {
        std::size_t used = 0;
        vals[c] = std::stoll(cell, &used);
        if (used != cell.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("baseline line " + std::to_string(line_no) +
                                    ": bad integer '" + cell + "'");
      }
    }
    if (std::getline(ls, cell, ','))
      throw std::invalid_argument("baseline line " + std::to_string(line_no) +
                                  ": expected 4 fields");
    if (vals[3] < 1)
      throw std::invalid_argument("baseline line " + std::to_string(line_no) +
                                  ": d_best must be positive");
    table.set(static_cast<int>(vals[0]), vals[1], vals[2], vals[3]);
  }
  if (!saw_header) throw std::invalid_argument("baseline file is empty");
  return table;
}

BaselineTable BaselineTable::load_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open baseline file '" + path + "'");
  return load_csv(in);
}

void BaselineTable::set(int q, long long n, long long k, long long d_best) {
  cells_[{q, n, k}] = d_best;
}

std::optional<long long> BaselineTable::best_distance(int q, long long n,
                                                      long long k) const {
  auto it = cells_.find({q, n, k});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

std::string status_to_string(ImprovementStatus status) {
  switch (status) {
    case ImprovementStatus::Improves: return "improves";
    case ImprovementStatus::ImprovesTruncated: return "improves-truncated";
    case ImprovementStatus::NonImproving: return "non-improving";
    case ImprovementStatus::Unknown: return "unknown";
  }
  throw std::logic_error("bad status");
}

std::vector<ImprovementEntry> compare_baseline(const std::vector<CodeRecord>& records,
                                               const BaselineTable& baseline) {
  std::vector<ImprovementEntry> out;
  for (const auto& rec : records) {
    ImprovementEntry entry{rec, ImprovementStatus::Unknown, -1};
    const auto first = baseline.best_distance(rec.q, rec.n, rec.k);
    if (!first) {
      entry.status = ImprovementStatus::Unknown;
    } else if (*first >= rec.d) {
      entry.status = ImprovementStatus::NonImproving;
    } else {
      entry.status = ImprovementStatus::Improves;
      long long i = 1;
      for (; i < rec.k && rec.n - i >= 1; ++i) {  // rule iii needs s < k
        const auto cell = baseline.best_distance(rec.q, rec.n - i, rec.k - i);
        if (!cell) {
          entry.status = ImprovementStatus::ImprovesTruncated;
          break;
        }
        if (*cell >= rec.d) break;
      }
      entry.s_max = i - 1;
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::string render_improvement_report(const std::vector<ImprovementEntry>& entries) {
  std::ostringstream os;
  os << "q,n,k,d,labels,status,s_max\n";
  for (const auto& e : entries) {
    os << e.record.q << ',' << e.record.n << ',' << e.record.k << ',' << e.record.d
       << ',' << e.record.label << ',' << status_to_string(e.status) << ',';
    if (e.status == ImprovementStatus::Improves ||
        e.status == ImprovementStatus::ImprovesTruncated)
      os << e.s_max;
    os << '\n';
  }
  return os.str();
}

std::vector<CodeRecord> records_from_json(const std::string& json_text) {
  ordered_json parsed;
  try {
    parsed = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad records JSON: ") + e.what());
  }
  if (!parsed.is_array()) throw std::invalid_argument("records JSON must be an array");
  std::vector<CodeRecord> out;
  for (const auto& obj : parsed) {
    CodeRecord rec;
    rec.q = obj.at("q").get<int>();
    rec.n = obj.at("n").get<long long>();
    rec.k = obj.at("k").get<long long>();
    rec.d = obj.at("d").get<long long>();
    if (obj.contains("labels")) {
      std::string joined;
      for (const auto& label : obj.at("labels"))
        joined += "(" + label.get<std::string>() + ")";
      rec.label = joined;
    }
    if (obj.contains("derivation")) {
      for (const auto& step : obj.at("derivation")) {
        rec.derivation.push_back(
            {rule_from_string(step.at("rule").get<std::string>()),
             step.at("s").get<long long>()});
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace agcodes
