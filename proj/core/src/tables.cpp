#include "agcodes/tables.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "agcodes/curves.hpp"

namespace agcodes {

// defined in codes.cpp
std::string table_from_rows(const std::vector<std::tuple<CodeRecord, long long>>& rows,
                            TableFormat format);

std::vector<std::string> ReferenceRow::tag_list() const {
  std::vector<std::string> out = {tags[0]};
  if (tags[1]) out.emplace_back(tags[1]);
  return out;
}

std::string ReferenceRow::tags_string() const {
  std::string out = std::string("(") + tags[0] + ")";
  if (tags[1]) out += std::string("(") + tags[1] + ")";
  return out;
}

std::vector<ReferenceRow> reference_rows_for(int q) {
  std::vector<ReferenceRow> out;
  for (const auto& row : reference_rows())
    if (row.q == q) out.push_back(row);
  if (out.empty())
    throw std::invalid_argument("no reference table for q = " + std::to_string(q));
  return out;
}

const std::vector<int>& reference_qs() {
  static const std::vector<int> qs = [] {
    std::vector<int> out;
    for (const auto& row : reference_rows())
      if (out.empty() || out.back() != row.q) out.push_back(row.q);
    return out;
  }();
  return qs;
}

const std::vector<CodeTag>& code_tags() {
  static const std::vector<CodeTag> tags = {
      {"B1", "B1", "P3"},
      {"C1a", "C1", "Pinf"}, {"C1b", "C1", "P2"},
      {"C2", "C2", "Pinf"},
      {"C3", "C3", "Pinf"},
      {"C4", "C4", "Pinf"},
      {"D1a", "D1", "Pinf"}, {"D1b", "D1", "P2"},
      {"D2a", "D2", "Pinf"}, {"D2b", "D2", "P2"},
      {"D3a", "D3", "Pinf"}, {"D3b", "D3", "P2"},
      {"D4a", "D4", "Pinf"}, {"D4b", "D4", "P2"},
      {"E1", "E1", "Pinf"}, {"E2", "E2", "Pinf"}, {"E3", "E3", "Pinf"},
  };
  return tags;
}

const CodeTag& code_tag(const std::string& tag) {
  for (const auto& t : code_tags())
    if (t.tag == tag) return t;
  throw std::invalid_argument("unknown code tag '" + tag + "'");
}

namespace {

// One catalog instance per referenced curve, built once.
const CurveInstance& cached_instance(const std::string& name) {
  static std::map<std::string, CurveInstance> cache = [] {
    std::map<std::string, CurveInstance> out;
    for (const auto& t : code_tags())
      out.try_emplace(t.instance, make_instance(t.instance));
    return out;
  }();
  return cache.at(name);
}

}  // namespace

std::vector<CodeRecord> reference_records(int q, bool published_k) {
  std::vector<CodeRecord> out;
  for (const auto& row : reference_rows_for(q)) {
    CodeRecord rec;
    rec.q = row.q;
    rec.n = row.n;
    rec.d = row.d;
    rec.label = row.tags_string();
    if (published_k) {
      rec.k = row.k;
    } else {
      // recompute from each tagged semigroup; shared tags must agree
      long long k = -1;
      for (const auto& tag : row.tag_list()) {
        const CodeTag& info = code_tag(tag);
        const CurveInstance& inst = cached_instance(info.instance);
        const CodeRecord computed =
            improved_params(inst.point(info.point).semigroup, row.n, row.d, row.q);
        if (k >= 0 && k != computed.k)
          throw std::logic_error("tagged semigroups disagree on row " +
                                 rec.params_string());
        k = computed.k;
      }
      rec.k = k;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::string render_reference_table(int q, TableFormat format, bool published_k) {
  const auto rows = reference_rows_for(q);
  const auto records = reference_records(q, published_k);
  std::vector<std::tuple<CodeRecord, long long>> with_s;
  with_s.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    with_s.emplace_back(records[i], rows[i].s);
  return table_from_rows(with_s, format);
}

}  // namespace agcodes
