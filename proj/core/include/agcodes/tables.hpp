#pragma once

#include <string>
#include <vector>

#include "agcodes/codes.hpp"

namespace agcodes {

/// One published improvement row: a q-ary [n, k, d] code plus the shortening
/// depth s for which [n-i, k-i, d] still improved on the previously known
/// codes, tagged with the catalog codes attaining it.
struct ReferenceRow {
  int q;
  long long n, k, d, s;
  const char* tags[2];  // tags[1] is nullptr for singly-tagged rows

  std::vector<std::string> tag_list() const;
  std::string tags_string() const;  // "(D2a)(D2b)"
};

const std::vector<ReferenceRow>& reference_rows();
std::vector<ReferenceRow> reference_rows_for(int q);
const std::vector<int>& reference_qs();  // {49, 64, 81, 256}

struct CodeTag {
  std::string tag;       // "D2a"
  std::string instance;  // "D2"
  std::string point;     // "Pinf"
};
const std::vector<CodeTag>& code_tags();
const CodeTag& code_tag(const std::string& tag);

/// Root records (one per row) for the reference table of one q. With
/// published_k the shipped k column is used verbatim; otherwise k is
/// recomputed as n - r_d from the tagged semigroup.
std::vector<CodeRecord> reference_records(int q, bool published_k);

/// Renders the reference table for one q. Row skeleton (n, d, s, tags) comes
/// from the shipped data; the k column is recomputed from the curve catalog
/// unless published_k is set.
std::string render_reference_table(int q, TableFormat format, bool published_k);

}  // namespace agcodes
