#include "agcodes/codes.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "agcodes/curves.hpp"
#include "agcodes/tables.hpp"
#include "doctest.h"

using namespace agcodes;

TEST_CASE("improved_params anchor values") {
  CHECK(improved_params(NumericalSemigroup({2, 7}), 91, 9, 49).params_string() ==
        "[91, 80, 9]");
  CHECK(improved_params(NumericalSemigroup({4, 5, 6, 7}), 91, 9, 49).k == 80);
  CHECK(improved_params(NumericalSemigroup({5, 7, 8}), 147, 12, 49).k == 129);
  CHECK(improved_params(NumericalSemigroup({6, 7, 8}), 175, 13, 49).k == 155);
  CHECK(improved_params(NumericalSemigroup({4, 7}), 175, 14, 49).k == 154);
  CHECK(improved_params(NumericalSemigroup({3, 8}), 176, 12, 64).k == 159);
  CHECK(improved_params(NumericalSemigroup({6, 7, 8, 9}), 176, 10, 64).k == 162);
  CHECK(improved_params(NumericalSemigroup({4, 9}), 256, 15, 64).k == 232);
  CHECK(improved_params(NumericalSemigroup({5, 7, 9}), 225, 12, 81).k == 207);
  CHECK(improved_params(NumericalSemigroup({3, 10}), 243, 12, 81).k == 225);
  CHECK(improved_params(NumericalSemigroup({5, 9}), 369, 18, 81).k == 339);
  // the <2,17> and <4,17> codes follow the same arithmetic as every other
  // semigroup: k = n - r_d
  CHECK(improved_params(NumericalSemigroup({2, 17}), 512, 14, 256).k == 493);
  CHECK(improved_params(NumericalSemigroup({4, 17}), 1024, 27, 256).k == 978);
}

TEST_CASE("improved_params rejects infeasible design distances") {
  CHECK_THROWS_AS(improved_params(NumericalSemigroup({2, 3}), 8, 8, 4),
                  std::domain_error);
  CHECK_THROWS_AS(improved_params(NumericalSemigroup({2, 7}), 91, 1, 49),
                  std::invalid_argument);
  CHECK_NOTHROW(improved_params(NumericalSemigroup({2, 3}), 8, 7, 4));
}

TEST_CASE("max_feasible_distance brackets the k >= 1 boundary") {
  const NumericalSemigroup s({2, 3});
  const long long dmax = max_feasible_distance(s, 8);
  CHECK(dmax == 7);
  CHECK(improved_params(s, 8, dmax, 4).k >= 1);
  CHECK_THROWS_AS(improved_params(s, 8, dmax + 1, 4), std::domain_error);
}

TEST_CASE("propagation rules") {
  CodeRecord root;
  root.q = 49;
  root.n = 91;
  root.k = 80;
  root.d = 9;

  const CodeRecord shortened = propagate(root, PropagationRule::Shorten, 10);
  CHECK(shortened.n == 81);
  CHECK(shortened.k == 70);
  CHECK(shortened.d == 9);
  REQUIRE(shortened.derivation.size() == 1);
  CHECK(rule_to_string(shortened.derivation[0].rule) == "iii");

  const CodeRecord weaker = propagate(root, PropagationRule::ReduceDistance, 3);
  CHECK(weaker.n == 91);
  CHECK(weaker.k == 80);
  CHECK(weaker.d == 6);

  const CodeRecord smaller = propagate(root, PropagationRule::ReduceDimension, 5);
  CHECK(smaller.k == 75);
  CHECK(smaller.n == 91);
  CHECK(smaller.d == 9);

  const CodeRecord untouched = propagate(root, PropagationRule::Shorten, 0);
  CHECK(untouched.n == root.n);
  CHECK(untouched.derivation.size() == 1);

  CHECK_THROWS_AS(propagate(root, PropagationRule::ReduceDistance, 9), std::domain_error);
  CHECK_THROWS_AS(propagate(root, PropagationRule::ReduceDimension, 80), std::domain_error);
  CHECK_THROWS_AS(propagate(root, PropagationRule::Shorten, 80), std::domain_error);
  CHECK_THROWS_AS(propagate(root, PropagationRule::Shorten, -1), std::domain_error);
}

TEST_CASE("derivation replay") {
  CodeRecord root;
  root.q = 256;
  root.n = 512;
  root.k = 495;
  root.d = 14;
  CodeRecord rec = propagate(propagate(root, PropagationRule::Shorten, 100),
                             PropagationRule::ReduceDistance, 2);
  CHECK(derivation_replays(root, rec));
  rec.k -= 1;
  CHECK(!derivation_replays(root, rec));
}

TEST_CASE("reference rows: shape and internal arithmetic") {
  const auto& rows = reference_rows();
  CHECK(rows.size() == 222);
  std::map<int, int> per_q;
  for (const auto& row : rows) {
    ++per_q[row.q];
    CHECK(row.s < row.k);  // rule iii applies
    CHECK(row.k >= 1);
    CHECK(row.d >= 2);
    for (const auto& tag : row.tag_list()) CHECK_NOTHROW(code_tag(tag));
  }
  CHECK(per_q[49] == 119);
  CHECK(per_q[64] == 11);
  CHECK(per_q[81] == 17);
  CHECK(per_q[256] == 75);
  CHECK(reference_qs() == std::vector<int>{49, 64, 81, 256});
  CHECK_THROWS_AS(reference_rows_for(121), std::invalid_argument);
}

TEST_CASE("rows tagged with two codes get the same k from both semigroups") {
  for (const auto& row : reference_rows()) {
    const auto tags = row.tag_list();
    if (tags.size() < 2) continue;
    std::set<long long> ks;
    for (const auto& tag : tags) {
      const CodeTag& info = code_tag(tag);
      const CurveInstance inst = make_instance(info.instance);
      ks.insert(improved_params(inst.point(info.point).semigroup, row.n, row.d,
                                row.q).k);
    }
    CAPTURE(row.n);
    CAPTURE(row.d);
    CHECK(ks.size() == 1);
  }
}

TEST_CASE("k is nonincreasing in d and drops by the nu multiplicity") {
  const NumericalSemigroup s({2, 7});
  const long long n = 91;
  for (long long d = 2; d < 50; ++d) {
    const long long k1 = improved_params(s, n, d, 49).k;
    const long long k2 = improved_params(s, n, d + 1, 49).k;
    CHECK(k2 <= k1);
    long long multiplicity = 0;
    for (long long ell = 0; ell <= 2 * s.conductor() + d + 1 + s.genus(); ++ell)
      if (s.nu(ell) == d) ++multiplicity;
    CHECK(k1 - k2 == multiplicity);
  }
}

TEST_CASE("tail linearity: k = n - (d + g - 1) once nu has stabilized") {
  const NumericalSemigroup s({2, 7});
  for (long long d = 9; d <= 53; ++d)
    CHECK(improved_params(s, 91, d, 49).k == 91 - (d + s.genus() - 1));
}

TEST_CASE("generic table emission") {
  const std::vector<TableInstance> instances = {
      {"(D2a)", NumericalSemigroup({2, 7}), 91, 49}};
  const std::string csv = emit_table(instances, 9, 53, TableFormat::Csv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "q,n,k,d,labels,s_max");
  long long rows = 0, expect_k = 80, expect_d = 9;
  while (std::getline(in, line)) {
    CHECK(line == "49,91," + std::to_string(expect_k) + "," +
                      std::to_string(expect_d) + ",(D2a),");
    --expect_k;
    ++expect_d;
    ++rows;
  }
  CHECK(rows == 45);  // d in [9, 53], k = 89 - d

  CHECK(emit_table({}, {}, {}, TableFormat::Csv) == "q,n,k,d,labels,s_max\n");
  const std::string md = emit_table({}, {}, {}, TableFormat::Markdown);
  CHECK(md.rfind("| n | k | d |", 0) == 0);

  // byte determinism
  CHECK(emit_table(instances, 9, 53, TableFormat::Json) ==
        emit_table(instances, 9, 53, TableFormat::Json));
}

TEST_CASE("emission order is (q, n, descending k)") {
  const std::vector<TableInstance> instances = {
      {"(B)", NumericalSemigroup({3, 4}), 26, 9},
      {"(A)", NumericalSemigroup({2, 3}), 8, 4},
  };
  const std::string csv = emit_table(instances, 3, 4, TableFormat::Csv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0].rfind("4,8,5,3", 0) == 0);   // q=4 first
  CHECK(lines[1].rfind("4,8,4,4", 0) == 0);   // then descending k
  CHECK(lines[2].rfind("9,26,", 0) == 0);
}

TEST_CASE("reference table rendering recomputes k in agreement where sound") {
  // over GF(64) every published row reproduces, so computed == published
  CHECK(render_reference_table(64, TableFormat::Csv, false) ==
        render_reference_table(64, TableFormat::Csv, true));
  // deterministic bytes
  CHECK(render_reference_table(256, TableFormat::Csv, false) ==
        render_reference_table(256, TableFormat::Csv, false));
}

TEST_CASE("reference records round-trip through JSON") {
  const std::string json = render_reference_table(81, TableFormat::Json, false);
  const auto parsed = records_from_json(json);
  const auto direct = reference_records(81, false);
  REQUIRE(parsed.size() == direct.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i].q == direct[i].q);
    CHECK(parsed[i].n == direct[i].n);
    CHECK(parsed[i].k == direct[i].k);
    CHECK(parsed[i].d == direct[i].d);
    CHECK(parsed[i].label == direct[i].label);
    // root records replay trivially
    CHECK(parsed[i].derivation.empty());
    CHECK(derivation_replays(direct[i], parsed[i]));
  }
  CHECK_THROWS_AS(records_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(records_from_json("{}"), std::invalid_argument);
}

TEST_CASE("baseline CSV loading") {
  std::istringstream good("q,n,k,d_best\n49,91,80,8\n49,90,79,8\n");
  const BaselineTable table = BaselineTable::load_csv(good);
  CHECK(table.size() == 2);
  CHECK(table.best_distance(49, 91, 80) == 8);
  CHECK(!table.best_distance(49, 91, 79).has_value());

  std::istringstream no_header("49,91,80,8\n");
  CHECK_THROWS_AS(BaselineTable::load_csv(no_header), std::invalid_argument);

  std::istringstream bad_int("q,n,k,d_best\n49,91,80,8\n49,xx,79,8\n");
  CHECK_THROWS_WITH_AS(BaselineTable::load_csv(bad_int),
                       doctest::Contains("line 3"), std::invalid_argument);

  std::istringstream short_row("q,n,k,d_best\n49,91,80\n");
  CHECK_THROWS_AS(BaselineTable::load_csv(short_row), std::invalid_argument);

  std::istringstream nonpositive("q,n,k,d_best\n49,91,80,0\n");
  CHECK_THROWS_AS(BaselineTable::load_csv(nonpositive), std::invalid_argument);

  std::istringstream empty("");
  CHECK_THROWS_AS(BaselineTable::load_csv(empty), std::invalid_argument);
}

TEST_CASE("baseline comparison statuses") {
  CodeRecord rec;
  rec.q = 49;
  rec.n = 91;
  rec.k = 80;
  rec.d = 9;
  rec.label = "(D2a)(D2b)";

  SUBCASE("improvement depth stops where the baseline catches up") {
    BaselineTable baseline;
    for (long long i = 0; i <= 10; ++i) baseline.set(49, 91 - i, 80 - i, 8);
    baseline.set(49, 91 - 11, 80 - 11, 9);
    const auto report = compare_baseline({rec}, baseline);
    REQUIRE(report.size() == 1);
    CHECK(report[0].status == ImprovementStatus::Improves);
    CHECK(report[0].s_max == 10);
  }

  SUBCASE("missing cell at i = 0 is unknown") {
    const auto report = compare_baseline({rec}, BaselineTable{});
    CHECK(report[0].status == ImprovementStatus::Unknown);
  }

  SUBCASE("baseline at least d at i = 0 is non-improving") {
    BaselineTable baseline;
    baseline.set(49, 91, 80, 9);
    const auto report = compare_baseline({rec}, baseline);
    CHECK(report[0].status == ImprovementStatus::NonImproving);
  }

  SUBCASE("missing cell deeper in truncates the scan") {
    BaselineTable baseline;
    for (long long i = 0; i <= 4; ++i) baseline.set(49, 91 - i, 80 - i, 8);
    const auto report = compare_baseline({rec}, baseline);
    CHECK(report[0].status == ImprovementStatus::ImprovesTruncated);
    CHECK(report[0].s_max == 4);
  }

  SUBCASE("scan exhausting the shortening range is complete") {
    CodeRecord tiny;
    tiny.q = 4;
    tiny.n = 8;
    tiny.k = 3;
    tiny.d = 5;
    tiny.label = "(T)";
    BaselineTable baseline;
    for (long long i = 0; i < 3; ++i) baseline.set(4, 8 - i, 3 - i, 4);
    const auto report = compare_baseline({tiny}, baseline);
    CHECK(report[0].status == ImprovementStatus::Improves);
    CHECK(report[0].s_max == 2);
  }
}

TEST_CASE("improvement report rendering") {
  CodeRecord rec;
  rec.q = 49;
  rec.n = 91;
  rec.k = 80;
  rec.d = 9;
  rec.label = "(D2a)(D2b)";
  BaselineTable baseline;
  baseline.set(49, 91, 80, 8);
  const std::string report = render_improvement_report(compare_baseline({rec}, baseline));
  CHECK(report ==
        "q,n,k,d,labels,status,s_max\n"
        "49,91,80,9,(D2a)(D2b),improves-truncated,0\n");
}
