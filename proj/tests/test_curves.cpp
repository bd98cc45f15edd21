#include "agcodes/curves.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "doctest.h"

using namespace agcodes;

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

std::vector<int> prime_powers_up_to(int bound) {
  std::vector<int> out;
  for (int p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    for (long long v = p; v <= bound; v *= p) out.push_back(static_cast<int>(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("family parameter validation") {
  CHECK_THROWS_AS(curve_make(FamilyParams::parse("A:q0=9,m=2")), std::invalid_argument);
  CHECK_THROWS_AS(curve_make(FamilyParams::parse("A:q0=19,m=5")), std::invalid_argument);
  CHECK_NOTHROW(curve_make(FamilyParams::parse("A:q0=19,m=4")));

  CHECK_THROWS_AS(curve_make(FamilyParams::parse("B:q0=9,i=0")), std::invalid_argument);
  CHECK_THROWS_AS(curve_make(FamilyParams::parse("B:q0=9,i=4")), std::invalid_argument);
  CHECK_THROWS_AS(curve_make(FamilyParams::parse("B:q0=7,i=1")), std::invalid_argument);
  CHECK_NOTHROW(curve_make(FamilyParams::parse("B:q0=9,i=3")));

  CHECK_THROWS_AS(curve_make(FamilyParams::parse("C:q0=9,s=6")), std::invalid_argument);
  CHECK_THROWS_AS(curve_make(FamilyParams::parse("C:q0=16,s=3")), std::invalid_argument);
  CHECK_NOTHROW(curve_make(FamilyParams::parse("C:q0=9,s=9")));

  CHECK_THROWS_AS(curve_make(FamilyParams::parse("D:q0=7,m=8")), std::invalid_argument);
  CHECK_THROWS_AS(curve_make(FamilyParams::parse("D:q0=7,m=3")), std::invalid_argument);
  CHECK_NOTHROW(curve_make(FamilyParams::parse("D:q0=7,m=1")));

  CHECK_THROWS_AS(curve_make(FamilyParams::parse("E:q0=7,m=5")), std::invalid_argument);
  CHECK_NOTHROW(curve_make(FamilyParams::parse("E:q0=7,m=48")));

  CHECK_THROWS_AS(curve_make(FamilyParams::parse("D:q0=6,m=1")), std::invalid_argument);
  CHECK_THROWS_AS(curve_make(FamilyParams::parse("D:q0=512,m=3")), std::invalid_argument);
}

TEST_CASE("parameter syntax") {
  const FamilyParams p = FamilyParams::parse("D:q0=7,m=2");
  CHECK(p.family == Family::D);
  CHECK(p.q0 == 7);
  CHECK(p.m == 2);
  CHECK(p.to_string() == "D:q0=7,m=2");

  const FamilyParams h = FamilyParams::parse("H:q0=3");
  CHECK(h.family == Family::C);
  CHECK(h.s == 1);
  CHECK(h.subgroup == QuotientSubgroup::Trivial);

  CHECK(FamilyParams::parse("C:q0=8,s=2").subgroup == QuotientSubgroup::ZeroOne);
  CHECK(FamilyParams::parse("C:q0=16,s=8").subgroup == QuotientSubgroup::TraceKernel);
  CHECK(FamilyParams::parse("C:q0=16,s=4").subgroup == QuotientSubgroup::F4Subfield);
  CHECK(FamilyParams::parse("C:q0=9,s=3").subgroup == QuotientSubgroup::Eigenspace);
  CHECK(FamilyParams::parse("C:q0=9,s=9").subgroup == QuotientSubgroup::Unspecified);

  CHECK_THROWS_AS(FamilyParams::parse("Z:q0=3"), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParams::parse("D:q0=7"), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParams::parse("D:q0=7,m=2,s=1"), std::invalid_argument);
  CHECK_THROWS_AS(FamilyParams::parse("D"), std::invalid_argument);
  CHECK_THROWS_AS(make_instance("D9"), std::invalid_argument);
}

TEST_CASE("built-in instances carry the expected data") {
  struct Expected {
    const char* name;
    int q;
    long long g, n_points;
    std::vector<std::vector<long long>> semigroups;  // minimal generators per point
  };
  const std::vector<Expected> table = {
      {"B1", 81, 8, 226, {{5, 8, 9}, {5, 7, 9}}},
      {"C1", 64, 12, 257, {{4, 9}, {7, 8, 9}}},
      {"C2", 256, 8, 513, {{2, 17}, {9, 10, 11, 12, 13, 14, 15, 16, 17}}},
      {"C3", 256, 24, 1025, {{4, 17}}},
      {"C4", 81, 9, 244, {{3, 10}}},
      {"D1", 49, 9, 176, {{4, 7}, {6, 7, 8}}},
      {"D2", 49, 3, 92, {{2, 7}, {4, 5, 6, 7}}},
      {"D3", 64, 7, 177, {{3, 8}, {6, 7, 8, 9}}},
      {"D4", 81, 16, 370, {{5, 9}, {8, 9, 10}}},
      {"E1", 49, 7, 148, {{5, 7, 8}}},
      {"E2", 81, 8, 226, {{5, 7, 9}}},
      {"E3", 256, 24, 1025, {{10, 13, 16, 17}}},
  };
  REQUIRE(builtin_names().size() == table.size());
  for (const auto& exp : table) {
    const CurveInstance inst = make_instance(exp.name);
    CAPTURE(exp.name);
    CHECK(inst.params().q() == exp.q);
    CHECK(inst.genus() == exp.g);
    CHECK(inst.point_count() == exp.n_points);
    CHECK(inst.code_length() == exp.n_points - 1);
    REQUIRE(inst.points().size() == exp.semigroups.size());
    for (std::size_t i = 0; i < exp.semigroups.size(); ++i) {
      CHECK(inst.points()[i].semigroup.minimal_generators() == exp.semigroups[i]);
      CHECK(inst.points()[i].exact);
    }
    CHECK(validate_instance(inst).all_pass());
  }
}

TEST_CASE("point labels and tags") {
  const CurveInstance d2 = make_instance("D2");
  CHECK(d2.points()[0].label == "Pinf");
  CHECK(d2.points()[0].code_tag == "D2a");
  CHECK(d2.point("P2").code_tag == "D2b");
  CHECK_THROWS_AS(d2.point("P3"), std::invalid_argument);

  const CurveInstance b1 = make_instance("B1");
  CHECK(b1.point("P3").code_tag == "B1");
  CHECK(b1.point("P1").code_tag.empty());

  // same curve built from raw parameters carries no tags
  CHECK(make_instance("D:q0=7,m=2").point("Pinf").code_tag.empty());
}

TEST_CASE("family B semigroups at i = 1") {
  const CurveInstance inst = curve_make(FamilyParams::parse("B:q0=9,i=1"));
  REQUIRE(inst.points().size() == 2);
  CHECK(inst.points()[0].label == "P1");
  CHECK(inst.points()[0].semigroup.minimal_generators() ==
        std::vector<long long>{5, 8, 9});
  CHECK(inst.points()[1].label == "P3");
  CHECK(inst.points()[1].semigroup.minimal_generators() ==
        std::vector<long long>{5, 7, 9});
  CHECK(inst.genus() == 8);
}

TEST_CASE("family B containment sets for i > 1") {
  for (int i : {2, 3}) {
    const CurveInstance inst = curve_make(FamilyParams::parse(
        "B:q0=9,i=" + std::to_string(i)));
    REQUIRE(inst.points().size() == 3);
    for (const auto& pt : inst.points()) {
      CHECK(!pt.exact);
      CHECK(pt.semigroup.contains(9));
      CHECK(pt.semigroup.contains(10));
      // containment: the semigroup cannot have fewer gaps than the curve
      CHECK(pt.semigroup.genus() >= inst.genus());
    }
  }
}

TEST_CASE("family-wide genus identities") {
  const auto q0s = prime_powers_up_to(256);

  // family A: the generated semigroup has exactly m(q0-2)/2 + 1 gaps
  for (int q0 : q0s) {
    for (int m = 3; m <= q0 + 1; ++m) {
      if ((q0 + 1) % m != 0) continue;
      const int delta = (q0 + 1) / m;
      if (delta <= 3 || !is_prime(delta)) continue;
      FamilyParams params;
      params.family = Family::A;
      params.q0 = q0;
      params.m = m;
      const CurveInstance inst = curve_make(params);
      CAPTURE(q0);
      CAPTURE(m);
      CHECK(inst.points()[0].semigroup.genus() == static_cast<long long>(m) * (q0 - 2) / 2 + 1);
      CHECK(inst.point_count() ==
            static_cast<long long>(q0) * q0 + 1 + 2 * inst.genus() * q0);
    }
  }

  // family B, i = 1: both semigroups have q0 - 1 gaps
  for (int q0 : q0s) {
    if (q0 % 2 == 0) continue;
    const int delta = (q0 + 1) / 2;
    if (delta <= 3 || !is_prime(delta)) continue;
    FamilyParams params;
    params.family = Family::B;
    params.q0 = q0;
    params.i = 1;
    const CurveInstance inst = curve_make(params);
    CAPTURE(q0);
    for (const auto& pt : inst.points()) CHECK(pt.semigroup.genus() == q0 - 1);
  }

  // family D: both semigroups have (q0-1)(m-1)/2 gaps
  for (int q0 : q0s) {
    for (int m = 1; m <= q0; ++m) {
      if ((q0 + 1) % m != 0) continue;
      FamilyParams params;
      params.family = Family::D;
      params.q0 = q0;
      params.m = m;
      const CurveInstance inst = curve_make(params);
      CAPTURE(q0);
      CAPTURE(m);
      const long long g = static_cast<long long>(q0 - 1) * (m - 1) / 2;
      CHECK(inst.genus() == g);
      for (const auto& pt : inst.points()) CHECK(pt.semigroup.genus() == g);
    }
  }
}

TEST_CASE("epp_generators enumerates the stated non-gaps") {
  const auto e1 = epp_generators(7, 3, 40);
  for (long long v : {0, 5, 7, 8}) CHECK(std::count(e1.begin(), e1.end(), v) == 1);
  CHECK(!std::count(e1.begin(), e1.end(), 1));
  CHECK(!std::count(e1.begin(), e1.end(), 6));

  const auto e3 = epp_generators(16, 5, 100);
  for (long long v : {10, 13, 16, 17}) CHECK(std::count(e3.begin(), e3.end(), v) == 1);

  // j = 0 contributes every multiple of q0 up to the bound
  for (long long v = 0; v <= 40; v += 7) CHECK(std::count(e1.begin(), e1.end(), v) == 1);

  CHECK(std::is_sorted(e1.begin(), e1.end()));
  CHECK_THROWS_AS(epp_generators(7, 5, 40), std::invalid_argument);
}

TEST_CASE("family E semigroups match the genus formula") {
  struct Case {
    const char* name;
    std::vector<long long> gens;
    long long genus;
  };
  for (const Case& c : {Case{"E1", {5, 7, 8}, 7}, Case{"E2", {5, 7, 9}, 8},
                        Case{"E3", {10, 13, 16, 17}, 24}}) {
    const CurveInstance inst = make_instance(c.name);
    const auto& pt = inst.point("Pinf");
    CHECK(pt.semigroup.minimal_generators() == c.gens);
    CHECK(pt.semigroup.genus() == c.genus);
    CHECK(inst.genus() == c.genus);
    CHECK(pt.exact);
  }
}

TEST_CASE("catalog semigroups have conductor at most 2g") {
  for (const auto& name : builtin_names()) {
    const CurveInstance inst = make_instance(name);
    for (const auto& pt : inst.points()) {
      const auto& s = pt.semigroup;
      CHECK(s.conductor() <= 2 * s.genus());
      // c = 2g exactly when the largest gap is 2g - 1
      if (!s.gaps().empty())
        CHECK((s.conductor() == 2 * s.genus()) ==
              (s.gaps().back() == 2 * s.genus() - 1));
      // two-generated ones are symmetric
      if (s.minimal_generators().size() == 2) CHECK(s.conductor() == 2 * s.genus());
    }
  }
}

TEST_CASE("the same semigroup shows up on different curves") {
  const CurveInstance b1 = make_instance("B1");
  const CurveInstance e2 = make_instance("E2");
  CHECK(b1.point("P3").semigroup == e2.point("Pinf").semigroup);
  CHECK(b1.code_length() == e2.code_length());
}

TEST_CASE("validation reports") {
  const CurveInstance d1 = make_instance("D1");
  const ValidationReport good = validate_instance(d1);
  CHECK(good.all_pass());
  CHECK(validate_instance(make_instance("C2")).all_pass());

  // corrupted genus breaks the maximality identity
  const ValidationReport bad = validate_raw(7, d1.genus() + 1, d1.point_count(),
                                            d1.points());
  CHECK(!bad.all_pass());
  bool maximality_failed = false;
  for (const auto& check : bad.checks)
    if (!check.pass && check.name.find("maximality") != std::string::npos)
      maximality_failed = true;
  CHECK(maximality_failed);
}

TEST_CASE("plane model descriptors") {
  CHECK(make_instance("D2").model().has_value());
  CHECK(make_instance("C1").model().has_value());
  CHECK(make_instance("C2").model().has_value());
  CHECK(make_instance("C3").model().has_value());
  CHECK(make_instance("C4").model().has_value());
  CHECK(make_instance("H:q0=2").model().has_value());
  CHECK(!make_instance("B1").model().has_value());
  CHECK(!make_instance("E1").model().has_value());
  CHECK(!make_instance("A:q0=19,m=4").model().has_value());
  CHECK(!make_instance("C:q0=9,s=9").model().has_value());

  const auto& d3 = *make_instance("D3").model();
  CHECK(d3.y_exp == 3);
  CHECK(d3.pole_x == 3);
  CHECK(d3.pole_y == 8);
  CHECK(std::gcd(d3.pole_x, d3.pole_y) == 1);

  const auto& c1 = *make_instance("C1").model();
  CHECK(c1.y_exp == 9);
  CHECK(c1.pole_x == 9);
  CHECK(c1.pole_y == 4);
}
