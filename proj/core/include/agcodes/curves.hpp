#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agcodes/semigroup.hpp"

namespace agcodes {

/// The five maximal-curve families over GF(q), q = q0^2:
///   A: X^{2m} + X^m + Y^{q0+1} = 0,   m | q0+1, m > 2, (q0+1)/m prime > 3
///   B: X^{2i+2} + X^{2i} + Y^{q0+1} = 0,   (q0+1)/2 prime > 3, 1 <= i <= (q0+1)/2 - 2
///   C: quotients of Y^{q0+1} = X^{q0} + X by an additive subgroup of order s
///   D: Y^m = X^{q0} + X,   m a proper divisor of q0+1
///   E: Y^{(q-1)/m} = X (X+1)^{q0-1},   m | q-1
enum class Family { A, B, C, D, E };

/// Family-C subgroup choices with a known plane model for the quotient.
enum class QuotientSubgroup {
  Trivial,      // s = 1; the unquotiented curve itself
  ZeroOne,      // s = 2, characteristic 2, H_s = {0, 1}
  TraceKernel,  // s = q0/2, characteristic 2
  F4Subfield,   // q0 = 16, s = 4, H_s = GF(4)
  Eigenspace,   // q0 = 9, s = 3, H_s = {x : x^3 = a x} for a of order 8
  Unspecified,  // parameter-level only, no plane model
};

struct FamilyParams {
  Family family = Family::D;
  int q0 = 0;
  int m = 0;  // families A, D, E
  int i = 0;  // family B
  int s = 0;  // family C
  QuotientSubgroup subgroup = QuotientSubgroup::Unspecified;

  int q() const { return q0 * q0; }

  /// Parses "A:q0=19,m=4", "B:q0=9,i=1", "C:q0=8,s=2", "D:q0=7,m=2",
  /// "E:q0=7,m=3". "H:q0=3" is shorthand for C:q0=3,s=1 (the unquotiented
  /// curve). For family C the subgroup is inferred from (q0, s) when one of
  /// the modeled subcases applies.
  static FamilyParams parse(const std::string& text);
  std::string to_string() const;
};

struct PointSemigroup {
  std::string label;     // "Pinf", "P1", "P2", "P3", "P"
  std::string code_tag;  // table tag such as "D2a"; empty if none
  NumericalSemigroup semigroup;
  bool exact;  // true: equals H(P); false: known to be contained in H(P)
};

/// Symbolic affine model y^{y_exp} = f(x) with a single point at infinity.
struct PlaneModelDesc {
  enum class Rhs {
    XPowQ0PlusX,      // x^{q0} + x
    HalvingPowerSum,  // x^{q0/2} + x^{q0/4} + ... + x^2 + x
    XSquarePlusX,     // x^2 + x
    XQuarticPlusX,    // x^4 + x
    EigenCubic,       // x^3 + a^3 x, a the least element of order 8 in GF(q)
  };
  Rhs rhs;
  int y_exp;   // y^{y_exp} = f(x); equals pole_x for every catalog model
  int pole_x;  // pole order of x at the point at infinity
  int pole_y;  // pole order of y at the point at infinity
};

class CurveInstance {
 public:
  CurveInstance(FamilyParams params, std::string name, long long genus,
                long long point_count, std::vector<PointSemigroup> points,
                std::optional<PlaneModelDesc> model)
      : params_(params),
        name_(std::move(name)),
        genus_(genus),
        point_count_(point_count),
        points_(std::move(points)),
        model_(std::move(model)) {}

  const FamilyParams& params() const { return params_; }
  /// Built-in name ("D2") when constructed from the catalog, otherwise the
  /// parameter syntax.
  const std::string& name() const { return name_; }
  long long genus() const { return genus_; }
  /// N = q + 1 + 2 g q0.
  long long point_count() const { return point_count_; }
  /// n = N - 1, the evaluation length used by every code built here.
  long long code_length() const { return point_count_ - 1; }
  const std::vector<PointSemigroup>& points() const { return points_; }
  const PointSemigroup& point(const std::string& label) const;
  const std::optional<PlaneModelDesc>& model() const { return model_; }

 private:
  FamilyParams params_;
  std::string name_;
  long long genus_;
  long long point_count_;
  std::vector<PointSemigroup> points_;
  std::optional<PlaneModelDesc> model_;
};

CurveInstance curve_make(const FamilyParams& params);

/// Non-gap values v = i*q0 - j*(q^2-1)/m <= value_bound obtained from pairs
/// i >= j*(q0+1)/m, for the point at infinity of a family-E curve.
std::vector<long long> epp_generators(int q0, int m, long long value_bound);

struct ValidationCheck {
  std::string name;
  bool pass;
  std::string detail;
};
struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const;
  std::string to_string() const;
};

ValidationReport validate_instance(const CurveInstance& inst);
/// Same checks on raw numbers; lets tests feed corrupted values.
ValidationReport validate_raw(int q0, long long genus, long long point_count,
                              const std::vector<PointSemigroup>& points);

/// Built-in instances B1, C1-C4, D1-D4, E1-E3.
const std::vector<std::string>& builtin_names();
/// Accepts a built-in name or FamilyParams::parse syntax.
CurveInstance make_instance(const std::string& name_or_params);

}  // namespace agcodes
