#pragma once

#include <string>
#include <utility>
#include <vector>

#include "agcodes/curves.hpp"
#include "agcodes/gf.hpp"
#include "agcodes/semigroup.hpp"

namespace agcodes {

/// A concrete affine model y^{y_exp} = rhs(x) over GF(q) with a single point
/// at infinity, where x has pole order pole_x and y pole order pole_y there.
/// rhs[e] is the element index multiplying x^e. gcd(pole_x, pole_y) = 1 and
/// <pole_x, pole_y> is the Weierstrass semigroup at infinity.
struct PlaneModel {
  Field field;
  std::vector<int> rhs;
  int y_exp;
  int pole_x, pole_y;
  int q0;
  long long genus;
  long long expected_affine_points;  // N - 1
  NumericalSemigroup semigroup;      // <pole_x, pole_y>
  std::string name;
};

/// Materializes the instance's plane model over GF(q); throws
/// std::domain_error when the instance carries none.
PlaneModel build_model(const CurveInstance& inst);

/// Affine rational points as (x, y) element indices, ordered by x in field
/// enumeration order, then by y.
struct EvaluationSet {
  std::vector<std::pair<int, int>> points;
  long long size() const { return static_cast<long long>(points.size()); }
};

/// Full scan of GF(q)^2; checks the count against N - 1 and that no point is
/// singular on the affine model.
EvaluationSet enumerate_points(const PlaneModel& model);

/// Exponents (a, b) of the canonical monomial x^a y^b with pole order
/// a*pole_x + b*pole_y = rho and 0 <= b < y_exp; throws for gaps.
std::pair<long long, long long> monomial_for(const PlaneModel& model, long long rho);

/// Evaluations of the canonical monomial of pole order rho at the points.
std::vector<int> h_vector(const PlaneModel& model, const EvaluationSet& pts,
                          long long rho);

struct CheckMatrix {
  long long n = 0;
  std::vector<long long> pole_orders;   // one per row
  std::vector<std::vector<int>> rows;   // element indices
};

/// Rows h(rho_{i+1}) for exactly the indices i with nu_i < d.
CheckMatrix build_check_matrix(const PlaneModel& model, const EvaluationSet& pts,
                               const NumericalSemigroup& S, long long d);

/// Row rank by Gaussian elimination; pivots chosen as the first nonzero
/// column, lowest row index.
long long gf_rank(const Field& field, std::vector<std::vector<int>> rows);

/// n - rank(M): the exact dimension of the code cut out by M.
long long code_dim(const Field& field, const CheckMatrix& M);

/// Basis of the null space of M (the codewords), deterministic.
std::vector<std::vector<int>> null_space(const Field& field, const CheckMatrix& M);

/// Exact minimum Hamming weight over all nonzero codewords, by full
/// message-space enumeration over a computed generator basis (one scaling
/// representative per codeword line). Requires q^k <= budget and k >= 1.
long long min_distance_exhaustive(const Field& field, const CheckMatrix& M,
                                  long long budget = 10000000);

struct VerifyReport {
  long long n = 0;
  long long k_expected = 0;          // n - r_d
  long long k_actual = 0;            // n - rank of the check matrix
  long long d_design = 0;
  long long d_actual_or_bound = 0;   // exact distance when computed, else d
  bool distance_exact = false;
  std::string status;                // "ok" or a failure description
};

/// End-to-end check of one instance at design distance d: point enumeration,
/// check-matrix rank against r_d, and optionally the exhaustive distance.
VerifyReport verify_instance(const CurveInstance& inst, long long d,
                             bool exhaustive_distance, long long budget = 10000000);

std::string verify_report_json(const VerifyReport& report);

}  // namespace agcodes
