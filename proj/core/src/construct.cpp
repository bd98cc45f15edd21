#include "agcodes/construct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "agcodes/codes.hpp"

namespace agcodes {

namespace {

int prime_power_degree(int q0, int p) {
  int e = 0, n = q0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) throw std::logic_error("q0 is not a power of the characteristic");
  return e;
}

int char_of(int q0) {
  for (int f = 2; f * f <= q0; ++f)
    if (q0 % f == 0) return f;
  return q0;
}

// rhs coefficients as element indices; prime-subfield scalars have index
// equal to their residue
std::vector<int> materialize_rhs(const PlaneModelDesc& desc, const Field& field, int q0) {
  std::vector<int> rhs;
  auto set = [&rhs](int exp, int coeff) {
    if (static_cast<int>(rhs.size()) <= exp) rhs.resize(exp + 1, 0);
    rhs[exp] = coeff;
  };
  switch (desc.rhs) {
    case PlaneModelDesc::Rhs::XPowQ0PlusX:
      set(q0, 1);
      set(1, 1);
      break;
    case PlaneModelDesc::Rhs::HalvingPowerSum:
      for (int e = q0 / 2; e >= 1; e /= 2) set(e, 1);
      break;
    case PlaneModelDesc::Rhs::XSquarePlusX:
      set(2, 1);
      set(1, 1);
      break;
    case PlaneModelDesc::Rhs::XQuarticPlusX:
      set(4, 1);
      set(1, 1);
      break;
    case PlaneModelDesc::Rhs::EigenCubic: {
      const int alpha = field.element_of_mult_order(8);
      set(3, 1);
      set(1, field.pow(alpha, 3));
      break;
    }
  }
  return rhs;
}

int eval_poly(const Field& field, const std::vector<int>& coeffs, int x) {
  int acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = field.add(field.mul(acc, x), *it);
  return acc;
}

std::vector<int> derivative(const Field& field, const std::vector<int>& coeffs) {
  std::vector<int> out;
  const int p = field.characteristic();
  for (std::size_t e = 1; e < coeffs.size(); ++e) {
    const int scalar = static_cast<int>(e % p);
    out.push_back(field.mul(scalar, coeffs[e]));
  }
  return out;
}

long long ipow_capped(long long base, long long exp, long long cap) {
  long long v = 1;
  for (long long t = 0; t < exp; ++t) {
    v *= base;
    if (v > cap) return cap + 1;
  }
  return v;
}

}  // namespace

PlaneModel build_model(const CurveInstance& inst) {
  if (!inst.model())
    throw std::domain_error("instance " + inst.name() + " has no plane model");
  const PlaneModelDesc& desc = *inst.model();
  const int q0 = inst.params().q0;
  const int p = char_of(q0);
  const Field field = Field::make(p, 2 * prime_power_degree(q0, p));

  PlaneModel model{field,
                   materialize_rhs(desc, field, q0),
                   desc.y_exp,
                   desc.pole_x,
                   desc.pole_y,
                   q0,
                   inst.genus(),
                   inst.code_length(),
                   NumericalSemigroup({desc.pole_x, desc.pole_y}),
                   inst.name()};
  if (std::gcd(model.pole_x, model.pole_y) != 1)
    throw std::logic_error("model pole orders are not coprime");
  return model;
}

EvaluationSet enumerate_points(const PlaneModel& model) {
  const Field& F = model.field;
  const int q = F.order();

  // bucket y by y^B so each x costs one polynomial evaluation
  std::vector<std::vector<int>> roots_of(q);
  for (int y = 0; y < q; ++y) roots_of[F.pow(y, model.y_exp)].push_back(y);

  const std::vector<int> rhs_deriv = derivative(F, model.rhs);
  const int b_scalar = model.y_exp % F.characteristic();

  EvaluationSet out;
  for (int x = 0; x < q; ++x) {
    const int target = eval_poly(F, model.rhs, x);
    for (int y : roots_of[target]) {
      // smoothness of Y^B - f(X): dF/dY = B y^{B-1}, dF/dX = -f'(x)
      const int fy = F.mul(b_scalar, F.pow(y, model.y_exp - 1));
      const int fx = eval_poly(F, rhs_deriv, x);
      if (fy == 0 && fx == 0) {
        std::ostringstream os;
        os << "singular affine point (" << x << ", " << y << ") on " << model.name;
        throw std::domain_error(os.str());
      }
      out.points.emplace_back(x, y);
    }
  }
  if (out.size() != model.expected_affine_points) {
    std::ostringstream os;
    os << "point count mismatch on " << model.name << ": enumerated " << out.size()
       << ", maximality predicts " << model.expected_affine_points;
    throw std::domain_error(os.str());
  }
  return out;
}

std::pair<long long, long long> monomial_for(const PlaneModel& model, long long rho) {
  if (rho < 0) throw std::domain_error("pole order must be nonnegative");
  const long long u = model.pole_x, v = model.pole_y;
  for (long long b = 0; b < model.y_exp; ++b) {
    const long long rest = rho - b * v;
    if (rest >= 0 && rest % u == 0) return {rest / u, b};
  }
  throw std::domain_error("pole order " + std::to_string(rho) + " is a gap of " +
                          model.semigroup.to_string());
}

std::vector<int> h_vector(const PlaneModel& model, const EvaluationSet& pts,
                          long long rho) {
  const auto [a, b] = monomial_for(model, rho);
  const Field& F = model.field;
  std::vector<int> out;
  out.reserve(pts.points.size());
  for (const auto& [x, y] : pts.points)
    out.push_back(F.mul(F.pow(x, a), F.pow(y, b)));
  return out;
}

CheckMatrix build_check_matrix(const PlaneModel& model, const EvaluationSet& pts,
                               const NumericalSemigroup& S, long long d) {
  if (d < 2) throw std::invalid_argument("design distance must be at least 2");
  CheckMatrix M;
  M.n = pts.size();
  const long long limit = 2 * S.conductor() + d + S.genus();
  for (long long ell = 0; ell <= limit; ++ell) {
    if (S.nu(ell) < d) {
      const long long rho = S.rho(ell + 1);
      M.pole_orders.push_back(rho);
      M.rows.push_back(h_vector(model, pts, rho));
    }
  }
  return M;
}

long long gf_rank(const Field& field, std::vector<std::vector<int>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const int inv = field.inv(rows[rank][col]);
    for (std::size_t j = col; j < ncols; ++j)
      rows[rank][j] = field.mul(inv, rows[rank][j]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const int factor = rows[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        rows[i][j] = field.sub(rows[i][j], field.mul(factor, rows[rank][j]));
    }
    ++rank;
  }
  return static_cast<long long>(rank);
}

long long code_dim(const Field& field, const CheckMatrix& M) {
  return M.n - gf_rank(field, M.rows);
}

std::vector<std::vector<int>> null_space(const Field& field, const CheckMatrix& M) {
  const std::size_t ncols = static_cast<std::size_t>(M.n);
  std::vector<std::vector<int>> rows = M.rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const int inv = field.inv(rows[rank][col]);
    for (std::size_t j = col; j < ncols; ++j)
      rows[rank][j] = field.mul(inv, rows[rank][j]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const int factor = rows[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        rows[i][j] = field.sub(rows[i][j], field.mul(factor, rows[rank][j]));
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  std::vector<std::vector<int>> basis;
  std::size_t next_pivot = 0;
  for (std::size_t col = 0; col < ncols; ++col) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    std::vector<int> v(ncols, 0);
    v[col] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      v[pivot_cols[i]] = field.neg(rows[i][col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

long long min_distance_exhaustive(const Field& field, const CheckMatrix& M,
                                  long long budget) {
  const auto basis = null_space(field, M);
  const long long k = static_cast<long long>(basis.size());
  if (k == 0) throw std::domain_error("code has no nonzero codewords");
  const long long words = ipow_capped(field.order(), k, budget);
  if (words > budget)
    throw std::domain_error("q^k exceeds the enumeration budget of " +
                            std::to_string(budget));

  const std::size_t n = static_cast<std::size_t>(M.n);
  const int q = field.order();
  long long best = static_cast<long long>(n) + 1;

  auto weight = [](const std::vector<int>& w) {
    return static_cast<long long>(
        std::count_if(w.begin(), w.end(), [](int e) { return e != 0; }));
  };

  // One representative per scaling class: the first nonzero message
  // coordinate is fixed to 1, coordinates after it range freely.
  std::vector<std::vector<int>> pool(static_cast<std::size_t>(k),
                                     std::vector<int>(n, 0));
  auto descend = [&](auto&& self, long long level, const std::vector<int>& acc) -> void {
    if (level == k) {
      best = std::min(best, weight(acc));
      return;
    }
    self(self, level + 1, acc);  // message coordinate `level` = 0
    const auto& row = basis[static_cast<std::size_t>(level)];
    auto& next = pool[static_cast<std::size_t>(level)];
    for (int c = 1; c < q; ++c) {
      for (std::size_t t = 0; t < n; ++t)
        next[t] = field.add(acc[t], field.mul(c, row[t]));
      self(self, level + 1, next);
    }
  };

  for (long long lead = 0; lead < k; ++lead) {
    descend(descend, lead + 1, basis[static_cast<std::size_t>(lead)]);
  }
  return best;
}

VerifyReport verify_instance(const CurveInstance& inst, long long d,
                             bool exhaustive_distance, long long budget) {
  const PlaneModel model = build_model(inst);
  const EvaluationSet pts = enumerate_points(model);
  const CodeRecord designed = improved_params(
      model.semigroup, pts.size(), d, model.field.order());

  VerifyReport report;
  report.n = pts.size();
  report.k_expected = designed.k;
  report.d_design = d;
  report.d_actual_or_bound = d;

  const CheckMatrix M = build_check_matrix(model, pts, model.semigroup, d);
  report.k_actual = code_dim(model.field, M);

  std::vector<std::string> problems;
  if (report.k_actual != report.k_expected) {
    std::ostringstream os;
    os << "dimension mismatch: rank gives k=" << report.k_actual << ", n - r_d gives "
       << report.k_expected;
    problems.push_back(os.str());
  }
  if (exhaustive_distance) {
    const long long words = ipow_capped(model.field.order(), report.k_actual, budget);
    if (words > budget) {
      std::ostringstream os;
      os << "distance enumeration skipped: q^k exceeds budget " << budget;
      problems.push_back(os.str());
    } else {
      report.d_actual_or_bound = min_distance_exhaustive(model.field, M, budget);
      report.distance_exact = true;
      if (report.d_actual_or_bound < d) {
        std::ostringstream os;
        os << "minimum distance " << report.d_actual_or_bound << " below design " << d;
        problems.push_back(os.str());
      }
    }
  }
  if (problems.empty()) {
    report.status = "ok";
  } else {
    std::string joined;
    for (const auto& p : problems) {
      if (!joined.empty()) joined += "; ";
      joined += p;
    }
    report.status = joined;
  }
  return report;
}

std::string verify_report_json(const VerifyReport& report) {
  std::ostringstream os;
  os << "{\"n\": " << report.n << ", \"k_expected\": " << report.k_expected
     << ", \"k_actual\": " << report.k_actual << ", \"d_design\": " << report.d_design
     << ", \"d_actual_or_bound\": " << report.d_actual_or_bound << ", \"status\": \""
     << report.status << "\"}";
  return os.str();
}

}  // namespace agcodes
