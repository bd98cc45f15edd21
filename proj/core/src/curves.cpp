#include "agcodes/curves.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace agcodes {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

// Characteristic of a prime power, or 0 when q0 is not one.
int prime_power_char(int q0) {
  if (q0 < 2) return 0;
  int p = 0;
  for (int f = 2; f * f <= q0; ++f) {
    if (q0 % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return q0;  // q0 itself prime
  int n = q0;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

bool is_power_of(int s, int p) {
  if (s < 1) return false;
  while (s % p == 0) s /= p;
  return s == 1;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

int common_q0(const FamilyParams& params) {
  const int q0 = params.q0;
  require(prime_power_char(q0) != 0,
          "q0 = " + std::to_string(q0) + " is not a prime power");
  require(q0 <= 256, "q = q0^2 exceeds 2^16");
  return q0;
}

std::vector<long long> range_gens(long long lo, long long hi) {
  std::vector<long long> out;
  for (long long v = lo; v <= hi; ++v)
    if (v > 0) out.push_back(v);
  return out;
}

struct BuiltinDef {
  const char* name;
  const char* params;
  // code tags by point label
  std::vector<std::pair<const char*, const char*>> tags;
};

const std::vector<BuiltinDef>& builtin_defs() {
  static const std::vector<BuiltinDef> defs = {
      {"B1", "B:q0=9,i=1", {{"P3", "B1"}}},
      {"C1", "C:q0=8,s=2", {{"Pinf", "C1a"}, {"P2", "C1b"}}},
      {"C2", "C:q0=16,s=8", {{"Pinf", "C2"}}},
      {"C3", "C:q0=16,s=4", {{"Pinf", "C3"}}},
      {"C4", "C:q0=9,s=3", {{"Pinf", "C4"}}},
      {"D1", "D:q0=7,m=4", {{"Pinf", "D1a"}, {"P2", "D1b"}}},
      {"D2", "D:q0=7,m=2", {{"Pinf", "D2a"}, {"P2", "D2b"}}},
      {"D3", "D:q0=8,m=3", {{"Pinf", "D3a"}, {"P2", "D3b"}}},
      {"D4", "D:q0=9,m=5", {{"Pinf", "D4a"}, {"P2", "D4b"}}},
      {"E1", "E:q0=7,m=3", {{"Pinf", "E1"}}},
      {"E2", "E:q0=9,m=4", {{"Pinf", "E2"}}},
      {"E3", "E:q0=16,m=5", {{"Pinf", "E3"}}},
  };
  return defs;
}

}  // namespace

FamilyParams FamilyParams::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("expected '<family>:key=value,...' in '" + text + "'");
  std::string fam = text.substr(0, colon);
  std::map<std::string, int> kv;
  std::istringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("expected key=value in '" + item + "'");
    std::string key = item.substr(0, eq);
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad value in '" + item + "'");
    }
    if (!kv.emplace(key, value).second)
      throw std::invalid_argument("duplicate key '" + key + "'");
  }
  auto take = [&kv, &text](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end())
      throw std::invalid_argument(std::string("missing '") + key + "' in '" + text + "'");
    int v = it->second;
    kv.erase(it);
    return v;
  };

  FamilyParams params;
  if (fam == "H") {  // shorthand for the unquotiented family-C curve
    params.family = Family::C;
    params.q0 = take("q0");
    params.s = 1;
  } else if (fam == "A") {
    params.family = Family::A;
    params.q0 = take("q0");
    params.m = take("m");
  } else if (fam == "B") {
    params.family = Family::B;
    params.q0 = take("q0");
    params.i = take("i");
  } else if (fam == "C") {
    params.family = Family::C;
    params.q0 = take("q0");
    params.s = take("s");
  } else if (fam == "D") {
    params.family = Family::D;
    params.q0 = take("q0");
    params.m = take("m");
  } else if (fam == "E") {
    params.family = Family::E;
    params.q0 = take("q0");
    params.m = take("m");
  } else {
    throw std::invalid_argument("unknown family '" + fam + "'");
  }
  if (!kv.empty())
    throw std::invalid_argument("unexpected key '" + kv.begin()->first + "' in '" + text + "'");

  if (params.family == Family::C) {
    const int p = prime_power_char(params.q0);
    if (params.s == 1)
      params.subgroup = QuotientSubgroup::Trivial;
    else if (p == 2 && params.s == 2)
      params.subgroup = QuotientSubgroup::ZeroOne;
    else if (p == 2 && params.s * 2 == params.q0)
      params.subgroup = QuotientSubgroup::TraceKernel;
    else if (params.q0 == 16 && params.s == 4)
      params.subgroup = QuotientSubgroup::F4Subfield;
    else if (params.q0 == 9 && params.s == 3)
      params.subgroup = QuotientSubgroup::Eigenspace;
    else
      params.subgroup = QuotientSubgroup::Unspecified;
  }
  return params;
}

std::string FamilyParams::to_string() const {
  std::ostringstream os;
  switch (family) {
    case Family::A: os << "A:q0=" << q0 << ",m=" << m; break;
    case Family::B: os << "B:q0=" << q0 << ",i=" << i; break;
    case Family::C: os << "C:q0=" << q0 << ",s=" << s; break;
    case Family::D: os << "D:q0=" << q0 << ",m=" << m; break;
    case Family::E: os << "E:q0=" << q0 << ",m=" << m; break;
  }
  return os.str();
}

const PointSemigroup& CurveInstance::point(const std::string& label) const {
  for (const auto& pt : points_)
    if (pt.label == label) return pt;
  throw std::invalid_argument("instance " + name_ + " has no point '" + label + "'");
}

std::vector<long long> epp_generators(int q0, int m, long long value_bound) {
  require(prime_power_char(q0) != 0, "q0 must be a prime power");
  const long long q = static_cast<long long>(q0) * q0;
  require(m >= 1 && (q - 1) % m == 0, "family E requires m | q-1");
  require(value_bound >= 0, "value bound must be nonnegative");

  const long long step = (q - 1) / m;
  std::vector<long long> out;
  // v = i*q0 - j*step with i >= j*(q0+1)/m; the least admissible i gives
  // v >= j*(q0+1)/m, so j is bounded by m*value_bound/(q0+1).
  const long long jmax = m * value_bound / (q0 + 1) + 1;
  for (long long j = 0; j <= jmax; ++j) {
    long long i = (j * (q0 + 1) + m - 1) / m;  // ceil(j*(q0+1)/m)
    for (;; ++i) {
      const long long v = i * q0 - j * step;
      if (v > value_bound) break;
      if (v >= 0) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CurveInstance curve_make(const FamilyParams& params) {
  const int q0 = common_q0(params);
  const long long q = static_cast<long long>(q0) * q0;
  long long genus = 0;
  std::vector<PointSemigroup> points;
  std::optional<PlaneModelDesc> model;

  switch (params.family) {
    case Family::A: {
      const int m = params.m;
      require(m > 2, "family A requires m > 2");
      require((q0 + 1) % m == 0, "family A requires m | q0+1");
      const int delta = (q0 + 1) / m;
      require(delta > 3 && is_prime(delta),
              "family A requires (q0+1)/m to be a prime greater than 3");
      genus = static_cast<long long>(m) * (q0 - 2) / 2 + 1;
      std::vector<long long> gens = {q0 + 1 - delta};
      for (int t = 0; t <= (delta - 1) / 2; ++t)
        gens.push_back(q0 + 1 - (delta - 1) / 2 + t);
      points.push_back({"P", "", NumericalSemigroup(gens), true});
      break;
    }
    case Family::B: {
      require(q0 % 2 == 1, "family B requires odd q0");
      const int delta = (q0 + 1) / 2;
      require(delta > 3 && is_prime(delta),
              "family B requires (q0+1)/2 to be a prime greater than 3");
      require(params.i >= 1 && params.i <= delta - 2,
              "family B requires 1 <= i <= (q0+1)/2 - 2");
      genus = q0 - 1;
      const int i = params.i;
      if (i == 1) {
        std::vector<long long> theta = {q0 + 1 - delta};
        for (int j = 0; j <= (delta - 1) / 2; ++j) theta.push_back(q0 + 1 - j);
        std::vector<long long> gamma = {q0 + 1};
        for (int t = 0; t <= (delta - 1) / 2; ++t) gamma.push_back(q0 + 1 - delta + 2 * t);
        points.push_back({"P1", "", NumericalSemigroup(theta), true});
        points.push_back({"P3", "", NumericalSemigroup(gamma), true});
      } else {
        // only containment is known for i > 1
        std::vector<int> njs;
        for (int n = 1; n < delta; ++n) {
          if (static_cast<long long>(n) * (i + 1) <=
              static_cast<long long>(n * i / delta + 1) * delta)
            njs.push_back(n);
        }
        if (static_cast<int>(njs.size()) != (delta - 1) / 2)
          throw std::logic_error("unexpected n_j count for family B");
        std::vector<long long> p1 = {q0 + 1, q0 + 1 - delta};
        std::vector<long long> p2 = {q0 + 1, q0 + 1 - delta};
        std::vector<long long> p3 = {q0 + 1, q0 + 1 - delta};
        for (int n : njs) {
          const int mj = n * i - delta * (n * i / delta);
          const int kj = delta * (n * i / delta + 1) - n * (i + 1);
          p1.push_back(q0 + 1 - n);
          if (mj > 0) p2.push_back(q0 + 1 - mj);
          if (kj > 0) p3.push_back(q0 + 1 - kj);
        }
        points.push_back({"P1", "", NumericalSemigroup(p1), false});
        points.push_back({"P2", "", NumericalSemigroup(p2), false});
        points.push_back({"P3", "", NumericalSemigroup(p3), false});
      }
      break;
    }
    case Family::C: {
      const int p = prime_power_char(q0);
      const int s = params.s;
      require(s >= 1 && q0 % s == 0, "family C requires s | q0");
      require(is_power_of(s, p) || s == 1,
              "family C requires s to be a power of the characteristic");
      genus = static_cast<long long>(q0) * (q0 / s - 1) / 2;
      points.push_back(
          {"Pinf", "", NumericalSemigroup({q0 / s, q0 + 1}), true});
      if (s == 2) {
        points.push_back(
            {"P2", "", NumericalSemigroup({q0 - 1, q0, q0 + 1}), true});
      } else if (s == q0 / 2 && s > 2) {
        points.push_back(
            {"P2", "", NumericalSemigroup(range_gens(q0 + 1 - q0 / 2, q0 + 1)), true});
      }
      switch (params.subgroup) {
        case QuotientSubgroup::Trivial:
          model = PlaneModelDesc{PlaneModelDesc::Rhs::XPowQ0PlusX, q0 + 1, q0 + 1, q0};
          break;
        case QuotientSubgroup::ZeroOne:
          require(p == 2 && s == 2, "ZeroOne subgroup needs characteristic 2, s = 2");
          model = PlaneModelDesc{PlaneModelDesc::Rhs::HalvingPowerSum, q0 + 1, q0 + 1,
                                 q0 / 2};
          break;
        case QuotientSubgroup::TraceKernel:
          require(p == 2 && 2 * s == q0, "TraceKernel subgroup needs s = q0/2");
          model = PlaneModelDesc{PlaneModelDesc::Rhs::XSquarePlusX, q0 + 1, q0 + 1, 2};
          break;
        case QuotientSubgroup::F4Subfield:
          require(q0 == 16 && s == 4, "F4Subfield subgroup needs q0 = 16, s = 4");
          model = PlaneModelDesc{PlaneModelDesc::Rhs::XQuarticPlusX, 17, 17, 4};
          break;
        case QuotientSubgroup::Eigenspace:
          require(q0 == 9 && s == 3, "Eigenspace subgroup needs q0 = 9, s = 3");
          model = PlaneModelDesc{PlaneModelDesc::Rhs::EigenCubic, 10, 10, 3};
          break;
        case QuotientSubgroup::Unspecified:
          break;
      }
      break;
    }
    case Family::D: {
      const int m = params.m;
      require(m >= 1 && (q0 + 1) % m == 0 && m != q0 + 1,
              "family D requires m to be a proper divisor of q0+1");
      genus = static_cast<long long>(q0 - 1) * (m - 1) / 2;
      points.push_back({"Pinf", "", NumericalSemigroup({m, q0}), true});
      const int h = (q0 + 1) / m;
      points.push_back(
          {"P2", "", NumericalSemigroup(range_gens(q0 + 1 - h, q0 + 1)), true});
      model = PlaneModelDesc{PlaneModelDesc::Rhs::XPowQ0PlusX, m, m, q0};
      break;
    }
    case Family::E: {
      const int m = params.m;
      require(m >= 1 && (q - 1) % m == 0, "family E requires m | q-1");
      const long long d = std::gcd<long long>(m, q0 + 1);
      genus = (q0 - 1) * (q0 + 1 - d) / (2 * m);
      const long long bound = std::max<long long>(4 * genus, 4);
      std::vector<long long> gens;
      for (long long v : epp_generators(q0, m, bound))
        if (v > 0) gens.push_back(v);
      NumericalSemigroup sg(gens);
      const bool exact = sg.genus() == genus;
      points.push_back({"Pinf", "", std::move(sg), exact});
      break;
    }
  }

  const long long n_points = q + 1 + 2 * genus * q0;
  return CurveInstance(params, params.to_string(), genus, n_points,
                       std::move(points), std::move(model));
}

bool ValidationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.pass; });
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "pass" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

ValidationReport validate_raw(int q0, long long genus, long long point_count,
                              const std::vector<PointSemigroup>& points) {
  ValidationReport report;
  const long long q = static_cast<long long>(q0) * q0;
  {
    const long long expected = q + 1 + 2 * genus * q0;
    std::ostringstream os;
    os << "N = " << point_count << ", q+1+2*g*q0 = " << expected;
    report.checks.push_back({"maximality point count", point_count == expected, os.str()});
  }
  for (const auto& pt : points) {
    const bool has = pt.semigroup.contains(q0) && pt.semigroup.contains(q0 + 1);
    report.checks.push_back({"q0 and q0+1 are non-gaps at " + pt.label, has,
                             pt.semigroup.to_string()});
    if (pt.exact) {
      std::ostringstream os;
      os << "semigroup genus " << pt.semigroup.genus() << ", curve genus " << genus;
      report.checks.push_back(
          {"semigroup genus at " + pt.label, pt.semigroup.genus() == genus, os.str()});
    }
  }
  return report;
}

ValidationReport validate_instance(const CurveInstance& inst) {
  ValidationReport report = validate_raw(inst.params().q0, inst.genus(),
                                         inst.point_count(), inst.points());
  if (inst.model()) {
    const auto& m = *inst.model();
    const bool coprime = std::gcd(m.pole_x, m.pole_y) == 1;
    report.checks.push_back({"model pole orders coprime", coprime,
                             std::to_string(m.pole_x) + "," + std::to_string(m.pole_y)});
    const NumericalSemigroup from_model({m.pole_x, m.pole_y});
    report.checks.push_back({"model semigroup matches Pinf",
                             from_model == inst.point("Pinf").semigroup,
                             from_model.to_string()});
  }
  return report;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& def : builtin_defs()) out.emplace_back(def.name);
    return out;
  }();
  return names;
}

CurveInstance make_instance(const std::string& name_or_params) {
  for (const auto& def : builtin_defs()) {
    if (name_or_params == def.name) {
      CurveInstance inst = curve_make(FamilyParams::parse(def.params));
      std::vector<PointSemigroup> points = inst.points();
      for (auto& pt : points) {
        for (const auto& [label, tag] : def.tags) {
          if (pt.label == label) pt.code_tag = tag;
        }
      }
      return CurveInstance(inst.params(), def.name, inst.genus(), inst.point_count(),
                           std::move(points), inst.model());
    }
  }
  return curve_make(FamilyParams::parse(name_or_params));
}

}  // namespace agcodes
