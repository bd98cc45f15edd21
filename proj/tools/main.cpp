// Command-line front end: curve catalog, semigroup queries, improved-code
// parameters, reference tables, baseline comparison, and concrete
// check-matrix verification.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "agcodes/codes.hpp"
#include "agcodes/construct.hpp"
#include "agcodes/curves.hpp"
#include "agcodes/semigroup.hpp"
#include "agcodes/tables.hpp"

namespace {

using namespace agcodes;

std::pair<long long, long long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long long v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected 'lo..hi', got '" + text + "'");
  }
}

int run_catalog() {
  for (const auto& name : builtin_names()) {
    const CurveInstance inst = make_instance(name);
    std::cout << name << " " << inst.params().to_string() << " q=" << inst.params().q()
              << " g=" << inst.genus() << " N=" << inst.point_count() << " points:";
    for (const auto& pt : inst.points()) {
      std::cout << " " << pt.label << "=" << pt.semigroup.to_string() << "["
                << (pt.exact ? "exact" : "contains");
      if (!pt.code_tag.empty()) std::cout << "," << pt.code_tag;
      std::cout << "]";
    }
    std::cout << "\n";
  }
  return 0;
}

int run_semigroup(const std::string& gens, const std::string& rho_range,
                  const std::string& nu_range, long long r_d) {
  const NumericalSemigroup S = parse_semigroup(gens);
  std::cout << "gens: " << gens << "\n";
  std::cout << "minimal: " << S.to_string() << "\n";
  std::cout << "genus: " << S.genus() << "\n";
  std::cout << "conductor: " << S.conductor() << "\n";

  std::string rho_to_print = rho_range;
  if (rho_to_print.empty() && !nu_range.empty()) {
    // print the rho values the nu line refers to
    const auto [lo, hi] = parse_range(nu_range);
    rho_to_print = "1.." + std::to_string(hi + 1);
    (void)lo;
  }
  if (!rho_to_print.empty()) {
    const auto [lo, hi] = parse_range(rho_to_print);
    std::cout << "rho[" << lo << ".." << hi << "]:";
    for (long long i = lo; i <= hi; ++i) std::cout << " " << S.rho(i);
    std::cout << "\n";
  }
  if (!nu_range.empty()) {
    const auto [lo, hi] = parse_range(nu_range);
    std::cout << "nu[" << lo << ".." << hi << "]:";
    for (long long ell = lo; ell <= hi; ++ell) std::cout << " " << S.nu(ell);
    std::cout << "\n";
  }
  if (r_d >= 0) std::cout << "r_" << r_d << ": " << S.r(r_d) << "\n";
  return 0;
}

int run_params(const std::string& instance, const std::string& point, long long d) {
  const CurveInstance inst = make_instance(instance);
  const PointSemigroup& pt = inst.point(point);
  const CodeRecord rec = improved_params(pt.semigroup, inst.code_length(), d,
                                         inst.params().q(), pt.code_tag);
  std::cout << rec.params_string() << " over GF(" << rec.q << ")\n";
  return 0;
}

int run_table(int q, const std::string& format, bool published) {
  std::cout << render_reference_table(q, parse_format(format), published);
  return 0;
}

int run_verify(const std::string& instance, long long d, bool distance,
               long long budget) {
  const CurveInstance inst = make_instance(instance);
  const VerifyReport report = verify_instance(inst, d, distance, budget);
  std::cout << verify_report_json(report) << "\n";
  return report.status == "ok" ? 0 : 1;
}

int run_compare(const std::string& baseline_path, int q, const std::string& records_path,
                bool published) {
  const BaselineTable baseline = BaselineTable::load_csv_file(baseline_path);
  std::vector<CodeRecord> records;
  if (!records_path.empty()) {
    std::ifstream in(records_path);
    if (!in) throw std::invalid_argument("cannot open records file '" + records_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    records = records_from_json(buf.str());
  } else if (q > 0) {
    records = reference_records(q, published);
  } else {
    throw std::invalid_argument("compare needs --q or --records");
  }
  std::cout << render_improvement_report(compare_baseline(records, baseline));
  return 0;
}

int run_matrix(const std::string& instance, const std::string& point, long long d,
               const std::string& out_path) {
  const CurveInstance inst = make_instance(instance);
  if (point != "Pinf")
    throw std::domain_error("check matrices are built at Pinf; point '" + point +
                            "' carries no plane model");
  const PlaneModel model = build_model(inst);
  const EvaluationSet pts = enumerate_points(model);
  const CheckMatrix M = build_check_matrix(model, pts, model.semigroup, d);

  std::ostringstream os;
  for (const auto& row : M.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << ',';
      os << row[j];
    }
    os << '\n';
  }
  if (out_path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << os.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Improved AG code parameters from maximal curves"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "List the built-in curve instances");

  auto* semigroup = app.add_subcommand("semigroup", "Numerical semigroup queries");
  std::string gens, rho_range, nu_range;
  long long r_d = -1;
  semigroup->add_option("--gens", gens, "Generators, e.g. 2,7")->required();
  semigroup->add_option("--rho", rho_range, "Print rho_i for i in lo..hi");
  semigroup->add_option("--nu", nu_range, "Print nu_l for l in lo..hi");
  semigroup->add_option("--r", r_d, "Print r_d for this design distance");

  auto* params = app.add_subcommand("params", "Improved-code parameters [n, k, d]");
  std::string p_instance, p_point = "Pinf";
  long long p_d = 0;
  params->add_option("--instance", p_instance, "Built-in name or family syntax")->required();
  params->add_option("--point", p_point, "Point label (default Pinf)");
  params->add_option("--d", p_d, "Design distance")->required();

  auto* table = app.add_subcommand("table", "Render a reference table");
  int t_q = 0;
  std::string t_format = "md";
  bool t_published = false;
  table->add_option("--q", t_q, "Field size: 49, 64, 81 or 256")->required();
  table->add_option("--format", t_format, "csv, md or json");
  table->add_flag("--published", t_published,
                  "Emit the shipped k column instead of recomputing it");

  auto* verify = app.add_subcommand("verify", "Check-matrix rank (and distance) checks");
  std::string v_instance;
  long long v_d = 0, v_budget = 10000000;
  bool v_distance = false;
  verify->add_option("--instance", v_instance, "Built-in name or family syntax")->required();
  verify->add_option("--d", v_d, "Design distance")->required();
  verify->add_flag("--distance", v_distance, "Exhaustive minimum-distance search");
  verify->add_option("--budget", v_budget, "Enumeration budget for q^k");

  auto* compare = app.add_subcommand("compare", "Improvement report against a baseline");
  std::string c_baseline, c_records;
  int c_q = 0;
  bool c_published = false;
  compare->add_option("--baseline", c_baseline, "CSV with header q,n,k,d_best")->required();
  compare->add_option("--q", c_q, "Use the reference records for this field size");
  compare->add_option("--records", c_records, "JSON records emitted by 'table --format json'");
  compare->add_flag("--published", c_published,
                    "Use the shipped k column instead of recomputing it");

  auto* matrix = app.add_subcommand("matrix", "Emit a check matrix as CSV of element indices");
  std::string m_instance, m_point = "Pinf", m_out;
  long long m_d = 0;
  matrix->add_option("--instance", m_instance, "Built-in name or family syntax")->required();
  matrix->add_option("--point", m_point, "Point label (default Pinf)");
  matrix->add_option("--d", m_d, "Design distance")->required();
  matrix->add_option("--out", m_out, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*catalog) return run_catalog();
    if (*semigroup) return run_semigroup(gens, rho_range, nu_range, r_d);
    if (*params) return run_params(p_instance, p_point, p_d);
    if (*table) return run_table(t_q, t_format, t_published);
    if (*verify) return run_verify(v_instance, v_d, v_distance, v_budget);
    if (*compare) return run_compare(c_baseline, c_q, c_records, c_published);
    if (*matrix) return run_matrix(m_instance, m_point, m_d, m_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
