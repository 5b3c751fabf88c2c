#include "cli.hpp"

#include "schubert/bundles.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace schubert::cli {

namespace {

constexpr int kDefaultMaxN = 12;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  bool json = false;
  bool force = false;
  bool diagrams = false;
  bool mod_h = false;
};

GrassmannShape checked_shape(int d, int n, bool force) {
  if (n < 2 || d < 1 || d > n - 1)
    throw UsageError("need 1 <= d <= n-1, got d=" + std::to_string(d) + " n=" + std::to_string(n));
  if (n > kDefaultMaxN && !force)
    throw UsageError("n > " + std::to_string(kDefaultMaxN) + " needs --force");
  return GrassmannShape(d, n);
}

json shape_json(const GrassmannShape& shape) {
  return json{{"d", shape.d()}, {"n", shape.n()}, {"t", shape.dimension()}};
}

void print_class(std::ostream& out, const ChowElement& a, bool diagrams) {
  out << a.to_string() << '\n';
  if (!diagrams) return;
  for (const auto& [index, c] : a.terms()) {
    out << to_string(c) << " x " << a.ring()->partition(index).to_string() << ":\n"
        << young_diagram(a.ring()->partition(index));
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

int cmd_roberts(const std::vector<std::string>& args, int d, int n, bool verdict_only,
                const Common& common, std::ostream& out) {
  const GrassmannShape shape = checked_shape(d, n, common.force);
  const RobertsReport report =
      roberts_verdict(shape, verdict_only ? ReportMode::VerdictOnly : ReportMode::Full);
  const int code = report.verdict ? kAffirmative : kNegative;
  if (common.json) {
    json parameters = shape_json(shape);
    parameters["mode"] = verdict_only ? "verdict-only" : "full";
    out << envelope(args, std::move(parameters), report_json(report)).dump(2) << '\n';
    return code;
  }
  out << "A_" << d << "(" << n << "): t = " << shape.dimension() << ", cone dimension "
      << report.cone_dimension << '\n';
  out << "degree  tau_index  zero  representative\n";
  for (const auto& r : report.records) {
    out << std::left << std::setw(8) << r.degree << std::setw(11)
        << ("tau_" + std::to_string(r.homological_index)) << std::setw(6) << yes_no(r.is_zero)
        << r.representative.to_string() << '\n';
    if (common.diagrams && !r.is_zero)
      for (const auto& [index, c] : r.representative.terms())
        out << to_string(c) << " x\n" << young_diagram(r.representative.ring()->partition(index));
  }
  if (report.verdict) {
    out << "Roberts: yes\n";
  } else {
    const auto witness = std::find_if(report.records.begin(), report.records.end(),
                                      [&](const TauRecord& r) { return r.degree == *report.witness; });
    out << "Roberts: no; witness degree " << *report.witness << "; tau = "
        << witness->representative.to_string() << '\n';
  }
  return code;
}

int cmd_table(const std::vector<std::string>& args, int max_n, unsigned threads,
              const Common& common, std::ostream& out) {
  if (max_n < 2) throw UsageError("table needs max_n >= 2");
  if (max_n > kDefaultMaxN && !common.force)
    throw UsageError("max_n > " + std::to_string(kDefaultMaxN) + " needs --force");
  const auto table = verdict_table(max_n, threads);
  const auto roberts = std::count_if(table.begin(), table.end(),
                                     [](const VerdictSummary& s) { return s.roberts; });
  if (common.json) {
    json rows = json::array();
    for (const auto& s : table)
      rows.push_back({{"d", s.shape.d()},
                      {"n", s.shape.n()},
                      {"roberts", s.roberts},
                      {"witness_degree", s.witness ? json(*s.witness) : json(nullptr)}});
    out << envelope(args, json{{"max_n", max_n}},
                    json{{"rows", std::move(rows)}, {"roberts_count", roberts}})
               .dump(2)
        << '\n';
    return kAffirmative;
  }
  out << "n   d   roberts  witness\n";
  for (const auto& s : table)
    out << std::left << std::setw(4) << s.shape.n() << std::setw(4) << s.shape.d() << std::setw(9)
        << yes_no(s.roberts) << (s.witness ? std::to_string(*s.witness) : "-") << '\n';
  out << "Roberts cases: " << roberts << " of " << table.size() << '\n';
  return kAffirmative;
}

int cmd_chow_basis(const std::vector<std::string>& args, int d, int n, std::optional<int> degree,
                   const Common& common, std::ostream& out) {
  const GrassmannShape shape = checked_shape(d, n, common.force);
  const int t = shape.dimension();
  if (degree && (*degree < 0 || *degree > t))
    throw UsageError("degree must lie in [0, " + std::to_string(t) + "]");
  const int low = degree ? *degree : 0;
  const int high = degree ? *degree : t;
  if (common.json) {
    json by_degree = json::array();
    for (int k = low; k <= high; ++k) {
      json parts = json::array();
      for (const auto& lambda : enumerate_box(shape, k)) parts.push_back(partition_json(lambda));
      by_degree.push_back({{"degree", k}, {"partitions", std::move(parts)}});
    }
    json parameters = shape_json(shape);
    if (degree) parameters["degree"] = *degree;
    out << envelope(args, std::move(parameters), json{{"basis", std::move(by_degree)}}).dump(2)
        << '\n';
    return kAffirmative;
  }
  for (int k = low; k <= high; ++k) {
    const auto basis = enumerate_box(shape, k);
    out << "CH^" << k << ": " << basis.size() << " classes\n";
    for (const auto& lambda : basis) {
      out << "  " << lambda.to_string() << '\n';
      if (common.diagrams) out << young_diagram(lambda);
    }
  }
  return kAffirmative;
}

int emit_class(const std::vector<std::string>& args, const GrassmannShape& shape, json parameters,
               const ChowElement& value, const Common& common, std::ostream& out) {
  const ChowElement shown = common.mod_h ? reduce_each_degree(value) : value;
  if (common.json) {
    json result{{"class", class_json(shown)}, {"mod_h", common.mod_h}};
    json p = shape_json(shape);
    p.update(parameters);
    out << envelope(args, std::move(p), std::move(result)).dump(2) << '\n';
    return kAffirmative;
  }
  print_class(out, shown, common.diagrams);
  return kAffirmative;
}

ChowElement parse_or_usage(const ChowRingPtr& ring, const std::string& text) {
  try {
    return parse_class(ring, text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_chow_pieri(const std::vector<std::string>& args, int d, int n, int m,
                   const std::string& cls, const Common& common, std::ostream& out) {
  const GrassmannShape shape = checked_shape(d, n, common.force);
  const auto ring = ChowRing::create(shape);
  const ChowElement a = parse_or_usage(ring, cls);
  return emit_class(args, shape, json{{"class", cls}, {"m", m}}, pieri(a, m), common, out);
}

int cmd_chow_multiply(const std::vector<std::string>& args, int d, int n,
                      const std::vector<std::string>& operands, const Common& common,
                      std::ostream& out) {
  const GrassmannShape shape = checked_shape(d, n, common.force);
  if (operands.empty()) throw UsageError("multiply needs at least one operand");
  const auto ring = ChowRing::create(shape);
  ChowElement product = ChowElement::unit(ring);
  std::vector<std::string> echoed;
  for (const auto& operand : operands) {
    product = multiply(product, parse_or_usage(ring, operand));
    echoed.push_back(operand.substr(operand.find_first_not_of(' ')));
  }
  return emit_class(args, shape, json{{"operands", echoed}}, product, common, out);
}

int cmd_chow_reduce(const std::vector<std::string>& args, int d, int n, const std::string& cls,
                    const Common& common, std::ostream& out) {
  const GrassmannShape shape = checked_shape(d, n, common.force);
  const auto ring = ChowRing::create(shape);
  const ChowElement a = parse_or_usage(ring, cls);
  const auto degree = a.homogeneous_degree();
  if (!a.is_zero() && (!degree || *degree == 0))
    throw UsageError("reduce needs a homogeneous class of positive degree");
  const Reduction r = reduce_mod_h(a);
  if (common.json) {
    json p = shape_json(shape);
    p["class"] = cls;
    out << envelope(args, std::move(p),
                    json{{"representative", class_json(r.representative)},
                         {"is_zero", r.is_zero},
                         {"degree", degree ? json(*degree) : json(nullptr)}})
               .dump(2)
        << '\n';
    return kAffirmative;
  }
  out << "representative: ";
  print_class(out, r.representative, common.diagrams);
  out << "zero mod h: " << yes_no(r.is_zero) << '\n';
  return kAffirmative;
}

int cmd_bundle(const std::vector<std::string>& args, int d, int n, const std::string& kind,
               std::optional<int> max_degree, const Common& common, std::ostream& out) {
  const GrassmannShape shape = checked_shape(d, n, common.force);
  const int t = shape.dimension();
  const int top = max_degree.value_or(t);
  if (top < 1 || top > t) throw UsageError("--max-degree must lie in [1, " + std::to_string(t) + "]");
  const auto ring = ChowRing::create(shape);

  std::vector<ChowElement> components;  // components[k] has degree k
  std::string label;
  if (kind == "todd") {
    const ChowElement td = todd_tangent(ring, top);
    for (int k = 0; k <= top; ++k) components.push_back(td.component(k));
    label = "td";
  } else if (kind == "chern") {
    const BundleChern c = chern_tangent(ring, top);
    for (int k = 0; k <= top; ++k) components.push_back(c.c(k));
    label = "c";
  } else {
    const BundleCharacter ch = ch_tangent(ring, top);
    components.push_back(Rational(ch.rank) * ChowElement::unit(ring));
    for (int k = 1; k <= top; ++k) components.push_back(ch.ch(k));
    label = "ch";
  }
  if (common.mod_h)
    for (int k = 1; k <= top; ++k) components[k] = reduce_mod_h(components[k]).representative;

  if (common.json) {
    json graded = json::array();
    for (int k = 0; k <= top; ++k) graded.push_back({{"degree", k}, {"class", class_json(components[k])}});
    json p = shape_json(shape);
    p["kind"] = kind;
    p["max_degree"] = top;
    p["mod_h"] = common.mod_h;
    out << envelope(args, std::move(p), json{{"components", std::move(graded)}}).dump(2) << '\n';
    return kAffirmative;
  }
  out << label << " of the tangent bundle of G_" << d << "(" << n << ")"
      << (common.mod_h ? ", modulo h" : "") << '\n';
  for (int k = 0; k <= top; ++k) {
    out << label << "_" << k << " = ";
    print_class(out, components[k], common.diagrams);
  }
  return kAffirmative;
}

int cmd_pfaffian_classify(const std::vector<std::string>& args, int m, int n, const Common& common,
                          std::ostream& out) {
  if (m < 1 || n < 2 * m) throw UsageError("classify needs m >= 1 and n >= 2m");
  const PfaffianClassification c = classify_B(m, n);
  const int code = c.is_roberts ? kAffirmative : kNegative;
  if (common.json) {
    out << envelope(args, json{{"m", m}, {"n", n}},
                    json{{"generators", c.generators.str()},
                         {"height", c.height.str()},
                         {"dimension_deficit", c.dimension_deficit.str()},
                         {"complete_intersection", c.is_complete_intersection},
                         {"roberts", c.is_roberts}})
               .dump(2)
        << '\n';
    return code;
  }
  out << "B_" << m << "(" << n << "): generators " << c.generators << ", height " << c.height
      << ", dimension deficit " << c.dimension_deficit << '\n';
  out << "CI: " << yes_no(c.is_complete_intersection) << "; Roberts: " << yes_no(c.is_roberts) << '\n';
  return code;
}

int cmd_pfaffian_eval(const std::vector<std::string>& args, const std::string& path,
                      const Common& common, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  MatrixX<Rational> m;
  try {
    m = read_matrix(in);
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
  std::optional<AntisymmetricMatrix<Rational>> z;
  try {
    z.emplace(m);
  } catch (const NotAntisymmetric& e) {
    throw UsageError(path + ": " + e.what());
  }
  const Rational pf = pfaffian(*z);
  const Rational det = exact_determinant(m);
  const bool check = pf * pf == det;
  if (common.json) {
    out << envelope(args, json{{"file", path}, {"size", m.rows()}},
                    json{{"pfaffian", rational_json(pf)},
                         {"determinant", rational_json(det)},
                         {"pf_squared_equals_det", check}})
               .dump(2)
        << '\n';
  } else {
    out << "size: " << m.rows() << '\n'
        << "Pf = " << to_string(pf) << '\n'
        << "det = " << to_string(det) << '\n'
        << "Pf^2 = det: " << yes_no(check) << '\n';
  }
  return check ? kAffirmative : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Schubert calculus and Roberts-ring verdicts for Grassmannian cones"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kEngineVersion);

  Common common;
  auto add_common = [&](CLI::App* sub, bool classes) {
    sub->add_flag("--json", common.json, "Emit the machine-readable envelope");
    sub->add_flag("--force", common.force, "Allow n above 12");
    if (classes) {
      sub->add_flag("--diagrams", common.diagrams, "Draw Young diagrams");
      sub->add_flag("--mod-h", common.mod_h, "Reduce classes modulo the hyperplane class");
    }
  };

  int d = 0, n = 0, m = 0, max_n = 0;
  unsigned threads = 0;
  bool verdict_only = false;
  std::optional<int> degree;
  std::optional<int> max_degree;
  std::string cls, path;
  std::vector<std::string> operands;

  auto* roberts = app.add_subcommand("roberts", "Roberts verdict for the cone A_d(n)");
  roberts->add_option("d", d)->required();
  roberts->add_option("n", n)->required();
  roberts->add_flag("--verdict-only", verdict_only, "Stop at the first nonzero tau component");
  roberts->add_flag("--diagrams", common.diagrams, "Draw Young diagrams of nonzero components");
  add_common(roberts, false);

  auto* table = app.add_subcommand("table", "Verdict grid for all shapes up to max_n");
  table->add_option("max_n", max_n)->required();
  table->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");
  add_common(table, false);

  auto* chow = app.add_subcommand("chow", "Chow-ring arithmetic on G_d(n)");
  chow->require_subcommand(1);
  auto* basis = chow->add_subcommand("basis", "List Schubert classes");
  basis->add_option("d", d)->required();
  basis->add_option("n", n)->required();
  basis->add_option("--degree", degree, "Only this degree");
  add_common(basis, true);
  auto* pieri_cmd = chow->add_subcommand("pieri", "Multiply a class by sigma_m");
  pieri_cmd->add_option("d", d)->required();
  pieri_cmd->add_option("n", n)->required();
  pieri_cmd->add_option("-m,--special", m, "Index of the special class")->required();
  pieri_cmd->add_option("--class", cls, "Class, e.g. \"[2]:1 [1,1]:-1/2\"")->required();
  add_common(pieri_cmd, true);
  auto* multiply_cmd = chow->add_subcommand("multiply", "Product of classes");
  multiply_cmd->add_option("d", d)->required();
  multiply_cmd->add_option("n", n)->required();
  multiply_cmd->add_option("operands", operands, "Classes to multiply, after --")->required();
  add_common(multiply_cmd, true);
  auto* reduce_cmd = chow->add_subcommand("reduce", "Canonical representative modulo h");
  reduce_cmd->add_option("d", d)->required();
  reduce_cmd->add_option("n", n)->required();
  reduce_cmd->add_option("--class", cls, "Homogeneous class")->required();
  add_common(reduce_cmd, true);

  auto* bundle = app.add_subcommand("bundle", "Characteristic classes of the tangent bundle");
  bundle->add_option("d", d)->required();
  bundle->add_option("n", n)->required();
  bool todd = false, chern = false, character = false;
  auto* todd_flag = bundle->add_flag("--todd", todd, "Todd class");
  auto* chern_flag = bundle->add_flag("--chern", chern, "Chern classes");
  auto* ch_flag = bundle->add_flag("--ch", character, "Chern character");
  todd_flag->excludes(chern_flag)->excludes(ch_flag);
  chern_flag->excludes(ch_flag);
  bundle->add_option("--max-degree", max_degree, "Highest degree printed");
  add_common(bundle, true);

  auto* pf = app.add_subcommand("pfaffian", "Pfaffian tools");
  pf->require_subcommand(1);
  auto* classify = pf->add_subcommand("classify", "Classify B_m(n)");
  classify->add_option("m", m)->required();
  classify->add_option("n", n)->required();
  add_common(classify, false);
  auto* eval = pf->add_subcommand("eval", "Pfaffian and determinant of a matrix file");
  eval->add_option("file", path)->required();
  add_common(eval, false);

  // CLI11 splits "[a,b]" into a list for vector options; a leading blank
  // keeps bracketed partitions whole and is trimmed by the partition parser.
  std::vector<std::string> reversed;
  for (auto it = args.rbegin(); it != args.rend(); ++it)
    reversed.push_back(it->size() > 1 && it->front() == '[' && it->back() == ']' ? " " + *it : *it);
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAffirmative : kUsage;
  }

  try {
    if (roberts->parsed()) return cmd_roberts(args, d, n, verdict_only, common, out);
    if (table->parsed()) return cmd_table(args, max_n, threads, common, out);
    if (basis->parsed()) return cmd_chow_basis(args, d, n, degree, common, out);
    if (pieri_cmd->parsed()) return cmd_chow_pieri(args, d, n, m, cls, common, out);
    if (multiply_cmd->parsed()) return cmd_chow_multiply(args, d, n, operands, common, out);
    if (reduce_cmd->parsed()) return cmd_chow_reduce(args, d, n, cls, common, out);
    if (bundle->parsed()) {
      if (!todd && !chern && !character) throw UsageError("bundle needs --todd, --chern or --ch");
      return cmd_bundle(args, d, n, todd ? "todd" : chern ? "chern" : "ch", max_degree, common, out);
    }
    if (classify->parsed()) return cmd_pfaffian_classify(args, m, n, common, out);
    if (eval->parsed()) return cmd_pfaffian_eval(args, path, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace schubert::cli
