#include "dzv/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "dzv/formal_space.hpp"
#include "dzv/numeric.hpp"
#include "dzv/period_space.hpp"
#include "dzv/relation.hpp"
#include "dzv/serialize.hpp"
#include "dzv/zagier.hpp"

namespace dzv {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, pretty };

std::string pretty(const Relation& rel) {
  std::ostringstream os;
  bool first = true;
  for (auto it = rel.coeffs.rbegin(); it != rel.coeffs.rend(); ++it) {
    const auto& [r, c] = *it;
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ")) << to_string(mag) << "*zeta("
       << r << "," << rel.weight - r << ")";
    first = false;
  }
  if (first) os << "0";
  os << " = " << to_string(rel.lambda) << "*zeta(" << rel.weight << ")";
  return os.str();
}

std::string pretty(const QMatrix& m, const std::vector<std::string>& row_labels) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i < static_cast<Eigen::Index>(row_labels.size()))
      os << row_labels[static_cast<std::size_t>(i)] << ": ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? "  " : "") << to_string(m(i, j));
    os << "\n";
  }
  return os.str();
}

std::string pretty(const NumericReport& r) {
  std::string s = format_real(r.value) + " +/- " + format_real(r.bound);
  if (r.residual) s += "  (residual " + format_real(*r.residual) + ")";
  return s;
}

Relation load_single(const Json& j) { return relation_from_json(j); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<Relation> load_relations(const std::string& path) {
  const Json j = read_json_file(path);
  std::vector<Relation> out;
  if (j.is_array())
    for (const auto& item : j) out.push_back(load_single(item));
  else
    out.push_back(load_single(j));
  return out;
}

Relation pick(const std::vector<Relation>& rels, int index, int weight, int type) {
  if (index < 0 || index >= static_cast<int>(rels.size()))
    throw DomainError("index " + std::to_string(index) + " out of range: W_" +
                      std::to_string(weight) + (type == 1 ? "^+" : "^-") + " has dimension " +
                      std::to_string(rels.size()));
  return rels[static_cast<std::size_t>(index)];
}

std::vector<Relation> generate(int type, int weight) {
  if (type == 1) return type1_relations(weight);
  if (type == 2) return type2_relations(weight);
  throw UsageError("--type must be 1 or 2");
}

struct Output {
  Json json;
  std::string text;  // pretty / csv rendering, when the command provides one
  std::string csv;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dzv: period polynomial relations between double zeta values of odd weight"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format_name = "json";
  std::string output_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--output", output_path, "Write output to FILE instead of stdout");

  int weight = 0, type = 0, index = -1, K = 0, s_arg = 0, r_arg = 0, d_arg = 0, i_arg = 0;
  std::string sign_name, mode, relation_path, kappa_text = "0";
  double prec = 1e-12;
  bool sub = false, with_left_kernel = false;
  std::vector<int> ks;

  auto* period = app.add_subcommand("period-basis", "Basis of W_k^+ or W_k^-");
  period->add_option("--weight", weight, "Even weight k >= 4")->required();
  period->add_option("--sign", sign_name, "plus | minus")
      ->required()
      ->check(CLI::IsMember({"plus", "minus"}));

  auto* relation = app.add_subcommand("relation", "Type I/II relations from W_K^+ / W_K^-");
  relation->add_option("--type", type, "1 (from W_K^+) or 2 (from W_K^-)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  relation->add_option("--weight", weight, "Even period-polynomial weight K")->required();
  relation->add_option("--index", index, "0-based basis index (default: all)");

  auto* verify = app.add_subcommand("verify", "Check relations from a JSON file");
  verify->add_option("--mode", mode, "formal | prop2 | numeric")
      ->required()
      ->check(CLI::IsMember({"formal", "prop2", "numeric"}));
  verify->add_option("--relation", relation_path, "Relation JSON (object or array)")->required();
  verify->add_option("--kappa", kappa_text, "Image of Z_{1,s} (numeric mode)");
  verify->add_option("--prec", prec, "Target absolute error (numeric mode)");

  auto* zagier = app.add_subcommand("zagier", "Zagier's matrix B_K");
  zagier->add_option("--K", K, "K >= 2, weight 2K+1")->required();
  zagier->add_flag("--sub", sub, "Drop the last row and column");
  zagier->add_flag("--left-kernel", with_left_kernel, "Also emit a left-kernel basis");

  auto* canonical = app.add_subcommand("canonical", "Canonical relation in odd weight k");
  canonical->add_option("--weight", weight, "Odd weight k >= 5")->required();

  auto* kernel_elem =
      app.add_subcommand("kernel-element", "Left-kernel element of B_K from a Type I/II relation");
  kernel_elem->add_option("--weight", weight, "Odd relation weight k")->required();
  kernel_elem->add_option("--type", type, "1 (from W_{k-1}^+) or 2 (from W_{k+1}^-)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  kernel_elem->add_option("--index", index, "0-based basis index")->required();

  auto* rank_cmd = app.add_subcommand("rank", "Rank of all Type I/II relations in odd weight k");
  rank_cmd->add_option("--weight", weight, "Odd weight k >= 7")->required();

  auto* zeta_cmd = app.add_subcommand("zeta", "Riemann zeta value");
  zeta_cmd->add_option("--s", s_arg, "Integer s >= 2")->required();
  zeta_cmd->add_option("--prec", prec, "Target absolute error");

  auto* dzeta_cmd = app.add_subcommand("dzeta", "Double zeta value");
  dzeta_cmd->add_option("--r", r_arg, "r >= 2")->required();
  dzeta_cmd->add_option("--s", s_arg, "s >= 1")->required();
  dzeta_cmd->add_option("--prec", prec, "Target absolute error");

  auto* rsum = app.add_subcommand("restricted-sum", "zeta(k)^-1 * sum over r = i mod d of zeta(r,k-r)");
  rsum->add_option("--d", d_arg, "Modulus d >= 1")->required();
  rsum->add_option("--i", i_arg, "Residue 0 <= i < d")->required();
  rsum->add_option("--k", ks, "Weight(s) k >= 3")->required();
  rsum->add_option("--prec", prec, "Target absolute error");

  auto* cconst = app.add_subcommand("c-const", "Limit constant C_d^(i)");
  cconst->add_option("--d", d_arg, "Modulus d >= 1")->required();
  cconst->add_option("--i", i_arg, "Residue 0 <= i < d")->required();
  cconst->add_option("--prec", prec, "Target absolute error");

  auto* selftest = app.add_subcommand("selftest", "Reproduce the published tables");

  std::vector<const char*> argv{"dzv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Format format = format_name == "csv"      ? Format::csv
                        : format_name == "pretty" ? Format::pretty
                                                  : Format::json;
  Output result;
  int status = 0;
  try {
    Precision precision;
    precision.epsilon = prec;
    Realization realization;
    realization.precision = precision;
    try {
      realization.kappa = std::stold(kappa_text);
    } catch (const std::exception&) {
      throw UsageError("--kappa must be a real number");
    }

    if (*period) {
      const auto basis = period_space_basis(weight, parse_sign(sign_name));
      result.json = to_json(basis);
      std::ostringstream os;
      for (const auto& p : basis.basis) os << p << "\n";
      result.text = os.str();
    } else if (*relation) {
      const auto rels = generate(type, weight);
      if (index >= 0) {
        const Relation rel = pick(rels, index, weight, type);
        result.json = to_json(rel);
        result.text = pretty(rel) + "\n";
      } else {
        result.json = Json::array();
        for (const auto& rel : rels) {
          result.json.push_back(to_json(rel));
          result.text += pretty(rel) + "\n";
        }
      }
    } else if (*verify) {
      const auto rels = load_relations(relation_path);
      Json checks = Json::array();
      for (const auto& rel : rels) {
        Json j;
        if (mode == "formal") {
          const auto check = check_relation(build_space(rel.weight), rel);
          j = to_json(check);
          j["lambda_matches"] = check.holds && check.lambda && *check.lambda == rel.lambda;
        } else if (mode == "prop2") {
          const auto lambda = prop2_lambda(rel);
          j = Json{{"holds", lambda.has_value()}};
          j["lambda"] = lambda ? to_json(*lambda) : Json(nullptr);
          j["lambda_matches"] = lambda && *lambda == rel.lambda;
        } else {
          j = to_json(verify_numeric(rel, realization));
        }
        checks.push_back(j);
        result.text += pretty(rel) + "\n  " + j.dump() + "\n";
      }
      result.json = rels.size() == 1 ? checks[0] : checks;
    } else if (*zagier) {
      const ZagierMatrix z = zagier_matrix(K);
      ZagierMatrix shown = z;
      if (sub) {
        shown.entries = zagier_submatrix(K);
        shown.row_labels.pop_back();
        shown.col_labels.pop_back();
      }
      result.json = to_json(shown);
      result.json["submatrix"] = sub;
      result.text = pretty(shown.entries, shown.row_labels);
      if (with_left_kernel) {
        Json basis = Json::array();
        for (const auto& v : left_kernel(shown.entries)) {
          basis.push_back(to_json(v));
          result.text += "left kernel: " + to_json(v).dump() + "\n";
        }
        result.json["left_kernel"] = basis;
      }
    } else if (*canonical) {
      const Relation rel = canonical_relation(weight);
      result.json = to_json(rel);
      result.text = pretty(rel) + "\n";
    } else if (*kernel_elem) {
      if (weight % 2 == 0 || weight < 5)
        throw DomainError("kernel-element: weight must be odd and >= 5");
      const int source = type == 1 ? weight - 1 : weight + 1;
      const Relation rel = pick(generate(type, source), index, source, type);
      const KernelElement elem = combine_kernel_element(rel);
      const int half = (weight - 1) / 2;
      result.json = Json{{"weight", weight},
                         {"labels", zagier_matrix(half).row_labels},
                         {"vector", to_json(elem.vector)},
                         {"novel", elem.novel},
                         {"source", to_json(rel)}};
      result.text = to_json(elem.vector).dump() + "\n";
    } else if (*rank_cmd) {
      const int r = relation_rank(weight);
      const int expected = dim_cusp_forms(weight - 1) + dim_cusp_forms(weight + 1);
      result.json = Json{{"weight", weight}, {"rank", r}, {"dim_cusp_forms_sum", expected}};
      result.text = std::to_string(r) + "\n";
    } else if (*zeta_cmd) {
      const auto rep = zeta(s_arg, precision);
      result.json = to_json(rep);
      result.text = pretty(rep) + "\n";
      result.csv = "s,value,bound\n" + std::to_string(s_arg) + "," + format_real(rep.value) + "," +
                   format_real(rep.bound) + "\n";
    } else if (*dzeta_cmd) {
      const auto rep = double_zeta(r_arg, s_arg, precision);
      result.json = to_json(rep);
      result.text = pretty(rep) + "\n";
      result.csv = "r,s,value,bound\n" + std::to_string(r_arg) + "," + std::to_string(s_arg) +
                   "," + format_real(rep.value) + "," + format_real(rep.bound) + "\n";
    } else if (*rsum) {
      const auto rows = convergence_table(d_arg, i_arg, ks, precision);
      const auto limit = c_constant(d_arg, i_arg, precision);
      Json table = Json::array();
      result.csv = "k,value,bound\n";
      for (const auto& row : rows) {
        Json j = to_json(row.report);
        j["k"] = row.k;
        table.push_back(j);
        result.csv += std::to_string(row.k) + "," + format_real(row.report.value) + "," +
                      format_real(row.report.bound) + "\n";
        result.text += "k=" + std::to_string(row.k) + ": " + pretty(row.report) + "\n";
      }
      result.json = Json{{"d", d_arg}, {"i", i_arg}, {"limit", to_json(limit)}};
      if (rows.size() == 1) {
        result.json["k"] = rows[0].k;
        const Json report = to_json(rows[0].report);
        for (const auto& [key, value] : report.items()) result.json[key] = value;
      } else {
        result.json["table"] = table;
      }
      result.text += "limit C: " + pretty(limit) + "\n";
    } else if (*cconst) {
      const auto rep = c_constant(d_arg, i_arg, precision);
      result.json = to_json(rep);
      result.text = pretty(rep) + "\n";
      result.csv = "d,i,value,bound\n" + std::to_string(d_arg) + "," + std::to_string(i_arg) + "," +
                   format_real(rep.value) + "," + format_real(rep.bound) + "\n";
    } else if (*selftest) {
      const auto checks = run_selftest();
      Json list = Json::array();
      for (const auto& c : checks) {
        list.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        result.text += std::string(c.passed ? "[PASS] " : "[FAIL] ") + c.name +
                       (c.detail.empty() ? "" : "  " + c.detail) + "\n";
        if (!c.passed) status = 1;
      }
      result.json = Json{{"passed", status == 0}, {"checks", list}};
    }

    if (format == Format::csv && result.csv.empty())
      throw UsageError("--format csv is only available for zeta, dzeta, restricted-sum and c-const");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }

  std::string rendered;
  switch (format) {
    case Format::json: rendered = result.json.dump(2) + "\n"; break;
    case Format::csv: rendered = result.csv; break;
    case Format::pretty: rendered = result.text.empty() ? result.json.dump(2) + "\n" : result.text; break;
  }
  if (output_path.empty()) {
    out << rendered;
  } else {
    std::ofstream file(output_path);
    if (!file) {
      err << "error: cannot write '" << output_path << "'\n";
      return 1;
    }
    file << rendered;
  }
  return status;
}

}  // namespace dzv
