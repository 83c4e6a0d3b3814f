// rmc: construct rank-metric codes over small finite fields, decide
// LCD/MRD/anticode status, and run the full claim-audit suite.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "rankmetric/audit.hpp"
#include "rankmetric/report.hpp"

namespace {

using namespace rankmetric;

int run_suite_command(const std::string& towers_arg, std::uint64_t seed,
                      std::uint64_t max_enum, const std::string& out_path,
                      const std::string& format) {
  SuiteConfig cfg = SuiteConfig::defaults();
  cfg.seed = seed;
  cfg.max_enum = max_enum;
  if (!towers_arg.empty()) {
    cfg.towers.clear();
    std::string item;
    std::istringstream ss(towers_arg);
    while (std::getline(ss, item, ';')) {
      if (item.empty()) continue;
      TowerParams tp;
      if (std::sscanf(item.c_str(), "%u,%u,%u", &tp.p, &tp.e, &tp.m) != 3)
        throw ConfigError("tower spec must look like p,e,m (got '" + item + "')");
      cfg.towers.push_back(tp);
    }
  }
  const std::vector<Certificate> certs = run_suite(cfg);
  const std::string payload =
      format == "csv" ? certificates_to_csv(certs) : certificates_to_ndjson(certs);
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file " + out_path);
    f << payload;
  }
  return worst_verdict(certs) == Verdict::FAIL ? 1 : 0;
}

Json parse_json_arg(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON for ") + what + ": " + e.what());
  }
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-metric code constructions, checks, and claim audits"};
  app.require_subcommand(1);

  std::uint32_t p = 2, e = 1, m = 2;
  std::size_t n_arg = 0, k = 1, s = 1;
  std::uint64_t seed = 0, max_enum = kDefaultEnumCap;
  std::string basis_kind = "self-dual", basis_arg, g_arg, code_arg, u_arg;
  std::string out_path, format = "json", towers_arg;

  auto add_tower_flags = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "prime characteristic");
    cmd->add_option("--e", e, "base extension degree");
    cmd->add_option("--m", m, "top extension degree");
  };

  auto* field_cmd = app.add_subcommand("field", "describe a field tower");
  add_tower_flags(field_cmd);

  auto* basis_cmd = app.add_subcommand("basis", "basis searches and duals");
  basis_cmd->require_subcommand(1);
  auto* basis_sd = basis_cmd->add_subcommand("find-self-dual", "search for a self-dual basis");
  add_tower_flags(basis_sd);
  basis_sd->add_option("--seed", seed, "search seed");
  auto* basis_asd = basis_cmd->add_subcommand("find-almost", "search for an almost self-dual basis");
  add_tower_flags(basis_asd);
  basis_asd->add_option("--seed", seed, "search seed");
  auto* basis_dual = basis_cmd->add_subcommand("dual", "trace-dual of a given basis");
  add_tower_flags(basis_dual);
  basis_dual->add_option("--basis", basis_arg, "basis as JSON element array")->required();

  auto* gab_cmd = app.add_subcommand("gabidulin", "vector-side codes");
  gab_cmd->require_subcommand(1);
  auto* gab_new = gab_cmd->add_subcommand("new", "build a code from a Moore matrix");
  add_tower_flags(gab_new);
  gab_new->add_option("--n", n_arg, "length (defaults to m)");
  gab_new->add_option("--k", k, "dimension")->required();
  gab_new->add_option("--s", s, "also report the s-fold cartesian power");
  gab_new->add_option("--seed", seed, "basis search seed");
  gab_new->add_option("--basis-kind", basis_kind, "self-dual | almost");
  gab_new->add_option("--g", g_arg, "explicit generator vector (JSON element array)");
  gab_new->add_option("--basis", basis_arg, "explicit basis (JSON element array)");
  gab_new->add_option("--max-enum", max_enum, "codeword enumeration cap");
  auto* gab_check = gab_cmd->add_subcommand("check", "report on a serialized code");
  gab_check->add_option("--code", code_arg, "vector code JSON")->required();
  gab_check->add_option("--max-enum", max_enum, "codeword enumeration cap");

  auto* del_cmd = app.add_subcommand("delsarte", "matrix-side codes");
  del_cmd->require_subcommand(1);
  auto* del_expand = del_cmd->add_subcommand("expand", "expand a Gabidulin code to a matrix code");
  add_tower_flags(del_expand);
  del_expand->add_option("--n", n_arg, "length (defaults to m)");
  del_expand->add_option("--k", k, "dimension")->required();
  del_expand->add_option("--s", s, "expand the s-fold cartesian power");
  del_expand->add_option("--seed", seed, "basis search seed");
  del_expand->add_option("--basis-kind", basis_kind, "self-dual | almost");
  del_expand->add_option("--g", g_arg, "explicit generator vector (JSON element array)");
  del_expand->add_option("--basis", basis_arg, "explicit basis (JSON element array)");
  del_expand->add_option("--max-enum", max_enum, "codeword enumeration cap");
  auto* del_anticode = del_cmd->add_subcommand("anticode", "ambient restriction of a subspace");
  del_anticode->add_option("--p", p, "prime characteristic");
  del_anticode->add_option("--e", e, "base extension degree");
  del_anticode->add_option("--n", n_arg, "number of rows")->required();
  del_anticode->add_option("--m", m, "number of columns");
  del_anticode->add_option("--u", u_arg, "subspace basis rows (JSON)")->required();
  del_anticode->add_option("--max-enum", max_enum, "codeword enumeration cap");
  auto* del_check = del_cmd->add_subcommand("check", "report on a serialized matrix code");
  del_check->add_option("--code", code_arg, "matrix code JSON")->required();
  del_check->add_option("--max-enum", max_enum, "codeword enumeration cap");

  auto* suite_cmd = app.add_subcommand("suite", "claim audits");
  auto* suite_run = suite_cmd->add_subcommand("run", "run the audit suite");
  suite_run->add_option("--towers", towers_arg, "semicolon-separated p,e,m triples");
  suite_run->add_option("--seed", seed, "suite seed");
  suite_run->add_option("--max-enum", max_enum, "codeword enumeration cap");
  suite_run->add_option("--out", out_path, "write certificates to this file");
  suite_run->add_option("--format", format, "json (ndjson) | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    // CLI11 prints its own message; exit 2 marks a usage error.
    const int rc = app.exit(err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*field_cmd) {
      print_json(report_field(p, e, m));
    } else if (*basis_sd) {
      print_json(report_basis_search(p, e, m, /*almost=*/false, seed));
    } else if (*basis_asd) {
      print_json(report_basis_search(p, e, m, /*almost=*/true, seed));
    } else if (*basis_dual) {
      print_json(report_dual_basis(p, e, m, parse_json_arg(basis_arg, "--basis")));
    } else if (*gab_new || *del_expand) {
      CodeRequest req;
      req.p = p;
      req.e = e;
      req.m = m;
      if (n_arg > 0) req.n = n_arg;
      req.k = k;
      req.s = s;
      req.seed = seed;
      req.max_enum = max_enum;
      req.basis_kind = basis_kind;
      if (!g_arg.empty()) req.generators = parse_json_arg(g_arg, "--g");
      if (!basis_arg.empty()) req.basis_json = parse_json_arg(basis_arg, "--basis");
      print_json(*gab_new ? report_gabidulin(req) : report_expand(req));
    } else if (*gab_check) {
      VectorCode c = vector_code_from_json(parse_json_arg(code_arg, "--code"));
      print_json(report_vector_code(c, max_enum));
    } else if (*del_anticode) {
      print_json(report_anticode(p, e, n_arg, m, parse_json_arg(u_arg, "--u"), max_enum));
    } else if (*del_check) {
      MatrixCode c = matrix_code_from_json(parse_json_arg(code_arg, "--code"));
      print_json(report_matrix_code(c, max_enum));
    } else if (*suite_run) {
      return run_suite_command(towers_arg, seed, max_enum, out_path, format);
    }
  } catch (const rankmetric::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
