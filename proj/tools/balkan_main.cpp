#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "balkan/data_files.hpp"
#include "balkan/errors.hpp"
#include "balkan/verifier.hpp"

namespace {

using namespace balkan;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// --db accepts a file, "table6", or "target:j,kappa,c_lo,c_hi"
std::string db_text(const std::string& db, const CommandOptions& opt) {
  if (db == "table6") return load_data("table6.txt", opt.data_dir);
  if (db.rfind("target:", 0) == 0) {
    long v[4];
    char sep[3];
    std::istringstream in(db.substr(7));
    in >> v[0] >> sep[0] >> v[1] >> sep[1] >> v[2] >> sep[2] >> v[3];
    if (!in || sep[0] != ',' || sep[1] != ',' || sep[2] != ',') throw DomainError("malformed db '" + db + "'");
    return serialize_mining_db(target_db(v[0], v[1], v[2], v[3]));
  }
  return read_file(db);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed forms and verification for the Balkans continued fractions"};
  app.require_subcommand(1);

  CommandOptions opt;
  std::string format = "text";
  std::string policy = "zero-eliminates", catalan_policy = "extended";
  long threads = 0;
  std::optional<long> digits;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--digits", digits, "working precision in decimal digits");
    sub->add_option("--depth-cap", opt.depth_cap, "largest CF depth tried")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--data-dir", opt.data_dir, "directory whose table files replace the built-in ones");
    sub->add_option("--threads", threads, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
  };

  long j = 0, kappa = 0, c = 0;
  std::string value_format = "both";
  auto* compute = app.add_subcommand("compute", "closed form and decimal value of Q(j,kappa,c)");
  compute->add_option("j,--j", j)->required();
  compute->add_option("kappa,--kappa", kappa)->required();
  compute->add_option("c,--c", c)->required();
  compute->add_option("what,--what", value_format, "exact, decimal or both")
      ->check(CLI::IsMember({"exact", "decimal", "both"}));
  common(compute);

  std::string area;
  std::optional<long> box_c;
  auto* verify = app.add_subcommand("verify", "grid verification of one region's closed forms");
  verify->add_option("area", area)->required()->check(CLI::IsMember(verify_areas()));
  verify->add_option("--box,--c-max", box_c, "largest c in the grid")->check(CLI::PositiveNumber);
  verify->add_option("--derive-digits", opt.derive_digits, "precision of relation recovery inside the grid");
  common(verify);

  std::string table;
  auto* table_cmd = app.add_subcommand("table", "regenerate a table and diff against the stored copy");
  table_cmd->add_option("name", table)->required()->check(CLI::IsMember(table_names()));
  table_cmd->add_option("--policy", policy)->check(CLI::IsMember({"zero-eliminates", "zero-skips"}));
  table_cmd->add_option("--catalan-policy", catalan_policy)->check(CLI::IsMember({"extended", "negative-eliminates"}));
  common(table_cmd);

  std::string check;
  auto* series = app.add_subcommand("series", "series relations, limits and the side families");
  series->add_option("check", check)->required()->check(CLI::IsMember(series_checks()));
  common(series);

  std::string db = "table6", family = "affine", box = "8";
  auto* decimate_cmd = app.add_subcommand("decimate", "filter a candidate box through a mining database");
  decimate_cmd->add_option("--db", db, "file of 'j kappa c t' lines, table6, or target:j,kappa,c_lo,c_hi");
  decimate_cmd->add_option("--family", family)->check(CLI::IsMember({"affine", "catalan", "product"}));
  decimate_cmd->add_option("--box", box, "radius r for [-r,r]^n, or lo:hi,lo:hi,...");
  decimate_cmd->add_option("--policy", policy)->check(CLI::IsMember({"zero-eliminates", "zero-skips"}));
  decimate_cmd->add_option("--catalan-policy", catalan_policy)
      ->check(CLI::IsMember({"extended", "negative-eliminates"}));
  common(decimate_cmd);

  std::string target;
  long dj = 0;
  std::optional<long> dkappa;
  auto* derive = app.add_subcommand("derive", "recover (alpha, beta) or j-seeds by lattice reduction");
  derive->add_option("target", target)->required()->check(CLI::IsMember({"alphabeta", "seeds"}));
  derive->add_option("j,--j", dj)->required();
  derive->add_option("kappa,--kappa", dkappa);
  common(derive);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    opt.threads = static_cast<unsigned>(threads);
    opt.zero = parse_zero_policy(policy);
    opt.catalan = parse_catalan_policy(catalan_policy);
    if (digits && *digits < 1) throw DomainError("--digits must be positive");
    Report report;
    if (*compute) {
      report = cmd_compute(j, kappa, c, parse_value_format(value_format), digits.value_or(50), opt);
    } else if (*verify) {
      if (digits) opt.digits = *digits;
      opt.c_max = box_c;
      report = cmd_verify(area, opt);
    } else if (*table_cmd) {
      report = cmd_table(table, opt);
    } else if (*series) {
      report = cmd_series(check, opt);
    } else if (*decimate_cmd) {
      const Family f = parse_family(family);
      report = cmd_decimate(db_text(db, opt), db, f, parse_box(box, family_arity(f)), opt);
    } else if (*derive) {
      const long fallback = target == "seeds" ? 5000 : 2000;
      report = cmd_derive(target, dj, dkappa, digits.value_or(fallback), opt);
    }
    std::cout << (format == "json" ? report.to_json() : report.to_text()) << '\n';
    return report.passed() ? 0 : 1;
  } catch (const NoRelation& e) {
    std::cerr << "no relation: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
