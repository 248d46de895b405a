#pragma once

// Report-producing commands behind the CLI.  Each command builds a Report of
// named checks; a report passes when every check does.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balkan/balkan_forms.hpp"
#include "balkan/cf_engine.hpp"
#include "balkan/miner_tools.hpp"

namespace balkan {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  std::string mode;  // exact, digits:N, upToSign, bound
  bool pass = false;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> results;
  std::vector<Check> checks;
  std::vector<long> depths_used;
  std::vector<std::string> notes;
  double wall_time = 0;

  bool passed() const;
  std::size_t failures() const;
  void add_exact(std::string name, std::string expected, std::string actual);
  void add_up_to_sign(std::string name, std::string expected, std::string actual, bool pass);
  void add_digits(std::string name, const HPReal& expected, const HPReal& actual, long digits);
  void add(Check c);
  void merge(Report&& other);

  std::string to_json() const;
  std::string to_text() const;
};

struct CommandOptions {
  long digits = 200;          // grid comparisons
  long derive_digits = 600;   // relation recovery inside grids
  long depth_cap = kDefaultDepthCap;
  std::string data_dir;       // overrides the built-in tables when set
  std::optional<long> c_max;  // shrinks the c range of grid verifications
  ZeroPolicy zero = ZeroPolicy::Eliminates;
  CatalanPolicy catalan = CatalanPolicy::Extended;
  unsigned threads = 0;       // 0: hardware concurrency
};

enum class ValueFormat { Exact, Decimal, Both };
ValueFormat parse_value_format(const std::string& s);

Report cmd_compute(long j, long kappa, long c, ValueFormat format, long digits, const CommandOptions& opt = {});

/// montenegro, bosnia, northern, kosovo, symmetry, croatia, ratio, altogether
Report cmd_verify(const std::string& area, const CommandOptions& opt = {});
std::vector<std::string> verify_areas();

/// 2, 3, 6, 7, 8, 9, 10, 11, 12, 13, 14
Report cmd_table(const std::string& name, const CommandOptions& opt = {});
std::vector<std::string> table_names();

/// table5, remark11, limits, inostranstvo
Report cmd_series(const std::string& check, const CommandOptions& opt = {});
std::vector<std::string> series_checks();

/// db_text in "j kappa c t" lines
Report cmd_decimate(const std::string& db_text, const std::string& db_label, Family family, const Box& box,
                    const CommandOptions& opt = {});

/// target alphabeta (j, kappa) or seeds (j)
Report cmd_derive(const std::string& target, long j, std::optional<long> kappa, long digits,
                  const CommandOptions& opt = {});

/// "8" -> [-8,8]^n; "lo:hi,lo:hi,..." -> explicit intervals
Box parse_box(const std::string& text, int arity);

}  // namespace balkan
