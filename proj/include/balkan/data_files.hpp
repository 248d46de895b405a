#pragma once

// Reference tables shipped in data/ and compiled into the library.  A data
// directory given at run time takes precedence over the built-in copy.

#include <string>
#include <string_view>
#include <vector>

#include "balkan/exactnum.hpp"

namespace balkan {

/// Built-in copy of data/<name>; throws DomainError for unknown names.
std::string_view embedded_data(std::string_view name);
std::vector<std::string> embedded_data_names();

/// Contents of <dir>/<name> when dir is non-empty and the file exists, else the built-in copy.
std::string load_data(const std::string& name, const std::string& dir = {});

/// Non-empty, non-comment lines split on whitespace; "|" tokens are kept.
std::vector<std::vector<std::string>> data_records(const std::string& text);

struct TripleRow {
  BigInt a0, a1, a2;
  std::vector<long> shifts;  // P(n) = -2n prod (n + s)
  long t0 = 0, t1 = 0;       // T(n) = 3n^2 + t1 n + t0
};
std::vector<TripleRow> parse_triple_table(const std::string& text);

struct SeedRow {
  long j = 0;
  BigRational alpha_a, alpha_b, beta_a, beta_b;
};
std::vector<SeedRow> parse_seed_table(const std::string& text);

struct Table5Row {
  int eps = 0;
  std::string constant;  // pi, G, log2
  std::vector<long> e;   // 7 exponents
  BigInt w1, w2, w3;
};
std::vector<Table5Row> parse_table5(const std::string& text);

struct RcRow {
  long c = 0;
  BigInt a0, a1, a2;
};
std::vector<RcRow> parse_rc_table(const std::string& text);

struct RatioRow {
  long j, kappa, c, j2, kappa2, c2;
  BigRational ratio;
};
std::vector<RatioRow> parse_ratio_table(const std::string& text);

struct PsiRow {
  std::string which;  // psi1 / psi2
  long i = 0;
  std::vector<BigInt> coeffs;
};
std::vector<PsiRow> parse_psi_table(const std::string& text);

}  // namespace balkan
