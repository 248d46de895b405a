#include "balkan/data_files.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "embedded_data.hpp"

namespace balkan {

std::string_view embedded_data(std::string_view name) {
  for (const auto& entry : detail::kEmbeddedData)
    if (entry.name == name) return entry.text;
  throw DomainError("no built-in data file '" + std::string(name) + "'");
}

std::vector<std::string> embedded_data_names() {
  std::vector<std::string> out;
  for (const auto& entry : detail::kEmbeddedData) out.emplace_back(entry.name);
  return out;
}

std::string load_data(const std::string& name, const std::string& dir) {
  if (!dir.empty()) {
    const auto path = std::filesystem::path(dir) / name;
    std::ifstream in(path);
    if (in) {
      std::ostringstream os;
      os << in.rdbuf();
      return os.str();
    }
  }
  return std::string(embedded_data(name));
}

std::vector<std::vector<std::string>> data_records(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) out.push_back(std::move(tokens));
  }
  return out;
}

namespace {

// split a record on "|" into groups
std::vector<std::vector<std::string>> groups(const std::vector<std::string>& rec) {
  std::vector<std::vector<std::string>> g(1);
  for (const auto& t : rec) {
    if (t == "|") g.emplace_back();
    else g.back().push_back(t);
  }
  return g;
}

long to_long(const std::string& s) {
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DomainError("not an integer: '" + s + "'");
  }
}

BigInt to_bigint(const std::string& s) {
  try {
    return BigInt(s);
  } catch (const std::exception&) {
    throw DomainError("not an integer: '" + s + "'");
  }
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw DomainError("malformed data record: " + what);
}

}  // namespace

std::vector<TripleRow> parse_triple_table(const std::string& text) {
  std::vector<TripleRow> out;
  for (const auto& rec : data_records(text)) {
    auto g = groups(rec);
    expect(g.size() == 3 && g[0].size() == 3 && g[2].size() == 2, "triple row");
    TripleRow r;
    r.a0 = to_bigint(g[0][0]);
    r.a1 = to_bigint(g[0][1]);
    r.a2 = to_bigint(g[0][2]);
    for (const auto& s : g[1]) r.shifts.push_back(to_long(s));
    r.t0 = to_long(g[2][0]);
    r.t1 = to_long(g[2][1]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SeedRow> parse_seed_table(const std::string& text) {
  std::vector<SeedRow> out;
  for (const auto& rec : data_records(text)) {
    expect(rec.size() == 5, "seed row");
    SeedRow r;
    r.j = to_long(rec[0]);
    r.alpha_a = parse_rational(rec[1]);
    r.alpha_b = parse_rational(rec[2]);
    r.beta_a = parse_rational(rec[3]);
    r.beta_b = parse_rational(rec[4]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Table5Row> parse_table5(const std::string& text) {
  std::vector<Table5Row> out;
  for (const auto& rec : data_records(text)) {
    auto g = groups(rec);
    expect(g.size() == 3 && g[0].size() == 2 && g[1].size() == 7 && g[2].size() == 3, "series row");
    Table5Row r;
    r.eps = static_cast<int>(to_long(g[0][0]));
    r.constant = g[0][1];
    for (const auto& s : g[1]) r.e.push_back(to_long(s));
    r.w1 = to_bigint(g[2][0]);
    r.w2 = to_bigint(g[2][1]);
    r.w3 = to_bigint(g[2][2]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RcRow> parse_rc_table(const std::string& text) {
  std::vector<RcRow> out;
  for (const auto& rec : data_records(text)) {
    expect(rec.size() == 4, "R_c row");
    out.push_back({to_long(rec[0]), to_bigint(rec[1]), to_bigint(rec[2]), to_bigint(rec[3])});
  }
  return out;
}

std::vector<RatioRow> parse_ratio_table(const std::string& text) {
  std::vector<RatioRow> out;
  for (const auto& rec : data_records(text)) {
    expect(rec.size() == 7, "ratio row");
    out.push_back({to_long(rec[0]), to_long(rec[1]), to_long(rec[2]), to_long(rec[3]), to_long(rec[4]),
                   to_long(rec[5]), parse_rational(rec[6])});
  }
  return out;
}

std::vector<PsiRow> parse_psi_table(const std::string& text) {
  std::vector<PsiRow> out;
  for (const auto& rec : data_records(text)) {
    auto g = groups(rec);
    expect(g.size() == 2 && g[0].size() == 2 && !g[1].empty(), "psi row");
    PsiRow r;
    r.which = g[0][0];
    r.i = to_long(g[0][1]);
    for (const auto& s : g[1]) r.coeffs.push_back(to_bigint(s));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace balkan
