#include <sstream>

#include "common.hpp"

namespace balkan {

using namespace detail;

ValueFormat parse_value_format(const std::string& s) {
  if (s == "exact") return ValueFormat::Exact;
  if (s == "decimal") return ValueFormat::Decimal;
  if (s == "both") return ValueFormat::Both;
  throw DomainError("unknown value format '" + s + "' (exact, decimal, both)");
}

Box parse_box(const std::string& text, int arity) {
  if (text.find(':') == std::string::npos) {
    long r;
    std::size_t pos = 0;
    try {
      r = std::stol(text, &pos);
    } catch (const std::exception&) {
      throw DomainError("malformed box '" + text + "'");
    }
    if (pos != text.size() || r < 0) throw DomainError("malformed box '" + text + "'");
    return cube(r, arity);
  }
  Box box;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    long lo, hi;
    char colon;
    std::istringstream ps(part);
    if (!(ps >> lo >> colon >> hi) || colon != ':' || hi < lo) throw DomainError("malformed box interval '" + part + "'");
    box.emplace_back(lo, hi);
  }
  if (static_cast<int>(box.size()) != arity)
    throw DomainError("box needs " + std::to_string(arity) + " intervals, got " + std::to_string(box.size()));
  return box;
}

Report cmd_compute(long j, long kappa, long c, ValueFormat format, long digits, const CommandOptions& opt) {
  Stopwatch sw;
  if (digits < 1) throw DomainError("digits must be positive");
  if (c < 1) throw DomainError("c must be >= 1");
  Report r;
  r.command = "compute";
  r.parameters = {{"j", std::to_string(j)}, {"kappa", std::to_string(kappa)}, {"c", std::to_string(c)},
                  {"digits", std::to_string(digits)}};
  const CFSpec spec = balkan_cf_spec(j, kappa, c);
  const bool even = j % 2 == 0;
  if (!even && j >= 1) {
    if (kappa < 0) throw DomainError("kappa must be >= 0");
    r.results.emplace_back("area", area_name(classify(j, kappa)));
  }
  const QExact q = even ? recover_qexact(spec, ConstKind::Log2, std::max(300L, digits), opt.depth_cap)
                        : q_exact(j, kappa, c);
  if (format != ValueFormat::Decimal) {
    r.results.emplace_back("kind", kind_name(q.kind));
    r.results.emplace_back("triple", triple(q.a0, q.a1, q.a2));
    r.results.emplace_back("exact", q.kind == ConstKind::Rational ? to_string(q.rational_value()) : q.to_string());
  }
  if (format != ValueFormat::Exact) {
    const HPReal v = spec.termination ? HPReal::from_rational(eval_cf_convergent(spec, *spec.termination), digits)
                                      : q.value(digits);
    r.results.emplace_back("decimal", v.to_string(digits));
  }
  compare_with_cf(r, "closed form = CF", q, spec, digits, opt.depth_cap);
  if (even && q.kind != ConstKind::Rational)
    r.notes.push_back("even j: triple recovered by lattice reduction, not a proven closed form");
  r.wall_time = sw.seconds();
  return r;
}

Report cmd_decimate(const std::string& db_text, const std::string& db_label, Family family, const Box& box,
                    const CommandOptions& opt) {
  Stopwatch sw;
  const MiningDB db = parse_mining_db(db_text);
  Report r;
  r.command = "decimate";
  std::string box_str;
  for (const auto& [lo, hi] : box) box_str += (box_str.empty() ? "" : ",") + std::to_string(lo) + ":" + std::to_string(hi);
  r.parameters = {{"db", db_label},
                  {"entries", std::to_string(db.entries.size())},
                  {"family", family_name(family)},
                  {"box", box_str},
                  {"policy", zero_policy_name(opt.zero)}};
  if (family == Family::Catalan) r.parameters.emplace_back("catalanPolicy", catalan_policy_name(opt.catalan));
  const DecimateResult res = decimate(family, box, db, {opt.zero, opt.catalan});
  r.results.emplace_back("boxSize", std::to_string(res.box_size));
  r.results.emplace_back("survivors", std::to_string(res.survivors.size()));
  std::string per;
  for (std::size_t i = 0; i < db.entries.size(); ++i)
    per += (i ? " " : "") + std::string("c=") + std::to_string(db.entries[i].c) + ":" +
           std::to_string(res.eliminated_per_entry[i]);
  r.results.emplace_back("eliminatedPerEntry", per);

  // reference counts, when this is one of the recorded runs
  bool symmetric = true;
  for (const auto& [lo, hi] : box) symmetric = symmetric && lo == -hi && hi == box.front().second;
  if (db_label == "table6" && symmetric) {
    const std::string radius = std::to_string(box.front().second);
    for (const auto& rec : data_records(load_data("decimation.txt", opt.data_dir)))
      if (rec.size() == 4 && rec[0] == family_name(family) && rec[1] == radius && rec[2] == "table6")
        r.add_exact("survivors", rec[3], std::to_string(res.survivors.size()));
    if (family == Family::Affine && radius == "8")
      for (const auto& rec : data_records(load_data("table7.txt", opt.data_dir)))
        for (std::size_t i = 0; i < db.entries.size(); ++i)
          if (rec.size() == 2 && std::to_string(db.entries[i].c) == rec[0])
            r.add_exact("eliminated by c=" + rec[0], rec[1], std::to_string(res.eliminated_per_entry[i]));
  }
  r.wall_time = sw.seconds();
  return r;
}

Report cmd_derive(const std::string& target, long j, std::optional<long> kappa, long digits, const CommandOptions& opt) {
  Stopwatch sw;
  Report r;
  r.command = "derive";
  r.parameters = {{"target", target}, {"j", std::to_string(j)}, {"digits", std::to_string(digits)}};
  if (target == "alphabeta") {
    if (!kappa) throw DomainError("derive alphabeta needs kappa");
    r.parameters.emplace_back("kappa", std::to_string(*kappa));
    const AlphaBeta ab = derive_alphabeta_numeric(j, *kappa, digits);
    r.results.emplace_back("alpha", to_string(ab.alpha));
    r.results.emplace_back("beta", to_string(ab.beta));
    r.add_exact("closed form", str(alphabeta_exact(j, *kappa)), str(ab));
    if (j >= 2 * *kappa + 5 && *kappa >= 1)
      r.add_exact("psi/mu", str(croatia_alphabeta((j - 2 * *kappa - 3) / 2, j)), str(ab));
    if (j >= 3 && *kappa >= j - 2)
      r.add_exact("kappa-level", str(kosovo_kappa_level(j, kosovo_j_seeds(j), *kappa)), str(ab));
  } else if (target == "seeds") {
    const Seeds4 s = derive_seeds_numeric(j, digits);
    r.results.emplace_back("seeds", str(s));
    r.add_exact("j-level recurrence", str(kosovo_j_seeds(j)), str(s));
    for (const auto& row : parse_seed_table(load_data("table13_listing.txt", opt.data_dir)))
      if (row.j == j) r.add_exact("reference row", str(Seeds4{row.alpha_a, row.alpha_b, row.beta_a, row.beta_b}), str(s));
  } else {
    throw DomainError("unknown derive target '" + target + "' (alphabeta, seeds)");
  }
  r.wall_time = sw.seconds();
  return r;
}

}  // namespace balkan
