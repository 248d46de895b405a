#include <cmath>
#include <array>
#include <cstdio>

#include "common.hpp"

namespace balkan {

using namespace detail;

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Check bound_check(std::string name, double value, double bound) {
  return {std::move(name), "|x| <= " + sci(bound), sci(value), "bound", std::fabs(value) <= bound};
}

constexpr long kSeriesDigits = 50;
constexpr long kSeriesTerms = 20000;

Report series_table5(const CommandOptions& opt) {
  Report r;
  const auto rows = parse_table5(load_data("table5.txt", opt.data_dir));
  merge_all(r, run_grid(rows.size(), opt.threads, [&](std::size_t idx) {
    Report part;
    const auto& row = rows[idx];
    std::string name = "eps=" + std::to_string(row.eps) + " " + row.constant + " e=";
    for (std::size_t i = 0; i < row.e.size(); ++i) name += (i ? "," : "") + std::to_string(row.e[i]);
    auto term_den = [&](long n) {
      BigInt d = 1;
      for (long i = 1; i <= 7; ++i) d *= ipow(BigInt(2 * n + 2 * i - 3 + row.eps), row.e[i - 1]);
      return d;
    };
    HPReal s = HPReal::from_integer(0, kSeriesDigits);
    long n = 1;
    const BigInt stop = pow10(kSeriesDigits - 10);
    for (; n <= kSeriesTerms; ++n) {
      const BigInt d = term_den(n);
      const HPReal t = HPReal::from_rational(make_rational(BigInt(n % 2 ? 1 : -1), d), kSeriesDigits);
      s = s + t;
      if (d > stop) {
        ++n;
        break;
      }
    }
    // alternating with decreasing terms: the tail is bounded by the first omitted term
    const double tail = 1.0 / term_den(n).get_d();
    const HPReal k = constant_value(row.constant, kSeriesDigits);
    const HPReal res = s * row.w1 + k * row.w2 + HPReal::from_integer(row.w3, kSeriesDigits);
    part.add(bound_check(name, res.to_double(), std::fabs(row.w1.get_d()) * tail + 1e-15));
    return part;
  }));
  r.parameters.emplace_back("maxTerms", std::to_string(kSeriesTerms));
  return r;
}

Report series_remark11(const CommandOptions& opt) {
  Report r;
  const long digits = 50;
  for (long c = 2; c <= 25; ++c) {
    const std::string name = "L(" + std::to_string(c) + ") closed form";
    const CFDecimal d = eval_cf_decimal(log2_family_spec(c), digits, opt.depth_cap);
    r.depths_used.push_back(d.depth);
    r.add_digits(name, d.value, log2_family_closed(c).value(digits), digits);
  }
  const HPReal inv = HPReal::from_integer(1, digits + 10) / constant_value(ConstantName::Log2, digits + 10);
  const CFDecimal d2 = eval_cf_decimal(log2_family_spec(2), digits, opt.depth_cap);
  r.add_digits("L(2) = 1/log 2", inv, d2.value, digits);
  return r;
}

Report series_limits(const CommandOptions& opt) {
  Report r;
  const long digits = 20;
  auto q = [&](long j, long k, long c) {
    const CFDecimal d = eval_cf_decimal(balkan_cf_spec(j, k, c), digits, opt.depth_cap);
    r.depths_used.push_back(d.depth);
    return d.value;
  };
  const long c = 200;
  for (auto [j, k] : std::vector<std::pair<long, long>>{{1, 1}, {3, 2}, {5, 4}}) {
    const double diff = (q(j, k, c + 1) - q(j, k, c)).to_double();
    r.add(bound_check("Q" + jkc(j, k, c + 1) + " - Q" + jkc(j, k, c) + " - 2", diff - 2, 0.05));
  }
  const long kappa = 200;
  for (long j : {1L, 3L, 5L}) {
    const double diff = (q(j, kappa + 1, 1) - q(j, kappa, 1)).to_double();
    r.add(bound_check("Q" + jkc(j, kappa + 1, 1) + " - Q" + jkc(j, kappa, 1) + " - 2j", diff - 2.0 * j, 0.05));
  }
  return r;
}

Report series_inostranstvo(const CommandOptions& opt) {
  Report r;
  for (long i = 0; i <= 14; ++i) {
    const CFDecimal d = eval_cf_decimal(inostranstvo_spec(1, 1, 1, i), 80, opt.depth_cap);
    r.depths_used.push_back(d.depth);
    r.add_digits("Q'_" + std::to_string(i), d.value, inostranstvo_q1(i).value(80), 80);
  }
  merge_all(r, run_grid(11, opt.threads, [&](std::size_t i) {
    Report part;
    const std::string name = "Q''_" + std::to_string(i) + " a0/a2";
    try {
      const QExact q = recover_qexact(inostranstvo_spec(1, 3, 3, static_cast<long>(i)), ConstKind::G, 180, opt.depth_cap);
      part.add_exact(name, to_string(inostranstvo_q2_ratio(static_cast<long>(i))),
                     q.a2 == 0 ? std::string("no G term") : to_string(make_rational(q.a0, q.a2)));
    } catch (const std::exception& e) {
      part.add(error_check(name, e));
    }
    return part;
  }));
  // parity box: tau = a+p, eta = b+p, mu = c+p
  std::vector<std::array<long, 4>> box;
  for (long p = 0; p <= 1; ++p)
    for (long a = 0; a <= 6; a += 2)
      for (long i = 0; i <= 6; ++i)
        for (long c = 0; c <= 6; c += 2)
          for (long b = a; b <= 6; b += 2) box.push_back({a + p, b + p, c + p, i});
  merge_all(r, run_grid(box.size(), opt.threads, [&](std::size_t n) {
    Report part;
    const auto [t, e, m, i] = box[n];
    const CFSpec spec = inostranstvo_spec(t, e, m, i);
    const std::string name = spec.label + " relation in G";
    try {
      const QExact q = recover_qexact(spec, ConstKind::G, 80, opt.depth_cap);
      part.add({name, "a0/(a1 + a2*G)", q.to_string(), "digits:80", true});
    } catch (const std::exception& ex) {
      part.add(error_check(name, ex));
    }
    return part;
  }));
  return r;
}

}  // namespace

std::vector<std::string> series_checks() { return {"table5", "remark11", "limits", "inostranstvo"}; }

Report cmd_series(const std::string& check, const CommandOptions& opt) {
  Stopwatch sw;
  Report r;
  if (check == "table5") r = series_table5(opt);
  else if (check == "remark11") r = series_remark11(opt);
  else if (check == "limits") r = series_limits(opt);
  else if (check == "inostranstvo") r = series_inostranstvo(opt);
  else throw DomainError("unknown series check '" + check + "'");
  r.command = "series";
  r.parameters.insert(r.parameters.begin(), {"check", check});
  r.wall_time = sw.seconds();
  return r;
}

}  // namespace balkan
