#include "common.hpp"

namespace balkan {

using namespace detail;

namespace {

long c_limit(const CommandOptions& opt, long default_max) {
  return opt.c_max ? std::min(*opt.c_max, default_max) : default_max;
}

Report verify_montenegro(const CommandOptions& opt) {
  Report r;
  const long cmax = c_limit(opt, 14);
  std::vector<std::pair<long, long>> grid;
  for (long k = 0; k <= 14; ++k)
    for (long c = 1; c <= cmax; ++c) grid.emplace_back(k, c);
  merge_all(r, run_grid(grid.size(), opt.threads, [&](std::size_t i) {
    Report part;
    const auto [k, c] = grid[i];
    const std::string name = "Q" + jkc(1, k, c);
    try {
      compare_with_cf(part, name, montenegro_q(k, c), balkan_cf_spec(1, k, c), opt.digits, opt.depth_cap);
    } catch (const std::exception& e) {
      part.add(error_check(name, e));
    }
    return part;
  }));
  return r;
}

Report verify_bosnia(const CommandOptions& opt) {
  Report r;
  const long cmax = c_limit(opt, 14);
  for (long j = 5; j <= 13; j += 2)
    for (long c = 1; c <= cmax; ++c) {
      const long kappa = (j - 3) / 2;
      const std::string name = "Q" + jkc(j, kappa, c);
      try {
        const std::string cf = to_string(finite_value(j, kappa, c));
        r.add_exact(name + " 2+2c-j", cf, to_string(bosnia_value(j, c)));
        r.add_exact(name + " via Delta", cf, to_string(bosnia_q_via_delta(j, c)));
        r.depths_used.push_back(*termination_index(j, kappa, c) - 1);
      } catch (const std::exception& e) {
        r.add(error_check(name, e));
      }
    }
  return r;
}

Report verify_northern(const CommandOptions& opt) {
  Report r;
  const long cmax = c_limit(opt, 7);
  std::vector<std::pair<long, long>> grid;
  for (long j = -7; j <= 13; j += 2)
    if (j != 1)
      for (long k = 1; k <= 6; ++k) grid.emplace_back(j, k);
  merge_all(r, run_grid(grid.size(), opt.threads, [&](std::size_t i) {
    Report part;
    const auto [j, k] = grid[i];
    const std::string base = "(" + std::to_string(j) + "," + std::to_string(k) + ")";
    AlphaBeta ab;
    try {
      ab = derive_alphabeta_numeric(j, k, opt.derive_digits);
      part.add_exact("alphabeta" + base + " numeric = closed form", str(alphabeta_exact(j, k)), str(ab));
    } catch (const std::exception& e) {
      part.add(error_check("alphabeta" + base, e));
      return part;
    }
    for (long c = 1; c <= cmax; ++c) {
      const std::string name = "Q" + jkc(j, k, c);
      try {
        compare_with_cf(part, name, master_c_level(j, k, ab, c), balkan_cf_spec(j, k, c), opt.digits, opt.depth_cap);
      } catch (const std::exception& e) {
        part.add(error_check(name, e));
      }
    }
    return part;
  }));
  return r;
}

Report verify_kosovo(const CommandOptions& opt) {
  Report r;
  const long cmax = c_limit(opt, 7);
  std::vector<std::tuple<long, long, long>> grid;
  for (long j = 3; j <= 11; j += 2)
    for (long k = j - 2; k <= 10; ++k)
      for (long c = 1; c <= cmax; ++c) grid.emplace_back(j, k, c);
  merge_all(r, run_grid(grid.size(), opt.threads, [&](std::size_t i) {
    Report part;
    const auto [j, k, c] = grid[i];
    const std::string name = "Q" + jkc(j, k, c);
    try {
      compare_with_cf(part, name, q_exact(j, k, c), balkan_cf_spec(j, k, c), opt.digits, opt.depth_cap);
    } catch (const std::exception& e) {
      part.add(error_check(name, e));
    }
    return part;
  }));
  const QExact anchor = q_exact(3, 2, 3);
  r.add_exact("Q(3,2,3) triple", "192/(13 + 18*G)", anchor.to_string());
  return r;
}

Report verify_symmetry(const CommandOptions& opt) {
  Report r;
  const long cmax = c_limit(opt, 7);
  // Serbia reflection: identical CF data and the reflected closed form matches the CF
  std::vector<std::tuple<long, long, long>> serbia;
  for (long k = 0; k <= 6; ++k)
    for (long j = 3; j <= 2 * k + 1; j += 2)
      if (classify(j, k) == Area::Serbia)
        for (long c = 1; c <= cmax; ++c) serbia.emplace_back(j, k, c);
  merge_all(r, run_grid(serbia.size(), opt.threads, [&](std::size_t i) {
    Report part;
    const auto [j, k, c] = serbia[i];
    const long jr = serbia_reflect(j, k);
    const std::string name = "reflect Q" + jkc(j, k, c) + " -> j'=" + std::to_string(jr);
    try {
      const CFSpec a = balkan_cf_spec(j, k, c), b = balkan_cf_spec(jr, k, c);
      part.add_exact(name + " CF data", a.P.to_string() + " ; " + a.T.to_string(),
                     b.P.to_string() + " ; " + b.T.to_string());
      compare_with_cf(part, name, q_exact(jr, k, c), a, opt.digits, opt.depth_cap);
    } catch (const std::exception& e) {
      part.add(error_check(name, e));
    }
    return part;
  }));

  // tau ratios between (j, kappa) and (j - 2u, kappa), kappa = j - u - 1
  for (long j = 3; j <= 13; j += 2)
    for (long u = 1; u <= j + 3; ++u) {
      const long k = j - u - 1, j2 = j - 2 * u;
      const std::string name = "tau(" + std::to_string(j) + "," + std::to_string(u) + ")";
      if (j2 == 1) {
        r.notes.push_back(name + " skipped: partner j' = 1 has no (alpha, beta)");
        continue;
      }
      try {
        const AlphaBeta a = alphabeta_exact(j, k), b = alphabeta_exact(j2, k);
        if (b.alpha == 0 || b.beta == 0) {
          r.notes.push_back(name + " skipped: partner has a zero component");
          continue;
        }
        const BigRational tau = tau_ratio(j, u);
        r.add_exact(name + " alpha ratio", to_string(tau), to_string(BigRational(a.alpha / b.alpha)));
        r.add_exact(name + " beta ratio", to_string(tau), to_string(BigRational(a.beta / b.beta)));
      } catch (const std::exception& e) {
        r.add(error_check(name, e));
      }
    }

  // Q(1, kappa, 1) = Q(1, 1, kappa)
  for (long k = 1; k <= 14; ++k) {
    const std::string name = "Q(1," + std::to_string(k) + ",1) = Q(1,1," + std::to_string(k) + ")";
    r.add_exact(name, q_exact(1, 1, k).to_string(), q_exact(1, k, 1).to_string());
  }
  return r;
}

Report verify_croatia(const CommandOptions& opt) {
  Report r;
  std::vector<std::pair<long, long>> grid;
  for (long i = 0; i <= 5; ++i)
    for (long j = 2 * i + 5; j <= 37; j += 2) grid.emplace_back(i, j);
  merge_all(r, run_grid(grid.size(), opt.threads, [&](std::size_t n) {
    Report part;
    const auto [i, j] = grid[n];
    const long k = (j - 2 * i - 3) / 2;
    const std::string name = "psi/mu i=" + std::to_string(i) + " j=" + std::to_string(j);
    try {
      part.add_exact(name, str(alphabeta_exact(j, k)), str(croatia_alphabeta(i, j)));
    } catch (const std::exception& e) {
      part.add(error_check(name, e));
    }
    return part;
  }));
  for (long i = 0; i <= 6; ++i) {
    const PsiPoly fit = croatia_psi_interpolate(i);
    const PsiPoly& table = croatia_psi_table(i);
    const std::string s = "i=" + std::to_string(i);
    r.add_exact("psi1 interpolation " + s, str(table.coeffs1), str(fit.coeffs1));
    r.add_exact("psi2 interpolation " + s, str(table.coeffs2), str(fit.coeffs2));
    const BigInt sf = semifactorial(2 * i - 1);
    r.add_exact("psi1 degree/lead " + s, std::to_string(i) + " " + BigInt(-sf).get_str(),
                std::to_string(fit.coeffs1.size() - 1) + " " + fit.coeffs1.back().get_str());
    r.add_exact("psi2 degree/lead " + s, std::to_string(i + 1) + " " + BigInt(4 * sf).get_str(),
                std::to_string(fit.coeffs2.size() - 1) + " " + fit.coeffs2.back().get_str());
  }
  return r;
}

Report verify_ratio(const CommandOptions& opt) {
  Report r;
  const long cmax = c_limit(opt, 7);
  for (long j = 1; j <= 7; j += 2)
    for (long k = std::abs(j - 2); k <= 7; ++k)
      for (long c = 1; c <= cmax; ++c) {
        const std::string name = "a0/a2 Q" + jkc(j, k, c);
        try {
          const QExact q = q_exact(j, k, c);
          if (q.a2 == 0) {
            r.add(error_check(name, DomainError("no G term")));
            continue;
          }
          r.add_exact(name, to_string(ratio_a0_a2(j, k, c)), to_string(make_rational(q.a0, q.a2)));
        } catch (const std::exception& e) {
          r.add(error_check(name, e));
        }
      }
  return r;
}

Report verify_altogether(const CommandOptions& opt) {
  Report r;
  const long cmax = c_limit(opt, 7);
  std::vector<std::tuple<long, long, long>> grid;
  for (long j = 1; j <= 13; j += 2)
    for (long k = 0; k <= 10; ++k)
      for (long c = 1; c <= cmax; ++c) grid.emplace_back(j, k, c);
  merge_all(r, run_grid(grid.size(), opt.threads, [&](std::size_t i) {
    Report part;
    const auto [j, k, c] = grid[i];
    const std::string name = area_name(classify(j, k)) + " Q" + jkc(j, k, c);
    try {
      compare_with_cf(part, name, q_exact(j, k, c), balkan_cf_spec(j, k, c), opt.digits, opt.depth_cap);
    } catch (const std::exception& e) {
      part.add(error_check(name, e));
    }
    return part;
  }));
  return r;
}

}  // namespace

std::vector<std::string> verify_areas() {
  return {"montenegro", "bosnia", "northern", "kosovo", "symmetry", "croatia", "ratio", "altogether"};
}

Report cmd_verify(const std::string& area, const CommandOptions& opt) {
  Stopwatch sw;
  Report r;
  if (area == "montenegro") r = verify_montenegro(opt);
  else if (area == "bosnia") r = verify_bosnia(opt);
  else if (area == "northern") r = verify_northern(opt);
  else if (area == "kosovo") r = verify_kosovo(opt);
  else if (area == "symmetry") r = verify_symmetry(opt);
  else if (area == "croatia") r = verify_croatia(opt);
  else if (area == "ratio") r = verify_ratio(opt);
  else if (area == "altogether") r = verify_altogether(opt);
  else throw DomainError("unknown area '" + area + "'");
  r.command = "verify";
  r.parameters = {{"area", area}, {"digits", std::to_string(opt.digits)}};
  if (area == "northern") r.parameters.emplace_back("deriveDigits", std::to_string(opt.derive_digits));
  if (opt.c_max) r.parameters.emplace_back("cMax", std::to_string(*opt.c_max));
  r.wall_time = sw.seconds();
  return r;
}

}  // namespace balkan
