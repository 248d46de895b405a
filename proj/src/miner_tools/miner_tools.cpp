#include "balkan/miner_tools.hpp"

#include <deque>
#include <mutex>
#include <sstream>

#include "balkan/data_files.hpp"
#include "balkan/factorvec.hpp"

namespace balkan {

long brittleness(const BigRational& q) {
  if (q == 0) throw DomainError("brittleness of zero");
  long n = 0;
  for (const auto& [p, e] : factorize(BigInt(abs(q.get_num())))) n += e;
  for (const auto& [p, e] : factorize(q.get_den())) n += e;
  return n;
}

BigInt n_omega_target(long j, long kappa, long c) {
  if (j < 3 || j % 2 == 0 || kappa < 1 || c < 1) throw DomainError("n_omega_target needs odd j >= 3, kappa >= 1, c >= 1");
  BigInt r = catalan_number(kappa - 1) * catalan_number((j - 3) / 2) * (2 * kappa - 1) * (j - 2);
  for (long i = 1; i <= (j - 1) / 2; ++i) r *= BigInt(2 * c - 2 * kappa + 2 * i - 1) * (kappa - i + 1);
  return r;
}

MiningDB parse_mining_db(const std::string& text) {
  MiningDB db;
  for (const auto& rec : data_records(text)) {
    if (rec.size() != 4) throw DomainError("mining db: expected 'j kappa c t', got " + std::to_string(rec.size()) + " fields");
    MiningEntry e;
    try {
      size_t pos = 0;
      long* fields[3] = {&e.j, &e.kappa, &e.c};
      for (int k = 0; k < 3; ++k) {
        *fields[k] = std::stol(rec[k], &pos);
        if (pos != rec[k].size()) throw std::invalid_argument(rec[k]);
      }
      e.t = BigInt(rec[3]);
    } catch (const std::exception&) {
      throw DomainError("mining db: malformed record '" + rec[0] + " " + rec[1] + " " + rec[2] + " " + rec[3] + "'");
    }
    if (e.t == 0) throw DomainError("mining db: t must be nonzero");
    db.entries.push_back(std::move(e));
  }
  return db;
}

std::string serialize_mining_db(const MiningDB& db) {
  std::ostringstream os;
  for (const auto& e : db.entries) os << e.j << ' ' << e.kappa << ' ' << e.c << ' ' << e.t.get_str() << '\n';
  return os.str();
}

MiningDB target_db(long j, long kappa, long c_lo, long c_hi) {
  MiningDB db;
  for (long c = c_lo; c <= c_hi; ++c) db.entries.push_back({j, kappa, c, n_omega_target(j, kappa, c)});
  return db;
}

Family parse_family(const std::string& s) {
  if (s == "affine") return Family::Affine;
  if (s == "catalan") return Family::Catalan;
  if (s == "product") return Family::Product;
  throw DomainError("unknown family '" + s + "' (affine, catalan, product)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Affine: return "affine";
    case Family::Catalan: return "catalan";
    case Family::Product: return "product";
  }
  return "?";
}

ZeroPolicy parse_zero_policy(const std::string& s) {
  if (s == "zero-eliminates") return ZeroPolicy::Eliminates;
  if (s == "zero-skips") return ZeroPolicy::Skips;
  throw DomainError("unknown zero policy '" + s + "' (zero-eliminates, zero-skips)");
}

std::string zero_policy_name(ZeroPolicy p) { return p == ZeroPolicy::Eliminates ? "zero-eliminates" : "zero-skips"; }

CatalanPolicy parse_catalan_policy(const std::string& s) {
  if (s == "extended") return CatalanPolicy::Extended;
  if (s == "negative-eliminates") return CatalanPolicy::NegativeEliminates;
  throw DomainError("unknown Catalan policy '" + s + "' (extended, negative-eliminates)");
}

std::string catalan_policy_name(CatalanPolicy p) {
  return p == CatalanPolicy::Extended ? "extended" : "negative-eliminates";
}

int family_arity(Family f) { return f == Family::Product ? 5 : 4; }

Box cube(long r, int n) { return Box(n, {-r, r}); }

namespace {

const BigInt& catalan_cached(long n) {
  static std::mutex mutex;
  static std::deque<BigInt> table{1};
  std::lock_guard lock(mutex);
  while (static_cast<long>(table.size()) <= n) {
    const long k = static_cast<long>(table.size());
    table.push_back(table.back() * 2 * (2 * k - 1) / (k + 1));
  }
  return table[n];
}

std::optional<BigInt> evaluate(Family f, const UVec& u, long j, long kappa, long c, CatalanPolicy policy) {
  const long s = u[0] * j + u[1] * kappa + u[2] * c + u[3];
  switch (f) {
    case Family::Affine: return BigInt(s);
    case Family::Catalan:
      if (s >= 0) return catalan_cached(s);
      if (policy == CatalanPolicy::NegativeEliminates) return std::nullopt;
      return BigInt(s == -1 ? -1 : 0);
    case Family::Product: {
      BigInt p = 1;
      for (long i = 1; i <= (j - 1) / 2; ++i) p *= s + u[4] * i;
      return p;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<BigInt> evaluate_candidate(Family f, const UVec& u, long j, long kappa, long c, CatalanPolicy policy) {
  if (static_cast<int>(u.size()) != family_arity(f)) throw DomainError("candidate vector has the wrong length");
  return evaluate(f, u, j, kappa, c, policy);
}

DecimateResult decimate(Family f, const Box& box, const MiningDB& db, const DecimateOptions& options) {
  const int n = family_arity(f);
  if (static_cast<int>(box.size()) != n)
    throw DomainError(family_name(f) + " family needs a " + std::to_string(n) + "-dimensional box");
  DecimateResult res;
  res.box_size = 1;
  for (const auto& [lo, hi] : box) {
    if (hi < lo) throw DomainError("empty box interval");
    res.box_size *= static_cast<unsigned long long>(hi - lo + 1);
  }
  res.eliminated_per_entry.assign(db.entries.size(), 0);
  if (f == Family::Catalan) {
    long smax = 0;
    for (const auto& e : db.entries) {
      long m = 0;
      const long coord[4] = {e.j, e.kappa, e.c, 1};
      for (int k = 0; k < 4; ++k) m += std::max(std::abs(box[k].first), std::abs(box[k].second)) * std::abs(coord[k]);
      smax = std::max(smax, m);
    }
    catalan_cached(smax);
  }

  UVec u(n);
  for (int k = 0; k < n; ++k) u[k] = box[k].first;
  while (true) {
    bool survives = true;
    for (size_t i = 0; i < db.entries.size(); ++i) {
      const auto& e = db.entries[i];
      const auto y = evaluate(f, u, e.j, e.kappa, e.c, options.catalan);
      bool eliminated;
      if (!y) eliminated = true;
      else if (*y == 0) eliminated = options.zero == ZeroPolicy::Eliminates;
      else eliminated = mpz_divisible_p(e.t.get_mpz_t(), y->get_mpz_t()) == 0;
      if (eliminated) {
        ++res.eliminated_per_entry[i];
        survives = false;
      }
    }
    if (survives) res.survivors.push_back(u);
    int k = n - 1;
    while (k >= 0 && u[k] == box[k].second) {
      u[k] = box[k].first;
      --k;
    }
    if (k < 0) break;
    ++u[k];
  }
  return res;
}

}  // namespace balkan
