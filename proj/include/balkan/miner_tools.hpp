#pragma once

// Mining helpers: brittleness, the divisibility target n(j, kappa, c), and the
// decimator sieve over integer boxes of candidate index vectors.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balkan/exactnum.hpp"

namespace balkan {

/// Prime factors with multiplicity of numerator plus denominator.  Throws on 0.
long brittleness(const BigRational& q);

/// C_{kappa-1} C_{(j-3)/2} (2kappa-1)(j-2) prod_{i=1}^{(j-1)/2} (2c-2kappa+2i-1)(kappa-i+1)
BigInt n_omega_target(long j, long kappa, long c);

struct MiningEntry {
  long j = 0, kappa = 0, c = 0;
  BigInt t;
  bool operator==(const MiningEntry& o) const { return j == o.j && kappa == o.kappa && c == o.c && t == o.t; }
};

struct MiningDB {
  std::vector<MiningEntry> entries;
};

/// Lines "j kappa c t"; '#' starts a comment.  Throws DomainError on malformed lines.
MiningDB parse_mining_db(const std::string& text);
std::string serialize_mining_db(const MiningDB& db);
/// Entries (j, kappa, c, n_omega_target(j, kappa, c)) for c in [c_lo, c_hi].
MiningDB target_db(long j, long kappa, long c_lo, long c_hi);

enum class Family { Affine, Catalan, Product };
enum class ZeroPolicy { Eliminates, Skips };
enum class CatalanPolicy { Extended, NegativeEliminates };

Family parse_family(const std::string& s);
std::string family_name(Family f);
ZeroPolicy parse_zero_policy(const std::string& s);
std::string zero_policy_name(ZeroPolicy p);
CatalanPolicy parse_catalan_policy(const std::string& s);
std::string catalan_policy_name(CatalanPolicy p);

/// Number of u-coordinates a family takes (4, or 5 for Product).
int family_arity(Family f);

using UVec = std::vector<long>;
using Box = std::vector<std::pair<long, long>>;  // inclusive bounds per coordinate

/// [-r, r]^n
Box cube(long r, int n);

struct DecimateOptions {
  ZeroPolicy zero = ZeroPolicy::Eliminates;
  CatalanPolicy catalan = CatalanPolicy::Extended;
};

/// Candidate y(j, kappa, c) for index vector u; nullopt when undefined
/// (negative Catalan index under NegativeEliminates).
std::optional<BigInt> evaluate_candidate(Family f, const UVec& u, long j, long kappa, long c,
                                         CatalanPolicy policy = CatalanPolicy::Extended);

struct DecimateResult {
  std::vector<UVec> survivors;
  unsigned long long box_size = 0;
  std::vector<unsigned long long> eliminated_per_entry;
};

/// u survives iff y divides t for every entry.  y = 0 eliminates or skips the
/// entry per options.zero; an undefined y eliminates.
DecimateResult decimate(Family f, const Box& box, const MiningDB& db, const DecimateOptions& options = {});

}  // namespace balkan
