#pragma once

// Integer relations by LLL on a scaled lattice, and the numeric derivation chain
// built on it: triple recovery from a CF value, then (alpha, beta) and Kosovo seeds.

#include <functional>
#include <vector>

#include "balkan/balkan_forms.hpp"
#include "balkan/cf_engine.hpp"
#include "balkan/hpreal.hpp"

namespace balkan {

using IntVector = std::vector<BigInt>;
using LatticeBasis = std::vector<IntVector>;

/// Integral LLL (exact arithmetic).  delta must lie in (1/4, 1).
/// Throws DomainError if the rows are dependent.
LatticeBasis lll_reduce(LatticeBasis basis, const BigRational& delta = make_rational(3, 4));

/// Evaluates the inputs of a relation search at a given number of digits.
using RelationInputs = std::function<std::vector<HPReal>(long digits)>;

const BigInt& default_coefficient_bound();  // 10^80

/// Small v with v . xs ~ 0.  Candidates are checked against xs at `digits`
/// (|v . x| < 10^(-digits/2)) and then at twice the precision via `inputs`.
/// The last nonzero entry of the result is positive.  Throws NoRelation.
IntVector find_integer_relation(const RelationInputs& inputs, long digits,
                                const BigInt& bound = default_coefficient_bound());
/// Same, for fixed values known to `digits` places (validated at those places only).
IntVector find_integer_relation(const std::vector<HPReal>& xs, long digits,
                                const BigInt& bound = default_coefficient_bound());

/// Q = a0/(a1 + a2 K) from the numeric value of `spec`.  Terminating specs are
/// summed exactly.
QExact recover_qexact(const CFSpec& spec, ConstKind kind, long digits = 300,
                      long depth_cap = kDefaultDepthCap);

AlphaBeta derive_alphabeta_numeric(long j, long kappa, long digits = 2000);
Seeds4 derive_seeds_numeric(long j, long digits = 5000);

}  // namespace balkan
