#pragma once

#include <map>

#include "vjw/rational_fn.hpp"
#include "vjw/weight.hpp"

namespace vjw {

// q^w - q^{-w}, a two-term Laurent polynomial (zero when w = 0).
LaurentPoly bracket(const WeightExpr& w);

// The quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n} for n > 0,
// with [0] = 0 and [-n] = -[n].
LaurentPoly poly_q_int(long n);

// [k]! = [k][k-1]...[1]; k must be non-negative.
LaurentPoly q_factorial(int k);

// [w] = (q^w - q^{-w})/(q - q^{-1}).  Collapses to a Laurent polynomial for
// constant w.
RationalFn q_int(const WeightExpr& w);

// Gaussian binomial [k]! / ([l]! [k-l]!); requires 0 <= l <= k.  Always a
// Laurent polynomial.
RationalFn q_binomial(int k, int l);

// t_j -> q^{assignment[j]}; throws PoleError if a denominator factor
// vanishes, ConfigError if an occurring symbol is unassigned.
RationalFn specialize(const RationalFn& f, const std::map<int, long>& assignment);

}  // namespace vjw
