#pragma once

#include <vector>

#include "projdes/jacobi.hpp"

namespace projdes {

/// One row of the rank-comparison table at strength t = 2s - 1:
/// rank_L1 = (N - m)(N + 1)/m against the closed-form rank of the top
/// idempotent, with the cardinality bound for context.
struct CensusRow {
  Field field;
  int n = 1;
  int s = 2;
  int t = 3;
  Rational rank_L1;
  Rational rank_Ls;
  bool equal = false;
  Rational bound;
};

/// Exact evaluation at (field, n, s); requires n >= 1, s >= 2.
CensusRow classify(Field field, int n, int s);

/// All rows for the given fields, 1 <= n <= n_max, 2 <= s <= s_max, ordered
/// by (field, n, s) regardless of jobs. Asserts internal consistency of each
/// row: the n = 1 difference closed forms (-1 over R, s - 3 over C,
/// s(s+1)(s+2)/6 - 5 over H) and strict rank_Ls > rank_L1 whenever
/// n^2 > 1 + 1/m + 1/m^2. Violations throw std::logic_error.
std::vector<CensusRow> sweep(const std::vector<Field>& fields, int n_max, int s_max,
                             int jobs = 1);

struct RationalityRow {
  int t = 1;
  bool rational = false;
};

/// Whether the tight-design angle set in the projective line over R is
/// rational, for t = 1..t_max. Asserts the rational strengths within range
/// are exactly {1, 2, 3, 5}.
std::vector<RationalityRow> rationality_table(int t_max);

}  // namespace projdes
