#pragma once

#include <vector>

#include "diored/reducer.hpp"

namespace diored {

// Bounded brute-force verification of the compiled equivalence. A bounded
// search can never certify unsolvability; an empty result means "none found
// within the bound" and nothing more.
struct SearchReport {
  long long bound = 0;
  std::vector<LatticeVector> f_zeros;      // zeros of the smoothing input
  std::vector<GElement> sigma_witnesses;   // g with sigma(x) in Z
  bool consistent = false;
  SolvabilityMode mode = SolvabilityMode::Integers;
  InstanceDescriptor instance;
};

struct SearchOptions {
  unsigned long long eval_cap = 100000000ULL;  // box size guard
};

// All integer points of [-B, B]^m with f = 0, in lexicographic order.
std::vector<LatticeVector> search_integer_zeros(const Polynomial& f, long long B,
                                                const SearchOptions& opts = {});

// All g with |a_i| <= B, eps = +-1 and sigma(x) in Z; lexicographic in a,
// eps = +1 before -1 within each a.
std::vector<GElement> search_automorphisms(const InstanceDescriptor& desc, long long B,
                                           const SearchOptions& opts = {});

struct EquivalenceOptions {
  int c_max = 1000;
  OrderKind order = OrderKind::Grevlex;
  SolvabilityMode mode = SolvabilityMode::Integers;
  GroebnerOptions groebner;
  SearchOptions search;
};

// Compiles the instance, runs both bounded searches, asserts consistency and
// the explicit witness correspondence. EquivalenceViolation signals an
// implementation bug, never a property of the input.
SearchReport check_equivalence(const Polynomial& f, long long B,
                               const EquivalenceOptions& opts = {});
SearchReport check_equivalence(const Polynomial& f, long long B, const Curve& E,
                               const ECPoint& P, const EquivalenceOptions& opts = {});

// Same checks against an already-compiled instance.
SearchReport check_equivalence_on(const InstanceDescriptor& desc, long long B,
                                  const SearchOptions& opts = {});

// Resultant route to the Lemma smoothness verdict for univariate f:
// the candidate c(y^2 - y) + f^2 is singular iff f' and 4 f^2 - c share a
// root over the algebraic closure (eliminating y at the critical value 1/2),
// so smooth iff f' is a nonzero constant or Res(f', 4 f^2 - c) != 0.
// Independent of the Groebner route by construction.
bool univariate_smoothness_oracle(const Polynomial& f, int c);

}  // namespace diored
