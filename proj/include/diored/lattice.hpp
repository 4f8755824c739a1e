#pragma once

#include <vector>

#include "diored/errors.hpp"

namespace diored {

using LatticeVector = std::vector<long long>;
using IntMatrix = std::vector<std::vector<long long>>;  // row-major, square

// S = {0, p_1*e_1, ..., p_{n-1}*e_{n-1}} with p_i the i-th prime.
struct LatticeSet {
  int n = 0;
  std::vector<LatticeVector> points;
};

// Element of GL_n(Z) x| Z^n acting as x -> Ax + b.
struct AffineLatticeMap {
  IntMatrix A;
  LatticeVector b;

  LatticeVector apply(const LatticeVector& v) const;

  friend bool operator==(const AffineLatticeMap& x, const AffineLatticeMap& y) {
    return x.A == y.A && x.b == y.b;
  }
};

// Identity matrix with last column (a_1, ..., a_{n-1}, eps), eps = +-1, b = 0.
struct GElement {
  LatticeVector a;
  int eps = 1;

  friend bool operator==(const GElement& x, const GElement& y) {
    return x.a == y.a && x.eps == y.eps;
  }
};

std::vector<long long> first_primes(int count);

LatticeSet build_S(int n);  // DimensionTooSmall for n < 3

AffineLatticeMap g_to_affine(const GElement& g);

bool maps_S_to_S(const AffineLatticeMap& m, const LatticeSet& S);

// Exact integer determinant (fraction-free elimination).
long long det(const IntMatrix& A);

bool is_g_form(const AffineLatticeMap& m);

// Group law of G via matrix product: compose(g, h) is "apply h, then g".
GElement compose(const GElement& g, const GElement& h);
GElement inverse(const GElement& g);

struct StabilizerOptions {
  unsigned long long matrix_cap = 100000000ULL;  // (2*bound+1)^(n^2) guard
};

// All maps in the entry box (|A_ij| <= bound, |b_i| <= bound) with det = +-1
// that permute S, in lexicographic order over flattened (A, b). Every result
// is asserted to be of G-form.
std::vector<AffineLatticeMap> stabilizer_bruteforce(int n, int entry_bound,
                                                    const StabilizerOptions& opts = {});

}  // namespace diored
