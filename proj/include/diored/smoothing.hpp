#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diored/groebner.hpp"

namespace diored {

// Outcome of the effective smoothing search: the least c for which the
// candidate hypersurface is smooth, with Groebner certificates for the
// verdict and for every rejected c below it.
struct SmoothingResult {
  int c = 0;
  Polynomial f;  // input, over the original registry
  Polynomial F;  // c*(y^2 - y) + f^2 over the extended registry
  std::string fresh_var;
  GroebnerBasis certificate;  // exactly {1}
  std::vector<std::pair<int, GroebnerBasis>> rejected;
  int degree_in = 0;
  int degree_out = 0;
};

struct SmoothingOptions {
  int c_max = 1000;
  OrderKind order = OrderKind::Grevlex;
  GroebnerOptions groebner;
};

// Fresh variable name for the smoothing candidate: "y", or "y_1", "y_2", ...
// when f already uses the name.
std::string pick_fresh_variable(const VarRegistry& registry);

// c*(y^2 - y) + f^2 over f's registry extended by a fresh variable.
Polynomial build_candidate(const Polynomial& f, int c);
Polynomial build_candidate(const Polynomial& f, int c, std::string& fresh_var_out);

// [F, dF/dv for every variable v]: generators of the Jacobian ideal whose
// vanishing locus is the singular locus of the affine hypersurface F = 0.
std::vector<Polynomial> jacobian_generators(const Polynomial& F);

// Smooth over Q iff the Jacobian ideal is the unit ideal.
std::pair<bool, GroebnerBasis> is_smooth_affine_hypersurface(
    const Polynomial& F, OrderKind order = OrderKind::Grevlex, const GroebnerOptions& opts = {});

// Least c in [1, c_max] with a smooth candidate. The search always terminates
// for some c; c_max is a safety valve and exhausting it is an error, never a
// verdict.
SmoothingResult smooth_lift(const Polynomial& f, const SmoothingOptions& opts = {});

}  // namespace diored
