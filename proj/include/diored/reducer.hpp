#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "diored/elliptic.hpp"
#include "diored/lattice.hpp"
#include "diored/smoothing.hpp"

namespace diored {

enum class SolvabilityMode { Integers, Naturals };  // Z | N

const char* to_string(SolvabilityMode mode);
SolvabilityMode mode_from_string(std::string_view text);

struct FourSquaresMap {
  std::string original;             // replaced variable
  std::array<std::string, 4> fresh; // its four square roots
};

// Inputs and intermediates of the pipeline, kept for reproducibility.
struct Provenance {
  Polynomial input_f;  // as given, before any transform
  SolvabilityMode mode = SolvabilityMode::Integers;
  std::optional<Polynomial> four_squares_f;
  std::vector<FourSquaresMap> four_squares_vars;
  std::string homogenization_var;
  int c_max = 0;
  OrderKind order = OrderKind::Grevlex;
};

// The compiled automorphism-problem instance: everything needed to pose
// "does some automorphism map the base point into Z?".
struct InstanceDescriptor {
  int n = 0;
  Curve curve;
  ECPoint P;
  LatticeSet S;
  std::vector<std::vector<ECPoint>> S_prime;  // k*P per lattice coordinate
  LatticeVector base_point_x;                 // (0, ..., 0, 1), projective
  Polynomial Z_equation;                      // homogeneous, n variables
  SmoothingResult smoothing;
  SolvabilityMode mode = SolvabilityMode::Integers;
  Provenance provenance;
};

// Replaces each variable by a sum of squares of four fresh variables;
// solvable over nonnegative integers iff the output is solvable over Z.
Polynomial four_squares_transform(const Polynomial& f);
Polynomial four_squares_transform(const Polynomial& f, std::vector<FourSquaresMap>& vars_out);

struct CompileOptions {
  SolvabilityMode mode = SolvabilityMode::Integers;
  int c_max = 1000;
  OrderKind order = OrderKind::Grevlex;
  GroebnerOptions groebner;
};

InstanceDescriptor compile_instance(const Polynomial& f, const Curve& E, const ECPoint& P,
                                    const CompileOptions& opts = {});
InstanceDescriptor compile_instance(const Polynomial& f, const CompileOptions& opts = {});

// Image of the base point under the automorphism attached to g: the raw
// integer tuple (a_1, ..., a_{n-1}, eps), understood projectively.
LatticeVector sigma_image(const GElement& g);

// Membership in Z = V(Z_equation); well defined projectively by homogeneity.
bool point_in_Z(const InstanceDescriptor& desc, const LatticeVector& pt);

// Canonical projective representative: primitive entries, last nonzero
// coordinate positive. Used for serialization only.
LatticeVector normalize_projective(const LatticeVector& pt);

}  // namespace diored
