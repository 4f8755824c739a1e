#include "diored/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace diored {

namespace {

void check_box(std::size_t dims, long long B, unsigned long long cap) {
  if (B < 0) fail(ErrorKind::InvalidArgument, "bound must be nonnegative");
  const double size = std::pow(2.0 * static_cast<double>(B) + 1.0, static_cast<double>(dims));
  if (size > static_cast<double>(cap)) {
    std::ostringstream os;
    os << "box enumeration of (2*" << B << "+1)^" << dims << " points exceeds eval cap " << cap;
    fail(ErrorKind::ResourceCap, os.str());
  }
}

bool next_point(LatticeVector& point, long long B) {
  for (std::size_t i = point.size(); i-- > 0;) {
    if (point[i] < B) {
      ++point[i];
      for (std::size_t j = i + 1; j < point.size(); ++j) point[j] = -B;
      return true;
    }
  }
  return false;
}

std::string point_to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

std::vector<LatticeVector> search_integer_zeros(const Polynomial& f, long long B,
                                                const SearchOptions& opts) {
  const std::size_t m = f.registry().arity();
  check_box(m, B, opts.eval_cap);
  std::vector<LatticeVector> zeros;
  LatticeVector point(m, -B);
  bool more = true;
  while (more) {
    if (evaluate(f, std::span<const long long>(point)) == 0) zeros.push_back(point);
    more = next_point(point, B);
  }
  return zeros;
}

std::vector<GElement> search_automorphisms(const InstanceDescriptor& desc, long long B,
                                           const SearchOptions& opts) {
  const std::size_t dims = static_cast<std::size_t>(desc.n) - 1;
  check_box(dims, B, opts.eval_cap / 2);
  std::vector<GElement> witnesses;
  LatticeVector a(dims, -B);
  bool more = true;
  while (more) {
    for (int eps : {1, -1}) {
      GElement g{a, eps};
      if (point_in_Z(desc, sigma_image(g))) witnesses.push_back(std::move(g));
    }
    more = next_point(a, B);
  }
  return witnesses;
}

SearchReport check_equivalence(const Polynomial& f, long long B, const EquivalenceOptions& opts) {
  return check_equivalence(f, B, curve_37a1(), ECPoint::affine(0, 0), opts);
}

SearchReport check_equivalence(const Polynomial& f, long long B, const Curve& E,
                               const ECPoint& P, const EquivalenceOptions& opts) {
  CompileOptions copts;
  copts.mode = opts.mode;
  copts.c_max = opts.c_max;
  copts.order = opts.order;
  copts.groebner = opts.groebner;
  InstanceDescriptor desc = compile_instance(f, E, P, copts);
  return check_equivalence_on(desc, B, opts.search);
}

SearchReport check_equivalence_on(const InstanceDescriptor& desc, long long B,
                                  const SearchOptions& opts) {
  // zeros of the pre-smoothing polynomial (already four-squares transformed
  // in N mode)
  const Polynomial& f = desc.smoothing.f;
  std::vector<LatticeVector> zeros = search_integer_zeros(f, B, opts);
  std::vector<GElement> witnesses = search_automorphisms(desc, B, opts);

  const bool consistent = zeros.empty() == witnesses.empty();
  if (!consistent)
    fail(ErrorKind::EquivalenceViolation,
         "zero search and automorphism search disagree at bound " + std::to_string(B));

  auto contains_witness = [&](const GElement& g) {
    return std::find(witnesses.begin(), witnesses.end(), g) != witnesses.end();
  };
  auto in_box = [&](const LatticeVector& v) {
    for (long long c : v)
      if (std::llabs(c) > B) return false;
    return true;
  };

  // each f-zero a lifts to ((a, 0), +1), ((a, 1), +1) through the smoothing
  // variable, plus the sign-flipped pair; assert each lift inside the box
  for (const auto& zero : zeros) {
    for (long long y : {0LL, 1LL}) {
      LatticeVector plus(zero);
      plus.push_back(y);
      if (in_box(plus) && !contains_witness(GElement{plus, 1}))
        fail(ErrorKind::EquivalenceViolation,
             "missing witness for zero " + point_to_string(zero) + " with y=" + std::to_string(y));
      LatticeVector minus(zero.size() + 1);
      for (std::size_t i = 0; i < zero.size(); ++i) minus[i] = -zero[i];
      minus.back() = -y;
      if (in_box(minus) && !contains_witness(GElement{minus, -1}))
        fail(ErrorKind::EquivalenceViolation,
             "missing sign-flipped witness for zero " + point_to_string(zero));
    }
  }

  // conversely, every witness must project to a zero of f in the box
  auto contains_zero = [&](const LatticeVector& v) {
    return std::find(zeros.begin(), zeros.end(), v) != zeros.end();
  };
  for (const auto& g : witnesses) {
    LatticeVector head(g.a.begin(), g.a.end() - 1);
    const long long y = g.a.back();
    if (g.eps == -1) {
      for (auto& c : head) c = -c;
    }
    const long long y_eff = g.eps == 1 ? y : -y;
    if (y_eff != 0 && y_eff != 1)
      fail(ErrorKind::EquivalenceViolation,
           "witness smoothing coordinate outside {0,1}: " + point_to_string(g.a));
    if (!contains_zero(head))
      fail(ErrorKind::EquivalenceViolation,
           "witness does not project to a zero of f: " + point_to_string(g.a));
  }

  SearchReport report{B, std::move(zeros), std::move(witnesses), consistent, desc.mode, desc};
  return report;
}

bool univariate_smoothness_oracle(const Polynomial& f, int c) {
  if (f.is_constant()) fail(ErrorKind::ConstantInput, "oracle requires a nonconstant polynomial");
  if (c < 1) fail(ErrorKind::InvalidArgument, "c must be positive");
  const VarRegistry& reg = f.registry();
  std::size_t var_index = 0;
  bool found = false;
  for (const auto& [m, coeff] : f.terms()) {
    for (std::size_t i = 0; i < reg.arity(); ++i) {
      if (m.exponent(i) == 0) continue;
      if (found && i != var_index)
        fail(ErrorKind::NotUnivariate, "polynomial involves more than one variable");
      var_index = i;
      found = true;
    }
  }
  const std::string& var = reg.name(var_index);
  Polynomial derivative = partial_derivative(f, var_index);
  if (derivative.is_constant()) return true;  // nonzero since f is nonconstant
  Polynomial shifted = f * f;
  shifted = shifted.scaled(4) - Polynomial::constant(reg, c);
  return resultant_univariate(derivative, shifted, var) != 0;
}

}  // namespace diored
