#include "diored/reducer.hpp"

#include <numeric>

namespace diored {

const char* to_string(SolvabilityMode mode) {
  return mode == SolvabilityMode::Integers ? "Z" : "N";
}

SolvabilityMode mode_from_string(std::string_view text) {
  if (text == "Z") return SolvabilityMode::Integers;
  if (text == "N") return SolvabilityMode::Naturals;
  fail(ErrorKind::InvalidArgument, "unknown mode '" + std::string(text) + "' (expected Z or N)");
}

namespace {

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
  auto used = [&](const std::string& candidate) {
    for (const auto& t : taken)
      if (t == candidate) return true;
    return false;
  };
  if (!used(base)) return base;
  for (int suffix = 1;; ++suffix) {
    std::string candidate = base + "_" + std::to_string(suffix);
    if (!used(candidate)) return candidate;
  }
}

}  // namespace

Polynomial four_squares_transform(const Polynomial& f) {
  std::vector<FourSquaresMap> ignored;
  return four_squares_transform(f, ignored);
}

Polynomial four_squares_transform(const Polynomial& f, std::vector<FourSquaresMap>& vars_out) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "cannot transform the zero polynomial");
  const VarRegistry& reg = f.registry();
  const std::size_t m = reg.arity();
  if (m == 0) fail(ErrorKind::ZeroPolynomial, "transform requires at least one variable");

  static const char* kSuffixes[4] = {"_a", "_b", "_c", "_d"};
  std::vector<std::string> names;
  vars_out.clear();
  for (std::size_t i = 0; i < m; ++i) {
    FourSquaresMap entry;
    entry.original = reg.name(i);
    for (int s = 0; s < 4; ++s) {
      std::string fresh = fresh_name(reg.name(i) + kSuffixes[s], names);
      entry.fresh[static_cast<std::size_t>(s)] = fresh;
      names.push_back(std::move(fresh));
    }
    vars_out.push_back(std::move(entry));
  }
  VarRegistry ext(std::move(names));

  // u_i -> a_i^2 + b_i^2 + c_i^2 + d_i^2
  std::vector<Polynomial> substitution;
  substitution.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Polynomial sum(ext);
    for (int s = 0; s < 4; ++s) {
      Polynomial v = Polynomial::variable(ext, 4 * i + static_cast<std::size_t>(s));
      sum = sum + v * v;
    }
    substitution.push_back(std::move(sum));
  }

  Polynomial out(ext);
  for (const auto& [mono, coeff] : f.terms()) {
    Polynomial term = Polynomial::constant(ext, coeff);
    for (std::size_t i = 0; i < m; ++i) {
      const int e = mono.exponent(i);
      if (e > 0) term = term * substitution[i].pow(static_cast<unsigned>(e));
    }
    out = out + term;
  }
  return out;
}

LatticeVector sigma_image(const GElement& g) {
  if (g.eps != 1 && g.eps != -1) fail(ErrorKind::InvalidArgument, "eps must be +-1");
  LatticeVector out = g.a;
  out.push_back(g.eps);
  return out;
}

LatticeVector normalize_projective(const LatticeVector& pt) {
  long long g = 0;
  for (long long c : pt) g = std::gcd(g, c);
  if (g == 0) fail(ErrorKind::ZeroProjectivePoint, "all coordinates are zero");
  LatticeVector out(pt);
  for (auto& c : out) c /= g;
  for (std::size_t i = out.size(); i-- > 0;) {
    if (out[i] != 0) {
      if (out[i] < 0)
        for (auto& c : out) c = -c;
      break;
    }
  }
  return out;
}

bool point_in_Z(const InstanceDescriptor& desc, const LatticeVector& pt) {
  if (pt.size() != static_cast<std::size_t>(desc.n))
    fail(ErrorKind::DimensionMismatch, "projective point has wrong length");
  bool all_zero = true;
  for (long long c : pt) all_zero = all_zero && c == 0;
  if (all_zero) fail(ErrorKind::ZeroProjectivePoint, "all coordinates are zero");
  return evaluate(desc.Z_equation, std::span<const long long>(pt)) == 0;
}

InstanceDescriptor compile_instance(const Polynomial& f, const CompileOptions& opts) {
  return compile_instance(f, curve_37a1(), ECPoint::affine(0, 0), opts);
}

InstanceDescriptor compile_instance(const Polynomial& f, const Curve& E, const ECPoint& P,
                                    const CompileOptions& opts) {
  if (!on_curve(P, E)) fail(ErrorKind::PointNotOnCurve, "base point is not on the curve");
  if (!infinite_order_sanity(P, E))
    fail(ErrorKind::InfiniteOrderSanityFailed,
         "chosen point has small order; the construction needs infinite order");

  Provenance prov;
  prov.input_f = f;
  prov.mode = opts.mode;
  prov.c_max = opts.c_max;
  prov.order = opts.order;

  Polynomial working = f;
  if (opts.mode == SolvabilityMode::Naturals) {
    std::vector<FourSquaresMap> vars;
    working = four_squares_transform(working, vars);
    prov.four_squares_f = working;
    prov.four_squares_vars = std::move(vars);
  }

  SmoothingOptions sm_opts;
  sm_opts.c_max = opts.c_max;
  sm_opts.order = opts.order;
  sm_opts.groebner = opts.groebner;
  SmoothingResult smoothing = smooth_lift(working, sm_opts);

  std::string hom_var = "t_h";
  if (smoothing.F.registry().contains(hom_var)) {
    for (int suffix = 1;; ++suffix) {
      std::string candidate = "t_h_" + std::to_string(suffix);
      if (!smoothing.F.registry().contains(candidate)) {
        hom_var = candidate;
        break;
      }
    }
  }
  prov.homogenization_var = hom_var;
  Polynomial Z_eq = homogenize(smoothing.F, hom_var);

  const int n = static_cast<int>(Z_eq.registry().arity());
  InstanceDescriptor desc{
      n,
      E,
      P,
      build_S(n),
      {},
      LatticeVector(static_cast<std::size_t>(n), 0),
      std::move(Z_eq),
      std::move(smoothing),
      opts.mode,
      std::move(prov),
  };
  desc.base_point_x.back() = 1;

  std::vector<ECPoint> cache;  // k -> k*P, built on demand
  auto multiple = [&](long long k) {
    if (k < 0) fail(ErrorKind::InvalidArgument, "lattice coordinates are nonnegative");
    while (static_cast<long long>(cache.size()) <= k) {
      cache.push_back(cache.empty()
                          ? ECPoint::infinity()
                          : ec_add(cache.back(), P, E));
    }
    return cache[static_cast<std::size_t>(k)];
  };
  for (const auto& lattice_point : desc.S.points) {
    std::vector<ECPoint> tuple;
    tuple.reserve(lattice_point.size());
    for (long long k : lattice_point) tuple.push_back(multiple(k));
    desc.S_prime.push_back(std::move(tuple));
  }
  return desc;
}

}  // namespace diored
