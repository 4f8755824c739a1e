#include "diored/smoothing.hpp"

namespace diored {

std::string pick_fresh_variable(const VarRegistry& registry) {
  if (!registry.contains("y")) return "y";
  for (int suffix = 1;; ++suffix) {
    std::string candidate = "y_" + std::to_string(suffix);
    if (!registry.contains(candidate)) return candidate;
  }
}

Polynomial build_candidate(const Polynomial& f, int c) {
  std::string ignored;
  return build_candidate(f, c, ignored);
}

Polynomial build_candidate(const Polynomial& f, int c, std::string& fresh_var_out) {
  if (f.is_constant()) fail(ErrorKind::ConstantInput, "smoothing requires a nonconstant polynomial");
  if (!f.has_integer_coefficients())
    fail(ErrorKind::NonIntegerInput, "smoothing requires integer coefficients");
  if (c < 1) fail(ErrorKind::InvalidArgument, "c must be positive");

  fresh_var_out = pick_fresh_variable(f.registry());
  VarRegistry ext = f.registry().extended(fresh_var_out);
  const std::size_t y_index = ext.arity() - 1;

  Polynomial f_ext(ext);
  for (const auto& [m, coeff] : f.terms()) {
    std::vector<int> e = m.exponents();
    e.push_back(0);
    f_ext.add_term(Monomial(std::move(e)), coeff);
  }
  Polynomial y = Polynomial::variable(ext, y_index);
  return (y * y - y).scaled(c) + f_ext * f_ext;
}

std::vector<Polynomial> jacobian_generators(const Polynomial& F) {
  if (F.is_zero()) fail(ErrorKind::ZeroPolynomial, "Jacobian of the zero polynomial");
  std::vector<Polynomial> gens;
  gens.push_back(F);
  for (std::size_t i = 0; i < F.registry().arity(); ++i)
    gens.push_back(partial_derivative(F, i));
  return gens;
}

std::pair<bool, GroebnerBasis> is_smooth_affine_hypersurface(const Polynomial& F,
                                                             OrderKind order,
                                                             const GroebnerOptions& opts) {
  if (F.is_constant())
    fail(ErrorKind::ConstantInput, "smoothness test requires a nonconstant polynomial");
  return is_unit_ideal(jacobian_generators(F), TermOrder(order, F.registry()), opts);
}

SmoothingResult smooth_lift(const Polynomial& f, const SmoothingOptions& opts) {
  if (opts.c_max < 1) fail(ErrorKind::InvalidArgument, "c_max must be positive");
  const int degree_in = f.is_zero() ? 0 : *f.total_degree();

  std::vector<std::pair<int, GroebnerBasis>> rejected;
  std::string fresh;
  for (int c = 1; c <= opts.c_max; ++c) {
    Polynomial F = build_candidate(f, c, fresh);
    auto [smooth, basis] = is_smooth_affine_hypersurface(F, opts.order, opts.groebner);
    if (smooth) {
      return SmoothingResult{c,
                             f,
                             F,
                             fresh,
                             std::move(basis),
                             std::move(rejected),
                             degree_in,
                             *F.total_degree()};
    }
    rejected.emplace_back(c, std::move(basis));
  }
  fail(ErrorKind::CSearchExhausted,
       "no smooth candidate for c <= " + std::to_string(opts.c_max) + "; raise the cap");
}

}  // namespace diored
