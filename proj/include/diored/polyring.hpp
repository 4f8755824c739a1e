#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diored/errors.hpp"

namespace diored {

// Ordered list of variable names. Immutable after creation; polynomials hold
// a copy, and equality is on contents so a registry survives serialization.
class VarRegistry {
public:
  VarRegistry() : VarRegistry(std::vector<std::string>{}) {}
  explicit VarRegistry(std::vector<std::string> names);

  std::size_t arity() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  // New registry with `fresh` appended. VariableCollision if already present.
  VarRegistry extended(const std::string& fresh) const;
  // New registry with the variable at `index` removed.
  VarRegistry without(std::size_t index) const;

  friend bool operator==(const VarRegistry& a, const VarRegistry& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }
  friend bool operator!=(const VarRegistry& a, const VarRegistry& b) { return !(a == b); }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Exponent tuple aligned to a registry; nonnegative entries.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(std::size_t arity) { return Monomial(std::vector<int>(arity, 0)); }

  std::size_t arity() const { return exps_.size(); }
  int exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  int total_degree() const;
  bool is_one() const { return total_degree() == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Exact division; caller must ensure other.divides(*this).
  Monomial divided_by(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

private:
  std::vector<int> exps_;
};

// Graded reverse lexicographic: compare by total degree, ties broken so that
// the monomial with the larger exponent in the last differing variable is
// the smaller one.
bool grevlex_less(const Monomial& a, const Monomial& b);
// Lexicographic with the first registry variable largest.
bool lex_less(const Monomial& a, const Monomial& b);

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

// Sparse multivariate polynomial over exact rationals. Terms are stored in
// ascending grevlex order with no zero coefficients; the zero polynomial is
// the empty term map.
class Polynomial {
public:
  using TermMap = std::map<Monomial, mpq_class, GrevlexLess>;

  Polynomial() = default;  // zero over the empty registry
  explicit Polynomial(VarRegistry registry) : reg_(std::move(registry)) {}
  Polynomial(VarRegistry registry, TermMap terms);

  static Polynomial constant(VarRegistry registry, const mpq_class& value);
  static Polynomial variable(VarRegistry registry, std::size_t index);

  const VarRegistry& registry() const { return reg_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;  // zero or total degree 0
  mpq_class constant_term() const;
  // nullopt is the distinguished marker for the zero polynomial.
  std::optional<int> total_degree() const;
  bool is_homogeneous() const;
  bool has_integer_coefficients() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const mpq_class& factor) const;
  Polynomial pow(unsigned exponent) const;

  void add_term(const Monomial& m, const mpq_class& coeff);  // accumulates, prunes zeros

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.reg_ == b.reg_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
  void check_same_registry(const Polynomial& other) const;

  VarRegistry reg_;
  TermMap terms_;
};

// Expression grammar:
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' NAT)?
//   atom   := NUMBER | NAME | '(' expr ')'
// NUMBER is an integer or rational literal (digits, optionally '/' digits);
// NAME matches [a-zA-Z][a-zA-Z0-9_]*; whitespace is insignificant.
Polynomial parse_poly(std::string_view text, const VarRegistry& registry);

// Canonical rendering: terms in descending grevlex order, variables in
// registry order. parse_poly(render_poly(p)) == p.
std::string render_poly(const Polynomial& p);

// NAME tokens of an expression in first-appearance order, deduplicated.
// Used to infer a registry from bare expression text.
std::vector<std::string> scan_variables(std::string_view text);

Polynomial homogenize(const Polynomial& p, const std::string& new_var);
Polynomial dehomogenize(const Polynomial& p, const std::string& var);

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index);
Polynomial partial_derivative(const Polynomial& p, std::string_view var);

mpq_class evaluate(const Polynomial& p, std::span<const mpq_class> point);
// Fast path for integer points (power tables, mpz accumulation).
mpq_class evaluate(const Polynomial& p, std::span<const long long> point);

// Resultant of two univariate polynomials in `var`, Sylvester determinant
// convention, computed by fraction-free elimination over the integers.
mpq_class resultant_univariate(const Polynomial& p, const Polynomial& q, std::string_view var);

}  // namespace diored
