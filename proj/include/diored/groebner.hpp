#pragma once

#include <utility>
#include <vector>

#include "diored/polyring.hpp"

namespace diored {

enum class OrderKind { Grevlex, Lex };

const char* to_string(OrderKind kind);
OrderKind order_kind_from_string(std::string_view text);

// Monomial order tied to a registry. Multiplicative total order with 1 minimal.
class TermOrder {
public:
  TermOrder(OrderKind kind, VarRegistry registry)
      : kind_(kind), reg_(std::move(registry)) {}

  OrderKind kind() const { return kind_; }
  const VarRegistry& registry() const { return reg_; }

  bool less(const Monomial& a, const Monomial& b) const {
    return kind_ == OrderKind::Grevlex ? grevlex_less(a, b) : lex_less(a, b);
  }

  // Leading monomial of a nonzero polynomial under this order.
  const Monomial& leading_monomial(const Polynomial& p) const;
  mpq_class leading_coefficient(const Polynomial& p) const;

private:
  OrderKind kind_;
  VarRegistry reg_;
};

// Reduced Groebner basis: monic generators, no term of any element divisible
// by the leading term of another, sorted by decreasing leading monomial.
// Canonical for a fixed order, so output is strategy-independent.
struct GroebnerBasis {
  std::vector<Polynomial> generators;
  TermOrder order;
  std::vector<Polynomial> source;

  bool is_unit() const;
};

struct GroebnerOptions {
  // maximum number of S-pairs processed before ResourceCap
  std::size_t pair_cap = 100000;
};

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const TermOrder& order,
                         const GroebnerOptions& opts = {});

// Remainder of multivariate division by the basis; p - normal_form(p) lies in
// the ideal and no remainder term is divisible by a basis leading term.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

// S(f, g) with respect to the order; exposed for the post-hoc Buchberger
// criterion check in tests.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

// true iff the reduced basis is exactly {1}; the basis is the certificate.
std::pair<bool, GroebnerBasis> is_unit_ideal(const std::vector<Polynomial>& generators,
                                             const TermOrder& order,
                                             const GroebnerOptions& opts = {});

// Integer-primitive form: clears denominators, divides by the content, makes
// the leading coefficient (under grevlex) positive. Zero stays zero.
Polynomial primitive_part(const Polynomial& p);

}  // namespace diored
