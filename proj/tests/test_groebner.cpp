#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "diored/groebner.hpp"
#include "test_util.hpp"

using namespace diored;
using testutil::random_nonzero_poly;
using testutil::random_poly;
using testutil::thrown_kind;

namespace {

VarRegistry reg(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return VarRegistry(std::move(v));
}

Polynomial P(const char* text, const VarRegistry& r) { return parse_poly(text, r); }

std::vector<std::string> rendered(const GroebnerBasis& b) {
  std::vector<std::string> out;
  for (const auto& g : b.generators) out.push_back(render_poly(g));
  return out;
}

}  // namespace

TEST_CASE("term orders") {
  VarRegistry r = reg({"x", "y", "z"});
  TermOrder grevlex(OrderKind::Grevlex, r);
  TermOrder lex(OrderKind::Lex, r);
  const Monomial one = Monomial::one(3);
  const Monomial x({1, 0, 0}), y({0, 1, 0}), x2z({2, 0, 1}), y3({0, 3, 0});
  // 1 is minimal, the order is multiplicative
  CHECK(grevlex.less(one, x));
  CHECK(lex.less(one, x));
  CHECK(grevlex.less(y, x));
  CHECK(lex.less(y, x));
  // the classic grevlex/lex disagreement: x^2*z vs y^3
  CHECK(grevlex.less(x2z, y3));
  CHECK(lex.less(y3, x2z));
  // multiplicativity on a sample
  CHECK(grevlex.less(x * y, x * x));
  CHECK(lex.less(y3 * y, x2z * y));
}

TEST_CASE("buchberger: already reduced and containment") {
  VarRegistry r = reg({"x", "y"});
  TermOrder lex(OrderKind::Lex, r);
  auto basis = buchberger({P("x", r), P("y", r)}, lex);
  CHECK(rendered(basis) == std::vector<std::string>{"x", "y"});

  VarRegistry rx = reg({"x"});
  TermOrder grevlex(OrderKind::Grevlex, rx);
  auto contained = buchberger({P("x^2 - 1", rx), P("x - 1", rx)}, grevlex);
  CHECK(rendered(contained) == std::vector<std::string>{"x - 1"});
}

TEST_CASE("buchberger: jacobian-style unit ideal") {
  VarRegistry r = reg({"x", "y"});
  TermOrder grevlex(OrderKind::Grevlex, r);
  std::vector<Polynomial> gens{P("y^2 - y + x^2", r), P("2*x", r), P("2*y - 1", r)};
  // modulo x = 0, y = 1/2 the first generator evaluates to -1/4 != 0
  std::vector<mpq_class> witness{mpq_class(0), mpq_class(1, 2)};
  CHECK(evaluate(gens[0], witness) == mpq_class(-1, 4));
  auto [unit, basis] = is_unit_ideal(gens, grevlex);
  CHECK(unit);
  CHECK(rendered(basis) == std::vector<std::string>{"1"});
  CHECK(basis.is_unit());
}

TEST_CASE("buchberger: non-unit jacobian with a singular witness") {
  VarRegistry r = reg({"x", "y"});
  TermOrder grevlex(OrderKind::Grevlex, r);
  Polynomial F = P("4*(y^2 - y) + (2*x^3 - 3*x^2)^2", r);
  std::vector<Polynomial> gens{F, partial_derivative(F, "x"), partial_derivative(F, "y")};
  // common zero at (x, y) = (1, 1/2)
  std::vector<mpq_class> pt{mpq_class(1), mpq_class(1, 2)};
  for (const auto& g : gens) CHECK(evaluate(g, pt) == 0);
  auto [unit, basis] = is_unit_ideal(gens, grevlex);
  CHECK_FALSE(unit);
  CHECK_FALSE(basis.is_unit());
  // the witness kills every element of the basis too
  for (const auto& g : basis.generators) CHECK(evaluate(g, pt) == 0);
}

TEST_CASE("normal form basics") {
  VarRegistry r = reg({"x", "y"});
  TermOrder grevlex(OrderKind::Grevlex, r);
  auto bx = buchberger({P("x", r)}, grevlex);
  CHECK(normal_form(P("x^2", r), bx).is_zero());
  auto by = buchberger({P("y - 1", r)}, grevlex);
  CHECK(normal_form(P("y", r), by) == P("1", r));
  CHECK(thrown_kind([&] {
          (void)normal_form(Polynomial::variable(reg({"z"}), 0), bx);
        }) == ErrorKind::RegistryMismatch);
}

TEST_CASE("input validation and resource cap") {
  VarRegistry r = reg({"x", "y"});
  TermOrder grevlex(OrderKind::Grevlex, r);
  CHECK(thrown_kind([&] { (void)buchberger({}, grevlex); }) == ErrorKind::EmptyInput);
  CHECK(thrown_kind([&] { (void)buchberger({Polynomial(r)}, grevlex); }) == ErrorKind::EmptyInput);
  GroebnerOptions tiny;
  tiny.pair_cap = 1;
  CHECK(thrown_kind([&] {
          (void)buchberger({P("x^2*y - 1", r), P("x*y^2 - x", r), P("x^3 - y", r)}, grevlex, tiny);
        }) == ErrorKind::ResourceCap);
}

TEST_CASE("property: buchberger criterion holds post hoc and generators reduce to zero") {
  VarRegistry r = reg({"x", "y"});
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    const int count = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) gens.push_back(random_nonzero_poly(rng, r, 3, 3, 4));
    TermOrder order(trial % 2 == 0 ? OrderKind::Grevlex : OrderKind::Lex, r);
    GroebnerBasis basis = buchberger(gens, order);
    for (const auto& g : gens) CHECK(normal_form(g, basis).is_zero());
    if (basis.is_unit()) continue;
    for (std::size_t i = 0; i < basis.generators.size(); ++i)
      for (std::size_t j = i + 1; j < basis.generators.size(); ++j) {
        Polynomial s = s_polynomial(basis.generators[i], basis.generators[j], order);
        CHECK(normal_form(s, basis).is_zero());
      }
    // reduced: no term of one element divisible by the leading term of another
    for (std::size_t i = 0; i < basis.generators.size(); ++i) {
      CHECK(order.leading_coefficient(basis.generators[i]) == 1);
      for (std::size_t j = 0; j < basis.generators.size(); ++j) {
        if (i == j) continue;
        const Monomial& lm = order.leading_monomial(basis.generators[j]);
        for (const auto& [m, c] : basis.generators[i].terms()) CHECK_FALSE(lm.divides(m));
      }
    }
  }
}

TEST_CASE("property: basis is canonical regardless of generator order") {
  VarRegistry r = reg({"x", "y"});
  std::mt19937 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_nonzero_poly(rng, r, 3, 3, 4));
    TermOrder order(OrderKind::Grevlex, r);
    GroebnerBasis b1 = buchberger(gens, order);
    std::vector<Polynomial> shuffled(gens.rbegin(), gens.rend());
    GroebnerBasis b2 = buchberger(shuffled, order);
    CHECK(rendered(b1) == rendered(b2));
  }
}

TEST_CASE("property: unit verdict is order independent") {
  VarRegistry r = reg({"x", "y"});
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2; ++i) gens.push_back(random_nonzero_poly(rng, r, 3, 3, 3));
    auto [unit_grevlex, bg] = is_unit_ideal(gens, TermOrder(OrderKind::Grevlex, r));
    auto [unit_lex, bl] = is_unit_ideal(gens, TermOrder(OrderKind::Lex, r));
    CHECK(unit_grevlex == unit_lex);
  }
}

TEST_CASE("property: constructed unit and non-unit ideals") {
  VarRegistry r = reg({"x", "y"});
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> coord(-4, 4);
  int built = 0;
  while (built < 20) {
    Polynomial p = random_nonzero_poly(rng, r, 3, 4, 4);
    const mpq_class a1 = coord(rng), a2 = coord(rng);
    std::vector<mpq_class> point{a1, a2};
    if (evaluate(p, point) == 0) continue;  // want p(a) != 0
    ++built;
    Polynomial lin1 = Polynomial::variable(r, 0) - Polynomial::constant(r, a1);
    Polynomial lin2 = Polynomial::variable(r, 1) - Polynomial::constant(r, a2);
    auto [unit_with_p, b1] = is_unit_ideal({lin1, lin2, p}, TermOrder(OrderKind::Grevlex, r));
    CHECK(unit_with_p);
    auto [unit_without, b2] = is_unit_ideal({lin1, lin2}, TermOrder(OrderKind::Grevlex, r));
    CHECK_FALSE(unit_without);
  }
}
