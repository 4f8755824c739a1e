#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diored/smoothing.hpp"
#include "test_util.hpp"

using namespace diored;
using testutil::random_nonconstant_poly;
using testutil::thrown_kind;

namespace {

VarRegistry reg(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return VarRegistry(std::move(v));
}

Polynomial P(const char* text, const VarRegistry& r) { return parse_poly(text, r); }

// brute-force integer zeros in [-B, B]^arity, test-side oracle
std::vector<std::vector<long long>> box_zeros(const Polynomial& p, long long B) {
  std::vector<std::vector<long long>> out;
  const std::size_t m = p.registry().arity();
  std::vector<long long> pt(m, -B);
  for (;;) {
    if (evaluate(p, std::span<const long long>(pt)) == 0) out.push_back(pt);
    std::size_t i = m;
    while (i-- > 0) {
      if (pt[i] < B) {
        ++pt[i];
        for (std::size_t j = i + 1; j < m; ++j) pt[j] = -B;
        break;
      }
      if (i == 0) return out;
    }
  }
}

}  // namespace

TEST_CASE("build_candidate instantiates the smoothing formula") {
  VarRegistry rx = reg({"x"});
  CHECK(build_candidate(P("x", rx), 1) == P("y^2 - y + x^2", reg({"x", "y"})));

  VarRegistry rt = reg({"t1"});
  CHECK(build_candidate(P("t1 - 5", rt), 1) ==
        P("y^2 - y + t1^2 - 10*t1 + 25", reg({"t1", "y"})));

  CHECK(build_candidate(P("2*x^3 - 3*x^2", rx), 4) ==
        P("4*y^2 - 4*y + 4*x^6 - 12*x^5 + 9*x^4", reg({"x", "y"})));
}

TEST_CASE("build_candidate guards") {
  VarRegistry rx = reg({"x"});
  CHECK(thrown_kind([&] { (void)build_candidate(P("7", rx), 1); }) == ErrorKind::ConstantInput);
  CHECK(thrown_kind([&] {
          (void)build_candidate(Polynomial::variable(rx, 0).scaled(mpq_class(1, 2)), 1);
        }) == ErrorKind::NonIntegerInput);
  CHECK(thrown_kind([&] { (void)build_candidate(P("x", rx), 0); }) == ErrorKind::InvalidArgument);

  // fresh variable renames on collision and is recorded
  VarRegistry ry = reg({"y"});
  std::string fresh;
  Polynomial F = build_candidate(P("y^3 - y", ry), 1, fresh);
  CHECK(fresh == "y_1");
  CHECK(F.registry().names() == std::vector<std::string>{"y", "y_1"});
  CHECK(F == P("y_1^2 - y_1 + (y^3 - y)^2", F.registry()));
}

TEST_CASE("jacobian generators") {
  VarRegistry rxy = reg({"x", "y"});
  auto gens = jacobian_generators(P("y^2 - y + x^2", rxy));
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == P("y^2 - y + x^2", rxy));
  CHECK(gens[1] == P("2*x", rxy));
  CHECK(gens[2] == P("2*y - 1", rxy));

  VarRegistry rx = reg({"x"});
  auto trivial = jacobian_generators(P("x", rx));
  REQUIRE(trivial.size() == 2);
  CHECK(trivial[1] == P("1", rx));

  auto circle = jacobian_generators(P("x^2 + y^2 - 1", rxy));
  CHECK(circle[1] == P("2*x", rxy));
  CHECK(circle[2] == P("2*y", rxy));

  CHECK(thrown_kind([&] { (void)jacobian_generators(Polynomial(rx)); }) ==
        ErrorKind::ZeroPolynomial);
}

TEST_CASE("smoothness verdicts") {
  VarRegistry rx = reg({"x"});
  auto [smooth1, cert1] = is_smooth_affine_hypersurface(build_candidate(P("x", rx), 1));
  CHECK(smooth1);
  CHECK(cert1.is_unit());

  auto [smooth4, cert4] =
      is_smooth_affine_hypersurface(build_candidate(P("2*x^3 - 3*x^2", rx), 4));
  CHECK_FALSE(smooth4);
  // singular point (1, 1/2): 4*(1/4 - 1/2) + 1 = 0 and both partials vanish
  Polynomial F4 = build_candidate(P("2*x^3 - 3*x^2", rx), 4);
  std::vector<mpq_class> pt{mpq_class(1), mpq_class(1, 2)};
  CHECK(evaluate(F4, pt) == 0);
  for (const auto& g : jacobian_generators(F4)) CHECK(evaluate(g, pt) == 0);

  VarRegistry rxy = reg({"x", "y"});
  auto [circle_smooth, circle_cert] = is_smooth_affine_hypersurface(P("x^2 + y^2 - 1", rxy));
  CHECK(circle_smooth);
}

TEST_CASE("smooth_lift returns the least good c") {
  VarRegistry rx = reg({"x"});
  SmoothingResult r1 = smooth_lift(P("x", rx));
  CHECK(r1.c == 1);
  CHECK(r1.rejected.empty());
  CHECK(r1.degree_in == 1);
  CHECK(r1.degree_out == 2);
  CHECK(r1.certificate.is_unit());
  CHECK(r1.fresh_var == "y");

  SmoothingResult r2 = smooth_lift(P("2*x^3 - 3*x^2", rx));
  CHECK(r2.c == 1);  // the bad set is {4}, disjoint from the returned c
  CHECK(r2.rejected.empty());
  CHECK(r2.degree_out == 2 * r2.degree_in);

  CHECK(thrown_kind([&] { (void)smooth_lift(P("7", rx)); }) == ErrorKind::ConstantInput);
}

TEST_CASE("smooth_lift records rejected c with counter-certificates") {
  // f = 2x^2 + 2x + 1 has critical value 1/2 at x = -1/2, so c = 1 is singular
  VarRegistry rx = reg({"x"});
  SmoothingResult r = smooth_lift(P("2*x^2 + 2*x + 1", rx));
  CHECK(r.c == 2);
  REQUIRE(r.rejected.size() == 1);
  CHECK(r.rejected[0].first == 1);
  CHECK_FALSE(r.rejected[0].second.is_unit());
  // the counter-certificate is a genuine non-unit reduced basis
  CHECK(!r.rejected[0].second.generators.empty());

  // F is the formula instantiated at the returned c, identically
  Polynomial f = P("2*x^2 + 2*x + 1", rx);
  CHECK(r.F == build_candidate(f, r.c));

  GroebnerOptions tight;
  SmoothingOptions opts;
  opts.c_max = 1;
  CHECK(thrown_kind([&] { (void)smooth_lift(f, opts); }) == ErrorKind::CSearchExhausted);
}

TEST_CASE("property: degree law and solution transfer on a corpus") {
  std::mt19937 rng(41);
  VarRegistry r1 = reg({"x"});
  VarRegistry r2 = reg({"x", "z"});
  const long long B = 3;
  for (int trial = 0; trial < 12; ++trial) {
    const VarRegistry& r = trial % 2 == 0 ? r1 : r2;
    Polynomial f = random_nonconstant_poly(rng, r, 3, 3, 4);
    SmoothingResult result = smooth_lift(f);
    CHECK(result.degree_out == 2 * result.degree_in);
    CHECK(*result.F.total_degree() == 2 * *f.total_degree());

    // zeros of f in the box biject with zeros of F in box x {0,1}
    auto zf = box_zeros(f, B);
    auto zF = box_zeros(result.F, B);
    std::vector<std::vector<long long>> lifted;
    for (const auto& a : zf)
      for (long long yv : {0LL, 1LL}) {
        auto b = a;
        b.push_back(yv);
        lifted.push_back(std::move(b));
      }
    std::sort(lifted.begin(), lifted.end());
    std::sort(zF.begin(), zF.end());
    CHECK(lifted == zF);

    // nonnegativity mechanism: both summands vanish at every zero of F
    for (const auto& b : zF) {
      std::vector<long long> head(b.begin(), b.end() - 1);
      CHECK(evaluate(f, std::span<const long long>(head)) == 0);
      const long long yv = b.back();
      CHECK(yv * yv - yv == 0);
    }
  }
}
