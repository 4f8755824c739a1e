#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "diored/reducer.hpp"
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

}  // namespace

TEST_CASE("four squares transform") {
  VarRegistry ru = reg({"u"});
  std::vector<FourSquaresMap> vars;
  Polynomial out = four_squares_transform(P("u - 3", ru), vars);
  REQUIRE(vars.size() == 1);
  CHECK(vars[0].original == "u");
  CHECK(out.registry().names() ==
        std::vector<std::string>{"u_a", "u_b", "u_c", "u_d"});
  CHECK(out == P("u_a^2 + u_b^2 + u_c^2 + u_d^2 - 3", out.registry()));
  // witness from the Lagrange decomposition of 3
  std::vector<long long> witness{1, 1, 1, 0};
  CHECK(evaluate(out, std::span<const long long>(witness)) == 0);

  // counts: m variables, degree d -> 4m variables, degree 2d
  VarRegistry r2 = reg({"u", "v"});
  Polynomial cubic = P("u^2*v - u + 7", r2);
  Polynomial big = four_squares_transform(cubic);
  CHECK(big.registry().arity() == 8);
  CHECK(*big.total_degree() == 6);

  // u + 1 = 0 has no solution once u is a sum of four squares
  Polynomial no_sol = four_squares_transform(P("u + 1", ru));
  std::vector<long long> pt(4, 0);
  bool found = false;
  for (long long a = -2; a <= 2 && !found; ++a)
    for (long long b = -2; b <= 2 && !found; ++b)
      for (long long c = -2; c <= 2 && !found; ++c)
        for (long long d = -2; d <= 2 && !found; ++d) {
          pt = {a, b, c, d};
          found = evaluate(no_sol, std::span<const long long>(pt)) == 0;
        }
  CHECK_FALSE(found);

  CHECK(thrown_kind([&] { (void)four_squares_transform(Polynomial(ru)); }) ==
        ErrorKind::ZeroPolynomial);
}

TEST_CASE("four squares transform avoids name collisions") {
  VarRegistry tricky = reg({"u", "u_a"});
  std::vector<FourSquaresMap> vars;
  Polynomial out = four_squares_transform(P("u + u_a", tricky), vars);
  REQUIRE(vars.size() == 2);
  CHECK(vars[0].fresh[0] == "u_a_1");  // "u_a" is taken by the second input variable
  CHECK(out.registry().arity() == 8);
}

TEST_CASE("compile_instance on t1 - 5") {
  VarRegistry rt = reg({"t1"});
  InstanceDescriptor desc = compile_instance(P("t1 - 5", rt));

  CHECK(desc.n == 3);
  CHECK(desc.smoothing.c == 1);
  CHECK(desc.curve.label() == "37A1");
  CHECK(desc.mode == SolvabilityMode::Integers);

  VarRegistry rz = reg({"t1", "y", "t_h"});
  CHECK(desc.Z_equation == P("y^2 - y*t_h + (t1 - 5*t_h)^2", rz));
  CHECK(desc.Z_equation.is_homogeneous());

  CHECK(desc.S.points ==
        std::vector<LatticeVector>{{0, 0, 0}, {2, 0, 0}, {0, 3, 0}});
  CHECK(desc.base_point_x == LatticeVector{0, 0, 1});

  // descriptor coherence
  CHECK(dehomogenize(desc.Z_equation, desc.provenance.homogenization_var) == desc.smoothing.F);
  REQUIRE(desc.S_prime.size() == desc.S.points.size());
  for (std::size_t i = 0; i < desc.S_prime.size(); ++i) {
    REQUIRE(desc.S_prime[i].size() == static_cast<std::size_t>(desc.n));
    for (std::size_t j = 0; j < desc.S_prime[i].size(); ++j) {
      CHECK(on_curve(desc.S_prime[i][j], desc.curve));
      CHECK(desc.S_prime[i][j] ==
            scalar_mul(desc.S.points[i][j], desc.P, desc.curve));
    }
  }
  // S' realizes 0 -> infinity, 2 -> 2P = (1,0), 3 -> 3P = (-1,-1)
  CHECK(desc.S_prime[0][0].is_infinity());
  CHECK(desc.S_prime[1][0] == ECPoint::affine(1, 0));
  CHECK(desc.S_prime[2][1] == ECPoint::affine(-1, -1));
}

TEST_CASE("compile_instance guards and n arithmetic") {
  VarRegistry rt = reg({"t1"});
  CHECK(thrown_kind([&] { (void)compile_instance(P("5", rt)); }) == ErrorKind::ConstantInput);

  // a torsion base point is rejected up front
  Curve torsion(0, 0, 0, 1, 0);
  CHECK(thrown_kind([&] {
          (void)compile_instance(P("t1 - 5", rt), torsion, ECPoint::affine(0, 0));
        }) == ErrorKind::InfiniteOrderSanityFailed);
  CHECK(thrown_kind([&] {
          (void)compile_instance(P("t1 - 5", rt), curve_37a1(), ECPoint::affine(1, 1));
        }) == ErrorKind::PointNotOnCurve);

  // m variables -> n = m + 2
  std::mt19937 rng(61);
  for (int m = 1; m <= 3; ++m) {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.push_back("t" + std::to_string(i + 1));
    VarRegistry r(names);
    Polynomial f = random_nonconstant_poly(rng, r, 2, 3, 3);
    InstanceDescriptor desc = compile_instance(f);
    CHECK(desc.n == m + 2);
    CHECK(desc.n >= 3);
  }
}

TEST_CASE("sigma_image") {
  CHECK(sigma_image(GElement{{0, 0}, 1}) == LatticeVector{0, 0, 1});
  CHECK(sigma_image(GElement{{5, 0}, 1}) == LatticeVector{5, 0, 1});
  CHECK(sigma_image(GElement{{-5, 0}, -1}) == LatticeVector{-5, 0, -1});
}

TEST_CASE("point_in_Z") {
  VarRegistry rt = reg({"t1"});
  InstanceDescriptor desc = compile_instance(P("t1 - 5", rt));

  CHECK(point_in_Z(desc, {5, 0, 1}));        // 0 - 0 + (5 - 5)^2 = 0
  CHECK_FALSE(point_in_Z(desc, {0, 0, 1}));  // 25 != 0
  // scaling invariance
  CHECK(point_in_Z(desc, {10, 0, 2}));
  CHECK(point_in_Z(desc, {-5, 0, -1}));
  CHECK(thrown_kind([&] { (void)point_in_Z(desc, {0, 0, 0}); }) ==
        ErrorKind::ZeroProjectivePoint);
  CHECK(thrown_kind([&] { (void)point_in_Z(desc, {0, 1}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("property: homogeneity and sign symmetry of Z_equation") {
  VarRegistry rt = reg({"t1", "t2"});
  InstanceDescriptor desc = compile_instance(parse_poly("t1 + t2 - 3", rt));
  const Polynomial& Zh = desc.Z_equation;
  const int d = *Zh.total_degree();
  CHECK(d % 2 == 0);  // 2 * deg f is always even

  std::mt19937 rng(67);
  std::uniform_int_distribution<long long> coord(-6, 6);
  for (int i = 0; i < 40; ++i) {
    std::vector<mpq_class> pt;
    for (int k = 0; k < desc.n; ++k) pt.emplace_back(coord(rng));
    mpq_class lambda(coord(rng));
    if (lambda == 0) lambda = 2;
    std::vector<mpq_class> scaled;
    for (const auto& c : pt) scaled.push_back(c * lambda);
    mpq_class pow(1);
    for (int k = 0; k < d; ++k) pow *= lambda;
    CHECK(evaluate(Zh, scaled) == pow * evaluate(Zh, pt));
  }

  // F_hat(a, 1) = F(a) and F_hat(-a, -1) = F_hat(a, 1)
  for (int i = 0; i < 40; ++i) {
    std::vector<long long> a;
    for (int k = 0; k + 1 < desc.n; ++k) a.push_back(coord(rng));
    std::vector<long long> plus(a);
    plus.push_back(1);
    std::vector<long long> minus;
    for (long long c : a) minus.push_back(-c);
    minus.push_back(-1);
    CHECK(evaluate(Zh, std::span<const long long>(plus)) ==
          evaluate(desc.smoothing.F, std::span<const long long>(a)));
    CHECK(evaluate(Zh, std::span<const long long>(minus)) ==
          evaluate(Zh, std::span<const long long>(plus)));
  }
}

TEST_CASE("mode composition: N mode equals Z mode of the transform") {
  VarRegistry ru = reg({"u"});
  Polynomial f = P("u - 3", ru);

  CompileOptions n_mode;
  n_mode.mode = SolvabilityMode::Naturals;
  InstanceDescriptor via_n = compile_instance(f, n_mode);

  InstanceDescriptor via_z = compile_instance(four_squares_transform(f));

  CHECK(via_n.n == via_z.n);
  CHECK(via_n.Z_equation == via_z.Z_equation);
  CHECK(via_n.smoothing.F == via_z.smoothing.F);
  CHECK(via_n.smoothing.c == via_z.smoothing.c);
  CHECK(via_n.S.points == via_z.S.points);
  CHECK(via_n.mode == SolvabilityMode::Naturals);
  CHECK(via_z.mode == SolvabilityMode::Integers);
  REQUIRE(via_n.provenance.four_squares_f.has_value());
  CHECK(*via_n.provenance.four_squares_f == via_z.provenance.input_f);
}

TEST_CASE("normalize_projective") {
  CHECK(normalize_projective({-5, 0, -1}) == LatticeVector{5, 0, 1});
  CHECK(normalize_projective({2, 4, 6}) == LatticeVector{1, 2, 3});
  CHECK(normalize_projective({0, -3, 0}) == LatticeVector{0, 1, 0});
  CHECK(thrown_kind([] { (void)normalize_projective({0, 0, 0}); }) ==
        ErrorKind::ZeroProjectivePoint);
}
