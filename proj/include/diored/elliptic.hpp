#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "diored/errors.hpp"

namespace diored {

// Long Weierstrass curve y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 over Q.
class Curve {
public:
  Curve(mpq_class a1, mpq_class a2, mpq_class a3, mpq_class a4, mpq_class a6,
        std::string label = "");

  const mpq_class& a1() const { return a1_; }
  const mpq_class& a2() const { return a2_; }
  const mpq_class& a3() const { return a3_; }
  const mpq_class& a4() const { return a4_; }
  const mpq_class& a6() const { return a6_; }
  const std::string& label() const { return label_; }
  mpq_class discriminant() const;

  friend bool operator==(const Curve& a, const Curve& b) {
    return a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ && a.a4_ == b.a4_ &&
           a.a6_ == b.a6_;
  }

private:
  mpq_class a1_, a2_, a3_, a4_, a6_;
  std::string label_;
};

// The curve y^2 + y = x^3 - x.
Curve curve_37a1();

// Rational point: infinity or exact affine coordinates.
class ECPoint {
public:
  static ECPoint infinity() { return ECPoint(); }
  static ECPoint affine(mpq_class x, mpq_class y);

  bool is_infinity() const { return infinity_; }
  const mpq_class& x() const;
  const mpq_class& y() const;

  friend bool operator==(const ECPoint& a, const ECPoint& b) {
    if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend bool operator!=(const ECPoint& a, const ECPoint& b) { return !(a == b); }

private:
  ECPoint() : infinity_(true) {}
  bool infinity_;
  mpq_class x_, y_;
};

bool on_curve(const ECPoint& pt, const Curve& E);

ECPoint ec_neg(const ECPoint& p, const Curve& E);
ECPoint ec_add(const ECPoint& p, const ECPoint& q, const Curve& E);
ECPoint scalar_mul(long long k, const ECPoint& P, const Curve& E);

// k*P for k = -k_max..k_max; index k + k_max. Entry k = 0 is infinity.
std::vector<ECPoint> multiples_table(const ECPoint& P, int k_max, const Curve& E);

// k*P != infinity for 1 <= k <= 12; sufficient for infinite order by Mazur's
// classification of rational torsion (external fact, not re-proved here).
bool infinite_order_sanity(const ECPoint& P, const Curve& E);

}  // namespace diored
