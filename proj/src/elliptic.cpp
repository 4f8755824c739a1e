#include "diored/elliptic.hpp"

namespace diored {

Curve::Curve(mpq_class a1, mpq_class a2, mpq_class a3, mpq_class a4, mpq_class a6,
             std::string label)
    : a1_(std::move(a1)),
      a2_(std::move(a2)),
      a3_(std::move(a3)),
      a4_(std::move(a4)),
      a6_(std::move(a6)),
      label_(std::move(label)) {
  if (discriminant() == 0)
    fail(ErrorKind::SingularCurve, "Weierstrass equation has zero discriminant");
}

mpq_class Curve::discriminant() const {
  const mpq_class b2 = a1_ * a1_ + 4 * a2_;
  const mpq_class b4 = 2 * a4_ + a1_ * a3_;
  const mpq_class b6 = a3_ * a3_ + 4 * a6_;
  const mpq_class b8 = a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ -
                       a4_ * a4_;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

Curve curve_37a1() { return Curve(0, 0, 1, -1, 0, "37A1"); }

ECPoint ECPoint::affine(mpq_class x, mpq_class y) {
  ECPoint p;
  p.infinity_ = false;
  p.x_ = std::move(x);
  p.y_ = std::move(y);
  return p;
}

const mpq_class& ECPoint::x() const {
  if (infinity_) fail(ErrorKind::InvalidArgument, "point at infinity has no coordinates");
  return x_;
}

const mpq_class& ECPoint::y() const {
  if (infinity_) fail(ErrorKind::InvalidArgument, "point at infinity has no coordinates");
  return y_;
}

bool on_curve(const ECPoint& pt, const Curve& E) {
  if (pt.is_infinity()) return true;
  const mpq_class& x = pt.x();
  const mpq_class& y = pt.y();
  return y * y + E.a1() * x * y + E.a3() * y ==
         x * x * x + E.a2() * x * x + E.a4() * x + E.a6();
}

namespace {

void require_on_curve(const ECPoint& pt, const Curve& E) {
  if (!on_curve(pt, E)) fail(ErrorKind::PointNotOnCurve, "point does not satisfy the curve equation");
}

}  // namespace

ECPoint ec_neg(const ECPoint& p, const Curve& E) {
  require_on_curve(p, E);
  if (p.is_infinity()) return p;
  return ECPoint::affine(p.x(), -p.y() - E.a1() * p.x() - E.a3());
}

ECPoint ec_add(const ECPoint& p, const ECPoint& q, const Curve& E) {
  require_on_curve(p, E);
  require_on_curve(q, E);
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  const mpq_class &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
  if (x1 == x2 && q == ec_neg(p, E)) return ECPoint::infinity();

  mpq_class lambda;
  if (p == q) {
    // tangent slope from implicit differentiation of the Weierstrass equation
    lambda = (3 * x1 * x1 + 2 * E.a2() * x1 + E.a4() - E.a1() * y1) /
             (2 * y1 + E.a1() * x1 + E.a3());
  } else {
    lambda = (y2 - y1) / (x2 - x1);
  }
  const mpq_class nu = y1 - lambda * x1;
  mpq_class x3 = lambda * lambda + E.a1() * lambda - E.a2() - x1 - x2;
  mpq_class y3 = -(lambda + E.a1()) * x3 - nu - E.a3();
  x3.canonicalize();
  y3.canonicalize();
  return ECPoint::affine(std::move(x3), std::move(y3));
}

ECPoint scalar_mul(long long k, const ECPoint& P, const Curve& E) {
  require_on_curve(P, E);
  if (k == 0) return ECPoint::infinity();
  ECPoint base = k < 0 ? ec_neg(P, E) : P;
  unsigned long long count = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ULL
                                   : static_cast<unsigned long long>(k);
  ECPoint acc = ECPoint::infinity();
  while (count > 0) {
    if (count & 1ULL) acc = ec_add(acc, base, E);
    count >>= 1ULL;
    if (count > 0) base = ec_add(base, base, E);
  }
  return acc;
}

std::vector<ECPoint> multiples_table(const ECPoint& P, int k_max, const Curve& E) {
  require_on_curve(P, E);
  if (k_max < 1) fail(ErrorKind::InvalidArgument, "k_max must be >= 1");
  std::vector<ECPoint> table(static_cast<std::size_t>(2 * k_max) + 1, ECPoint::infinity());
  ECPoint cur = ECPoint::infinity();
  for (int k = 1; k <= k_max; ++k) {
    cur = ec_add(cur, P, E);
    table[static_cast<std::size_t>(k_max + k)] = cur;
    table[static_cast<std::size_t>(k_max - k)] = ec_neg(cur, E);
  }
  return table;
}

bool infinite_order_sanity(const ECPoint& P, const Curve& E) {
  require_on_curve(P, E);
  if (P.is_infinity())
    fail(ErrorKind::InvalidArgument, "infinite-order check requires an affine point");
  ECPoint cur = ECPoint::infinity();
  for (int k = 1; k <= 12; ++k) {
    cur = ec_add(cur, P, E);
    if (cur.is_infinity()) return false;
  }
  return true;
}

}  // namespace diored
