#include "diored/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace diored {

std::vector<long long> first_primes(int count) {
  std::vector<long long> primes;
  for (long long candidate = 2; static_cast<int>(primes.size()) < count; ++candidate) {
    bool prime = true;
    for (long long p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(candidate);
  }
  return primes;
}

LatticeSet build_S(int n) {
  if (n < 3) fail(ErrorKind::DimensionTooSmall, "lattice construction requires n >= 3");
  LatticeSet S;
  S.n = n;
  S.points.emplace_back(n, 0);
  const auto primes = first_primes(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    LatticeVector v(n, 0);
    v[static_cast<std::size_t>(i)] = primes[static_cast<std::size_t>(i)];
    S.points.push_back(std::move(v));
  }
  return S;
}

AffineLatticeMap g_to_affine(const GElement& g) {
  if (g.eps != 1 && g.eps != -1) fail(ErrorKind::InvalidArgument, "eps must be +-1");
  const std::size_t n = g.a.size() + 1;
  AffineLatticeMap m;
  m.A.assign(n, LatticeVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m.A[i][i] = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) m.A[i][n - 1] = g.a[i];
  m.A[n - 1][n - 1] = g.eps;
  m.b.assign(n, 0);
  return m;
}

LatticeVector AffineLatticeMap::apply(const LatticeVector& v) const {
  const std::size_t n = A.size();
  if (v.size() != n || b.size() != n)
    fail(ErrorKind::DimensionMismatch, "vector length does not match map dimension");
  LatticeVector out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long long acc = b[i];
    for (std::size_t j = 0; j < n; ++j) acc += A[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

bool maps_S_to_S(const AffineLatticeMap& m, const LatticeSet& S) {
  if (m.A.size() != static_cast<std::size_t>(S.n))
    fail(ErrorKind::DimensionMismatch, "map dimension does not match lattice set");
  std::vector<LatticeVector> images;
  images.reserve(S.points.size());
  for (const auto& p : S.points) images.push_back(apply(m, p));
  std::vector<LatticeVector> sorted_points = S.points;
  std::sort(images.begin(), images.end());
  std::sort(sorted_points.begin(), sorted_points.end());
  return images == sorted_points;
}

long long det(const IntMatrix& A) {
  const std::size_t n = A.size();
  for (const auto& row : A)
    if (row.size() != n) fail(ErrorKind::DimensionMismatch, "matrix is not square");
  if (n == 0) return 1;
  // Bareiss: intermediates are minors of A, so desk-scale entries stay well
  // inside 64 bits
  IntMatrix m = A;
  long long sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool is_g_form(const AffineLatticeMap& m) {
  const std::size_t n = m.A.size();
  if (n == 0 || m.b.size() != n) return false;
  for (long long bi : m.b)
    if (bi != 0) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (m.A[i][j] != (i == j ? 1 : 0)) return false;
  return m.A[n - 1][n - 1] == 1 || m.A[n - 1][n - 1] == -1;
}

GElement compose(const GElement& g, const GElement& h) {
  if (g.a.size() != h.a.size()) fail(ErrorKind::DimensionMismatch, "mismatched G elements");
  // M(g.a, g.eps) * M(h.a, h.eps) = M(h.a + h.eps * g.a, g.eps * h.eps)
  GElement out;
  out.a.resize(g.a.size());
  for (std::size_t i = 0; i < g.a.size(); ++i) out.a[i] = h.a[i] + h.eps * g.a[i];
  out.eps = g.eps * h.eps;
  return out;
}

GElement inverse(const GElement& g) {
  GElement out;
  out.a.resize(g.a.size());
  for (std::size_t i = 0; i < g.a.size(); ++i) out.a[i] = -g.eps * g.a[i];
  out.eps = g.eps;
  return out;
}

namespace {

// odometer over [-bound, bound]^len, lexicographic from all -bound
bool next_tuple(std::vector<long long>& tuple, long long bound) {
  for (std::size_t i = tuple.size(); i-- > 0;) {
    if (tuple[i] < bound) {
      ++tuple[i];
      for (std::size_t j = i + 1; j < tuple.size(); ++j) tuple[j] = -bound;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<AffineLatticeMap> stabilizer_bruteforce(int n, int entry_bound,
                                                    const StabilizerOptions& opts) {
  if (n < 3) fail(ErrorKind::DimensionTooSmall, "stabilizer search requires n >= 3");
  if (entry_bound < 1) fail(ErrorKind::InvalidArgument, "entry bound must be >= 1");

  const double box = 2.0 * entry_bound + 1.0;
  if (std::pow(box, n * n) > static_cast<double>(opts.matrix_cap))
    fail(ErrorKind::ResourceCap, "matrix enumeration size exceeds cap for n=" +
                                     std::to_string(n) + ", bound=" + std::to_string(entry_bound));

  const LatticeSet S = build_S(n);

  // any qualifying map sends 0 to b, so b must lie in S as well as the box;
  // this prunes the b loop without changing the filtered result
  std::vector<LatticeVector> b_candidates;
  for (const auto& p : S.points) {
    bool in_box = true;
    for (long long x : p) in_box = in_box && (std::llabs(x) <= entry_bound);
    if (in_box) b_candidates.push_back(p);
  }
  std::sort(b_candidates.begin(), b_candidates.end());

  std::vector<AffineLatticeMap> out;
  std::vector<long long> flat(static_cast<std::size_t>(n) * n, -entry_bound);
  AffineLatticeMap m;
  m.A.assign(n, LatticeVector(n, 0));
  bool more = true;
  while (more) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            flat[static_cast<std::size_t>(i * n + j)];
    const long long d = det(m.A);
    if (d == 1 || d == -1) {
      for (const auto& b : b_candidates) {
        m.b = b;
        if (maps_S_to_S(m, S)) {
          if (!is_g_form(m))
            fail(ErrorKind::PropertyViolation,
                 "bounded stabilizer contains a map outside G");
          out.push_back(m);
        }
      }
    }
    more = next_tuple(flat, entry_bound);
  }
  return out;
}

}  // namespace diored
