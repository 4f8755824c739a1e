#include "diored/polyring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "diored/rational.hpp"

namespace diored {

VarRegistry::VarRegistry(std::vector<std::string> names) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) fail(ErrorKind::InvalidArgument, "empty variable name");
    if (!seen.insert(n).second)
      fail(ErrorKind::InvalidArgument, "duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarRegistry::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

VarRegistry VarRegistry::extended(const std::string& fresh) const {
  if (contains(fresh))
    fail(ErrorKind::VariableCollision, "variable '" + fresh + "' already registered");
  std::vector<std::string> names = *names_;
  names.push_back(fresh);
  return VarRegistry(std::move(names));
}

VarRegistry VarRegistry::without(std::size_t index) const {
  std::vector<std::string> names = *names_;
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(index));
  return VarRegistry(std::move(names));
}

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  for (int e : exps_)
    if (e < 0) fail(ErrorKind::InvalidArgument, "negative exponent in monomial");
}

int Monomial::total_degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::divided_by(const Monomial& other) const {
  std::vector<int> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.exps_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = ea.size(); i-- > 0;) {
    if (ea[i] != eb[i]) return ea[i] > eb[i];
  }
  return false;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] < eb[i];
  return false;
}

Polynomial::Polynomial(VarRegistry registry, TermMap terms)
    : reg_(std::move(registry)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.arity() != reg_.arity())
      fail(ErrorKind::ArityMismatch, "monomial arity does not match registry");
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Polynomial Polynomial::constant(VarRegistry registry, const mpq_class& value) {
  Polynomial p(std::move(registry));
  if (value != 0) p.terms_.emplace(Monomial::one(p.reg_.arity()), value);
  return p;
}

Polynomial Polynomial::variable(VarRegistry registry, std::size_t index) {
  if (index >= registry.arity())
    fail(ErrorKind::UnknownVariable, "variable index out of range");
  std::vector<int> e(registry.arity(), 0);
  e[index] = 1;
  Polynomial p(std::move(registry));
  p.terms_.emplace(Monomial(std::move(e)), mpq_class(1));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

mpq_class Polynomial::constant_term() const {
  auto it = terms_.find(Monomial::one(reg_.arity()));
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::optional<int> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  // grevlex is graded, so the last term has maximal total degree
  return terms_.rbegin()->first.total_degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.total_degree();
  return terms_.rbegin()->first.total_degree() == d;
}

bool Polynomial::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

void Polynomial::check_same_registry(const Polynomial& other) const {
  if (reg_ != other.reg_)
    fail(ErrorKind::RegistryMismatch, "operands built over different registries");
}

void Polynomial::add_term(const Monomial& m, const mpq_class& coeff) {
  if (m.arity() != reg_.arity())
    fail(ErrorKind::ArityMismatch, "monomial arity does not match registry");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_registry(other);
  Polynomial out(*this);
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_same_registry(other);
  Polynomial out(*this);
  for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(reg_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_registry(other);
  Polynomial out(reg_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const mpq_class& factor) const {
  Polynomial out(reg_);
  if (factor == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * factor);
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = Polynomial::constant(reg_, 1);
  Polynomial base(*this);
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial homogenize(const Polynomial& p, const std::string& new_var) {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "cannot homogenize the zero polynomial");
  VarRegistry ext = p.registry().extended(new_var);  // throws VariableCollision
  const int d = *p.total_degree();
  Polynomial out(ext);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e = m.exponents();
    e.push_back(d - m.total_degree());
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

Polynomial dehomogenize(const Polynomial& p, const std::string& var) {
  auto idx = p.registry().index_of(var);
  if (!idx) fail(ErrorKind::UnknownVariable, "variable '" + var + "' not in registry");
  VarRegistry reduced = p.registry().without(*idx);
  Polynomial out(reduced);
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e = m.exponents();
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(*idx));
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index) {
  if (var_index >= p.registry().arity())
    fail(ErrorKind::UnknownVariable, "variable index out of range");
  Polynomial out(p.registry());
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exponent(var_index);
    if (e == 0) continue;
    std::vector<int> exps = m.exponents();
    exps[var_index] -= 1;
    out.add_term(Monomial(std::move(exps)), c * e);
  }
  return out;
}

Polynomial partial_derivative(const Polynomial& p, std::string_view var) {
  auto idx = p.registry().index_of(var);
  if (!idx) fail(ErrorKind::UnknownVariable, "variable '" + std::string(var) + "' not in registry");
  return partial_derivative(p, *idx);
}

mpq_class evaluate(const Polynomial& p, std::span<const mpq_class> point) {
  if (point.size() != p.registry().arity())
    fail(ErrorKind::ArityMismatch, "point length does not match registry arity");
  // per-variable power tables up to the maximal exponent
  std::vector<std::vector<mpq_class>> powers(point.size());
  std::vector<int> maxe(point.size(), 0);
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < point.size(); ++i)
      maxe[i] = std::max(maxe[i], m.exponent(i));
  for (std::size_t i = 0; i < point.size(); ++i) {
    powers[i].resize(static_cast<std::size_t>(maxe[i]) + 1);
    powers[i][0] = 1;
    for (int e = 1; e <= maxe[i]; ++e) powers[i][static_cast<std::size_t>(e)] = powers[i][static_cast<std::size_t>(e - 1)] * point[i];
  }
  mpq_class acc(0);
  for (const auto& [m, c] : p.terms()) {
    mpq_class term(c);
    for (std::size_t i = 0; i < point.size(); ++i) {
      const int e = m.exponent(i);
      if (e > 0) term *= powers[i][static_cast<std::size_t>(e)];
    }
    acc += term;
  }
  return acc;
}

mpq_class evaluate(const Polynomial& p, std::span<const long long> point) {
  if (point.size() != p.registry().arity())
    fail(ErrorKind::ArityMismatch, "point length does not match registry arity");
  std::vector<std::vector<mpz_class>> powers(point.size());
  std::vector<int> maxe(point.size(), 0);
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < point.size(); ++i)
      maxe[i] = std::max(maxe[i], m.exponent(i));
  for (std::size_t i = 0; i < point.size(); ++i) {
    powers[i].resize(static_cast<std::size_t>(maxe[i]) + 1);
    powers[i][0] = 1;
    const mpz_class base(static_cast<long>(point[i]));  // LP64: long long fits in long
    for (int e = 1; e <= maxe[i]; ++e)
      powers[i][static_cast<std::size_t>(e)] = powers[i][static_cast<std::size_t>(e - 1)] * base;
  }
  if (p.has_integer_coefficients()) {
    mpz_class acc(0), term;
    for (const auto& [m, c] : p.terms()) {
      term = c.get_num();
      for (std::size_t i = 0; i < point.size(); ++i) {
        const int e = m.exponent(i);
        if (e > 0) term *= powers[i][static_cast<std::size_t>(e)];
      }
      acc += term;
    }
    return mpq_class(acc);
  }
  mpq_class acc(0);
  for (const auto& [m, c] : p.terms()) {
    mpz_class mono(1);
    for (std::size_t i = 0; i < point.size(); ++i) {
      const int e = m.exponent(i);
      if (e > 0) mono *= powers[i][static_cast<std::size_t>(e)];
    }
    acc += c * mpq_class(mono);
  }
  return acc;
}

namespace {

// Fraction-free Bareiss determinant of a square integer matrix.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class sign(1), prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;  // exact
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Dense coefficients of a univariate polynomial in descending degree, scaled
// to integers; returns the positive rational multiplier that was applied.
mpq_class dense_integer_coeffs(const Polynomial& p, std::size_t var_index,
                               std::vector<mpz_class>& out) {
  int deg = 0;
  for (const auto& [m, c] : p.terms()) deg = std::max(deg, m.exponent(var_index));
  mpz_class denom_lcm(1);
  for (const auto& [m, c] : p.terms())
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  out.assign(static_cast<std::size_t>(deg) + 1, mpz_class(0));
  for (const auto& [m, c] : p.terms()) {
    mpq_class scaled = c * mpq_class(denom_lcm);
    out[static_cast<std::size_t>(deg - m.exponent(var_index))] = scaled.get_num();
  }
  return mpq_class(denom_lcm);
}

}  // namespace

mpq_class resultant_univariate(const Polynomial& p, const Polynomial& q, std::string_view var) {
  if (p.registry() != q.registry())
    fail(ErrorKind::RegistryMismatch, "resultant operands built over different registries");
  auto idx = p.registry().index_of(var);
  if (!idx) fail(ErrorKind::UnknownVariable, "variable '" + std::string(var) + "' not in registry");
  if (p.is_zero() || q.is_zero())
    fail(ErrorKind::ZeroPolynomial, "resultant of the zero polynomial");
  for (const Polynomial* poly : {&p, &q})
    for (const auto& [m, c] : poly->terms())
      for (std::size_t i = 0; i < m.arity(); ++i)
        if (i != *idx && m.exponent(i) != 0)
          fail(ErrorKind::NotUnivariate, "operand involves a variable other than '" + std::string(var) + "'");

  std::vector<mpz_class> pc, qc;
  const mpq_class sp = dense_integer_coeffs(p, *idx, pc);
  const mpq_class sq = dense_integer_coeffs(q, *idx, qc);
  const std::size_t m = pc.size() - 1;  // deg p
  const std::size_t n = qc.size() - 1;  // deg q

  // Sylvester matrix: n shifted rows of p above m shifted rows of q.
  std::vector<std::vector<mpz_class>> syl(m + n, std::vector<mpz_class>(m + n, mpz_class(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) syl[r][r + j] = pc[j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) syl[n + r][r + j] = qc[j];
  const mpz_class det = bareiss_det(std::move(syl));

  // Res(s*p, q) = s^deg(q) * Res(p, q); undo the integer scaling.
  mpq_class scale(1);
  for (std::size_t i = 0; i < n; ++i) scale *= sp;
  for (std::size_t i = 0; i < m; ++i) scale *= sq;
  mpq_class result = mpq_class(det) / scale;
  result.canonicalize();
  return result;
}

}  // namespace diored
