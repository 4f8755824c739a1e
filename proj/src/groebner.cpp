#include "diored/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace diored {

const char* to_string(OrderKind kind) {
  return kind == OrderKind::Grevlex ? "grevlex" : "lex";
}

OrderKind order_kind_from_string(std::string_view text) {
  if (text == "grevlex") return OrderKind::Grevlex;
  if (text == "lex") return OrderKind::Lex;
  fail(ErrorKind::InvalidArgument, "unknown term order '" + std::string(text) + "'");
}

const Monomial& TermOrder::leading_monomial(const Polynomial& p) const {
  if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "leading monomial of zero");
  if (kind_ == OrderKind::Grevlex) return p.terms().rbegin()->first;
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (best == nullptr || lex_less(*best, m)) best = &m;
  return *best;
}

mpq_class TermOrder::leading_coefficient(const Polynomial& p) const {
  return p.terms().at(leading_monomial(p));
}

bool GroebnerBasis::is_unit() const {
  return generators.size() == 1 &&
         generators.front() == Polynomial::constant(generators.front().registry(), 1);
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class denom_lcm(1), numer_gcd(0);
  for (const auto& [m, c] : p.terms())
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  for (const auto& [m, c] : p.terms()) {
    mpq_class scaled = c * mpq_class(denom_lcm);
    mpz_gcd(numer_gcd.get_mpz_t(), numer_gcd.get_mpz_t(), scaled.get_num().get_mpz_t());
  }
  mpq_class factor = mpq_class(denom_lcm) / mpq_class(numer_gcd);
  if (p.terms().rbegin()->second < 0) factor = -factor;  // grevlex-leading coefficient > 0
  return p.scaled(factor);
}

namespace {

// Division step against a fixed list of (nonzero) reducers. Leading-term
// reduction only; returns the exact remainder.
Polynomial divide_remainder(const Polynomial& input, const std::vector<Polynomial>& reducers,
                            const TermOrder& order) {
  Polynomial work(input);
  Polynomial remainder(input.registry());
  std::vector<const Monomial*> lms;
  std::vector<mpq_class> lcs;
  lms.reserve(reducers.size());
  for (const auto& g : reducers) {
    lms.push_back(&order.leading_monomial(g));
    lcs.push_back(g.terms().at(*lms.back()));
  }
  while (!work.is_zero()) {
    const Monomial& lm = order.leading_monomial(work);
    const mpq_class lc = work.terms().at(lm);
    bool reduced = false;
    for (std::size_t i = 0; i < reducers.size(); ++i) {
      if (!lms[i]->divides(lm)) continue;
      const Monomial quotient = lm.divided_by(*lms[i]);
      Polynomial shift(input.registry());
      shift.add_term(quotient, lc / lcs[i]);
      work = work - shift * reducers[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(lm, lc);
      Polynomial head(input.registry());
      head.add_term(lm, lc);
      work = work - head;
    }
  }
  return remainder;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

// normal strategy: smallest lcm under the order first; ties by index for
// determinism (the reduced basis is canonical anyway)
struct PairQueue {
  explicit PairQueue(const TermOrder& order) : order_(&order) {}

  void push(Pair p) { pairs_.push_back(std::move(p)); }

  bool empty() const { return pairs_.empty(); }

  Pair pop() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      if (order_->less(pairs_[k].lcm, pairs_[best].lcm) ||
          (pairs_[k].lcm == pairs_[best].lcm &&
           std::tie(pairs_[k].i, pairs_[k].j) < std::tie(pairs_[best].i, pairs_[best].j)))
        best = k;
    }
    Pair out = std::move(pairs_[best]);
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return out;
  }

  bool contains(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    for (const auto& p : pairs_)
      if (p.i == i && p.j == j) return true;
    return false;
  }

  const TermOrder* order_;
  std::deque<Pair> pairs_;
};

// Sort descending by leading monomial and fully inter-reduce; makes the basis
// reduced and monic.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const TermOrder& order) {
  // drop elements whose leading term is divisible by another's
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    const Monomial& lm_i = order.leading_monomial(basis[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& lm_j = order.leading_monomial(basis[j]);
      if (lm_j.divides(lm_i) && (lm_i != lm_j || j < i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  // tail-reduce every element against the others until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      if (others.empty()) continue;
      Polynomial reduced = divide_remainder(minimal[i], others, order);
      if (reduced != minimal[i]) {
        if (reduced.is_zero()) {
          minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
        } else {
          minimal[i] = primitive_part(reduced);
        }
        changed = true;
      }
    }
  }

  for (auto& g : minimal) {
    mpq_class lc = order.leading_coefficient(g);
    g = g.scaled(1 / lc);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(order.leading_monomial(b), order.leading_monomial(a));
  });
  return minimal;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  const Monomial& lmf = order.leading_monomial(f);
  const Monomial& lmg = order.leading_monomial(g);
  const Monomial l = Monomial::lcm(lmf, lmg);
  Polynomial uf(f.registry()), ug(g.registry());
  uf.add_term(l.divided_by(lmf), 1 / order.leading_coefficient(f));
  ug.add_term(l.divided_by(lmg), 1 / order.leading_coefficient(g));
  return uf * f - ug * g;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const TermOrder& order,
                         const GroebnerOptions& opts) {
  if (generators.empty()) fail(ErrorKind::EmptyInput, "no generators");
  for (const auto& g : generators)
    if (g.registry() != order.registry())
      fail(ErrorKind::RegistryMismatch, "generator registry does not match order");

  std::vector<Polynomial> basis;
  for (const auto& g : generators)
    if (!g.is_zero()) basis.push_back(primitive_part(g));
  if (basis.empty()) fail(ErrorKind::EmptyInput, "all generators are zero");

  auto unit_result = [&]() {
    GroebnerBasis out{{Polynomial::constant(order.registry(), 1)}, order, generators};
    return out;
  };
  for (const auto& g : basis)
    if (!g.is_zero() && g.is_constant()) return unit_result();

  PairQueue queue(order);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      queue.push({i, j, Monomial::lcm(order.leading_monomial(basis[i]),
                                      order.leading_monomial(basis[j]))});

  std::size_t processed = 0;
  while (!queue.empty()) {
    Pair pair = queue.pop();
    if (++processed > opts.pair_cap)
      fail(ErrorKind::ResourceCap, "S-pair budget exceeded (" + std::to_string(opts.pair_cap) + ")");

    const Monomial& lm_i = order.leading_monomial(basis[pair.i]);
    const Monomial& lm_j = order.leading_monomial(basis[pair.j]);
    // product criterion
    if (lm_i.coprime(lm_j)) continue;
    // chain criterion: some k with LT(k) | lcm(i,j) and both mixed pairs done
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!order.leading_monomial(basis[k]).divides(pair.lcm)) continue;
      if (!queue.contains(pair.i, k) && !queue.contains(pair.j, k)) skip = true;
    }
    if (skip) continue;

    Polynomial s = s_polynomial(basis[pair.i], basis[pair.j], order);
    Polynomial nf = divide_remainder(s, basis, order);
    if (nf.is_zero()) continue;
    if (nf.is_constant()) return unit_result();  // ideal contains a nonzero constant
    nf = primitive_part(nf);
    const std::size_t fresh = basis.size();
    basis.push_back(std::move(nf));
    for (std::size_t i = 0; i < fresh; ++i)
      queue.push({i, fresh, Monomial::lcm(order.leading_monomial(basis[i]),
                                          order.leading_monomial(basis[fresh]))});
  }

  return GroebnerBasis{reduce_basis(std::move(basis), order), order, generators};
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
  if (p.registry() != basis.order.registry())
    fail(ErrorKind::RegistryMismatch, "polynomial registry does not match basis");
  if (basis.generators.empty()) return p;
  return divide_remainder(p, basis.generators, basis.order);
}

std::pair<bool, GroebnerBasis> is_unit_ideal(const std::vector<Polynomial>& generators,
                                             const TermOrder& order, const GroebnerOptions& opts) {
  GroebnerBasis basis = buchberger(generators, order, opts);
  return {basis.is_unit(), std::move(basis)};
}

}  // namespace diored
