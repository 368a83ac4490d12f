#include "toricarc/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "toricarc/errors.hpp"

namespace toricarc {

namespace {

// Terms sorted descending in the active order.
using Ordered = std::vector<Term>;

struct Reducer {
  const MonomialOrder& order;
  std::size_t budget;
  std::size_t steps = 0;

  void tick() {
    if (++steps > budget)
      throw BudgetExceeded("Groebner reduction budget of " + std::to_string(budget) + " steps exhausted");
  }

  Ordered to_ordered(const Poly& p) const { return p.sorted_terms(order); }

  Poly to_poly(std::size_t nvars, Ordered terms) const { return Poly::from_terms(nvars, std::move(terms)); }

  // a[from..] - c * m * b, all sorted descending.
  Ordered sub_scaled(const Ordered& a, std::size_t from, const Rational& c, const Monomial& m, const Ordered& b) const {
    Ordered out;
    out.reserve(a.size() - from + b.size());
    std::size_t i = from, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.push_back(a[i++]);
        continue;
      }
      Monomial mb = m * b[j].monomial;
      if (i == a.size()) {
        out.push_back({std::move(mb), -c * b[j].coeff});
        ++j;
        continue;
      }
      auto cmp = order.compare(a[i].monomial, mb);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({std::move(mb), -c * b[j].coeff});
        ++j;
      } else {
        Rational v = a[i].coeff - c * b[j].coeff;
        if (v != 0) out.push_back({a[i].monomial, v});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction; divisors must be nonzero and ordered.
  Ordered reduce(Ordered p, const std::vector<const Ordered*>& divisors) {
    Ordered rem;
    std::size_t head = 0;
    while (head < p.size()) {
      const Term& lead = p[head];
      const Ordered* hit = nullptr;
      for (const Ordered* d : divisors) {
        if (d->front().monomial.divides(lead.monomial)) {
          hit = d;
          break;
        }
      }
      if (hit == nullptr) {
        rem.push_back(lead);
        ++head;
        continue;
      }
      tick();
      Rational c = lead.coeff / hit->front().coeff;
      Monomial m = hit->front().monomial.quotient_of(lead.monomial);
      p = sub_scaled(p, head, c, m, *hit);
      head = 0;
    }
    return rem;
  }

  Ordered spoly(const Ordered& f, const Ordered& g) const {
    Monomial l = f.front().monomial.lcm(g.front().monomial);
    Ordered a;
    Monomial mf = f.front().monomial.quotient_of(l);
    Rational cf = 1 / f.front().coeff;
    for (const auto& t : f) a.push_back({mf * t.monomial, cf * t.coeff});
    return sub_scaled(a, 0, 1 / g.front().coeff, g.front().monomial.quotient_of(l), g);
  }
};

void make_monic(Ordered& p) {
  Rational c = p.front().coeff;
  if (c == 1) return;
  for (auto& t : p) t.coeff /= c;
}

void check_ring(const Poly& p, std::size_t nvars) {
  if (p.nvars() != nvars) throw InvariantError("generators live in different rings");
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.leading_term(order).monomial);
  return out;
}

bool GroebnerBasis::is_unit_ideal() const {
  return generators.size() == 1 && generators.front().degree() == 0;
}

GroebnerBasis buchberger(const std::vector<Poly>& gens, const MonomialOrder& order, std::size_t budget) {
  if (gens.empty()) throw InvariantError("Groebner basis of an empty generator list");
  std::size_t nvars = gens.front().nvars();
  if (order.nvars() != nvars) throw InvariantError("monomial order does not match ring");
  Reducer red{order, budget};

  std::vector<Ordered> basis;
  for (const auto& g : gens) {
    check_ring(g, nvars);
    if (g.is_zero()) continue;
    Ordered o = red.to_ordered(g);
    make_monic(o);
    basis.push_back(std::move(o));
  }

  GroebnerBasis result{nvars, {}, order, true};
  auto unit = [&] {
    result.generators = {Poly::constant(nvars, 1)};
    return result;
  };
  if (basis.empty()) return result;
  for (const auto& b : basis)
    if (b.front().monomial.is_one()) return unit();

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto lm = [&](std::size_t i) -> const Monomial& { return basis[i].front().monomial; };
  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) != 0; };

  while (!pending.empty()) {
    // Normal strategy: order-minimal lcm; ties broken by (j, i).
    auto best = pending.begin();
    Monomial best_lcm = lm(best->first).lcm(lm(best->second));
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lm(it->first).lcm(lm(it->second));
      auto cmp = order.compare(l, best_lcm);
      if (cmp < 0 || (cmp == 0 && std::make_pair(it->second, it->first) < std::make_pair(best->second, best->first))) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);

    if (lm(i).coprime(lm(j))) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = lm(k).divides(best_lcm) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;

    std::vector<const Ordered*> divisors;
    for (const auto& b : basis) divisors.push_back(&b);
    Ordered h = red.reduce(red.spoly(basis[i], basis[j]), divisors);
    if (h.empty()) continue;
    make_monic(h);
    if (h.front().monomial.is_one()) return unit();
    std::size_t n = basis.size();
    basis.push_back(std::move(h));
    for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
  }

  // Minimize: drop elements whose leading monomial is divisible by another's
  // (for equal leading monomials keep the earliest).
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b || !lm(b).divides(lm(a))) continue;
      redundant = lm(b) != lm(a) || b < a;
    }
    if (!redundant) keep.push_back(a);
  }

  std::vector<Ordered> minimal;
  for (std::size_t a : keep) minimal.push_back(std::move(basis[a]));

  // Interreduce tails.
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<const Ordered*> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(&minimal[b]);
    Ordered tail(minimal[a].begin() + 1, minimal[a].end());
    Ordered reduced = red.reduce(std::move(tail), others);
    reduced.insert(reduced.begin(), minimal[a].front());
    minimal[a] = std::move(reduced);
  }

  std::sort(minimal.begin(), minimal.end(),
            [&](const Ordered& x, const Ordered& y) { return order.greater(x.front().monomial, y.front().monomial); });
  for (auto& m : minimal) result.generators.push_back(red.to_poly(nvars, std::move(m)));
  return result;
}

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  check_ring(g, f.nvars());
  if (f.is_zero() || g.is_zero()) return Poly(f.nvars());
  Reducer red{order, 0};
  return red.to_poly(f.nvars(), red.spoly(red.to_ordered(f), red.to_ordered(g)));
}

Poly reduce_by(const Poly& f, const std::vector<Poly>& divisors, const MonomialOrder& order) {
  Reducer red{order, static_cast<std::size_t>(-1)};
  std::vector<Ordered> ordered;
  for (const auto& d : divisors) {
    check_ring(d, f.nvars());
    if (!d.is_zero()) ordered.push_back(red.to_ordered(d));
  }
  std::vector<const Ordered*> ptrs;
  for (const auto& o : ordered) ptrs.push_back(&o);
  return red.to_poly(f.nvars(), red.reduce(red.to_ordered(f), ptrs));
}

Poly normal_form(const Poly& f, const GroebnerBasis& g) {
  check_ring(f, g.nvars);
  return reduce_by(f, g.generators, g.order);
}

bool quotient_is_finite(const GroebnerBasis& g) {
  if (g.is_unit_ideal()) return true;
  auto lms = g.leading_monomials();
  for (std::size_t v = 0; v < g.nvars; ++v) {
    bool pure = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) {
      if (m[v] == 0) return false;
      for (std::size_t u = 0; u < m.size(); ++u)
        if (u != v && m[u] != 0) return false;
      return true;
    });
    if (!pure) return false;
  }
  return true;
}

namespace {

// Standard monomials of each degree 0..cap (or until a degree is empty).
std::vector<std::vector<Monomial>> standard_by_degree(const GroebnerBasis& g, std::optional<std::size_t> cap) {
  std::vector<std::vector<Monomial>> levels;
  if (g.is_unit_ideal()) return levels;
  auto lms = g.leading_monomials();
  auto standard = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  levels.push_back({Monomial(g.nvars)});
  while (!cap || levels.size() <= *cap) {
    std::set<Monomial> next;
    for (const auto& m : levels.back()) {
      for (std::size_t v = 0; v < g.nvars; ++v) {
        Monomial n = m;
        ++n[v];
        if (standard(n)) next.insert(std::move(n));
      }
    }
    if (next.empty()) break;
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

}  // namespace

std::vector<Monomial> standard_monomials(const GroebnerBasis& g, std::optional<std::size_t> degree_cap) {
  bool finite = quotient_is_finite(g);
  if (!finite && !degree_cap)
    throw InfiniteDimension("quotient ring is infinite-dimensional; give a degree cap");
  std::vector<Monomial> out;
  for (auto& level : standard_by_degree(g, finite ? std::nullopt : degree_cap))
    for (auto& m : level) out.push_back(std::move(m));
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return g.order.compare(a, b) < 0; });
  return out;
}

std::size_t quotient_dimension(const GroebnerBasis& g) { return standard_monomials(g).size(); }

std::vector<std::size_t> graded_dimensions(const GroebnerBasis& g, std::size_t cutoff) {
  for (const auto& p : g.generators)
    if (!p.is_homogeneous()) throw NotHomogeneous("graded dimensions need a homogeneous ideal");
  std::vector<std::size_t> dims(cutoff + 1, 0);
  auto levels = standard_by_degree(g, cutoff);
  for (std::size_t k = 0; k < levels.size() && k <= cutoff; ++k) dims[k] = levels[k].size();
  return dims;
}

}  // namespace toricarc
