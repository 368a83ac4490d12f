#pragma once

// Independent reference computations and seeded generators shared by the
// unit tests and the acceptance runner. Nothing here calls the code under test
// for the quantity it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toricarc/fan.hpp"
#include "toricarc/groebner.hpp"
#include "toricarc/integer.hpp"
#include "toricarc/poly.hpp"

namespace oracle {

using toricarc::Int;
using toricarc::IntVector;
using toricarc::Rational;

inline std::string fixture(const std::string& name) { return std::string(TORICARC_FIXTURES) + "/" + name + ".fan"; }

inline const std::vector<std::string>& all_fixtures() {
  static const std::vector<std::string> names{"p1", "p2", "p3", "p1xp1", "f1", "f2"};
  return names;
}

inline const std::vector<std::string>& fano_fixtures() {
  static const std::vector<std::string> names{"p1", "p2", "p3", "p1xp1", "f1"};
  return names;
}

// ---------------------------------------------------------------------------
// Small exact linear algebra over Q (row echelon by plain Gaussian elimination).

using QRow = std::vector<Rational>;

inline std::size_t rank_q(std::vector<QRow> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

// Determinant by cofactor expansion (tiny matrices only).
inline Int det_cofactor(const std::vector<IntVector>& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<IntVector> minor;
    for (std::size_t r = 1; r < n; ++r) {
      IntVector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Int term = m[0][c] * det_cofactor(minor);
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

// gcd of all maximal minors of a k x n integer matrix (k <= n); 1 iff the rows
// span a saturated sublattice.
inline Int maximal_minor_gcd(const std::vector<IntVector>& rows) {
  std::size_t k = rows.size(), n = rows.empty() ? 0 : rows.front().size();
  Int g = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<IntVector> sub;
    for (const auto& r : rows) {
      IntVector s;
      for (std::size_t c = 0; c < n; ++c)
        if (pick[c]) s.push_back(r[c]);
      sub.push_back(s);
    }
    Int d = det_cofactor(sub);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

// ---------------------------------------------------------------------------
// Lattice oracles.

inline IntVector apply_rows(const std::vector<IntVector>& beta_rows, const IntVector& a) {
  IntVector out;
  for (const auto& row : beta_rows) {
    Int s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s += row[j] * a[j];
    out.push_back(s);
  }
  return out;
}

// All a in [-bound, bound]^r with beta(a) >= 0.
inline std::vector<IntVector> semigroup_points(const std::vector<IntVector>& beta_rows, std::size_t r, long bound) {
  std::vector<IntVector> out;
  IntVector a(r, Int(-bound));
  for (;;) {
    auto img = apply_rows(beta_rows, a);
    if (std::all_of(img.begin(), img.end(), [](const Int& x) { return x >= 0; })) out.push_back(a);
    std::size_t k = 0;
    while (k < r && a[k] == bound) a[k++] = -bound;
    if (k == r) break;
    ++a[k];
  }
  return out;
}

// Irreducible elements of {a : beta(a) >= 0} found in the coordinate box.
inline std::set<IntVector> brute_hilbert_basis(const std::vector<IntVector>& beta_rows, std::size_t r, long bound) {
  auto pts = semigroup_points(beta_rows, r, bound);
  std::set<IntVector> all(pts.begin(), pts.end());
  IntVector zero(r, Int(0));
  std::set<IntVector> out;
  for (const auto& a : pts) {
    if (a == zero) continue;
    bool reducible = false;
    for (const auto& b : pts) {
      if (b == zero || b == a) continue;
      IntVector c;
      for (std::size_t j = 0; j < r; ++j) c.push_back(a[j] - b[j]);
      if (c != zero && all.count(c)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.insert(a);
  }
  return out;
}

// Number of semigroup elements of each degree <= cutoff, by coordinate box.
inline std::vector<Int> brute_series(const std::vector<IntVector>& beta_rows, std::size_t r, long bound,
                                     std::size_t cutoff) {
  std::vector<Int> out(cutoff + 1, Int(0));
  for (const auto& a : semigroup_points(beta_rows, r, bound)) {
    auto img = apply_rows(beta_rows, a);
    Int d = 0;
    for (const auto& x : img) d += x;
    if (d <= Int(static_cast<unsigned long>(cutoff))) out[d.get_ui()] += 1;
  }
  return out;
}

inline Int binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// h_k = sum_{i<=k} (-1)^(k-i) C(d-i, k-i) f_i.
inline std::vector<long> h_from_f(const std::vector<std::size_t>& f, std::size_t d) {
  std::vector<long> h;
  for (std::size_t k = 0; k <= d; ++k) {
    Int s = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      Int t = binom(static_cast<long>(d - i), static_cast<long>(k - i)) * Int(static_cast<unsigned long>(f[i]));
      s += ((k - i) % 2 == 0) ? t : Int(-t);
    }
    h.push_back(s.get_si());
  }
  return h;
}

// ---------------------------------------------------------------------------
// Polynomial oracles.

inline std::vector<toricarc::Monomial> monomials_of_degree(std::size_t nvars, std::size_t degree) {
  std::vector<toricarc::Monomial> out;
  toricarc::Monomial m(nvars);
  auto rec = [&](auto&& self, std::size_t var, std::size_t left) -> void {
    if (var + 1 == nvars) {
      m[var] = static_cast<std::uint32_t>(left);
      out.push_back(m);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      m[var] = static_cast<std::uint32_t>(e);
      self(self, var + 1, left - e);
    }
  };
  if (nvars == 0) return degree == 0 ? std::vector<toricarc::Monomial>{m} : out;
  rec(rec, 0, degree);
  return out;
}

// Hilbert function of a homogeneous ideal from its generators alone: the
// degree-k part of the ideal is spanned by m * g with deg m + deg g = k.
inline std::vector<std::size_t> macaulay_hilbert_function(const std::vector<toricarc::Poly>& gens, std::size_t nvars,
                                                          std::size_t cutoff) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= cutoff; ++k) {
    auto basis = monomials_of_degree(nvars, k);
    std::map<toricarc::Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::vector<QRow> rows;
    for (const auto& g : gens) {
      if (g.is_zero() || g.degree() > static_cast<long>(k)) continue;
      for (const auto& m : monomials_of_degree(nvars, k - static_cast<std::size_t>(g.degree()))) {
        QRow row(basis.size(), Rational(0));
        for (const auto& t : g.terms()) row[index.at(m * t.monomial)] += t.coeff;
        rows.push_back(row);
      }
    }
    out.push_back(basis.size() - rank_q(rows));
  }
  return out;
}

// Dimension of Q[x]/I as the span of normal forms reachable from 1 by
// multiplication with variables (closure under the multiplication maps).
inline std::size_t closure_dimension(const toricarc::GroebnerBasis& g, std::size_t limit = 200) {
  std::size_t n = g.nvars;
  std::vector<toricarc::Poly> basis;
  std::map<toricarc::Monomial, std::size_t> coord;
  std::vector<QRow> echelon;
  auto to_row = [&](const toricarc::Poly& p) {
    for (const auto& t : p.terms())
      if (!coord.count(t.monomial)) coord.emplace(t.monomial, coord.size());
    QRow row(coord.size() + 1, Rational(0));
    for (const auto& t : p.terms()) row[coord.at(t.monomial)] = t.coeff;
    return row;
  };
  auto independent = [&](const toricarc::Poly& p) {
    std::vector<QRow> rows;
    for (const auto& b : basis) rows.push_back(to_row(b));
    rows.push_back(to_row(p));
    std::size_t width = coord.size() + 1;
    for (auto& r : rows) r.resize(width, Rational(0));
    return rank_q(rows) == basis.size() + 1;
  };
  toricarc::Poly one = toricarc::normal_form(toricarc::Poly::constant(n, 1), g);
  if (one.is_zero()) return 0;
  basis.push_back(one);
  for (std::size_t i = 0; i < basis.size() && basis.size() < limit; ++i) {
    for (std::size_t v = 0; v < n; ++v) {
      toricarc::Poly next = toricarc::normal_form(basis[i] * toricarc::Poly::variable(n, v), g);
      if (!next.is_zero() && independent(next)) basis.push_back(next);
    }
  }
  return basis.size();
}

// Coefficient of t^0..t^m of f(u_1(t), ..., u_p(t)) by expanding every term
// factor by factor over all index assignments (no series arithmetic).
inline std::vector<std::map<std::vector<std::uint32_t>, Rational>> naive_jets(const toricarc::Poly& f, std::size_t m) {
  std::size_t p = f.nvars();
  std::size_t nv = p * (m + 1);
  std::vector<std::map<std::vector<std::uint32_t>, Rational>> out(m + 1);
  for (const auto& t : f.terms()) {
    std::vector<std::size_t> factors;
    for (std::size_t j = 0; j < p; ++j)
      for (std::uint32_t e = 0; e < t.monomial[j]; ++e) factors.push_back(j);
    std::vector<std::size_t> idx(factors.size(), 0);
    for (;;) {
      std::size_t total = 0;
      for (auto i : idx) total += i;
      if (total <= m) {
        std::vector<std::uint32_t> exps(nv, 0);
        for (std::size_t k = 0; k < factors.size(); ++k) ++exps[factors[k] * (m + 1) + idx[k]];
        out[total][exps] += t.coeff;
      }
      std::size_t k = 0;
      while (k < idx.size() && idx[k] == m) idx[k++] = 0;
      if (k == idx.size()) break;
      ++idx[k];
    }
  }
  for (auto& level : out)
    for (auto it = level.begin(); it != level.end();) it = it->second == 0 ? level.erase(it) : std::next(it);
  return out;
}

inline std::map<std::vector<std::uint32_t>, Rational> as_map(const toricarc::Poly& p) {
  std::map<std::vector<std::uint32_t>, Rational> out;
  for (const auto& t : p.terms()) out[t.monomial.exponents()] = t.coeff;
  return out;
}

// ---------------------------------------------------------------------------
// Seeded generators.

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline toricarc::Poly random_poly(std::mt19937_64& rng, std::size_t nvars, std::size_t max_degree,
                                  std::size_t max_terms, long coeff_range = 5) {
  std::vector<toricarc::Term> terms;
  std::size_t count = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_terms)));
  for (std::size_t i = 0; i < count; ++i) {
    toricarc::Monomial m(nvars);
    std::size_t deg = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_degree)));
    for (std::size_t k = 0; k < deg; ++k) ++m[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(nvars) - 1))];
    long c = uniform(rng, -coeff_range, coeff_range);
    if (c == 0) c = 1;
    terms.push_back({m, Rational(c)});
  }
  return toricarc::Poly::from_terms(nvars, std::move(terms));
}

}  // namespace oracle
