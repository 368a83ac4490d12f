// Acceptance runner: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "test_support.hpp"
#include "toricarc/arc_model.hpp"
#include "toricarc/cohomology.hpp"
#include "toricarc/errors.hpp"
#include "toricarc/groebner.hpp"
#include "toricarc/jets.hpp"

using namespace toricarc;

namespace {

CoxData cox(const std::string& name) { return build_cox_data(load_fan(oracle::fixture(name))); }

std::vector<IntVector> beta_rows(const CoxData& cd) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < cd.num_rays(); ++i) rows.push_back(cd.beta.matrix().row(i));
  return rows;
}

std::size_t h_total(const CoxData& cd) {
  return static_cast<std::size_t>(std::accumulate(cd.h_vector.begin(), cd.h_vector.end(), 0L));
}

std::size_t max_entry(const IntVector& v) {
  std::size_t m = 0;
  for (const auto& x : v) m = std::max<std::size_t>(m, x.get_ui());
  return m;
}

// Failures are collected as short notes; the criterion passes when none are recorded.
struct Check {
  std::vector<std::string> notes;
  void fail(const std::string& what) {
    if (notes.size() < 5) notes.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Check&)> body;
};

void p_relation(Check& c) {
  for (std::size_t n = 2; n <= 6; ++n) {
    CoxData cd = build_cox_data(projective_space(n - 1));
    QuantumRing ring(cd, {});
    const auto& pres = ring.presentation();
    std::vector<Poly> nonlinear;
    for (const auto& g : ring.basis().generators)
      if (g.degree() > 1 && g != pres.unit_relations.front()) nonlinear.push_back(g);
    Poly expected = parse_poly("x" + std::to_string(n) + "^" + std::to_string(n) + " - q1", pres.names);
    if (nonlinear != std::vector<Poly>{expected}) c.fail("N=" + std::to_string(n) + ": basis is not {x^N - q}");
    for (std::size_t i = 0; i < n; ++i) {
      Poly product = ring.product(std::vector<std::size_t>(n, i));
      if (product != ring.q_monomial(make_int_vector({1})))
        c.fail("N=" + std::to_string(n) + ": x" + std::to_string(i + 1) + "^N = " + ring.format(product));
    }
  }
}

void classical(Check& c) {
  std::vector<std::pair<std::string, std::size_t>> cases{{"p1", 2}, {"p2", 3}, {"p3", 4}, {"p1xp1", 4}, {"f1", 4}};
  for (const auto& [name, total] : cases) {
    CoxData cd = cox(name);
    auto betti = betti_numbers(cd);
    std::vector<long> as_long(betti.begin(), betti.end());
    if (as_long != cd.h_vector) c.fail(name + ": Betti numbers differ from the h-vector");
    std::size_t sum = std::accumulate(betti.begin(), betti.end(), std::size_t{0});
    if (sum != total || sum != cd.fan.max_cones.size()) c.fail(name + ": total " + std::to_string(sum));
  }
}

void rank_trials(Check& c) {
  for (const auto& name : oracle::fano_fixtures()) {
    CoxData cd = cox(name);
    std::size_t expected = h_total(cd);
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 5; ++t) {
      auto q = random_q_spec(rng, cd.a_rank);
      QuantumRing ring(cd, q);
      std::size_t dim = quotient_dimension(ring.basis());
      if (dim != expected || oracle::closure_dimension(ring.basis()) != expected)
        c.fail(name + ": dimension " + std::to_string(dim) + " at trial " + std::to_string(t));
    }
  }
}

void codim_formula(Check& c) {
  std::mt19937_64 rng(4);
  for (const auto& name : oracle::all_fixtures()) {
    CoxData cd = cox(name);
    auto points = oracle::semigroup_points(beta_rows(cd), cd.a_rank, 2);
    for (int t = 0; t < 20; ++t) {
      const IntVector& a = points[rng() % points.size()];
      IntVector b = a + points[rng() % points.size()];
      std::size_t m = max_entry(cd.beta(b));
      auto sa = epsilon_shift(cd, a, m);
      auto sb = epsilon_shift(cd, b, m);
      Int formula = self_embedding_codim(cd, a, b);
      Int locus(static_cast<unsigned long>(nested_image_codim(sa, sb)));
      if (formula != locus) c.fail(name + ": " + to_string(a) + " in " + to_string(b));
    }
  }
}

void cousin(Check& c) {
  for (const auto& name : oracle::all_fixtures()) {
    auto report = cousin_series_check(cox(name), 20);
    if (!report.holds) {
      std::ostringstream os;
      os << name << ": differs at s^" << report.first_mismatch << " (lhs " << report.lhs.coefficient(report.first_mismatch)
         << ", rhs " << report.rhs.coefficient(report.first_mismatch) << ")";
      c.fail(os.str());
    }
  }
}

void main_verifier(Check& c) {
  for (const auto& name : oracle::fano_fixtures()) {
    CoxData cd = cox(name);
    if (!check_theorem_main(cd, 3, 0).passed()) c.fail(name + ": verifier rejected");
    for (std::size_t i = 0; i < cd.num_rays(); ++i) {
      CoxData bad = cd;
      bad.beta.mutable_matrix()(i, 0) += 1;
      if (check_theorem_main(bad, 1, 0).passed()) c.fail(name + ": corrupted beta row " + std::to_string(i + 1) + " accepted");
    }
  }
}

void jets(Check& c) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    std::size_t p = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    std::size_t m = static_cast<std::size_t>(oracle::uniform(rng, 0, 4));
    Poly f = oracle::random_poly(rng, p, 3, 4);
    auto jp = jet_relations({f}, VariableNames::indexed("u", p), m);
    auto expected = oracle::naive_jets(f, m);
    for (std::size_t n = 0; n <= m; ++n)
      if (oracle::as_map(jp.relation(0, n)) != expected[n]) c.fail("sample " + std::to_string(t) + ", n=" + std::to_string(n));
  }
}

void semigroup_laws(Check& c) {
  std::mt19937_64 rng(8);
  for (const auto& name : oracle::all_fixtures()) {
    CoxData cd = cox(name);
    auto model = build_arc_model(cd);
    auto points = oracle::semigroup_points(beta_rows(cd), cd.a_rank, 2);
    for (int t = 0; t < 50; ++t) {
      const IntVector& a = points[rng() % points.size()];
      const IntVector& b = points[rng() % points.size()];
      if (model.mu(a + b) != model.mu(a) * model.mu(b)) c.fail(name + ": mu at " + to_string(a) + ", " + to_string(b));
      std::size_t m = std::max<std::size_t>(1, max_entry(cd.beta(a + b)));
      auto composed = epsilon_shift(cd, a, m).compose(epsilon_shift(cd, b, m));
      if (!composed.same_substitution(epsilon_shift(cd, a + b, m)))
        c.fail(name + ": shift at " + to_string(a) + ", " + to_string(b));
    }
  }
}

bool sound(const GroebnerBasis& g) {
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    for (std::size_t j = i + 1; j < g.generators.size(); ++j)
      if (!normal_form(s_polynomial(g.generators[i], g.generators[j], g.order), g).is_zero()) return false;
  return true;
}

void groebner(Check& c) {
  std::mt19937_64 rng(9);
  std::size_t counted = 0;
  for (int t = 0; t < 150; ++t) {
    std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    std::vector<Poly> gens;
    for (std::size_t v = 0; v < n; ++v) {
      auto e = static_cast<std::uint32_t>(oracle::uniform(rng, 1, 3));
      gens.push_back(Poly::monomial(Monomial::variable(n, v, e)) + oracle::random_poly(rng, n, e - 1, 3));
    }
    for (int extra = static_cast<int>(rng() % 3); extra > 0; --extra) gens.push_back(oracle::random_poly(rng, n, 2, 3));
    auto kind = static_cast<OrderKind>(rng() % 3);
    auto g = buchberger(gens, MonomialOrder(kind, n));
    if (!sound(g)) c.fail("random set " + std::to_string(t) + ": S-polynomial does not reduce");
    std::size_t count = standard_monomials(g).size();
    if (count > 30) continue;
    ++counted;
    if (count != oracle::closure_dimension(g)) c.fail("random set " + std::to_string(t) + ": count " + std::to_string(count));
  }
  for (const auto& name : oracle::all_fixtures()) {
    CoxData cd = cox(name);
    QuantumRing symbolic(cd, {}, true);
    if (!sound(symbolic.basis())) c.fail(name + ": symbolic basis unsound");
    QuantumRing special(cd, std::vector<Rational>(cd.a_rank, Rational(3, 2)), true);
    if (!sound(special.basis())) c.fail(name + ": specialized basis unsound");
    if (standard_monomials(special.basis()).size() != oracle::closure_dimension(special.basis()))
      c.fail(name + ": specialized count");
    ++counted;
  }
  if (counted < 50) c.fail("only " + std::to_string(counted) + " quotients small enough to count");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "projective space relation x^N = q", 5, p_relation},
      {2, "classical presentations and Betti numbers", 2, classical},
      {3, "rank of random q-specializations", 10, rank_trials},
      {4, "self-embedding codimension formula", 5, codim_formula},
      {5, "stratification series identity", 5, cousin},
      {6, "main isomorphism verifier", 10, main_verifier},
      {7, "jet relations vs series expansion", 10, jets},
      {8, "semigroup laws for mu and shifts", 5, semigroup_laws},
      {9, "Groebner engine soundness", 30, groebner},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= cr.limit_seconds) check.fail("over the time limit");
    bool pass = check.notes.empty();
    failed += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs / %.0fs", seconds, cr.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title << " (exact, " << timing << ")";
    for (const auto& n : check.notes) std::cout << "\n        " << n;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed;
}
