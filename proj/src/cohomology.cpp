#include "toricarc/cohomology.hpp"

#include <numeric>

#include "toricarc/errors.hpp"

namespace toricarc {

CoxData build_cox_data(const Fan& fan) {
  CoxData cd;
  cd.fan = fan;
  cd.validation = validate_fan(fan);
  if (!cd.validation.smooth || !cd.validation.facet_paired)
    throw InvalidFan("fan '" + fan.name + "' is not smooth and facet-paired: " + cd.validation.details);

  IntMatrix rays = ray_matrix(fan);
  DivisorClasses dc = divisor_classes(rays);
  cd.b_rank = dc.rank;
  cd.a_rank = dc.rank;
  cd.divisor_classes = dc.classes;
  cd.beta = LatticeMap(IntMatrix::from_rows(dc.classes, dc.rank));
  cd.semigroup = hilbert_basis(cd.beta);
  cd.primitive_collections = primitive_collections(fan);
  cd.h_vector = h_vector(fan);
  return cd;
}

std::string to_string(PresentationKind kind) {
  switch (kind) {
    case PresentationKind::classical:
      return "classical";
    case PresentationKind::quantum_symbolic:
      return "quantum-symbolic";
    case PresentationKind::quantum_specialized:
      return "quantum-specialized";
  }
  return "unknown";
}

std::vector<Poly> Presentation::ideal_generators() const {
  std::vector<Poly> out = relations;
  out.insert(out.end(), unit_relations.begin(), unit_relations.end());
  return out;
}

std::vector<Poly> linear_relations(const CoxData& cd, std::size_t nvars) {
  std::vector<Poly> out;
  for (std::size_t j = 0; j < cd.fan.dim; ++j) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < cd.num_rays(); ++i)
      if (cd.fan.rays[i][j] != 0) terms.push_back({Monomial::variable(nvars, i), Rational(cd.fan.rays[i][j])});
    out.push_back(Poly::from_terms(nvars, std::move(terms)));
  }
  return out;
}

namespace {

Monomial x_power(std::size_t nvars, const IntVector& exponents) {
  Monomial m(nvars);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw NotInAPlus("negative exponent " + to_string(exponents[i]) + " on x" + std::to_string(i + 1));
    m[i] = static_cast<std::uint32_t>(exponents[i].get_ui());
  }
  return m;
}

}  // namespace

Presentation classical_presentation(const CoxData& cd) {
  std::size_t n = cd.num_rays();
  Presentation p;
  p.kind = PresentationKind::classical;
  p.num_x = n;
  p.names = VariableNames::indexed("x", n);
  p.order = MonomialOrder(OrderKind::degrevlex, n);
  p.relations = linear_relations(cd, n);
  for (const auto& pc : cd.primitive_collections.collections) {
    Monomial m(n);
    for (std::size_t i : pc) m[i] = 1;
    p.relations.push_back(Poly::monomial(std::move(m)));
  }
  return p;
}

std::vector<std::size_t> betti_numbers(const CoxData& cd, std::size_t budget) {
  Presentation p = classical_presentation(cd);
  GroebnerBasis gb = buchberger(p.relations, p.order, budget);
  std::vector<std::size_t> dims = graded_dimensions(gb, cd.fan.dim + 1);
  bool agree = dims.back() == 0;
  dims.pop_back();
  for (std::size_t k = 0; k < dims.size() && agree; ++k)
    agree = k < cd.h_vector.size() && static_cast<long>(dims[k]) == cd.h_vector[k];
  if (!agree) {
    std::string got, want;
    for (auto d : dims) got += (got.empty() ? "" : ",") + std::to_string(d);
    for (auto h : cd.h_vector) want += (want.empty() ? "" : ",") + std::to_string(h);
    throw MismatchWithHVector("graded dimensions (" + got + ") differ from the h-vector (" + want + ")");
  }
  return dims;
}

Rational q_power(const std::vector<Rational>& q_spec, const IntVector& a) {
  if (q_spec.size() != a.size()) throw InvariantError("q-specialization has the wrong length");
  Rational out = 1;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    if (q_spec[j] == 0) throw ZeroQSpec("q" + std::to_string(j + 1) + " specialized to 0");
    Int e = abs(a[j]);
    Rational base = a[j] > 0 ? q_spec[j] : Rational(1 / q_spec[j]);
    Rational factor = 1;
    for (Int k = 0; k < e; ++k) factor *= base;
    out *= factor;
  }
  return out;
}

Presentation quantum_presentation(const CoxData& cd, const std::optional<std::vector<Rational>>& q_spec,
                                  bool allow_non_fano) {
  Presentation p;
  if (!cd.validation.fano) {
    if (!allow_non_fano) throw NotFano("fan '" + cd.fan.name + "' is not Fano; the quantum presentation assumes Fano");
    p.warnings.push_back("fan '" + cd.fan.name +
                         "' is not Fano: the relations are built as stated but need not present quantum cohomology");
  }
  std::size_t n = cd.num_rays();
  std::size_t r = cd.a_rank;
  const auto& hb = cd.semigroup.hilbert_basis();

  if (q_spec) {
    if (q_spec->size() != r)
      throw InvariantError("q-specialization needs " + std::to_string(r) + " values, got " + std::to_string(q_spec->size()));
    for (std::size_t j = 0; j < r; ++j)
      if ((*q_spec)[j] == 0) throw ZeroQSpec("q" + std::to_string(j + 1) + " specialized to 0");
    p.kind = PresentationKind::quantum_specialized;
    p.q_spec = q_spec;
    p.num_x = n;
    p.names = VariableNames::indexed("x", n);
    p.order = MonomialOrder(OrderKind::degrevlex, n);
    p.relations = linear_relations(cd, n);
    for (const auto& a : hb) {
      Poly lhs = Poly::monomial(x_power(n, cd.beta(a)));
      p.relations.push_back(lhs - Poly::constant(n, q_power(*q_spec, a)));
    }
    return p;
  }

  std::size_t nv = n + 2 * r;
  p.kind = PresentationKind::quantum_symbolic;
  p.num_x = n;
  p.names = VariableNames::indexed("x", n);
  for (std::size_t j = 0; j < r; ++j) p.names.names.push_back("q" + std::to_string(j + 1));
  for (std::size_t j = 0; j < r; ++j) p.names.names.push_back("w" + std::to_string(j + 1));
  for (std::size_t j = 0; j < r; ++j) p.names.inverses.push_back({n + j, n + r + j});
  p.order = r == 0 ? MonomialOrder(OrderKind::degrevlex, nv) : MonomialOrder::blocked(OrderKind::degrevlex, {n, 2 * r});
  p.relations = linear_relations(cd, nv);
  for (const auto& a : hb) {
    IntVector image = cd.beta(a);
    Monomial lhs(nv);
    for (std::size_t i = 0; i < n; ++i) {
      if (image[i] < 0) throw NotInAPlus("Hilbert basis element " + to_string(a) + " is not in A_+");
      lhs[i] = static_cast<std::uint32_t>(image[i].get_ui());
    }
    Monomial rhs(nv);
    for (std::size_t j = 0; j < r; ++j) {
      auto e = static_cast<std::uint32_t>(Int(abs(a[j])).get_ui());
      rhs[a[j] >= 0 ? n + j : n + r + j] = e;
    }
    p.relations.push_back(Poly::monomial(std::move(lhs)) - Poly::monomial(std::move(rhs)));
  }
  for (std::size_t j = 0; j < r; ++j) {
    Monomial qw(nv);
    qw[n + j] = 1;
    qw[n + r + j] = 1;
    p.unit_relations.push_back(Poly::monomial(std::move(qw)) - Poly::constant(nv, 1));
  }
  return p;
}

QuantumRing::QuantumRing(const CoxData& cd, const std::optional<std::vector<Rational>>& q_spec, bool allow_non_fano,
                         std::size_t budget)
    : presentation_(quantum_presentation(cd, q_spec, allow_non_fano)),
      basis_(buchberger(presentation_.ideal_generators(), presentation_.order, budget)) {}

Poly QuantumRing::product(const std::vector<std::size_t>& factors) const {
  Monomial m(presentation_.num_vars());
  for (std::size_t f : factors) {
    if (f >= presentation_.num_x)
      throw InvariantError("divisor class index " + std::to_string(f + 1) + " out of range");
    ++m[f];
  }
  return normal_form(Poly::monomial(std::move(m)), basis_);
}

Poly QuantumRing::monomial_power(const IntVector& exponents) const {
  if (exponents.size() != presentation_.num_x) throw InvariantError("exponent vector has the wrong length");
  Monomial m = x_power(presentation_.num_vars(), exponents);
  return normal_form(Poly::monomial(std::move(m)), basis_);
}

Poly QuantumRing::q_monomial(const IntVector& a) const {
  std::size_t nv = presentation_.num_vars();
  if (presentation_.q_spec) return Poly::constant(nv, q_power(*presentation_.q_spec, a));
  std::size_t n = presentation_.num_x;
  std::size_t r = (nv - n) / 2;
  if (a.size() != r) throw InvariantError("lattice point has the wrong rank");
  Monomial m(nv);
  for (std::size_t j = 0; j < r; ++j) m[a[j] >= 0 ? n + j : n + r + j] = static_cast<std::uint32_t>(Int(abs(a[j])).get_ui());
  return normal_form(Poly::monomial(std::move(m)), basis_);
}

Poly quantum_product(const CoxData& cd, const std::vector<std::size_t>& factors,
                     const std::optional<std::vector<Rational>>& q_spec, bool allow_non_fano, std::size_t budget) {
  return QuantumRing(cd, q_spec, allow_non_fano, budget).product(factors);
}

std::vector<Rational> random_q_spec(std::mt19937_64& rng, std::size_t r) {
  // Explicit modular mapping rather than std::uniform_int_distribution, whose
  // output is not specified across standard libraries.
  std::vector<Rational> out;
  out.reserve(r);
  for (std::size_t j = 0; j < r; ++j) {
    long num = static_cast<long>(rng() % 9) + 1;
    if (rng() % 2 == 1) num = -num;
    long den = static_cast<long>(rng() % 9) + 1;
    Rational c(num, den);
    c.canonicalize();
    out.push_back(c);
  }
  return out;
}

RankReport quantum_rank_check(const CoxData& cd, std::size_t trials, std::uint64_t seed, bool allow_non_fano,
                              std::size_t budget) {
  std::vector<std::size_t> betti = betti_numbers(cd, budget);
  RankReport report;
  report.expected = std::accumulate(betti.begin(), betti.end(), std::size_t{0});
  report.all_match = true;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Rational> spec = random_q_spec(rng, cd.a_rank);
    QuantumRing ring(cd, spec, allow_non_fano, budget);
    if (t == 0) report.warnings = ring.presentation().warnings;
    std::size_t dim = quotient_dimension(ring.basis());
    report.trials.push_back({spec, dim});
    if (dim != report.expected) {
      report.all_match = false;
      if (cd.validation.fano) {
        std::string values;
        for (const auto& c : spec) values += (values.empty() ? "" : ",") + to_string(c);
        throw RankMismatch("specialized quotient at q = (" + values + ") has dimension " + std::to_string(dim) +
                           ", expected " + std::to_string(report.expected));
      }
    }
  }
  return report;
}

}  // namespace toricarc
