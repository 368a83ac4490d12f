#include "toricarc/jets.hpp"

#include <algorithm>

#include "toricarc/errors.hpp"

namespace toricarc {

namespace {

// Truncated power series in t with polynomial coefficients.
using JetSeries = std::vector<Poly>;

JetSeries series_mul(const JetSeries& a, const JetSeries& b, std::size_t nvars) {
  JetSeries out(a.size(), Poly(nvars));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

VariableNames jet_variable_names(const VariableNames& base, std::size_t m) {
  VariableNames out;
  for (const auto& name : base.names)
    for (std::size_t n = 0; n <= m; ++n) out.names.push_back(name + "_" + std::to_string(n));
  return out;
}

JetPresentation jet_relations(const std::vector<Poly>& base_relations, const VariableNames& base_vars, std::size_t m,
                              std::vector<long> base_degrees) {
  std::size_t p = base_vars.size();
  if (base_degrees.empty()) base_degrees.assign(p, 1);
  if (base_degrees.size() != p) throw InvariantError("one degree per base variable is required");

  JetPresentation jp;
  jp.base_vars = base_vars;
  jp.order = m;
  jp.jet_vars = jet_variable_names(base_vars, m);
  std::size_t nv = jp.jet_vars.size();
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t n = 0; n <= m; ++n) jp.jet_degrees.push_back(base_degrees[j]);

  std::vector<JetSeries> var_series(p);
  for (std::size_t j = 0; j < p; ++j)
    for (std::size_t n = 0; n <= m; ++n) var_series[j].push_back(Poly::variable(nv, jp.jet_index(j, n)));

  std::vector<std::vector<JetSeries>> powers(p);
  auto power = [&](std::size_t j, std::uint32_t e) -> const JetSeries& {
    auto& cache = powers[j];
    if (cache.empty()) {
      JetSeries one(m + 1, Poly(nv));
      one[0] = Poly::constant(nv, 1);
      cache.push_back(std::move(one));
    }
    while (cache.size() <= e) cache.push_back(series_mul(cache.back(), var_series[j], nv));
    return cache[e];
  };

  for (const auto& f : base_relations) {
    if (f.nvars() != p) throw InvariantError("base relation does not match the base variables");
    JetSeries total(m + 1, Poly(nv));
    for (const auto& t : f.terms()) {
      JetSeries term(m + 1, Poly(nv));
      term[0] = Poly::constant(nv, t.coeff);
      for (std::size_t j = 0; j < p; ++j)
        if (t.monomial[j] != 0) term = series_mul(term, power(j, t.monomial[j]), nv);
      for (std::size_t n = 0; n <= m; ++n) total[n] += term[n];
    }
    for (auto& rel : total) jp.relations.push_back(std::move(rel));
  }
  return jp;
}

VariableNames toric_jet_names(std::size_t num_rays, std::size_t m) {
  return jet_variable_names(VariableNames::indexed("z", num_rays), m);
}

std::vector<JetLocus> exceptional_jet_locus(const CoxData& cd, std::size_t m) {
  std::size_t nv = cd.num_rays() * (m + 1);
  std::vector<JetLocus> out;
  for (const auto& pc : cd.primitive_collections.collections) {
    JetLocus locus;
    locus.collection = pc;
    for (std::size_t i : pc)
      for (std::size_t n = 0; n <= m; ++n) locus.generators.push_back(Poly::variable(nv, i * (m + 1) + n));
    locus.codim = locus.generators.size();
    out.push_back(std::move(locus));
  }
  return out;
}

Poly ShiftMap::apply(const Poly& p) const {
  if (p.nvars() != num_vars()) throw InvariantError("polynomial is not in this jet ring");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m(num_vars());
    bool zero = false;
    for (std::size_t v = 0; v < num_vars() && !zero; ++v) {
      if (t.monomial[v] == 0) continue;
      if (!substitution[v]) {
        zero = true;
      } else {
        m[*substitution[v]] += t.monomial[v];
      }
    }
    if (!zero) terms.push_back({std::move(m), t.coeff});
  }
  return Poly::from_terms(num_vars(), std::move(terms));
}

ShiftMap ShiftMap::compose(const ShiftMap& other) const {
  if (other.num_vars() != num_vars() || other.order != order) throw InvariantError("shift maps on different jet rings");
  ShiftMap out;
  out.a = a.size() == other.a.size() ? a + other.a : IntVector{};
  out.order = order;
  out.num_rays = num_rays;
  out.substitution.resize(num_vars());
  for (std::size_t v = 0; v < num_vars(); ++v)
    if (other.substitution[v]) out.substitution[v] = substitution[*other.substitution[v]];
  return out;
}

std::vector<std::size_t> ShiftMap::image_ideal() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < num_vars(); ++v)
    if (!substitution[v]) out.push_back(v);
  return out;
}

ShiftMap epsilon_shift(const CoxData& cd, const IntVector& a, std::size_t m) {
  IntVector image = cd.beta(a);
  if (!is_nonnegative(image)) throw NotInAPlus(to_string(a) + " is not in A_+ (beta = " + to_string(image) + ")");
  ShiftMap s;
  s.a = a;
  s.order = m;
  s.num_rays = cd.num_rays();
  s.substitution.resize(s.num_rays * (m + 1));
  Int top = 0;
  for (std::size_t i = 0; i < s.num_rays; ++i) {
    top = std::max(top, image[i]);
    for (std::size_t n = 0; n <= m; ++n) {
      if (Int(static_cast<unsigned long>(n)) >= image[i])
        s.substitution[i * (m + 1) + n] = i * (m + 1) + n - image[i].get_ui();
    }
  }
  if (top > Int(static_cast<unsigned long>(m)))
    s.warnings.push_back("truncation order " + std::to_string(m) + " is below max beta_i(a) = " + to_string(top) +
                         "; the image locus is truncated");
  return s;
}

std::size_t nested_image_codim(const ShiftMap& a, const ShiftMap& b) {
  if (a.num_vars() != b.num_vars()) throw InvariantError("shift maps on different jet rings");
  auto ia = a.image_ideal();
  auto ib = b.image_ideal();
  if (!std::includes(ib.begin(), ib.end(), ia.begin(), ia.end()))
    throw NotNested("image of " + to_string(b.a) + " is not contained in the image of " + to_string(a.a));
  return ib.size() - ia.size();
}

}  // namespace toricarc
