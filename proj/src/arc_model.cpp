#include "toricarc/arc_model.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "toricarc/errors.hpp"
#include "toricarc/jets.hpp"

namespace toricarc {

namespace {

IntVector checked_image(const LatticeMap& beta, const IntVector& a) {
  IntVector image = beta(a);
  if (!is_nonnegative(image)) throw NotInAPlus(to_string(a) + " is not in A_+ (beta = " + to_string(image) + ")");
  return image;
}

Int sum(const IntVector& v) { return std::accumulate(v.begin(), v.end(), Int(0)); }

Poly z_power_product(const ArcCohomologyModel& model, const IntVector& exponents) {
  Poly out = Poly::constant(model.r, 1);
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) out *= model.z_classes[i].pow(static_cast<unsigned>(exponents[i].get_ui()));
  return out;
}

std::vector<Poly> arc_relations(const ArcCohomologyModel& model, const std::vector<Rational>& q_spec) {
  std::vector<Poly> out;
  for (const auto& a : model.hilbert_basis)
    out.push_back(model.mu(a) - Poly::constant(model.r, q_power(q_spec, a)));
  return out;
}

}  // namespace

Poly ArcCohomologyModel::mu(const IntVector& a) const { return z_power_product(*this, checked_image(beta, a)); }

ArcCohomologyModel build_arc_model(const CoxData& cd) {
  ArcCohomologyModel m;
  m.r = cd.b_rank;
  m.names = VariableNames::indexed("y", m.r);
  m.order = MonomialOrder(OrderKind::degrevlex, m.r);
  m.beta = cd.beta;
  m.hilbert_basis = cd.semigroup.hilbert_basis();
  for (const auto& cls : cd.divisor_classes) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < m.r; ++j)
      if (cls[j] != 0) terms.push_back({Monomial::variable(m.r, j), Rational(cls[j])});
    m.z_classes.push_back(Poly::from_terms(m.r, std::move(terms)));
  }
  return m;
}

Poly q_action(const ArcCohomologyModel& model, const IntVector& a, const Poly& alpha) {
  return model.mu(a) * alpha;
}

Int self_embedding_codim(const CoxData& cd, const IntVector& a, const IntVector& b) {
  IntVector image = cd.beta(b - a);
  if (!is_nonnegative(image))
    throw NotNested(to_string(b) + " - " + to_string(a) + " is not in A_+ (beta = " + to_string(image) + ")");
  return sum(image);
}

StratumDescriptor stratum_descriptor(const CoxData& cd, const IntVector& a) {
  return {a, sum(checked_image(cd.beta, a)), cd.h_vector};
}

CousinReport cousin_series_check(const CoxData& cd, std::size_t cutoff) {
  CousinReport report;
  report.cutoff = cutoff;
  report.lhs = Series::inverse_power_of_one_minus_s(cd.b_rank, cutoff);
  report.semigroup = semigroup_series(cd.semigroup, cutoff);
  std::vector<Int> h(cd.h_vector.begin(), cd.h_vector.end());
  h.resize(std::max(h.size(), cutoff + 1));
  h.resize(cutoff + 1);
  report.rhs = report.semigroup * Series(h, cutoff);
  report.holds = report.lhs == report.rhs;
  if (!report.holds) {
    while (report.lhs.coefficient(report.first_mismatch) == report.rhs.coefficient(report.first_mismatch))
      ++report.first_mismatch;
  }
  return report;
}

TheoremReport check_theorem_main(const CoxData& cd, std::size_t trials, std::uint64_t seed, std::size_t budget) {
  if (!cd.validation.fano) throw NotFano("fan '" + cd.fan.name + "' is not Fano");
  TheoremReport report;
  ArcCohomologyModel model = build_arc_model(cd);
  std::size_t n = cd.num_rays();

  try {
    bool ok = true;
    for (const auto& lin : linear_relations(cd, n)) {
      if (!lin.substitute(model.z_classes).is_zero()) {
        ok = false;
        report.details.push_back("linear relation does not vanish on the z-classes");
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < model.r; ++j)
        if (cd.divisor_classes[i][j] != cd.beta.matrix()(i, j)) {
          ok = false;
          report.details.push_back("class of Z" + std::to_string(i + 1) + " disagrees with beta");
        }
    Poly one = Poly::constant(model.r, 1);
    for (const auto& a : model.hilbert_basis) {
      IntVector image = checked_image(cd.beta, a);
      Poly action = q_action(model, a, one);
      Poly monomial = z_power_product(model, image);
      // Each coordinate z_{i,n} of the image locus has the class z_i.
      Int top = *std::max_element(image.begin(), image.end());
      ShiftMap shift = epsilon_shift(cd, a, top.get_ui());
      Poly locus = one;
      for (std::size_t v : shift.image_ideal()) locus *= model.z_classes[v / (shift.order + 1)];
      if (action != monomial || action != locus) {
        ok = false;
        report.details.push_back("relation for " + to_string(a) + " does not hold in the arc model");
      }
    }
    report.well_defined = ok;
  } catch (const Error& e) {
    report.details.push_back(std::string("well-definedness check failed: ") + e.what());
  }

  std::size_t span = rank(IntMatrix::from_rows(cd.divisor_classes, model.r));
  report.surjective = span == model.r;
  if (!report.surjective)
    report.details.push_back("z-classes span rank " + std::to_string(span) + " of " + std::to_string(model.r));

  try {
    auto betti = betti_numbers(cd, budget);
    report.betti_total = std::accumulate(betti.begin(), betti.end(), std::size_t{0});
    bool ok = true;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      TheoremTrial trial;
      trial.q_spec = random_q_spec(rng, cd.a_rank);
      QuantumRing ring(cd, trial.q_spec, false, budget);
      trial.quantum_dimension = quotient_dimension(ring.basis());

      GroebnerBasis arc = buchberger(arc_relations(model, trial.q_spec), model.order, budget);
      trial.arc_dimension = quotient_dimension(arc);

      std::vector<Poly> pushed;
      for (const auto& rel : ring.presentation().relations) {
        Poly image = rel.substitute(model.z_classes);
        if (!image.is_zero()) pushed.push_back(std::move(image));
      }
      if (!pushed.empty()) {
        GroebnerBasis image = buchberger(pushed, model.order, budget);
        trial.presentations_agree = image.generators == arc.generators;
      }
      ok = ok && trial.quantum_dimension == report.betti_total && trial.arc_dimension == report.betti_total &&
           trial.presentations_agree;
      report.trials.push_back(std::move(trial));
    }
    report.rank_equal = ok && trials > 0;
    if (!report.rank_equal) report.details.push_back("specialized dimensions or presentations disagree");
  } catch (const Error& e) {
    report.details.push_back(std::string("rank check failed: ") + e.what());
  }

  report.cousin_series_holds = cousin_series_check(cd, 20).holds;
  return report;
}

TheoremReport verify_theorem_main(const CoxData& cd, std::size_t trials, std::uint64_t seed, std::size_t budget) {
  TheoremReport report = check_theorem_main(cd, trials, seed, budget);
  if (!report.passed()) {
    std::string what = "verification failed for '" + cd.fan.name + "'";
    for (const auto& d : report.details) what += "; " + d;
    throw VerificationFailed(what);
  }
  return report;
}

FloerSeries floer_series(const CoxData& cd, std::size_t cutoff, std::size_t budget) {
  if (!cd.validation.fano) throw NotFano("fan '" + cd.fan.name + "' is not Fano");
  ArcCohomologyModel model = build_arc_model(cd);
  std::mt19937_64 rng(0);
  GroebnerBasis arc = buchberger(arc_relations(model, random_q_spec(rng, model.r)), model.order, budget);

  FloerSeries out;
  out.rank = quotient_dimension(arc);
  for (const auto& a : model.hilbert_basis) out.shifts.push_back({a, 2 * sum(cd.beta(a))});
  for (const auto& a : enumerate_box(cd.beta, static_cast<long>(cutoff))) {
    Int d = sum(cd.beta(a));
    if (d <= Int(static_cast<unsigned long>(cutoff))) out.direct_system.push_back({a, 2 * d});
  }
  return out;
}

}  // namespace toricarc
