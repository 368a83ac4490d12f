#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "toricarc/cohomology.hpp"
#include "toricarc/series.hpp"

namespace toricarc {

/// Sym(B (x) Q) in variables y1..yr, with the A_+ action a . alpha = mu(a) alpha,
/// mu(a) = prod_i z_i^beta_i(a). Each y_j has degree 1 (cohomological degree 2).
struct ArcCohomologyModel {
  std::size_t r = 0;
  VariableNames names;
  MonomialOrder order;
  std::vector<Poly> z_classes;
  LatticeMap beta;
  std::vector<IntVector> hilbert_basis;

  /// Throws NotInAPlus.
  Poly mu(const IntVector& a) const;
  std::string format(const Poly& p) const { return format_poly(p, names, order); }
};

ArcCohomologyModel build_arc_model(const CoxData& cd);

/// mu(a) * alpha. Throws NotInAPlus.
Poly q_action(const ArcCohomologyModel& model, const IntVector& a, const Poly& alpha);

/// sum_i beta_i(b - a). Throws NotNested unless b - a is in A_+.
Int self_embedding_codim(const CoxData& cd, const IntVector& a, const IntVector& b);

struct StratumDescriptor {
  IntVector a;
  Int codim;
  std::vector<long> poincare;  ///< coefficients of s^0..s^d
};

/// Throws NotInAPlus.
StratumDescriptor stratum_descriptor(const CoxData& cd, const IntVector& a);

struct CousinReport {
  bool holds = false;
  std::size_t cutoff = 0;
  Series lhs{0};        ///< 1/(1-s)^r
  Series semigroup{0};  ///< E_{A_+}(s)
  Series rhs{0};        ///< E_{A_+}(s) h(s)
  /// Smallest degree where the sides differ, when they do.
  std::size_t first_mismatch = 0;
};

CousinReport cousin_series_check(const CoxData& cd, std::size_t cutoff);

struct TheoremTrial {
  std::vector<Rational> q_spec;
  std::size_t quantum_dimension = 0;
  std::size_t arc_dimension = 0;
  bool presentations_agree = false;
};

struct TheoremReport {
  bool well_defined = false;
  bool surjective = false;
  bool rank_equal = false;
  std::size_t betti_total = 0;
  std::vector<TheoremTrial> trials;
  /// Informational: the graded-series identity of the stratification.
  bool cousin_series_holds = false;
  std::vector<std::string> details;

  bool passed() const { return well_defined && surjective && rank_equal; }
};

/// Verdicts for the isomorphism between the localized arc cohomology and the
/// quantum ring:
///  - well_defined: the linear relations vanish on the z-classes, the z-classes
///    agree with beta, and for every Hilbert basis element the action on 1, the
///    monomial prod z_i^beta_i and the class of the shift image locus coincide;
///  - surjective: the z-classes span the degree-one part;
///  - rank_equal: for each seeded q the specialized quantum ring and the
///    specialized arc model Sym/(mu(a_k) - q^a_k) both have dimension
///    sum of Betti numbers, with equal reduced Groebner bases after x_i -> z_i.
/// Internal errors turn the affected verdict false. Throws NotFano.
TheoremReport check_theorem_main(const CoxData& cd, std::size_t trials, std::uint64_t seed,
                                 std::size_t budget = kDefaultBudget);

/// check_theorem_main, throwing VerificationFailed when a verdict is false.
TheoremReport verify_theorem_main(const CoxData& cd, std::size_t trials, std::uint64_t seed,
                                  std::size_t budget = kDefaultBudget);

struct FloerSeries {
  std::size_t rank = 0;
  /// 2 d(a_k) for each Hilbert basis element, in Hilbert basis order.
  std::vector<std::pair<IntVector, Int>> shifts;
  /// Terms (a, 2 d(a)) of the direct system with d(a) <= cutoff.
  std::vector<std::pair<IntVector, Int>> direct_system;
};

/// Rank of the localization over the Laurent ring (the dimension of the arc
/// model specialized at the first seed-0 q-value) and the Gysin degree shifts.
/// Throws NotFano.
FloerSeries floer_series(const CoxData& cd, std::size_t cutoff, std::size_t budget = kDefaultBudget);

}  // namespace toricarc
