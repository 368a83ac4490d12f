#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "toricarc/fan.hpp"
#include "toricarc/groebner.hpp"
#include "toricarc/lattice.hpp"
#include "toricarc/poly.hpp"

namespace toricarc {

/// Everything the quotient construction determines. beta has the N rays as
/// rows and the chosen basis a_1..a_r of A as columns; divisor_classes[i] is
/// row i of beta, read as the class of Z_i in the dual basis of B.
struct CoxData {
  Fan fan;
  ValidationReport validation;
  std::size_t a_rank = 0;
  std::size_t b_rank = 0;
  LatticeMap beta;
  SemigroupAPlus semigroup;
  PrimitiveCollectionSet primitive_collections;
  std::vector<IntVector> divisor_classes;
  std::vector<long> h_vector;

  std::size_t num_rays() const { return fan.num_rays(); }
};

/// Throws InvalidFan unless the fan is smooth and facet-paired.
CoxData build_cox_data(const Fan& fan);

enum class PresentationKind { classical, quantum_symbolic, quantum_specialized };

std::string to_string(PresentationKind kind);

/// Variables x1..xN, then for the symbolic quantum ring q1..qr and their
/// inverses w1..wr (q_j w_j = 1 is kept in unit_relations, not in relations).
struct Presentation {
  PresentationKind kind = PresentationKind::classical;
  std::size_t num_x = 0;
  VariableNames names;
  MonomialOrder order;
  std::vector<Poly> relations;
  std::vector<Poly> unit_relations;
  std::optional<std::vector<Rational>> q_spec;
  std::vector<std::string> warnings;

  std::size_t num_vars() const { return names.size(); }
  std::vector<Poly> ideal_generators() const;
  std::string format(const Poly& p) const { return format_poly(p, names, order); }
};

/// Linear forms sum_i <e_j, v_i> x_i for j = 1..d, in that order.
std::vector<Poly> linear_relations(const CoxData& cd, std::size_t nvars);

Presentation classical_presentation(const CoxData& cd);

/// Graded dimensions of the classical quotient. Throws MismatchWithHVector if
/// they disagree with the h-vector.
std::vector<std::size_t> betti_numbers(const CoxData& cd, std::size_t budget = kDefaultBudget);

/// q^a = prod_j c_j^(a_j) for a in coordinates of the chosen basis of A.
Rational q_power(const std::vector<Rational>& q_spec, const IntVector& a);

/// Throws NotFano unless the fan is Fano or allow_non_fano is set (a warning
/// is attached then), ZeroQSpec for a zero entry, InvariantError on length.
Presentation quantum_presentation(const CoxData& cd, const std::optional<std::vector<Rational>>& q_spec,
                                  bool allow_non_fano = false);

/// Quantum presentation together with its reduced Groebner basis.
class QuantumRing {
 public:
  QuantumRing(const CoxData& cd, const std::optional<std::vector<Rational>>& q_spec, bool allow_non_fano = false,
              std::size_t budget = kDefaultBudget);

  const Presentation& presentation() const { return presentation_; }
  const GroebnerBasis& basis() const { return basis_; }

  /// Normal form of x_{f1} * ... * x_{fk}; factors are 0-based ray indices.
  Poly product(const std::vector<std::size_t>& factors) const;
  /// Normal form of prod_i x_i^(beta_i(a)).
  Poly monomial_power(const IntVector& exponents) const;
  /// q^a as an element of this ring (a constant when specialized).
  Poly q_monomial(const IntVector& a) const;

  std::string format(const Poly& p) const { return presentation_.format(p); }

 private:
  Presentation presentation_;
  GroebnerBasis basis_;
};

Poly quantum_product(const CoxData& cd, const std::vector<std::size_t>& factors,
                     const std::optional<std::vector<Rational>>& q_spec, bool allow_non_fano = false,
                     std::size_t budget = kDefaultBudget);

/// r nonzero rationals with numerators in +-{1..9} and denominators in {1..9}.
std::vector<Rational> random_q_spec(std::mt19937_64& rng, std::size_t r);

struct RankTrial {
  std::vector<Rational> q_spec;
  std::size_t dimension = 0;
};

struct RankReport {
  std::size_t expected = 0;  ///< sum of Betti numbers
  std::vector<RankTrial> trials;
  bool all_match = false;
  std::vector<std::string> warnings;
};

/// Specialized quotient dimensions for `trials` seeded q-values. Throws
/// RankMismatch on a mismatch for a Fano fan; for a non-Fano fan (allowed via
/// the flag) a mismatch is only reported.
RankReport quantum_rank_check(const CoxData& cd, std::size_t trials, std::uint64_t seed, bool allow_non_fano = false,
                              std::size_t budget = kDefaultBudget);

}  // namespace toricarc
