#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toricarc/cohomology.hpp"
#include "toricarc/poly.hpp"

namespace toricarc {

/// Order-m truncation of the arc algebra. Jet variable u_{j,n} has index
/// j*(m+1)+n and name "<base>_<n>".
struct JetPresentation {
  VariableNames base_vars;
  std::size_t order = 0;
  VariableNames jet_vars;
  std::vector<long> jet_degrees;  ///< deg u_{j,n} = deg u_j
  std::vector<Poly> relations;    ///< relation (k, n) at index k*(m+1)+n

  std::size_t jet_index(std::size_t base, std::size_t n) const { return base * (order + 1) + n; }
  const Poly& relation(std::size_t k, std::size_t n) const { return relations.at(k * (order + 1) + n); }
};

VariableNames jet_variable_names(const VariableNames& base, std::size_t m);

/// Relation (k, n) is the coefficient of t^n in f_k(u_1(t), ..., u_p(t)) with
/// u_j(t) = sum_{n<=m} u_{j,n} t^n. base_degrees defaults to all ones.
JetPresentation jet_relations(const std::vector<Poly>& base_relations, const VariableNames& base_vars, std::size_t m,
                              std::vector<long> base_degrees = {});

/// Jet ring of C^N: variables z{i}_{n}, i = 1..N.
VariableNames toric_jet_names(std::size_t num_rays, std::size_t m);

struct JetLocus {
  IndexSet collection;
  std::vector<Poly> generators;  ///< z_{i,n} for i in the collection, n <= m
  std::size_t codim = 0;
};

/// One coordinate-subspace ideal per primitive collection.
std::vector<JetLocus> exceptional_jet_locus(const CoxData& cd, std::size_t m);

/// Pullback along gamma(t) -> t^beta(a) gamma(t) on order-m jets:
/// z_{i,n} -> z_{i,n-beta_i(a)}, or 0 when that index is negative.
struct ShiftMap {
  IntVector a;
  std::size_t order = 0;
  std::size_t num_rays = 0;
  std::vector<std::optional<std::size_t>> substitution;
  std::vector<std::string> warnings;

  std::size_t num_vars() const { return substitution.size(); }
  Poly apply(const Poly& p) const;
  /// The map "first other, then this" on coordinates; equals the shift by the
  /// sum of the two lattice points.
  ShiftMap compose(const ShiftMap& other) const;
  /// Variables sent to zero; they cut out the image of the shift.
  std::vector<std::size_t> image_ideal() const;
  std::size_t image_codim() const { return image_ideal().size(); }

  bool same_substitution(const ShiftMap& other) const { return substitution == other.substitution; }
};

/// Throws NotInAPlus. Warns when m < max_i beta_i(a).
ShiftMap epsilon_shift(const CoxData& cd, const IntVector& a, std::size_t m);

/// Codimension of the image of the b-shift inside the image of the a-shift,
/// computed from the two coordinate ideals. Throws NotNested unless the first
/// ideal is contained in the second.
std::size_t nested_image_codim(const ShiftMap& a, const ShiftMap& b);

}  // namespace toricarc
